#ifndef FREEHARM_PERMUTATION_HPP
#define FREEHARM_PERMUTATION_HPP

#include <string>
#include <vector>

#include "freeharm/poly.hpp"

namespace freeharm {

// A permutation of {1..d}. The action on a degree-d word places the letter
// from position sigma(k) at position k of the result.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(unsigned d);  // identity
    static Permutation from_images(const std::vector<unsigned>& images);  // 1-based
    static Permutation transposition(unsigned d, unsigned a, unsigned b);

    unsigned degree() const { return static_cast<unsigned>(img_.size()); }
    unsigned apply(unsigned k) const;  // 1-based
    const std::vector<unsigned>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    // (this o other)(k) = this(other(k)). Degrees must match.
    Permutation compose(const Permutation& other) const;

    // Extends to degree d by fixing positions head+1..: position k <= head
    // maps to itself and position head+k maps to head+sigma(k).
    Permutation embed_after(unsigned head) const;

    std::string str() const;  // e.g. "[2,3,1]"

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.img_ < b.img_;
    }

private:
    std::vector<unsigned> img_;  // img_[k-1] = sigma(k), 1-based values
};

Word permute_word(const Permutation& sigma, const Word& w);

// Applies sigma to every term. Every word of p must have length equal to
// sigma's degree (homogeneity of matching degree is required).
FreePoly permute(const Permutation& sigma, const FreePoly& p);

// All permutations of {1..d} in lexicographic image order.
std::vector<Permutation> all_permutations(unsigned d);

}  // namespace freeharm

#endif
