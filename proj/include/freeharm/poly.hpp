#ifndef FREEHARM_POLY_HPP
#define FREEHARM_POLY_HPP

#include <map>
#include <set>
#include <vector>

#include "freeharm/scalar.hpp"
#include "freeharm/word.hpp"

namespace freeharm {

enum class Mode { symmetric, nonsymmetric };

// Upper bound on the support size a polynomial operation may produce.
// Configurable through set_size_cap or the FREEHARM_SIZE_CAP environment
// variable (read once at first use); exceeding it throws std::length_error.
std::size_t size_cap();
void set_size_cap(std::size_t cap);

// A polynomial in noncommuting letters x1..xg plus the direction letter h,
// with exact Gaussian-rational coefficients. Stored as a canonically ordered
// term map; zero coefficients are never kept.
class FreePoly {
public:
    using TermMap = std::map<Word, Scalar, WordLess>;

    FreePoly() : g_(0), mode_(Mode::symmetric) {}
    FreePoly(unsigned g, Mode mode) : g_(g), mode_(mode) {}

    static FreePoly zero(unsigned g, Mode mode) { return FreePoly(g, mode); }
    static FreePoly constant(unsigned g, Mode mode, const Scalar& c);
    static FreePoly variable(unsigned g, Mode mode, unsigned index,
                             bool adjoint = false);
    static FreePoly direction(unsigned g, Mode mode, bool adjoint = false);
    static FreePoly from_word(unsigned g, Mode mode, const Word& w,
                              const Scalar& c = Scalar(1));

    unsigned g() const { return g_; }
    Mode mode() const { return mode_; }
    const TermMap& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Word& w) const;
    void add_term(const Word& w, const Scalar& c);

    // Letter admissibility for this polynomial's alphabet and mode.
    void check_letter(const Letter& l) const;

    // Returns a copy declared over a larger alphabet. Shrinking below the
    // support is rejected.
    FreePoly with_alphabet(unsigned g) const;

    FreePoly& operator+=(const FreePoly& o);
    FreePoly& operator-=(const FreePoly& o);
    friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
    friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
    FreePoly operator-() const;
    friend FreePoly operator*(const Scalar& c, const FreePoly& p);
    friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
    friend bool operator==(const FreePoly& a, const FreePoly& b) {
        return a.g_ == b.g_ && a.mode_ == b.mode_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FreePoly& a, const FreePoly& b) {
        return !(a == b);
    }

    // Word reversal on every term; in nonsymmetric mode adjoint flags flip.
    FreePoly transpose() const;

    bool is_real() const;
    bool contains_direction() const;

    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    unsigned degree_in(unsigned index) const;  // max over terms
    FreePoly homogeneous_component(unsigned d) const;
    std::vector<unsigned> homogeneous_degrees() const;
    // Terms whose degree in the given index is exactly k.
    FreePoly component_with_degree_in(unsigned index, unsigned k) const;
    std::set<unsigned> support_variables() const;

private:
    void check_room(std::size_t incoming) const;

    unsigned g_;
    Mode mode_;
    TermMap terms_;
};

// A commutative polynomial in x1..xg and h with exact coefficients. The
// exponent vector has g+1 slots; the last one is the h exponent.
class CommPoly {
public:
    using Expo = std::vector<unsigned>;
    using TermMap = std::map<Expo, Scalar>;

    CommPoly() : g_(0) {}
    explicit CommPoly(unsigned g) : g_(g) {}

    static CommPoly constant(unsigned g, const Scalar& c);
    static CommPoly monomial(unsigned g, const Expo& e, const Scalar& c);
    // x_index^exponent (index >= 1), or h^exponent for index 0.
    static CommPoly power(unsigned g, unsigned index, unsigned exponent);

    unsigned g() const { return g_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Expo& e) const;
    void add_term(const Expo& e, const Scalar& c);

    CommPoly with_alphabet(unsigned g) const;

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const Scalar& c, const CommPoly& q);
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        return a.g_ == b.g_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CommPoly& a, const CommPoly& b) {
        return !(a == b);
    }

    int degree() const;
    bool is_homogeneous() const;
    unsigned degree_in(unsigned index) const;  // index 0 means h
    bool contains_direction() const;

    // k-th partial derivative in x_index (index >= 1).
    CommPoly derivative(unsigned index, unsigned k) const;

    // Split q = sum_r x_index^r * q_r with q_r free of x_index; returns the
    // q_r for r = 0..max. Exponents beyond the list are absent.
    std::vector<CommPoly> split_by_power(unsigned index) const;

private:
    unsigned g_;
    TermMap terms_;
};

}  // namespace freeharm

#endif
