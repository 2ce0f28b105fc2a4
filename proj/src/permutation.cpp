#include "freeharm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace freeharm {

Permutation::Permutation(unsigned d) : img_(d) {
    std::iota(img_.begin(), img_.end(), 1u);
}

Permutation Permutation::from_images(const std::vector<unsigned>& images) {
    std::vector<bool> seen(images.size(), false);
    for (unsigned v : images) {
        if (v < 1 || v > images.size() || seen[v - 1])
            throw std::invalid_argument("Permutation: images are not a bijection of 1..d");
        seen[v - 1] = true;
    }
    Permutation s;
    s.img_ = images;
    return s;
}

Permutation Permutation::transposition(unsigned d, unsigned a, unsigned b) {
    if (a < 1 || b < 1 || a > d || b > d)
        throw std::invalid_argument("Permutation::transposition: index out of range");
    Permutation s(d);
    std::swap(s.img_[a - 1], s.img_[b - 1]);
    return s;
}

unsigned Permutation::apply(unsigned k) const {
    if (k < 1 || k > img_.size())
        throw std::invalid_argument("Permutation::apply: index out of range");
    return img_[k - 1];
}

bool Permutation::is_identity() const {
    for (unsigned k = 0; k < img_.size(); ++k)
        if (img_[k] != k + 1) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation s;
    s.img_.resize(img_.size());
    for (unsigned k = 0; k < img_.size(); ++k) s.img_[img_[k] - 1] = k + 1;
    return s;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("Permutation::compose: degree mismatch");
    Permutation s;
    s.img_.resize(img_.size());
    for (unsigned k = 0; k < img_.size(); ++k) s.img_[k] = img_[other.img_[k] - 1];
    return s;
}

Permutation Permutation::embed_after(unsigned head) const {
    Permutation s(head + degree());
    for (unsigned k = 1; k <= degree(); ++k) s.img_[head + k - 1] = head + img_[k - 1];
    return s;
}

std::string Permutation::str() const {
    std::string s = "[";
    for (unsigned k = 0; k < img_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(img_[k]);
    }
    return s + "]";
}

Word permute_word(const Permutation& sigma, const Word& w) {
    if (w.size() != sigma.degree())
        throw std::invalid_argument("permute_word: word length differs from the degree");
    Word r(w.size());
    for (unsigned k = 1; k <= w.size(); ++k) r[k - 1] = w[sigma.apply(k) - 1];
    return r;
}

FreePoly permute(const Permutation& sigma, const FreePoly& p) {
    FreePoly r(p.g(), p.mode());
    for (const auto& [w, c] : p.terms()) r.add_term(permute_word(sigma, w), c);
    return r;
}

std::vector<Permutation> all_permutations(unsigned d) {
    std::vector<unsigned> img(d);
    std::iota(img.begin(), img.end(), 1u);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace freeharm
