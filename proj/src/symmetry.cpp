#include "freeharm/symmetry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace freeharm {

FreePoly symmetrize(const FreePoly& p) {
    // (1/d!) sum_sigma sigma[w] visits each distinct rearrangement of w's
    // letters (prod of multiplicities!) / d! times, so averaging reduces to
    // enumerating distinct rearrangements with that weight.
    FreePoly r(p.g(), p.mode());
    for (const auto& [w, c] : p.terms()) {
        unsigned d = static_cast<unsigned>(w.size());
        Word sorted = w;
        std::sort(sorted.begin(), sorted.end());
        Integer mult_prod = 1;
        std::size_t k = 0;
        while (k < sorted.size()) {
            std::size_t j = k;
            while (j < sorted.size() && sorted[j] == sorted[k]) ++j;
            mult_prod *= factorial(static_cast<unsigned>(j - k));
            k = j;
        }
        Scalar weight = Scalar(Rational(mult_prod, factorial(d))) * c;
        Word arrangement = sorted;
        do {
            r.add_term(arrangement, weight);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    }
    return r;
}

bool is_symmetrized(const FreePoly& p) { return symmetrize(p) == p; }

CommPoly comm_collapse(const FreePoly& p) {
    CommPoly q(p.g());
    for (const auto& [w, c] : p.terms()) {
        CommPoly::Expo e(p.g() + 1, 0);
        for (const Letter& l : w) {
            if (l.is_direction())
                ++e[p.g()];
            else
                ++e[l.index - 1];
        }
        q.add_term(e, c);
    }
    return q;
}

FreePoly lift_symm(const CommPoly& q, Mode mode) {
    FreePoly r(q.g(), mode);
    for (const auto& [e, c] : q.terms()) {
        if (e[q.g()] != 0)
            throw std::invalid_argument("lift_symm: the input must not involve h");
        Word sorted;
        Integer mult_prod = 1;
        for (unsigned j = 0; j < q.g(); ++j) {
            sorted.insert(sorted.end(), e[j], Letter{j + 1, false});
            mult_prod *= factorial(e[j]);
        }
        unsigned d = static_cast<unsigned>(sorted.size());
        // The monomial spreads over d! / prod(e_j!) distinct words.
        Scalar share = Scalar(Rational(mult_prod, factorial(d))) * c;
        Word arrangement = sorted;
        do {
            r.add_term(arrangement, share);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    }
    return r;
}

std::vector<FreePoly> mod_ell_split(const FreePoly& p, unsigned index, unsigned ell) {
    if (ell == 0) throw std::invalid_argument("mod_ell_split: ell must be positive");
    if (index == kDirectionIndex || index > p.g())
        throw std::invalid_argument("mod_ell_split: bad variable index");
    std::vector<FreePoly> parts(ell, FreePoly(p.g(), p.mode()));
    for (const auto& [w, c] : p.terms())
        parts[degree_in_word(w, index) % ell].add_term(w, c);
    return parts;
}

namespace {

void require_plain_symmetric(const FreePoly& p, const char* where) {
    if (p.mode() != Mode::symmetric)
        throw std::invalid_argument(std::string(where) + ": requires symmetric mode");
    if (p.contains_direction())
        throw std::invalid_argument(std::string(where) + ": input must not involve h");
}

}  // namespace

Permutation position_subset_permutation(const std::vector<unsigned>& I, unsigned d) {
    std::vector<unsigned> img(d, 0);
    unsigned next = 1;
    for (unsigned pos : I) {
        if (pos < 1 || pos > d || img[pos - 1] != 0)
            throw std::invalid_argument(
                "position_subset_permutation: positions must be distinct and within 1..d");
        img[pos - 1] = next++;
    }
    for (unsigned pos = 1; pos <= d; ++pos)
        if (img[pos - 1] == 0) img[pos - 1] = next++;
    return Permutation::from_images(img);
}

NeighborDecomposition neighbor_decompose(const FreePoly& p, unsigned index,
                                         unsigned power) {
    require_plain_symmetric(p, "neighbor_decompose");
    if (index == kDirectionIndex || index > p.g())
        throw std::invalid_argument("neighbor_decompose: bad variable index");
    if (power == 0)
        throw std::invalid_argument("neighbor_decompose: power must be positive");
    if (!p.is_homogeneous())
        throw std::invalid_argument("neighbor_decompose: input must be homogeneous");
    if (p.degree_in(index) > power)
        throw std::invalid_argument(
            "neighbor_decompose: a term exceeds the requested power");

    NeighborDecomposition nd;
    nd.index = index;
    nd.power = power;
    nd.remainder = FreePoly(p.g(), p.mode());

    std::map<std::vector<unsigned>, FreePoly> buckets;
    for (const auto& [w, c] : p.terms()) {
        if (degree_in_word(w, index) < power) {
            nd.remainder.add_term(w, c);
            continue;
        }
        std::vector<unsigned> I;
        Word tail;
        for (unsigned k = 0; k < w.size(); ++k) {
            if (w[k].index == index)
                I.push_back(k + 1);
            else
                tail.push_back(w[k]);
        }
        auto it = buckets.find(I);
        if (it == buckets.end())
            it = buckets.emplace(I, FreePoly(p.g(), p.mode())).first;
        it->second.add_term(tail, c);
    }
    unsigned d = p.is_zero() ? 0 : static_cast<unsigned>(p.degree());
    for (auto& [I, tail] : buckets)
        nd.pieces.push_back(
            NeighborPiece{position_subset_permutation(I, d), std::move(tail)});
    return nd;
}

FreePoly neighbor_reassemble(const NeighborDecomposition& nd, unsigned g, Mode mode) {
    FreePoly acc(g, mode);
    for (const NeighborPiece& piece : nd.pieces) {
        FreePoly head = FreePoly::from_word(g, mode, power_word(nd.index, nd.power));
        acc += permute(piece.sigma, head * piece.tail);
    }
    return acc + nd.remainder;
}

namespace {

// First-seen canonical form: relabels the image values of sigma through a
// block-preserving value permutation so that value blocks appear in order of
// first use with ascending entries. Two permutations get the same form
// exactly when they agree on every block word.
std::vector<unsigned> block_canonical_images(const std::vector<unsigned>& img,
                                             unsigned ell) {
    unsigned d = static_cast<unsigned>(img.size()) / ell;
    std::vector<unsigned> slot_of_block(d, 0);  // 0 = unassigned
    std::vector<unsigned> used_in_block(d, 0);
    unsigned next_slot = 1;
    std::vector<unsigned> out(img.size());
    for (std::size_t k = 0; k < img.size(); ++k) {
        unsigned block = (img[k] - 1) / ell;
        if (slot_of_block[block] == 0) slot_of_block[block] = next_slot++;
        out[k] = ell * (slot_of_block[block] - 1) + (++used_in_block[block]);
    }
    return out;
}

}  // namespace

std::vector<Permutation> coset_reps_block(unsigned ell, unsigned d) {
    if (ell == 0 || d == 0)
        throw std::invalid_argument("coset_reps_block: ell and d must be positive");
    unsigned n = ell * d;
    if (n > 8)
        throw std::length_error("coset_reps_block: ell*d beyond 8 is not supported");
    std::set<std::vector<unsigned>> seen;
    std::vector<unsigned> img(n);
    for (unsigned k = 0; k < n; ++k) img[k] = k + 1;
    do {
        seen.insert(block_canonical_images(img, ell));
    } while (std::next_permutation(img.begin(), img.end()));
    std::vector<Permutation> reps;
    reps.reserve(seen.size());
    for (const auto& v : seen) reps.push_back(Permutation::from_images(v));
    return reps;
}

std::vector<Permutation> coset_reps_fix_prefix(unsigned d, unsigned g) {
    if (d > g)
        throw std::invalid_argument("coset_reps_fix_prefix: d exceeds g");
    std::vector<Permutation> reps;
    std::vector<unsigned> chosen;
    std::vector<bool> used(g + 1, false);
    // Depth-first over injections in lexicographic order; each completes
    // with the unused values in ascending order.
    auto rec = [&](auto&& self) -> void {
        if (chosen.size() == d) {
            std::vector<unsigned> img = chosen;
            for (unsigned v = 1; v <= g; ++v)
                if (!used[v]) img.push_back(v);
            reps.push_back(Permutation::from_images(img));
            return;
        }
        for (unsigned v = 1; v <= g; ++v) {
            if (used[v]) continue;
            used[v] = true;
            chosen.push_back(v);
            self(self);
            chosen.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
    return reps;
}

bool is_fully_degree_ell(const FreePoly& p, unsigned ell) {
    if (ell == 0) throw std::invalid_argument("is_fully_degree_ell: ell must be positive");
    for (const auto& [w, c] : p.terms()) {
        if (word_contains_direction(w)) return false;
        std::set<unsigned> vars;
        collect_support(w, vars);
        for (unsigned v : vars)
            if (degree_in_word(w, v) != ell) return false;
    }
    return true;
}

FullySplit fully_degree_ell_split(const FreePoly& p, unsigned ell,
                                  std::vector<unsigned> variables) {
    require_plain_symmetric(p, "fully_degree_ell_split");
    if (!p.is_homogeneous())
        throw std::invalid_argument("fully_degree_ell_split: input must be homogeneous");
    if (!is_fully_degree_ell(p, ell))
        throw std::invalid_argument(
            "fully_degree_ell_split: a term does not use each of its variables exactly ell times");
    FullySplit out;
    if (p.is_zero()) return out;
    unsigned deg = static_cast<unsigned>(p.degree());
    if (deg % ell != 0)
        throw std::invalid_argument("fully_degree_ell_split: degree is not a multiple of ell");
    if (variables.empty())
        for (unsigned v = 1; v <= p.g(); ++v) variables.push_back(v);
    std::set<unsigned> allowed(variables.begin(), variables.end());
    for (unsigned v : p.support_variables())
        if (!allowed.count(v))
            throw std::invalid_argument(
                "fully_degree_ell_split: support is not inside the candidate variables");

    // Scan each word once: first-seen variable order yields both the
    // canonical class representative and the block word it acts on.
    std::map<Permutation, FreePoly> parts;
    for (const auto& [w, c] : p.terms()) {
        std::map<unsigned, unsigned> slot_of_var;
        std::map<unsigned, unsigned> used;
        std::vector<unsigned> img(w.size());
        std::vector<unsigned> tuple;
        for (std::size_t k = 0; k < w.size(); ++k) {
            unsigned v = w[k].index;
            auto it = slot_of_var.find(v);
            if (it == slot_of_var.end()) {
                it = slot_of_var.emplace(v, static_cast<unsigned>(tuple.size()) + 1).first;
                tuple.push_back(v);
            }
            img[k] = ell * (it->second - 1) + (++used[v]);
        }
        Word block_word;
        for (unsigned v : tuple)
            block_word.insert(block_word.end(), ell, Letter{v, false});
        Permutation sigma = Permutation::from_images(img);
        auto it = parts.find(sigma);
        if (it == parts.end())
            it = parts.emplace(sigma, FreePoly(p.g(), p.mode())).first;
        it->second.add_term(block_word, c);
    }
    for (auto& [sigma, inner] : parts) out.parts.emplace_back(sigma, std::move(inner));
    return out;
}

}  // namespace freeharm
