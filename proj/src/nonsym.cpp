#include "freeharm/nonsym.hpp"

#include <set>
#include <stdexcept>

#include "freeharm/calculus.hpp"

namespace freeharm {

std::string alpha_to_string(const AlphaTuple& alpha) {
    std::string out;
    out.reserve(alpha.size());
    for (bool t : alpha) out.push_back(t ? 'T' : '1');
    return out;
}

AlphaTuple alpha_from_string(const std::string& text) {
    AlphaTuple alpha;
    alpha.reserve(text.size());
    for (char c : text) {
        if (c == '1') alpha.push_back(false);
        else if (c == 'T' || c == 't') alpha.push_back(true);
        else throw std::invalid_argument("alpha_from_string: entries must be 1 or T");
    }
    return alpha;
}

AlphaTuple alpha_transpose(const AlphaTuple& alpha) {
    AlphaTuple out(alpha.rbegin(), alpha.rend());
    out.flip();
    return out;
}

AlphaTuple alpha_of_word(const Word& w) {
    AlphaTuple alpha;
    alpha.reserve(w.size());
    for (const Letter& l : w) alpha.push_back(l.adjoint);
    return alpha;
}

FreePoly apply_alpha(const FreePoly& p, const AlphaTuple& alpha) {
    if (p.mode() != Mode::symmetric)
        throw std::invalid_argument("apply_alpha: input must be in symmetric mode");
    FreePoly out(p.g(), Mode::nonsymmetric);
    for (const auto& [w, c] : p.terms()) {
        if (w.size() != alpha.size())
            throw std::invalid_argument("apply_alpha: degree mismatch");
        Word nw = w;
        for (std::size_t k = 0; k < nw.size(); ++k) nw[k].adjoint = alpha[k];
        out.add_term(nw, c);
    }
    return out;
}

FreePoly proj_alpha(const FreePoly& p, const AlphaTuple& alpha) {
    FreePoly out(p.g(), p.mode());
    for (const auto& [w, c] : p.terms())
        if (alpha_of_word(w) == alpha) out.add_term(w, c);
    return out;
}

FreePoly sx_collapse(const FreePoly& p) {
    FreePoly out(p.g(), Mode::symmetric);
    for (const auto& [w, c] : p.terms()) {
        Word nw = w;
        for (Letter& l : nw) l.adjoint = false;
        out.add_term(nw, c);
    }
    return out;
}

std::vector<AlphaTuple> alpha_support(const FreePoly& p) {
    std::set<AlphaTuple> seen;
    for (const auto& [w, c] : p.terms()) seen.insert(alpha_of_word(w));
    return {seen.begin(), seen.end()};
}

std::vector<std::pair<AlphaTuple, Decomposition>> nonsym_ell_harmonic_decompose(
    const FreePoly& p, unsigned ell) {
    if (p.mode() != Mode::nonsymmetric)
        throw std::invalid_argument(
            "nonsym_ell_harmonic_decompose: input must be in nonsymmetric mode");
    if (ell == 0)
        throw std::invalid_argument("nonsym_ell_harmonic_decompose: ell must be positive");
    if (!p.is_zero() && !p.is_homogeneous())
        throw std::invalid_argument(
            "nonsym_ell_harmonic_decompose: input must be homogeneous");
    if (!is_ell_harmonic(p, ell))
        throw std::invalid_argument(
            "nonsym_ell_harmonic_decompose: input is not ell-harmonic");

    std::vector<std::pair<AlphaTuple, Decomposition>> out;
    for (const AlphaTuple& alpha : alpha_support(p)) {
        // Each pattern projection is ell-harmonic on its own (the Laplacian
        // preserves transpose patterns position-wise), so the collapsed
        // symmetric image decomposes independently.
        FreePoly q = sx_collapse(proj_alpha(p, alpha));
        out.emplace_back(alpha, decompose_main(q, ell));
    }
    return out;
}

}  // namespace freeharm
