#include "freeharm/calculus.hpp"

#include <stdexcept>

namespace freeharm {

FreePoly dird(const FreePoly& p, unsigned index) {
    if (index == kDirectionIndex || index > p.g())
        throw std::invalid_argument("dird: bad variable index");
    FreePoly r(p.g(), p.mode());
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k].index != index) continue;
            Word nw = w;
            nw[k] = Letter{kDirectionIndex, w[k].adjoint};
            r.add_term(nw, c);
        }
    }
    return r;
}

FreePoly dird_symbol(const FreePoly& p, const CommPoly& q) {
    if (q.contains_direction())
        throw std::invalid_argument("dird_symbol: the symbol must not involve h");
    FreePoly r(p.g(), p.mode());
    for (const auto& [e, c] : q.terms()) {
        FreePoly cur = p;
        for (unsigned j = 0; j < q.g(); ++j) {
            if (j + 1 > p.g() && e[j] != 0)
                throw std::invalid_argument("dird_symbol: the symbol uses x" +
                                            std::to_string(j + 1) +
                                            " beyond the polynomial's alphabet");
            for (unsigned t = 0; t < e[j]; ++t) cur = dird(cur, j + 1);
        }
        r += c * cur;
    }
    return r;
}

FreePoly dird_subs(const FreePoly& p, const CommPoly& q, unsigned target) {
    if (target == kDirectionIndex || target > p.g())
        throw std::invalid_argument("dird_subs: bad target index");
    FreePoly d = dird_symbol(p, q);
    FreePoly r(p.g(), p.mode());
    for (const auto& [w, c] : d.terms()) {
        Word nw = w;
        for (Letter& l : nw)
            if (l.is_direction()) l.index = target;
        r.add_term(nw, c);
    }
    return r;
}

FreePoly laplacian_ell(const FreePoly& p, unsigned ell) {
    if (ell == 0) throw std::invalid_argument("laplacian_ell: ell must be positive");
    CommPoly q(p.g());
    for (unsigned i = 1; i <= p.g(); ++i) q += CommPoly::power(p.g(), i, ell);
    return dird_symbol(p, q);
}

FreePoly laplacian(const FreePoly& p) { return laplacian_ell(p, 2); }

namespace {
void check_square(const std::vector<std::vector<Scalar>>& A, unsigned g, const char* where) {
    if (A.size() != g)
        throw std::invalid_argument(std::string(where) + ": matrix is not g-by-g");
    for (const auto& row : A)
        if (row.size() != g)
            throw std::invalid_argument(std::string(where) + ": matrix is not g-by-g");
}
}  // namespace

FreePoly substitute_linear(const FreePoly& p, const std::vector<std::vector<Scalar>>& A) {
    check_square(A, p.g(), "substitute_linear");
    FreePoly r(p.g(), p.mode());
    for (const auto& [w, c] : p.terms()) {
        FreePoly term = FreePoly::constant(p.g(), p.mode(), c);
        for (const Letter& l : w) {
            FreePoly img(p.g(), p.mode());
            if (l.is_direction()) {
                img.add_term(Word{l}, Scalar(1));
            } else {
                for (unsigned i = 1; i <= p.g(); ++i)
                    img.add_term(Word{Letter{i, l.adjoint}}, A[l.index - 1][i - 1]);
            }
            term = term * img;
        }
        r += term;
    }
    return r;
}

CommPoly substitute_linear(const CommPoly& q, const std::vector<std::vector<Scalar>>& A) {
    check_square(A, q.g(), "substitute_linear");
    CommPoly r(q.g());
    for (const auto& [e, c] : q.terms()) {
        CommPoly term = CommPoly::constant(q.g(), c);
        for (unsigned j = 0; j < q.g(); ++j) {
            if (e[j] == 0) continue;
            CommPoly img(q.g());
            for (unsigned i = 1; i <= q.g(); ++i) {
                CommPoly::Expo ex(q.g() + 1, 0);
                ex[i - 1] = 1;
                img.add_term(ex, A[j][i - 1]);
            }
            for (unsigned t = 0; t < e[j]; ++t) term = term * img;
        }
        if (e[q.g()] != 0) term = term * CommPoly::power(q.g(), kDirectionIndex, e[q.g()]);
        r += term;
    }
    return r;
}

std::vector<std::vector<Scalar>> transpose_matrix(const std::vector<std::vector<Scalar>>& A) {
    std::vector<std::vector<Scalar>> T(A.empty() ? 0 : A[0].size(),
                                       std::vector<Scalar>(A.size(), Scalar(0)));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
    return T;
}

bool is_independent_product(const std::vector<FreePoly>& factors) {
    std::set<unsigned> seen;
    for (const FreePoly& f : factors) {
        for (unsigned v : f.support_variables()) {
            if (seen.count(v)) return false;
            seen.insert(v);
        }
    }
    return true;
}

}  // namespace freeharm
