#include "freeharm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace freeharm {

SMat smat(std::size_t rows, std::size_t cols) {
    return SMat(rows, SVec(cols, Scalar(0)));
}

SMat smat_identity(std::size_t n) {
    SMat I = smat(n, n);
    for (std::size_t k = 0; k < n; ++k) I[k][k] = Scalar(1);
    return I;
}

SMat smat_transpose(const SMat& A) {
    if (A.empty()) return A;
    SMat T = smat(A[0].size(), A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
    return T;
}

SMat smat_mul(const SMat& A, const SMat& B) {
    std::size_t n = A.size();
    std::size_t m = B.empty() ? 0 : B[0].size();
    std::size_t k = B.size();
    SMat C = smat(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != k)
            throw std::invalid_argument("smat_mul: dimension mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (A[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][t] * B[t][j];
        }
    }
    return C;
}

SVec smat_apply(const SMat& A, const SVec& v) {
    SVec r(A.size(), Scalar(0));
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != v.size())
            throw std::invalid_argument("smat_apply: dimension mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += A[i][j] * v[j];
    }
    return r;
}

Scalar dot(const SVec& a, const SVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Scalar s(0);
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

bool smat_is_symmetric(const SMat& A) {
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != A.size()) return false;
        for (std::size_t j = i + 1; j < A.size(); ++j)
            if (A[i][j] != A[j][i]) return false;
    }
    return true;
}

bool smat_is_real(const SMat& A) {
    for (const auto& row : A)
        for (const Scalar& v : row)
            if (!v.is_real()) return false;
    return true;
}

RrefResult rref(SMat A) {
    RrefResult out;
    std::size_t rows = A.size();
    std::size_t cols = rows == 0 ? 0 : A[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && A[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(A[pivot], A[r]);
        Scalar inv = Scalar(1) / A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            Scalar f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.R = std::move(A);
    return out;
}

std::size_t rank(const SMat& A) { return rref(A).pivot_cols.size(); }

std::vector<SVec> nullspace(const SMat& A, std::size_t cols) {
    for (const auto& row : A)
        if (row.size() != cols)
            throw std::invalid_argument("nullspace: row width differs from cols");
    RrefResult rr = rref(A);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<SVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        SVec v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v[rr.pivot_cols[k]] = -rr.R[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<SVec> solve(const SMat& A, const SVec& b) {
    if (A.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    std::size_t cols = A.empty() ? 0 : A[0].size();
    SMat aug = A;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    RrefResult rr = rref(std::move(aug));
    SVec x(cols, Scalar(0));
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
        std::size_t c = rr.pivot_cols[k];
        if (c == cols) return std::nullopt;  // pivot in the constant column
        x[c] = rr.R[k][cols];
    }
    return x;
}

std::optional<SMat> inverse(const SMat& A) {
    std::size_t n = A.size();
    SMat aug = A;
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
        for (std::size_t j = 0; j < n; ++j)
            aug[i].push_back(i == j ? Scalar(1) : Scalar(0));
    }
    RrefResult rr = rref(std::move(aug));
    if (rr.pivot_cols.size() != n || (n > 0 && rr.pivot_cols.back() != n - 1))
        return std::nullopt;
    SMat inv = smat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = rr.R[i][n + j];
    return inv;
}

PsdOutcome psd_decompose(const SMat& M) {
    if (!smat_is_symmetric(M))
        throw std::invalid_argument("psd_decompose: matrix is not symmetric");
    if (!smat_is_real(M))
        throw std::invalid_argument("psd_decompose: matrix is not real");
    std::size_t n = M.size();
    SMat S = M;
    // Invariants: the active block of S equals the active block of L M L^T,
    // and M = sum_k d_k c_k c_k^T + S with row/column r of S cleared after
    // eliminating pivot r.
    SMat L = smat_identity(n);
    std::vector<bool> active(n, true);
    SMat cols;  // the c_k, one per pivot
    SVec pivot_val;

    auto witness_from = [&](const SVec& v_cur) {
        // v = L^T v_cur, so that v^T M v = v_cur^T S v_cur.
        SVec v(n, Scalar(0));
        for (std::size_t r = 0; r < n; ++r) {
            if (v_cur[r].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] += L[r][j] * v_cur[r];
        }
        return v;
    };

    for (;;) {
        // Prefer a strictly positive diagonal pivot; a negative diagonal is
        // an immediate witness.
        std::size_t r = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (!active[k] || S[k][k].is_zero()) continue;
            if (S[k][k].re() < 0) {
                PsdOutcome out;
                out.psd = false;
                SVec e(n, Scalar(0));
                e[k] = Scalar(1);
                out.witness = witness_from(e);
                return out;
            }
            if (r == n) r = k;
        }
        if (r == n) {
            // All active diagonals vanish; any nonzero off-diagonal entry
            // certifies indefiniteness through a 2x2 block.
            for (std::size_t a = 0; a < n; ++a) {
                if (!active[a]) continue;
                for (std::size_t b = a + 1; b < n; ++b) {
                    if (!active[b] || S[a][b].is_zero()) continue;
                    PsdOutcome out;
                    out.psd = false;
                    SVec e(n, Scalar(0));
                    e[a] = Scalar(1);
                    e[b] = (S[a][b].re() > 0) ? Scalar(-1) : Scalar(1);
                    out.witness = witness_from(e);
                    return out;
                }
            }
            break;  // remaining block is identically zero
        }
        Scalar d = S[r][r];
        pivot_val.push_back(d);
        SVec rowr = S[r];
        SVec ck(n, Scalar(0));
        for (std::size_t c = 0; c < n; ++c) ck[c] = rowr[c] / d;
        cols.push_back(ck);
        // Schur complement: S <- S - (1/d) col_r row_r on the active block.
        for (std::size_t a = 0; a < n; ++a) {
            if (!active[a] || a == r || rowr[a].is_zero()) continue;
            Scalar f = rowr[a] / d;
            for (std::size_t b = 0; b < n; ++b) {
                if (!active[b] || b == r) continue;
                S[a][b] -= f * rowr[b];
            }
            for (std::size_t c = 0; c < n; ++c) L[a][c] -= f * L[r][c];
        }
        for (std::size_t c = 0; c < n; ++c) {
            S[r][c] = Scalar(0);
            S[c][r] = Scalar(0);
        }
        active[r] = false;
    }

    PsdOutcome out;
    out.psd = true;
    out.P = std::move(cols);
    out.d = std::move(pivot_val);
    return out;
}

std::vector<Integer> four_squares(const Integer& n) {
    if (n < 0) throw std::invalid_argument("four_squares: negative input");
    auto isqrt = [](const Integer& v) {
        return boost::multiprecision::sqrt(v);
    };
    // Search a >= b >= c >= d, so a^2 >= n/4, b^2 >= ra/3, c^2 >= rb/2.
    for (Integer a = isqrt(n); a * a * 4 >= n; --a) {
        Integer ra = n - a * a;
        Integer b0 = std::min(a, isqrt(ra));
        for (Integer b = b0; b >= 0 && b * b * 3 >= ra; --b) {
            Integer rb = ra - b * b;
            Integer c0 = std::min(b, isqrt(rb));
            for (Integer c = c0; c >= 0 && c * c * 2 >= rb; --c) {
                Integer rc = rb - c * c;
                Integer d = isqrt(rc);
                if (d * d == rc && d <= c) return {a, b, c, d};
            }
        }
    }
    throw std::logic_error("four_squares: search failed");
}

}  // namespace freeharm
