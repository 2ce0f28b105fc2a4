#ifndef FREEHARM_LINALG_HPP
#define FREEHARM_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "freeharm/scalar.hpp"

namespace freeharm {

using SVec = std::vector<Scalar>;
using SMat = std::vector<SVec>;

SMat smat(std::size_t rows, std::size_t cols);
SMat smat_identity(std::size_t n);
SMat smat_transpose(const SMat& A);
SMat smat_mul(const SMat& A, const SMat& B);
SVec smat_apply(const SMat& A, const SVec& v);
Scalar dot(const SVec& a, const SVec& b);
bool smat_is_symmetric(const SMat& A);
bool smat_is_real(const SMat& A);

struct RrefResult {
    SMat R;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form over the exact scalar field.
RrefResult rref(SMat A);

std::size_t rank(const SMat& A);

// Kernel basis, one vector per free column in ascending column order; the
// free coordinate is 1 and pivot coordinates are back-substituted.
std::vector<SVec> nullspace(const SMat& A, std::size_t cols);

// One exact solution of A x = b with free coordinates set to zero, or
// nothing when the system is inconsistent.
std::optional<SVec> solve(const SMat& A, const SVec& b);

std::optional<SMat> inverse(const SMat& A);

// Outcome of exact positive-semidefiniteness testing of a real symmetric
// matrix. On success M = P^T diag(d) P with d >= 0 entrywise (P has one row
// per pivot). On failure the witness v satisfies v^T M v < 0.
struct PsdOutcome {
    bool psd = false;
    SMat P;
    SVec d;
    SVec witness;
};

PsdOutcome psd_decompose(const SMat& M);

// Writes a nonnegative integer as a sum of four squares (small deterministic
// search; Jacobi guarantees existence).
std::vector<Integer> four_squares(const Integer& n);

}  // namespace freeharm

#endif
