#ifndef FREEHARM_CALCULUS_HPP
#define FREEHARM_CALCULUS_HPP

#include <vector>

#include "freeharm/poly.hpp"

namespace freeharm {

// Directional derivative in x_index: the sum over all single replacements of
// one occurrence of x_index by h. In nonsymmetric mode each occurrence of
// x_index' is simultaneously eligible and is replaced by h'.
FreePoly dird(const FreePoly& p, unsigned index);

// Derivative with symbol q: for each monomial c * x1^e1...xg^eg of q, apply
// dird e1 times in x1, then e2 times in x2, and so on, scaling by c; sums
// over the monomials of q. q must not involve h.
FreePoly dird_symbol(const FreePoly& p, const CommPoly& q);

// dird_symbol followed by the substitution h -> x_target (and h' -> x_target'
// in nonsymmetric mode).
FreePoly dird_subs(const FreePoly& p, const CommPoly& q, unsigned target);

// The ell-Laplacian: dird_symbol with symbol x1^ell + ... + xg^ell.
FreePoly laplacian_ell(const FreePoly& p, unsigned ell);

// The classical case ell = 2.
FreePoly laplacian(const FreePoly& p);

// Linear change of variables: x_j maps to sum_{i=1..g} A[j][i] * x_i, so row
// j of A lists the coefficients of the image of x_j. The direction letter is
// left alone. A must be g-by-g.
FreePoly substitute_linear(const FreePoly& p, const std::vector<std::vector<Scalar>>& A);

// Same convention for commutative polynomials: x_j maps to
// sum_i A[j][i] x_i; the h slot is left alone.
CommPoly substitute_linear(const CommPoly& q, const std::vector<std::vector<Scalar>>& A);

std::vector<std::vector<Scalar>> transpose_matrix(const std::vector<std::vector<Scalar>>& A);

// True when the supports (variable index sets) of the factors are pairwise
// disjoint, so the product has no interaction terms under the Laplacian.
bool is_independent_product(const std::vector<FreePoly>& factors);

}  // namespace freeharm

#endif
