#ifndef FREEHARM_HARMONIC_HPP
#define FREEHARM_HARMONIC_HPP

#include <utility>
#include <vector>

#include "freeharm/calculus.hpp"
#include "freeharm/permutation.hpp"
#include "freeharm/poly.hpp"
#include "freeharm/symmetry.hpp"

namespace freeharm {

bool is_ell_harmonic(const FreePoly& p, unsigned ell);
inline bool is_harmonic(const FreePoly& p) { return is_ell_harmonic(p, 2); }

// Exact kernel basis of the ell-Laplacian on homogeneous degree-d
// polynomials, computed by row reduction over the word basis in canonical
// order. Entries are rational whenever the input field data is (it always
// is here), so the basis is real.
std::vector<FreePoly> harmonic_kernel_basis(unsigned g, unsigned d, unsigned ell,
                                            Mode mode = Mode::symmetric);

// Sum of the ell-th partial derivatives in every variable.
CommPoly delta_ell(const CommPoly& q, unsigned ell);

// Harmonic extension operator: for q = sum_{r<ell} x_index^r q_r with each
// q_r free of x_index, returns
//   sum_{r<ell} sum_k (-1)^k / (ell*k+r)! x_index^(ell*k+r)
//       (delta_ell - d^ell/dx_index^ell)^k [q_r],
// which is annihilated by delta_ell. Requires deg_index(q) < ell.
CommPoly hm_extend(const CommPoly& q, unsigned index, unsigned ell);

// hm_extend of x_index^r * prod_{a in aux} x_a^ell, rescaled so that the
// coefficient of x_index^(ell*Q+r) is exactly 1 (Q = aux.size()). The aux
// indices must be distinct and different from index; r < ell.
CommPoly hm_normalized_power(unsigned g, unsigned index, unsigned r,
                             const std::vector<unsigned>& aux, unsigned ell);

// Basis of the ell-harmonic homogeneous polynomials of degree ell:
// the differences x_k^ell - x_1^ell (k = 2..g) followed by every degree-ell
// word that is not a pure power, in canonical word order.
std::vector<FreePoly> basis_degree_ell(unsigned g, unsigned ell);

// Basis of the 1-harmonic homogeneous polynomials of degree d: all products
// of d successive-difference forms (x_k - x_{k+1}), k = 1..g-1, ordered
// lexicographically by the index tuple.
std::vector<FreePoly> one_harmonic_basis(unsigned g, unsigned d);

// Basis of the ell-harmonic polynomials of degree d in two variables: the
// degree-d words with both partial degrees below ell, followed by the
// harmonic extensions of x1^r x2^(d-r) along x1 for r < ell with d-r >= ell.
std::vector<FreePoly> basis_two_var(unsigned d, unsigned ell);

// One summand sigma[f_1 * f_2 * ... * f_m] of a harmonic decomposition:
// the factors are pairwise independent (disjoint variable supports),
// symmetrized and ell-harmonic.
struct DecompSummand {
    Permutation sigma;
    std::vector<FreePoly> factors;
};

struct Decomposition {
    unsigned ell = 2;
    unsigned alphabet = 0;  // final alphabet size, auxiliaries included
    Mode mode = Mode::symmetric;
    std::vector<DecompSummand> summands;
};

FreePoly expand(const Decomposition& dec);

// Throws std::invalid_argument when a summand violates the contract
// (factor not symmetrized, factor not ell-harmonic, overlapping supports,
// or a permutation degree that does not match the summand degree).
void validate_decomposition(const Decomposition& dec);

// Writes an ell-harmonic polynomial (symmetric mode, no h) as a sum of
// permuted independent products of symmetrized ell-harmonic factors,
// possibly over an enlarged alphabet; auxiliary variables take the smallest
// admissible indices. Exact: expand(result) == p over the final alphabet.
Decomposition decompose_main(const FreePoly& p, unsigned ell);

// c * sigma[ (x_{a1}^ell - x_{b1}^ell) ... (x_am^ell - x_bm^ell) ] with all
// the pair indices distinct across the element.
struct SpanElement {
    Scalar c;
    Permutation sigma;
    std::vector<std::pair<unsigned, unsigned>> pairs;
};

FreePoly expand_span_element(const SpanElement& el, unsigned g, Mode mode,
                             unsigned ell);

// Decomposes a fully-degree-ell ell-harmonic polynomial into span elements
// over the candidate variable list, which must contain the support and hold
// at least 2 * deg(p)/ell indices.
std::vector<SpanElement> fully_span_decompose(const FreePoly& p, unsigned ell,
                                              std::vector<unsigned> variables);

// One piece sigma[head * tail] of the grouping of p by the positions and
// subword of its letters with index <= split_index.
struct PartialSymbolPiece {
    Permutation sigma;
    Word head;      // letters with index <= split_index, in original order
    FreePoly tail;  // letters with larger index; ell-harmonic
};

// Requires the derivative of p with symbol sum_{i>split_index} x_i^ell to
// vanish; then every tail in the grouping is ell-harmonic and the pieces
// reassemble to p exactly.
std::vector<PartialSymbolPiece> partial_symbol_decompose(const FreePoly& p,
                                                         unsigned split_index,
                                                         unsigned ell);

// The commutative symbol sum_i (sum_j B[i][j] x_j)^ell.
CommPoly power_sum_symbol(const std::vector<std::vector<Scalar>>& B, unsigned ell);

// Whether p composed with the invertible change of variables x -> B^T x is
// ell-harmonic; equivalently, whether the derivative of p with the symbol
// sum_i (sum_j B[i][j] x_j)^ell vanishes.
bool change_of_variables_transport(const FreePoly& p,
                                   const std::vector<std::vector<Scalar>>& B,
                                   unsigned ell);

// Zero power-sum condition for a product of linear forms, one per row of A:
// every strictly increasing choice of ell rows has
// sum_j A[k1][j] A[k2][j] ... A[kell][j] == 0.
bool check_main_condition(const std::vector<std::vector<Scalar>>& A, unsigned ell);

// The product of the linear forms described by the rows of A over the
// alphabet of size equal to the row width.
FreePoly product_of_linear_forms(const std::vector<std::vector<Scalar>>& A);

}  // namespace freeharm

#endif
