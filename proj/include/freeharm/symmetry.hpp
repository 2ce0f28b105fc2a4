#ifndef FREEHARM_SYMMETRY_HPP
#define FREEHARM_SYMMETRY_HPP

#include <utility>
#include <vector>

#include "freeharm/permutation.hpp"
#include "freeharm/poly.hpp"

namespace freeharm {

// Average of the permutation action over each homogeneous component:
// (1/d!) sum_sigma sigma[p_d]. Implemented by distributing each term over
// the distinct rearrangements of its letters, which is the same average.
FreePoly symmetrize(const FreePoly& p);

bool is_symmetrized(const FreePoly& p);

// Commutative collapse: letters of each word commute; h keeps its own slot.
// Nonsymmetric input is first stripped of adjoint flags.
CommPoly comm_collapse(const FreePoly& p);

// The symmetrized preimage of a commutative polynomial: each monomial's
// coefficient is distributed equally over the distinct words with that
// letter multiset. lift_symm(comm_collapse(p)) == symmetrize(p). The input
// must not involve h.
FreePoly lift_symm(const CommPoly& q, Mode mode = Mode::symmetric);

// p split by degree in x_index modulo ell: entry k holds the terms whose
// degree in x_index is congruent to k (k = 0..ell-1).
std::vector<FreePoly> mod_ell_split(const FreePoly& p, unsigned index, unsigned ell);

// The permutation of degree d with sigma(I[j]) = j and the complement of I
// mapped in ascending order to the remaining values. Applying it to a word
// that starts with |I| marked letters places those letters at the positions
// listed in I (ascending, 1-based) and keeps both relative orders.
Permutation position_subset_permutation(const std::vector<unsigned>& I, unsigned d);

// One peeled piece of the neighbor form p = sum_j sigma_j[x_index^d * p_j] + r:
// sigma maps the subset I of letter positions onto 1..d preserving order,
// with the complement following in ascending order, so that
// permute(sigma, x_index^d * p_j) restores the original positions.
struct NeighborPiece {
    Permutation sigma;
    FreePoly tail;  // p_j; degree in x_index is zero
};

struct NeighborDecomposition {
    unsigned index = 0;
    unsigned power = 0;       // d, the peeled degree in x_index
    std::vector<NeighborPiece> pieces;
    FreePoly remainder;       // terms with degree in x_index below power
};

// Splits a homogeneous symmetric-mode polynomial at its top degree in
// x_index (or an explicitly requested power). Exact: reassembling
// sum_j permute(sigma_j, x^power * p_j) + remainder returns p.
NeighborDecomposition neighbor_decompose(const FreePoly& p, unsigned index,
                                         unsigned power);

FreePoly neighbor_reassemble(const NeighborDecomposition& nd, unsigned g, Mode mode);

// Lexicographically least representatives of the cosets P*sigma of the
// subgroup P of S_{ell*d} preserving the partition into d consecutive blocks
// of size ell (block permutations composed with within-block permutations).
// Two permutations land in the same class exactly when they act identically
// on every block word, which is the grouping fully_degree_ell_split needs.
// Sorted; ell*d is capped at 8.
std::vector<Permutation> coset_reps_block(unsigned ell, unsigned d);

// Lexicographically least representatives of the left cosets of the
// subgroup of S_g fixing 1..d pointwise: one representative per injection
// of {1..d} into {1..g}, in lexicographic order of the injection.
std::vector<Permutation> coset_reps_fix_prefix(unsigned d, unsigned g);

// A polynomial is fully of degree ell when every word uses each of its
// variables exactly ell times. The split expresses such a homogeneous p
// uniquely as sum_i sigma_i[w_i] where sigma_i runs over coset_reps_block
// and each w_i is a combination of pure block words
// x_{v1}^ell ... x_{vd}^ell over distinct variables drawn from the given
// candidate list.
struct FullySplit {
    std::vector<std::pair<Permutation, FreePoly>> parts;
};

bool is_fully_degree_ell(const FreePoly& p, unsigned ell);

// Splits over the given candidate variable list (defaults to 1..g when
// empty). Throws when p is not fully of degree ell.
FullySplit fully_degree_ell_split(const FreePoly& p, unsigned ell,
                                  std::vector<unsigned> variables = {});

}  // namespace freeharm

#endif
