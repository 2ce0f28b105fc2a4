#ifndef FREEHARM_NONSYM_HPP
#define FREEHARM_NONSYM_HPP

#include <string>
#include <utility>
#include <vector>

#include "freeharm/harmonic.hpp"
#include "freeharm/poly.hpp"
#include "freeharm/word.hpp"

namespace freeharm {

// Position-wise transpose pattern of a homogeneous word; true marks a
// transposed letter. Serialized over {1, T}, e.g. "1T1T".
using AlphaTuple = std::vector<bool>;

std::string alpha_to_string(const AlphaTuple& alpha);
AlphaTuple alpha_from_string(const std::string& text);

// Reverse the tuple and toggle every entry; an involution compatible with
// the polynomial transpose.
AlphaTuple alpha_transpose(const AlphaTuple& alpha);

AlphaTuple alpha_of_word(const Word& w);

// Set the adjoint flags of every word of a symmetric-mode homogeneous
// polynomial position-wise per alpha; the result lives in nonsymmetric
// mode. Throws std::invalid_argument on a degree mismatch.
FreePoly apply_alpha(const FreePoly& p, const AlphaTuple& alpha);

// Keep exactly the terms whose transpose pattern equals alpha. Summing over
// all patterns of each degree recovers p.
FreePoly proj_alpha(const FreePoly& p, const AlphaTuple& alpha);

// Erase all adjoint flags and collect coefficients; the result lives in
// symmetric mode.
FreePoly sx_collapse(const FreePoly& p);

// The distinct transpose patterns present in p, in lexicographic order
// (shorter patterns first).
std::vector<AlphaTuple> alpha_support(const FreePoly& p);

// Decompose a nonsymmetric-mode ell-harmonic homogeneous polynomial: each
// nonzero pattern projection collapses to a symmetric-mode ell-harmonic
// polynomial and is decomposed there. Re-applying each pattern to the
// expanded decomposition and summing reproduces p exactly.
std::vector<std::pair<AlphaTuple, Decomposition>> nonsym_ell_harmonic_decompose(
    const FreePoly& p, unsigned ell);

}  // namespace freeharm

#endif
