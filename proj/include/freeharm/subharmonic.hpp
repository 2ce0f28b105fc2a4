#ifndef FREEHARM_SUBHARMONIC_HPP
#define FREEHARM_SUBHARMONIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "freeharm/linalg.hpp"
#include "freeharm/matrix_eval.hpp"
#include "freeharm/poly.hpp"

namespace freeharm {

// Unique word-basis Gram representation of a homogeneous even-degree
// polynomial: p = sum_{u,v} M[u][v] transpose(u) v over length-d words.
// Words whose row and column vanish identically are pruned.
struct GramRep {
    std::vector<Word> basis;
    SMat M;
    FreePoly represented;
};

GramRep gram_rep(const FreePoly& p);
FreePoly gram_expand(const GramRep& rep);

// Gram representation over the degree-d harmonic kernel basis:
// p = sum_{j,k} M[j][k] transpose(f_j) f_k. Unique when it exists; a
// missing representation proves the input is not subharmonic.
struct HarmonicGramRep {
    std::vector<FreePoly> basis;
    SMat M;
    FreePoly represented;
};

HarmonicGramRep harmonic_gram_rep(const FreePoly& p);
FreePoly harmonic_gram_expand(const HarmonicGramRep& rep);

// Exact positive-semidefiniteness certificate for a real symmetric matrix.
PsdOutcome psd_check(const SMat& M);

enum class SubharmonicVerdict { subharmonic, not_subharmonic, undecided };

const char* verdict_name(SubharmonicVerdict v);

struct BlockReport {
    unsigned degree;
    GramRep gram;
    PsdOutcome psd;
};

// An exact refutation: symmetric rational matrices X (one per variable) and
// H with v^T lap(X)[H] v = value < 0.
struct EvalWitness {
    unsigned n;
    std::vector<SMat> X;
    SMat H;
    SVec v;
    Scalar value;
};

struct SubharmonicResult {
    SubharmonicVerdict verdict;
    FreePoly laplacian;
    // One report per nonzero even-degree block of the Laplacian, ascending.
    std::vector<BlockReport> blocks;
    std::vector<unsigned> odd_block_degrees;
    // When the Laplacian differs from its transpose: a word with mismatched
    // coefficient against its reversal.
    std::optional<std::pair<Word, Word>> asymmetry;
    std::optional<EvalWitness> witness;
    std::string note;
};

// Decides whether lap(p) is matrix positive. The verdict is exact in both
// directions when it is not "undecided": subharmonic means every block of
// the Laplacian has a PSD Gram (a sum-of-squares certificate), and
// not_subharmonic carries either a Gram witness, an evaluation witness, or
// a parity obstruction (a lowest or highest odd-degree block cannot be
// matrix positive unless it vanishes).
SubharmonicResult is_subharmonic(const FreePoly& p);

// Exact evaluation over rational matrices; an adjoint letter transposes,
// the direction letter takes H.
SMat evaluate_exact(const FreePoly& p, const std::vector<SMat>& X,
                    const std::optional<SMat>& H = std::nullopt);

// When the harmonic Gram of p is PSD, returns harmonic h_i with
// p = sum_i transpose(h_i) h_i exactly (rational square multipliers are
// absorbed through four-square splittings); otherwise nothing, and p is not
// bounded below.
std::optional<std::vector<FreePoly>> bounded_below_sos(const FreePoly& p);

// p = sum_i c_i transpose(R_i) R_i + H with c_i >= 0 rational, R_i harmonic
// of half degree, H harmonic; exact, for two-variable homogeneous
// subharmonic inputs.
struct TwoVarSos {
    std::vector<std::pair<Scalar, FreePoly>> squares;
    FreePoly harmonic_part;
};

TwoVarSos two_var_sos_decompose(const FreePoly& p);

// ((p + p^T)/2, (p - p^T)/2) for certified-subharmonic p; the first part is
// again subharmonic and the second is harmonic.
std::pair<FreePoly, FreePoly> split_sym_harm(const FreePoly& p);

// Quadratic normal form. Symmetric mode: p = A x1^2 + H with H harmonic and
// the 1x1 matrix [A]; nonsymmetric mode: the 2x2 coefficient matrix over
// the (h, h^T) Gram ordering [[A, B1], [B2, C]] with
// p = A x1^T x1 + B1 x1^T x1^T + B2 x1 x1 + C x1 x1^T + H. The head is
// matrix positive exactly when the matrix is symmetric and PSD.
struct Deg2NormalForm {
    SMat matrix;
    FreePoly harmonic_part;
    bool psd;
};

Deg2NormalForm deg2_normal_form(const FreePoly& p);

struct SampleCounterexample {
    unsigned trial;
    MatrixTuple X;
    Eigen::MatrixXd H;
    double least_eigenvalue;
};

inline constexpr double kSampleTolerance = -1e-9;

// Samples seeded random symmetric tuples (per-trial seed = seed + trial) and
// returns the first (X, H) where the symmetrized evaluation of lap(p) has
// least eigenvalue below kSampleTolerance. A counterexample soundly refutes
// subharmonicity; absence proves nothing.
std::optional<SampleCounterexample> sample_matrix_positivity(const FreePoly& p,
                                                             unsigned n,
                                                             unsigned trials,
                                                             std::uint64_t seed);

}  // namespace freeharm

#endif
