#ifndef FREEHARM_MATRIX_EVAL_HPP
#define FREEHARM_MATRIX_EVAL_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "freeharm/poly.hpp"

namespace freeharm {

// A tuple of g real n-by-n matrices standing for x1..xg. In symmetric mode
// the entries are expected (and generated) to be symmetric matrices.
struct MatrixTuple {
    unsigned n = 0;
    std::vector<Eigen::MatrixXd> mats;
};

// SplitMix64; the standard finalizer-based generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform double in [-1, 1].
    double next_unit();

private:
    std::uint64_t state_;
};

MatrixTuple random_matrix_tuple(unsigned g, unsigned n, bool symmetric,
                                std::uint64_t seed);
Eigen::MatrixXd random_matrix(unsigned n, bool symmetric, SplitMix64& rng);

// Substitutes the tuple for x1..xg and dir for h. An adjoint letter takes the
// transpose. Complex coefficients are supported; real polynomials yield a
// result with zero imaginary part.
Eigen::MatrixXcd evaluate(const FreePoly& p, const MatrixTuple& X,
                          const std::optional<Eigen::MatrixXd>& dir = std::nullopt);

// Evaluation of a real polynomial, checking that rounding noise is the only
// imaginary content.
Eigen::MatrixXd evaluate_real(const FreePoly& p, const MatrixTuple& X,
                              const std::optional<Eigen::MatrixXd>& dir = std::nullopt);

}  // namespace freeharm

#endif
