#include "freeharm/matrix_eval.hpp"

#include <cmath>
#include <stdexcept>

namespace freeharm {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    double u = static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    return 2.0 * u - 1.0;
}

Eigen::MatrixXd random_matrix(unsigned n, bool symmetric, SplitMix64& rng) {
    Eigen::MatrixXd m(n, n);
    if (symmetric) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) {
                double v = rng.next_unit();
                m(i, j) = v;
                m(j, i) = v;
            }
    } else {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m(i, j) = rng.next_unit();
    }
    return m;
}

MatrixTuple random_matrix_tuple(unsigned g, unsigned n, bool symmetric,
                                std::uint64_t seed) {
    SplitMix64 rng(seed);
    MatrixTuple t;
    t.n = n;
    t.mats.reserve(g);
    for (unsigned k = 0; k < g; ++k) t.mats.push_back(random_matrix(n, symmetric, rng));
    return t;
}

Eigen::MatrixXcd evaluate(const FreePoly& p, const MatrixTuple& X,
                          const std::optional<Eigen::MatrixXd>& dir) {
    const unsigned n = X.n;
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [w, c] : p.terms()) {
        Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
        for (const Letter& l : w) {
            Eigen::MatrixXd m;
            if (l.is_direction()) {
                if (!dir)
                    throw std::invalid_argument(
                        "evaluate: the polynomial uses h but no direction matrix was given");
                m = *dir;
            } else {
                if (l.index > X.mats.size())
                    throw std::invalid_argument("evaluate: missing matrix for x" +
                                                std::to_string(l.index));
                m = X.mats[l.index - 1];
            }
            if (l.adjoint) m = m.transpose().eval();
            term = term * m.cast<std::complex<double>>();
        }
        acc += std::complex<double>(c.re_double(), c.im_double()) * term;
    }
    return acc;
}

Eigen::MatrixXd evaluate_real(const FreePoly& p, const MatrixTuple& X,
                              const std::optional<Eigen::MatrixXd>& dir) {
    if (!p.is_real())
        throw std::invalid_argument("evaluate_real: polynomial has complex coefficients");
    Eigen::MatrixXcd v = evaluate(p, X, dir);
    return v.real();
}

}  // namespace freeharm
