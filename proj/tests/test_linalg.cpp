#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "freeharm/linalg.hpp"
#include "freeharm/matrix_eval.hpp"

using namespace freeharm;

namespace {

SMat from_ints(const std::vector<std::vector<long long>>& rows) {
    SMat A = smat(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            A[r][c] = Scalar(rows[r][c]);
    return A;
}

SMat random_symmetric(SplitMix64& rng, std::size_t n) {
    SMat A = smat(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            long long num = static_cast<long long>(rng.next() % 9) - 4;
            long long den = 1 + static_cast<long long>(rng.next() % 2);
            Scalar v{Rational(Integer(num), Integer(den))};
            A[r][c] = v;
            A[c][r] = v;
        }
    }
    return A;
}

Scalar quad_form(const SMat& M, const SVec& v) {
    return dot(v, smat_apply(M, v));
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    SMat A = from_ints({{1, 2}, {3, 4}});
    SMat B = from_ints({{0, 1}, {1, 0}});
    CHECK(smat_mul(A, B) == from_ints({{2, 1}, {4, 3}}));
    CHECK(smat_transpose(A) == from_ints({{1, 3}, {2, 4}}));
    CHECK(smat_mul(A, smat_identity(2)) == A);

    SVec v{Scalar(1), Scalar(-1)};
    SVec Av = smat_apply(A, v);
    CHECK(Av[0] == Scalar(-1));
    CHECK(Av[1] == Scalar(-1));
    CHECK(dot(v, v) == Scalar(2));

    CHECK(!smat_is_symmetric(A));
    CHECK(smat_is_symmetric(B));
    CHECK(smat_is_real(A));
    SMat C = A;
    C[0][1] = Scalar::i();
    CHECK(!smat_is_real(C));
}

TEST_CASE("row reduction, rank, and nullspace") {
    SMat A = from_ints({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    RrefResult rr = rref(A);
    REQUIRE(rr.pivot_cols.size() == 2);
    CHECK(rr.pivot_cols[0] == 0);
    CHECK(rr.pivot_cols[1] == 1);
    CHECK(rank(A) == 2);
    CHECK(rank(smat_identity(4)) == 4);
    CHECK(rank(smat(3, 3)) == 0);

    std::vector<SVec> ker = nullspace(A, 3);
    REQUIRE(ker.size() == 1);
    for (const SVec& k : ker) {
        SVec Ak = smat_apply(A, k);
        for (const Scalar& entry : Ak) CHECK(entry.is_zero());
    }
    // The free coordinate is normalized to one.
    CHECK(ker[0][2] == Scalar(1));

    // Complex entries stay exact.
    SMat Z = smat(2, 2);
    Z[0][0] = Scalar(1);
    Z[0][1] = Scalar::i();
    Z[1][0] = Scalar::i();
    Z[1][1] = Scalar(-1);
    CHECK(rank(Z) == 1);
    std::vector<SVec> kz = nullspace(Z, 2);
    REQUIRE(kz.size() == 1);
    CHECK((kz[0][0] * Scalar(1) + kz[0][1] * Scalar::i()).is_zero());
}

TEST_CASE("exact linear solving and inversion") {
    SMat A = from_ints({{2, 1}, {1, 3}});
    SVec b{Scalar(5), Scalar(10)};
    std::optional<SVec> x = solve(A, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(1));
    CHECK((*x)[1] == Scalar(3));

    // Inconsistent system.
    SMat S = from_ints({{1, 1}, {1, 1}});
    SVec c{Scalar(0), Scalar(1)};
    CHECK(!solve(S, c).has_value());

    // Underdetermined: free coordinates are set to zero.
    SMat U = from_ints({{1, 1, 1}});
    SVec d{Scalar(7)};
    std::optional<SVec> u = solve(U, d);
    REQUIRE(u.has_value());
    SVec Uu = smat_apply(U, *u);
    CHECK(Uu[0] == Scalar(7));

    std::optional<SMat> Ainv = inverse(A);
    REQUIRE(Ainv.has_value());
    CHECK(smat_mul(A, *Ainv) == smat_identity(2));
    CHECK(smat_mul(*Ainv, A) == smat_identity(2));
    CHECK(!inverse(S).has_value());

    SplitMix64 rng(808);
    for (int n = 0; n < 10; ++n) {
        SMat R = random_symmetric(rng, 3);
        std::optional<SMat> Rinv = inverse(R);
        if (!Rinv.has_value()) {
            CHECK(rank(R) < 3);
            continue;
        }
        CHECK(smat_mul(R, *Rinv) == smat_identity(3));
    }
}

TEST_CASE("positive semidefiniteness with replayable factors") {
    // 2x2 PSD: M = [[2,1],[1,1]].
    SMat M = from_ints({{2, 1}, {1, 1}});
    PsdOutcome out = psd_decompose(M);
    REQUIRE(out.psd);
    REQUIRE(out.P.size() == out.d.size());
    // Replay M = P^T diag(d) P entry by entry.
    SMat replay = smat(2, 2);
    for (std::size_t k = 0; k < out.P.size(); ++k) {
        CHECK(out.d[k].re() >= 0);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                replay[r][c] += out.d[k] * out.P[k][r] * out.P[k][c];
    }
    CHECK(replay == M);

    // Indefinite: witness certifies strict negativity of the quadratic form.
    SMat N = from_ints({{0, 2}, {2, 0}});
    PsdOutcome bad = psd_decompose(N);
    REQUIRE(!bad.psd);
    REQUIRE(bad.witness.size() == 2);
    Scalar val = quad_form(N, bad.witness);
    CHECK(val.is_real());
    CHECK(val.re() < 0);

    // Zero matrix and rank-deficient PSD matrices.
    CHECK(psd_decompose(smat(3, 3)).psd);
    SMat rank1 = from_ints({{1, -1}, {-1, 1}});
    PsdOutcome r1 = psd_decompose(rank1);
    CHECK(r1.psd);
    CHECK(r1.P.size() == 1);

    // Diagonal with a negative entry.
    SMat D = from_ints({{1, 0}, {0, -3}});
    PsdOutcome nd = psd_decompose(D);
    REQUIRE(!nd.psd);
    CHECK(quad_form(D, nd.witness).re() < 0);

    SplitMix64 rng(31337);
    for (int n = 0; n < 40; ++n) {
        std::size_t dim = 2 + rng.next() % 3;
        // K^T K is always PSD.
        SMat K = random_symmetric(rng, dim);
        SMat G = smat_mul(smat_transpose(K), K);
        PsdOutcome gram = psd_decompose(G);
        CHECK(gram.psd);
        SMat back = smat(dim, dim);
        for (std::size_t k = 0; k < gram.P.size(); ++k)
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c)
                    back[r][c] += gram.d[k] * gram.P[k][r] * gram.P[k][c];
        CHECK(back == G);

        // Either outcome of a random symmetric matrix must be certified.
        SMat R = random_symmetric(rng, dim);
        PsdOutcome any = psd_decompose(R);
        if (any.psd) {
            SMat rb = smat(dim, dim);
            for (std::size_t k = 0; k < any.P.size(); ++k) {
                CHECK(any.d[k].re() >= 0);
                for (std::size_t r = 0; r < dim; ++r)
                    for (std::size_t c = 0; c < dim; ++c)
                        rb[r][c] += any.d[k] * any.P[k][r] * any.P[k][c];
            }
            CHECK(rb == R);
        } else {
            CHECK(quad_form(R, any.witness).re() < 0);
        }
    }

    SMat bad_shape = smat(2, 3);
    CHECK_THROWS_AS(psd_decompose(bad_shape), std::invalid_argument);
    SMat asym = from_ints({{1, 2}, {0, 1}});
    CHECK_THROWS_AS(psd_decompose(asym), std::invalid_argument);
    SMat cplx = smat(1, 1);
    cplx[0][0] = Scalar::i();
    CHECK_THROWS_AS(psd_decompose(cplx), std::invalid_argument);
}

TEST_CASE("four squares") {
    for (long long n = 0; n <= 60; ++n) {
        std::vector<Integer> sq = four_squares(Integer(n));
        REQUIRE(sq.size() == 4);
        Integer total(0);
        for (const Integer& s : sq) total += s * s;
        CHECK(total == Integer(n));
    }
    std::vector<Integer> big = four_squares(Integer(9991));
    Integer total(0);
    for (const Integer& s : big) total += s * s;
    CHECK(total == Integer(9991));
    CHECK_THROWS_AS(four_squares(Integer(-1)), std::invalid_argument);
}
