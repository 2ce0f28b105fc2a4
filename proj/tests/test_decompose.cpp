#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "freeharm/calculus.hpp"
#include "freeharm/harmonic.hpp"
#include "freeharm/io.hpp"
#include "freeharm/permutation.hpp"
#include "freeharm/poly.hpp"
#include "freeharm/symmetry.hpp"
#include "util.hpp"

using namespace freeharm;

namespace {

void check_round_trip(const FreePoly& p, unsigned ell) {
    Decomposition dec = decompose_main(p, ell);
    validate_decomposition(dec);
    CHECK(dec.ell == ell);
    CHECK(dec.alphabet >= p.g());
    CHECK(expand(dec) == p.with_alphabet(dec.alphabet));
}

}  // namespace

TEST_CASE("decomposition round trips over kernel bases") {
    for (const FreePoly& p : harmonic_kernel_basis(2, 2, 2))
        check_round_trip(p, 2);
    for (const FreePoly& p : harmonic_kernel_basis(2, 3, 2))
        check_round_trip(p, 2);
    for (const FreePoly& p : harmonic_kernel_basis(3, 3, 2))
        check_round_trip(p, 2);
    for (const FreePoly& p : harmonic_kernel_basis(2, 3, 3))
        check_round_trip(p, 3);
}

TEST_CASE("decomposition round trips on random harmonic combinations") {
    SplitMix64 rng(17);
    std::vector<FreePoly> basis = harmonic_kernel_basis(2, 4, 2);
    for (int n = 0; n < 6; ++n) {
        FreePoly p(2, Mode::symmetric);
        for (const FreePoly& b : basis)
            p += testutil::small_rational(rng) * b;
        if (p.is_zero()) continue;
        REQUIRE(is_harmonic(p));
        check_round_trip(p, 2);
    }
    // Inhomogeneous harmonic input decomposes per homogeneous component.
    FreePoly mixed = parse_poly("x1 x2 - x2 x1", Mode::symmetric, 2) +
                     harmonic_kernel_basis(2, 3, 2).front();
    REQUIRE(is_harmonic(mixed));
    check_round_trip(mixed, 2);
}

TEST_CASE("decompose_main rejects bad inputs") {
    CHECK_THROWS_AS(decompose_main(parse_poly("x1^2", Mode::symmetric, 2), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(decompose_main(parse_poly("h^2"), 2), std::invalid_argument);
    CHECK_THROWS_AS(decompose_main(parse_poly("x1' x2"), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(decompose_main(parse_poly("x1 x2 - x2 x1"), 0),
                    std::invalid_argument);
}

TEST_CASE("decomposition contract validation") {
    FreePoly anti = parse_poly("x1 x2 + x2 x1");

    Decomposition good;
    good.ell = 2;
    good.alphabet = 2;
    good.mode = Mode::symmetric;
    good.summands.push_back({Permutation(2), {anti}});
    validate_decomposition(good);
    CHECK(expand(good) == anti);

    // Harmonic but not symmetrized.
    Decomposition unsym = good;
    unsym.summands[0].factors = {parse_poly("x1 x2 - x2 x1")};
    CHECK_THROWS_AS(validate_decomposition(unsym), std::invalid_argument);

    // Symmetrized but not harmonic.
    Decomposition unharm = good;
    unharm.summands[0].factors = {parse_poly("x1^2", Mode::symmetric, 2)};
    CHECK_THROWS_AS(validate_decomposition(unharm), std::invalid_argument);

    // Overlapping factor supports.
    Decomposition overlap;
    overlap.ell = 2;
    overlap.alphabet = 2;
    overlap.mode = Mode::symmetric;
    overlap.summands.push_back({Permutation(4), {anti, anti}});
    CHECK_THROWS_AS(validate_decomposition(overlap), std::invalid_argument);

    // Permutation degree differs from the summand degree.
    Decomposition wrongdeg = good;
    wrongdeg.summands[0].sigma = Permutation(3);
    CHECK_THROWS_AS(validate_decomposition(wrongdeg), std::invalid_argument);

    // A genuine independent product over four variables validates.
    FreePoly f1 = parse_poly("x1 x2 + x2 x1", Mode::symmetric, 4);
    FreePoly f2 = parse_poly("x3 x4 + x4 x3", Mode::symmetric, 4);
    Decomposition pair;
    pair.ell = 2;
    pair.alphabet = 4;
    pair.mode = Mode::symmetric;
    pair.summands.push_back(
        {Permutation::transposition(4, 2, 3), {f1, f2}});
    validate_decomposition(pair);
    CHECK(expand(pair) ==
          permute(Permutation::transposition(4, 2, 3), f1 * f2));
}

TEST_CASE("span elements expand and recombine") {
    SpanElement el;
    el.c = Scalar(2);
    el.sigma = Permutation::transposition(4, 2, 3);
    el.pairs = {{1, 2}, {3, 4}};
    FreePoly direct = Scalar(2) * permute(Permutation::transposition(4, 2, 3),
                                          parse_poly("(x1^2 - x2^2) (x3^2 - x4^2)"));
    CHECK(expand_span_element(el, 4, Mode::symmetric, 2) == direct);

    SpanElement plain;
    plain.c = Scalar(1);
    plain.sigma = Permutation(4);
    plain.pairs = {{1, 2}, {3, 4}};
    FreePoly p = expand_span_element(plain, 4, Mode::symmetric, 2);
    REQUIRE(is_fully_degree_ell(p, 2));
    REQUIRE(is_harmonic(p));

    std::vector<SpanElement> back = fully_span_decompose(p, 2, {1, 2, 3, 4});
    FreePoly sum(4, Mode::symmetric);
    for (const SpanElement& e : back)
        sum += expand_span_element(e, 4, Mode::symmetric, 2);
    CHECK(sum == p);

    // Permutations of span elements stay in the span.
    std::vector<Permutation> reps = coset_reps_block(2, 2);
    for (const Permutation& rep : reps) {
        FreePoly q = permute(rep, p);
        REQUIRE(is_harmonic(q));
        std::vector<SpanElement> dec = fully_span_decompose(q, 2, {1, 2, 3, 4});
        FreePoly qsum(4, Mode::symmetric);
        for (const SpanElement& e : dec)
            qsum += expand_span_element(e, 4, Mode::symmetric, 2);
        CHECK(qsum == q);
    }

    CHECK_THROWS_AS(fully_span_decompose(p, 2, {1, 2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        fully_span_decompose(parse_poly("x1^2 x2^2", Mode::symmetric, 4), 2,
                             {1, 2, 3, 4}),
        std::invalid_argument);
}
