#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "freeharm/calculus.hpp"
#include "freeharm/harmonic.hpp"
#include "freeharm/io.hpp"
#include "freeharm/linalg.hpp"
#include "freeharm/poly.hpp"
#include "freeharm/subharmonic.hpp"
#include "util.hpp"

using namespace freeharm;

namespace {

const char* kSosGap =
    "x1 x2 x2 x1 + x2 x1 x1 x2 + x1 x3 x3 x1 + x3 x1 x1 x3 - "
    "x2 x3 x3 x2 - x3 x2 x2 x3";

SMat from_ints(const std::vector<std::vector<long long>>& rows) {
    SMat A = smat(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            A[r][c] = Scalar(rows[r][c]);
    return A;
}

Scalar quad_form(const SMat& M, const SVec& v) {
    return dot(v, smat_apply(M, v));
}

FreePoly replay_two_var(const TwoVarSos& t, const FreePoly& like) {
    FreePoly acc = t.harmonic_part;
    CHECK(is_harmonic(t.harmonic_part));
    for (const auto& square : t.squares) {
        CHECK(square.first.is_real());
        CHECK(square.first.re() >= 0);
        CHECK(is_harmonic(square.second));
        acc += square.first * (square.second.transpose() * square.second);
    }
    return acc.with_alphabet(like.g());
}

}  // namespace

TEST_CASE("word-basis Gram representation") {
    GramRep one = gram_rep(parse_poly("x1^2", Mode::symmetric, 1));
    REQUIRE(one.basis.size() == 1);
    CHECK((one.basis[0] == Word{var(1)}));
    CHECK(one.M[0][0] == Scalar(1));

    FreePoly gap = parse_poly(kSosGap);
    FreePoly lap = laplacian(gap);
    CHECK(lap == parse_poly("4 x1 h^2 x1 + 4 h x1^2 h", Mode::symmetric, 3));
    GramRep rep = gram_rep(lap);
    REQUIRE(rep.basis.size() == 2);
    CHECK((rep.basis[0] == Word{var(1), dir_letter()}));
    CHECK((rep.basis[1] == Word{dir_letter(), var(1)}));
    CHECK(rep.M[0][0] == Scalar(4));
    CHECK(rep.M[1][1] == Scalar(4));
    CHECK(rep.M[0][1].is_zero());
    CHECK(rep.M[1][0].is_zero());
    CHECK(gram_expand(rep) == lap);
    CHECK(psd_check(rep.M).psd);

    GramRep zero = gram_rep(FreePoly(2, Mode::symmetric));
    CHECK(zero.basis.empty());
    CHECK(gram_expand(zero).is_zero());

    // Sums of transposed squares round trip with a PSD Gram, in both modes.
    SplitMix64 rng(20240);
    for (int n = 0; n < 14; ++n) {
        Mode mode = (n % 2 == 0) ? Mode::symmetric : Mode::nonsymmetric;
        FreePoly p(2, mode);
        for (int t = 0; t < 2; ++t) {
            FreePoly q = testutil::random_homogeneous(rng, 2, mode, 2, 3, true);
            p += q.transpose() * q;
        }
        if (p.is_zero()) continue;
        GramRep r = gram_rep(p);
        CHECK(gram_expand(r) == p);
        CHECK(smat_is_symmetric(r.M));
        CHECK(psd_check(r.M).psd);
    }

    CHECK_THROWS_AS(gram_rep(parse_poly("x1^3", Mode::symmetric, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(gram_rep(parse_poly("x1^2 + x1^4", Mode::symmetric, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(gram_rep(parse_poly("x1 x2")), std::invalid_argument);
    CHECK_THROWS_AS(gram_rep(parse_poly("i x1^2", Mode::symmetric, 1)),
                    std::invalid_argument);
}

TEST_CASE("harmonic-basis Gram representation") {
    FreePoly gap = parse_poly(kSosGap);
    HarmonicGramRep rep = harmonic_gram_rep(gap);
    REQUIRE(rep.basis.size() == 8);
    REQUIRE(rep.M.size() == 8);
    std::vector<Rational> diag;
    for (std::size_t j = 0; j < 8; ++j) {
        for (std::size_t k = 0; k < 8; ++k)
            if (j != k) CHECK(rep.M[j][k].is_zero());
        diag.push_back(rep.M[j][j].re());
    }
    std::sort(diag.begin(), diag.end());
    const long long expected[] = {-1, -1, 0, 0, 1, 1, 1, 1};
    for (std::size_t j = 0; j < 8; ++j)
        CHECK(diag[j] == Rational(expected[j]));
    CHECK(harmonic_gram_expand(rep) == gap);
    CHECK(!psd_check(rep.M).psd);

    // The representation is unique, so a planted PSD matrix is recovered.
    std::vector<FreePoly> basis = harmonic_kernel_basis(2, 2, 2);
    REQUIRE(basis.size() == 3);
    SplitMix64 rng(5151);
    for (int n = 0; n < 6; ++n) {
        SMat K = smat(3, 3);
        for (auto& row : K)
            for (auto& entry : row) entry = testutil::small_rational(rng);
        SMat G = smat_mul(smat_transpose(K), K);
        FreePoly p(2, Mode::symmetric);
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                p += G[j][k] * (basis[j].transpose() * basis[k]);
        if (p.is_zero()) continue;
        HarmonicGramRep hr = harmonic_gram_rep(p);
        CHECK(hr.M == G);
        CHECK(harmonic_gram_expand(hr) == p);
        CHECK(psd_check(hr.M).psd);
    }

    // The diagnostic for a missing representation.
    CHECK_THROWS_AS(harmonic_gram_rep(parse_poly("x1^4", Mode::symmetric, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(harmonic_gram_rep(parse_poly("x1 h x1", Mode::symmetric, 1)),
                    std::invalid_argument);
}

TEST_CASE("subharmonicity verdicts") {
    // Harmonic polynomials are subharmonic with vanishing Laplacian.
    SubharmonicResult harm = is_subharmonic(parse_poly("x1 x2 - x2 x1"));
    CHECK(harm.verdict == SubharmonicVerdict::subharmonic);
    CHECK(harm.laplacian.is_zero());
    CHECK(harm.blocks.empty());

    SubharmonicResult sq = is_subharmonic(parse_poly("x1^2", Mode::symmetric, 1));
    CHECK(sq.verdict == SubharmonicVerdict::subharmonic);
    REQUIRE(sq.blocks.size() == 1);
    CHECK(sq.blocks[0].psd.psd);

    SubharmonicResult gap = is_subharmonic(parse_poly(kSosGap));
    CHECK(gap.verdict == SubharmonicVerdict::subharmonic);
    REQUIRE(gap.blocks.size() == 1);
    CHECK(gap.blocks[0].degree == 4);
    CHECK(gap.blocks[0].gram.M[0][0] == Scalar(4));
    CHECK(gap.blocks[0].gram.M[1][1] == Scalar(4));

    // x1^4: the Gram of the Laplacian block is indefinite and the block
    // structure is complete, so the refutation is exact.
    SubharmonicResult quart =
        is_subharmonic(parse_poly("x1^4", Mode::symmetric, 1));
    CHECK(quart.verdict == SubharmonicVerdict::not_subharmonic);
    REQUIRE(quart.blocks.size() == 1);
    REQUIRE(!quart.blocks[0].psd.psd);
    const PsdOutcome& pout = quart.blocks[0].psd;
    CHECK(quad_form(quart.blocks[0].gram.M, pout.witness).re() < 0);

    // An asymmetric Laplacian refutes immediately.
    SubharmonicResult asym = is_subharmonic(parse_poly("x1 x2^2"));
    CHECK(asym.verdict == SubharmonicVerdict::not_subharmonic);
    REQUIRE(asym.asymmetry.has_value());
    CHECK(asym.asymmetry->first != asym.asymmetry->second);

    // A lone odd-degree Laplacian block is a parity obstruction.
    SubharmonicResult cube = is_subharmonic(parse_poly("x1^3", Mode::symmetric, 1));
    CHECK(cube.verdict == SubharmonicVerdict::not_subharmonic);
    REQUIRE(cube.odd_block_degrees.size() == 1);
    CHECK(cube.odd_block_degrees[0] == 3);

    // Mixed-degree blocks 2, 4, 6 are incomplete, so the non-PSD middle
    // block alone cannot refute; any witness found must replay negative.
    FreePoly mixed = parse_poly("x1^2 - x1^4 + x1^6", Mode::symmetric, 1);
    SubharmonicResult m = is_subharmonic(mixed);
    CHECK(m.verdict != SubharmonicVerdict::subharmonic);
    if (m.witness.has_value()) {
        CHECK(m.verdict == SubharmonicVerdict::not_subharmonic);
        const EvalWitness& w = *m.witness;
        SMat E = evaluate_exact(m.laplacian, w.X, w.H);
        CHECK(quad_form(E, w.v) == w.value);
        CHECK(w.value.re() < 0);
    } else {
        CHECK(m.verdict == SubharmonicVerdict::undecided);
        CHECK(!m.note.empty());
    }

    CHECK_THROWS_AS(is_subharmonic(parse_poly("i x1^2", Mode::symmetric, 1)),
                    std::invalid_argument);
    CHECK(verdict_name(SubharmonicVerdict::subharmonic) ==
          std::string("subharmonic"));
    CHECK(verdict_name(SubharmonicVerdict::not_subharmonic) ==
          std::string("not-subharmonic"));
    CHECK(verdict_name(SubharmonicVerdict::undecided) ==
          std::string("undecided"));
}

TEST_CASE("exact matrix evaluation") {
    SMat X1 = from_ints({{1, 2}, {3, 4}});
    SMat X2 = from_ints({{0, 1}, {1, 0}});
    SMat E = evaluate_exact(parse_poly("x1 x2 + 3"), {X1, X2});
    CHECK(E == from_ints({{5, 1}, {4, 6}}));

    // An adjoint letter transposes the matrix; no conjugation anywhere.
    SMat N = from_ints({{0, 1}, {0, 0}});
    SMat T = evaluate_exact(parse_poly("x1'", Mode::nonsymmetric, 1), {N});
    CHECK(T == from_ints({{0, 0}, {1, 0}}));

    SMat H = from_ints({{5}});
    SMat scalar1 = from_ints({{2}});
    SMat P = evaluate_exact(parse_poly("x1 h", Mode::symmetric, 1), {scalar1}, H);
    CHECK(P == from_ints({{10}}));
    CHECK_THROWS_AS(evaluate_exact(parse_poly("x1 h", Mode::symmetric, 1),
                                   {scalar1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_exact(parse_poly("x1 x2"), {X1}),
                    std::invalid_argument);
    SMat bad = smat(2, 3);
    CHECK_THROWS_AS(evaluate_exact(parse_poly("x1", Mode::symmetric, 1), {bad}),
                    std::invalid_argument);
}

TEST_CASE("bounded-below sums of transposed squares") {
    CHECK(!bounded_below_sos(parse_poly(kSosGap)).has_value());
    CHECK(!bounded_below_sos(parse_poly("x1^4", Mode::symmetric, 2)).has_value());

    FreePoly f1 = parse_poly("x1 x2 + x2 x1");
    FreePoly f2 = parse_poly("x1 x2 - x2 x1");
    FreePoly p = Scalar(2) * (f1.transpose() * f1) +
                 Scalar(3) * (f2.transpose() * f2);
    std::optional<std::vector<FreePoly>> rows = bounded_below_sos(p);
    REQUIRE(rows.has_value());
    FreePoly total(p.g(), p.mode());
    for (const FreePoly& r : *rows) {
        CHECK(is_harmonic(r));
        total += r.transpose() * r;
    }
    CHECK(total == p);

    std::optional<std::vector<FreePoly>> unit =
        bounded_below_sos(parse_poly("x1^2", Mode::symmetric, 1));
    REQUIRE(unit.has_value());
    FreePoly utotal(1, Mode::symmetric);
    for (const FreePoly& r : *unit) utotal += r.transpose() * r;
    CHECK(utotal == parse_poly("x1^2", Mode::symmetric, 1));
}

TEST_CASE("two-variable sums of squares with harmonic remainder") {
    FreePoly d2 = parse_poly("x1^2 + x2^2");
    TwoVarSos t2 = two_var_sos_decompose(d2);
    CHECK(replay_two_var(t2, d2) == d2);

    FreePoly f = parse_poly("x1 x2 + x2 x1");
    FreePoly p4 = f.transpose() * f;
    TwoVarSos t4 = two_var_sos_decompose(p4);
    CHECK(replay_two_var(t4, p4) == p4);

    FreePoly g = parse_poly("x1^2 - x2^2");
    FreePoly p4b = p4 + Scalar(2) * (g.transpose() * g) +
                   harmonic_kernel_basis(2, 4, 2).front();
    TwoVarSos t4b = two_var_sos_decompose(p4b);
    CHECK(replay_two_var(t4b, p4b) == p4b);

    std::vector<FreePoly> deg3 = harmonic_kernel_basis(2, 3, 2);
    FreePoly p6 = deg3[0].transpose() * deg3[0] +
                  Scalar(2) * (deg3[1].transpose() * deg3[1]);
    TwoVarSos t6 = two_var_sos_decompose(p6);
    CHECK(replay_two_var(t6, p6) == p6);

    CHECK_THROWS_AS(two_var_sos_decompose(parse_poly("x1^4", Mode::symmetric, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(two_var_sos_decompose(parse_poly("x1 x2 x3")),
                    std::invalid_argument);
    CHECK_THROWS_AS(two_var_sos_decompose(parse_poly("x1 x2 + x1")),
                    std::invalid_argument);
}

TEST_CASE("symmetric and harmonic split of a subharmonic polynomial") {
    FreePoly f = parse_poly("x1 x2 + x2 x1");
    FreePoly p = f.transpose() * f +
                 parse_poly("x1 x2 - x2 x1", Mode::symmetric, 2);
    auto [sym, harm] = split_sym_harm(p);
    CHECK(sym + harm == p);
    CHECK(sym == sym.transpose());
    CHECK(is_harmonic(harm));
    CHECK(harm == parse_poly("x1 x2 - x2 x1", Mode::symmetric, 2));
    CHECK(is_subharmonic(sym).verdict == SubharmonicVerdict::subharmonic);

    CHECK_THROWS_AS(split_sym_harm(parse_poly("x1^4", Mode::symmetric, 1)),
                    std::invalid_argument);
}

TEST_CASE("quadratic normal form") {
    FreePoly p = parse_poly("3 x1^2 - x2^2 + x1 x2 + 5");
    Deg2NormalForm nf = deg2_normal_form(p);
    REQUIRE(nf.matrix.size() == 1);
    CHECK(nf.matrix[0][0] == Scalar(2));
    CHECK(nf.psd);
    CHECK(is_harmonic(nf.harmonic_part));
    FreePoly head = nf.matrix[0][0] * parse_poly("x1^2", Mode::symmetric, 2);
    CHECK(head + nf.harmonic_part == p);

    Deg2NormalForm neg = deg2_normal_form(parse_poly("-x1^2", Mode::symmetric, 1));
    CHECK(neg.matrix[0][0] == Scalar(-1));
    CHECK(!neg.psd);

    Deg2NormalForm ns = deg2_normal_form(parse_poly("x1' x1"));
    REQUIRE(ns.matrix.size() == 2);
    CHECK(ns.matrix == from_ints({{1, 0}, {0, 0}}));
    CHECK(ns.psd);
    CHECK(ns.harmonic_part.is_zero());

    Deg2NormalForm flip =
        deg2_normal_form(parse_poly("x1 x1", Mode::nonsymmetric, 1));
    CHECK(flip.matrix == from_ints({{0, 0}, {1, 0}}));
    CHECK(!flip.psd);

    Deg2NormalForm full = deg2_normal_form(
        parse_poly("x1' x1 + x1' x1' + x1 x1 + x1 x1'", Mode::nonsymmetric, 1));
    CHECK(full.matrix == from_ints({{1, 1}, {1, 1}}));
    CHECK(full.psd);

    FreePoly q = parse_poly("x1' x1 + 2 x2' x2 + x2 x2'", Mode::nonsymmetric, 2);
    Deg2NormalForm two = deg2_normal_form(q);
    CHECK(two.matrix == from_ints({{3, 0}, {0, 1}}));
    CHECK(two.psd);
    CHECK(is_harmonic(two.harmonic_part));
    FreePoly rebuilt =
        two.matrix[0][0] * parse_poly("x1' x1", Mode::nonsymmetric, 2) +
        two.matrix[0][1] * parse_poly("x1' x1'", Mode::nonsymmetric, 2) +
        two.matrix[1][0] * parse_poly("x1 x1", Mode::nonsymmetric, 2) +
        two.matrix[1][1] * parse_poly("x1 x1'", Mode::nonsymmetric, 2) +
        two.harmonic_part;
    CHECK(rebuilt == q);

    CHECK_THROWS_AS(deg2_normal_form(parse_poly("x1^3", Mode::symmetric, 1)),
                    std::invalid_argument);
}

TEST_CASE("sampling-based refutation") {
    FreePoly quart = parse_poly("x1^4", Mode::symmetric, 1);
    std::optional<SampleCounterexample> ce =
        sample_matrix_positivity(quart, 2, 100, 1);
    REQUIRE(ce.has_value());
    CHECK(ce->least_eigenvalue < kSampleTolerance);
    CHECK(ce->trial < 100);

    // Scalar substitutions keep the Laplacian of x1^4 nonnegative.
    CHECK(!sample_matrix_positivity(quart, 1, 50, 3).has_value());

    // A certified subharmonic polynomial never samples negative.
    CHECK(!sample_matrix_positivity(parse_poly(kSosGap), 2, 60, 0).has_value());
    CHECK(!sample_matrix_positivity(parse_poly(kSosGap), 3, 40, 0).has_value());

    CHECK_THROWS_AS(sample_matrix_positivity(quart, 0, 10, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        sample_matrix_positivity(parse_poly("i x1^2", Mode::symmetric, 1), 2,
                                 10, 0),
        std::invalid_argument);
}
