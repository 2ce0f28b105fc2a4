#include "freeharm/subharmonic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "freeharm/calculus.hpp"
#include "freeharm/harmonic.hpp"
#include "freeharm/symmetry.hpp"
#include "freeharm/word.hpp"

namespace freeharm {

namespace {

SMat smat_add(const SMat& A, const SMat& B) {
    SMat R = A;
    for (std::size_t r = 0; r < R.size(); ++r)
        for (std::size_t c = 0; c < R[r].size(); ++c) R[r][c] += B[r][c];
    return R;
}

SMat smat_scale(const Scalar& s, const SMat& A) {
    SMat R = A;
    for (auto& row : R)
        for (auto& v : row) v *= s;
    return R;
}

void require_square_real_symmetric(const SMat& M, const char* where) {
    for (const auto& row : M)
        if (row.size() != M.size())
            throw std::invalid_argument(std::string(where) + ": matrix is not square");
    if (!smat_is_real(M))
        throw std::invalid_argument(std::string(where) + ": complex entries");
    if (!smat_is_symmetric(M))
        throw std::invalid_argument(std::string(where) + ": matrix is not symmetric");
}

}  // namespace

GramRep gram_rep(const FreePoly& p) {
    if (!p.is_real()) throw std::invalid_argument("gram_rep: complex coefficients");
    if (p.is_zero()) return GramRep{{}, {}, p};
    if (!p.is_homogeneous())
        throw std::invalid_argument("gram_rep: input must be homogeneous");
    unsigned deg = static_cast<unsigned>(p.degree());
    if (deg % 2 != 0) throw std::invalid_argument("gram_rep: odd degree");
    if (p != p.transpose())
        throw std::invalid_argument("gram_rep: input differs from its transpose");
    unsigned d = deg / 2;
    bool toggle = p.mode() == Mode::nonsymmetric;

    std::set<Word, WordLess> bset;
    for (const auto& [w, c] : p.terms()) {
        Word prefix(w.begin(), w.begin() + d);
        Word suffix(w.begin() + d, w.end());
        bset.insert(transpose_word(prefix, toggle));
        bset.insert(suffix);
    }
    std::vector<Word> basis(bset.begin(), bset.end());
    std::map<Word, std::size_t, WordLess> idx;
    for (std::size_t j = 0; j < basis.size(); ++j) idx[basis[j]] = j;

    SMat M = smat(basis.size(), basis.size());
    for (const auto& [w, c] : p.terms()) {
        Word prefix(w.begin(), w.begin() + d);
        Word suffix(w.begin() + d, w.end());
        M[idx[transpose_word(prefix, toggle)]][idx[suffix]] = c;
    }
    if (!smat_is_symmetric(M))
        throw std::logic_error("gram_rep: Gram of a transpose-symmetric input must be symmetric");
    return GramRep{std::move(basis), std::move(M), p};
}

FreePoly gram_expand(const GramRep& rep) {
    FreePoly acc(rep.represented.g(), rep.represented.mode());
    bool toggle = rep.represented.mode() == Mode::nonsymmetric;
    for (std::size_t j = 0; j < rep.basis.size(); ++j)
        for (std::size_t k = 0; k < rep.basis.size(); ++k) {
            if (rep.M[j][k].is_zero()) continue;
            Word w = concat_words(transpose_word(rep.basis[j], toggle), rep.basis[k]);
            acc.add_term(w, rep.M[j][k]);
        }
    return acc;
}

namespace {

// The shared Gram solve; nullopt when the input is not a harmonic quadratic
// form at all.
std::optional<HarmonicGramRep> try_harmonic_gram_rep(const FreePoly& p) {
    if (!p.is_real())
        throw std::invalid_argument("harmonic_gram_rep: complex coefficients");
    if (p.contains_direction())
        throw std::invalid_argument("harmonic_gram_rep: the input must not involve h");
    if (p.is_zero()) return HarmonicGramRep{{}, {}, p};
    if (!p.is_homogeneous())
        throw std::invalid_argument("harmonic_gram_rep: input must be homogeneous");
    unsigned deg = static_cast<unsigned>(p.degree());
    if (deg % 2 != 0) throw std::invalid_argument("harmonic_gram_rep: odd degree");
    if (p != p.transpose())
        throw std::invalid_argument("harmonic_gram_rep: input differs from its transpose");

    std::vector<FreePoly> frame = harmonic_kernel_basis(p.g(), deg / 2, 2, p.mode());
    std::size_t k = frame.size();
    bool toggle = p.mode() == Mode::nonsymmetric;

    std::map<Word, std::size_t, WordLess> rows;
    auto row_of = [&](const Word& w) {
        auto it = rows.find(w);
        if (it == rows.end()) it = rows.emplace(w, rows.size()).first;
        return it->second;
    };
    // Column j*k + l carries transpose(f_j) * f_l.
    std::vector<std::map<std::size_t, Scalar>> cols(k * k);
    for (std::size_t j = 0; j < k; ++j) {
        FreePoly fjT(p.g(), p.mode());
        for (const auto& [w, c] : frame[j].terms())
            fjT.add_term(transpose_word(w, toggle), c);
        for (std::size_t l = 0; l < k; ++l) {
            FreePoly prod = fjT * frame[l];
            for (const auto& [w, c] : prod.terms()) cols[j * k + l][row_of(w)] = c;
        }
    }
    for (const auto& [w, c] : p.terms()) row_of(w);

    SMat A = smat(rows.size(), k * k);
    for (std::size_t col = 0; col < k * k; ++col)
        for (const auto& [r, c] : cols[col]) A[r][col] = c;
    SVec b(rows.size(), Scalar(0));
    for (const auto& [w, c] : p.terms()) b[rows[w]] = c;

    std::optional<SVec> sol = solve(A, b);
    if (!sol) return std::nullopt;
    SMat M = smat(k, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) M[j][l] = (*sol)[j * k + l];
    if (!smat_is_symmetric(M))
        throw std::logic_error(
            "harmonic_gram_rep: Gram of a transpose-symmetric input must be symmetric");
    return HarmonicGramRep{std::move(frame), std::move(M), p};
}

}  // namespace

HarmonicGramRep harmonic_gram_rep(const FreePoly& p) {
    std::optional<HarmonicGramRep> rep = try_harmonic_gram_rep(p);
    if (!rep)
        throw std::invalid_argument(
            "harmonic_gram_rep: no representation as a harmonic quadratic form; "
            "the input is not subharmonic");
    return *std::move(rep);
}

FreePoly harmonic_gram_expand(const HarmonicGramRep& rep) {
    FreePoly acc(rep.represented.g(), rep.represented.mode());
    for (std::size_t j = 0; j < rep.basis.size(); ++j) {
        FreePoly fjT = rep.basis[j].transpose();
        for (std::size_t k = 0; k < rep.basis.size(); ++k) {
            if (rep.M[j][k].is_zero()) continue;
            acc += rep.M[j][k] * (fjT * rep.basis[k]);
        }
    }
    return acc;
}

PsdOutcome psd_check(const SMat& M) {
    require_square_real_symmetric(M, "psd_check");
    return psd_decompose(M);
}

const char* verdict_name(SubharmonicVerdict v) {
    switch (v) {
        case SubharmonicVerdict::subharmonic: return "subharmonic";
        case SubharmonicVerdict::not_subharmonic: return "not-subharmonic";
        default: return "undecided";
    }
}

SMat evaluate_exact(const FreePoly& p, const std::vector<SMat>& X,
                    const std::optional<SMat>& H) {
    if (X.size() != p.g())
        throw std::invalid_argument("evaluate_exact: need one matrix per variable");
    std::size_t n = 0;
    if (!X.empty()) n = X[0].size();
    else if (H) n = H->size();
    if (n == 0) throw std::invalid_argument("evaluate_exact: empty matrices");
    auto check = [n](const SMat& A, const char* what) {
        if (A.size() != n)
            throw std::invalid_argument(std::string("evaluate_exact: ") + what +
                                        " has the wrong dimension");
        for (const auto& row : A)
            if (row.size() != n)
                throw std::invalid_argument(std::string("evaluate_exact: ") + what +
                                            " is not square");
    };
    for (const auto& A : X) check(A, "a variable matrix");
    if (H) check(*H, "H");

    SMat acc = smat(n, n);
    for (const auto& [w, c] : p.terms()) {
        SMat prod = smat_identity(n);
        for (const Letter& l : w) {
            const SMat* base;
            if (l.index == kDirectionIndex) {
                if (!H)
                    throw std::invalid_argument(
                        "evaluate_exact: the word uses h but no H was supplied");
                base = &*H;
            } else {
                base = &X[l.index - 1];
            }
            prod = l.adjoint ? smat_mul(prod, smat_transpose(*base))
                             : smat_mul(prod, *base);
        }
        acc = smat_add(acc, smat_scale(c, prod));
    }
    return acc;
}

namespace {

SMat rational_symmetric_matrix(std::size_t n, SplitMix64& rng) {
    SMat M = smat(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            long num = static_cast<long>(rng.next() % 7) - 3;
            long den = 1 + static_cast<long>(rng.next() % 2);
            Scalar v{Rational(Integer(num), Integer(den))};
            M[a][b] = v;
            M[b][a] = v;
        }
    return M;
}

// Deterministic grid search for an exact refutation of matrix positivity.
// When every nonzero block of lap has odd degree, a sign flip of (X, H)
// negates the value, so any nonzero value yields a witness.
std::optional<EvalWitness> search_eval_witness(const FreePoly& lap, bool allow_flip) {
    unsigned g = lap.g();
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned variant = 0; variant < 8; ++variant) {
            SplitMix64 rng(0x5EEDF00Dull + 131 * n + variant);
            std::vector<SMat> X;
            for (unsigned i = 0; i < g; ++i) X.push_back(rational_symmetric_matrix(n, rng));
            SMat H = rational_symmetric_matrix(n, rng);
            SMat L = evaluate_exact(lap, X, H);

            std::vector<SVec> candidates;
            for (std::size_t a = 0; a < n; ++a) {
                SVec e(n, Scalar(0));
                e[a] = Scalar(1);
                candidates.push_back(e);
            }
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) {
                    SVec ep(n, Scalar(0)), em(n, Scalar(0));
                    ep[a] = Scalar(1);
                    ep[b] = Scalar(1);
                    em[a] = Scalar(1);
                    em[b] = Scalar(-1);
                    candidates.push_back(ep);
                    candidates.push_back(em);
                }
            for (const SVec& v : candidates) {
                Scalar q = dot(v, smat_apply(L, v));
                q.require_real("search_eval_witness");
                if (q.re() < 0) return EvalWitness{n, X, H, v, q};
                if (q.re() > 0 && allow_flip) {
                    std::vector<SMat> Xn;
                    for (const SMat& A : X) Xn.push_back(smat_scale(Scalar(-1), A));
                    SMat Hn = smat_scale(Scalar(-1), H);
                    SMat Ln = evaluate_exact(lap, Xn, Hn);
                    Scalar qn = dot(v, smat_apply(Ln, v));
                    if (qn.re() < 0) return EvalWitness{n, Xn, Hn, v, qn};
                }
            }
        }
    }
    return std::nullopt;
}

// Blockwise PSD is a complete test when no two distinct half-degrees of
// present blocks sum to a present block degree: any global
// sum-of-squares certificate then has no room for cross-degree terms.
bool blockwise_complete(const std::vector<unsigned>& even_degrees) {
    std::set<unsigned> present(even_degrees.begin(), even_degrees.end());
    for (std::size_t i = 0; i < even_degrees.size(); ++i)
        for (std::size_t j = 0; j < even_degrees.size(); ++j) {
            if (i == j) continue;
            if (present.count(even_degrees[i] / 2 + even_degrees[j] / 2)) return false;
        }
    return true;
}

}  // namespace

SubharmonicResult is_subharmonic(const FreePoly& p) {
    if (!p.is_real()) throw std::invalid_argument("is_subharmonic: complex coefficients");
    FreePoly lap = laplacian(p);
    SubharmonicResult res{SubharmonicVerdict::undecided, lap, {}, {}, std::nullopt,
                          std::nullopt, ""};
    if (lap.is_zero()) {
        res.verdict = SubharmonicVerdict::subharmonic;
        res.note = "the Laplacian vanishes (the input is harmonic)";
        return res;
    }
    if (lap != lap.transpose()) {
        bool toggle = lap.mode() == Mode::nonsymmetric;
        for (const auto& [w, c] : lap.terms()) {
            Word wt = transpose_word(w, toggle);
            if (lap.coeff(wt) != c) {
                res.asymmetry = std::make_pair(w, wt);
                break;
            }
        }
        res.verdict = SubharmonicVerdict::not_subharmonic;
        res.note = "the Laplacian is not transpose symmetric, so its values are "
                   "not symmetric matrices";
        return res;
    }

    std::vector<unsigned> degrees = lap.homogeneous_degrees();
    std::vector<unsigned> even_degrees;
    bool all_even_psd = true;
    for (unsigned deg : degrees) {
        if (deg % 2 != 0) {
            res.odd_block_degrees.push_back(deg);
            continue;
        }
        even_degrees.push_back(deg);
        GramRep gr = gram_rep(lap.homogeneous_component(deg));
        PsdOutcome po = psd_decompose(gr.M);
        if (!po.psd) all_even_psd = false;
        res.blocks.push_back(BlockReport{deg, std::move(gr), std::move(po)});
    }

    if (!res.odd_block_degrees.empty()) {
        bool all_odd = even_degrees.empty();
        res.witness = search_eval_witness(lap, all_odd);
        bool extreme_odd = (degrees.front() % 2 != 0) || (degrees.back() % 2 != 0);
        if (res.witness) {
            res.verdict = SubharmonicVerdict::not_subharmonic;
            res.note = "an exact evaluation of the Laplacian has a negative "
                       "quadratic value";
        } else if (extreme_odd) {
            res.verdict = SubharmonicVerdict::not_subharmonic;
            res.note = "the lowest or highest nonzero Laplacian block has odd "
                       "degree; under scaling it would have to vanish, so the "
                       "Laplacian cannot be matrix positive (no grid witness found)";
        } else {
            res.verdict = SubharmonicVerdict::undecided;
            res.note = "odd-degree Laplacian blocks between even ones; the "
                       "blockwise analysis is inconclusive";
        }
        return res;
    }

    if (all_even_psd) {
        res.verdict = SubharmonicVerdict::subharmonic;
        res.note = "every homogeneous block of the Laplacian has a PSD Gram";
        return res;
    }
    if (blockwise_complete(even_degrees)) {
        res.verdict = SubharmonicVerdict::not_subharmonic;
        res.note = "a Laplacian block has a non-PSD Gram and the block degrees "
                   "admit no cross-degree cancellation";
        return res;
    }
    res.witness = search_eval_witness(lap, false);
    if (res.witness) {
        res.verdict = SubharmonicVerdict::not_subharmonic;
        res.note = "an exact evaluation of the Laplacian has a negative quadratic value";
    } else {
        res.verdict = SubharmonicVerdict::undecided;
        res.note = "a block Gram is not PSD but cross-degree cancellation between "
                   "blocks is possible; undecided";
    }
    return res;
}

std::optional<std::vector<FreePoly>> bounded_below_sos(const FreePoly& p) {
    std::optional<HarmonicGramRep> maybe = try_harmonic_gram_rep(p);
    if (!maybe) return std::nullopt;
    HarmonicGramRep rep = *std::move(maybe);
    if (rep.basis.empty()) return std::vector<FreePoly>{};
    PsdOutcome po = psd_decompose(rep.M);
    if (!po.psd) return std::nullopt;

    std::vector<FreePoly> out;
    FreePoly total(p.g(), p.mode());
    for (std::size_t k = 0; k < po.d.size(); ++k) {
        if (po.d[k].is_zero()) continue;
        FreePoly q(p.g(), p.mode());
        for (std::size_t j = 0; j < rep.basis.size(); ++j)
            if (!po.P[k][j].is_zero()) q += po.P[k][j] * rep.basis[j];
        if (q.is_zero()) continue;
        // d_k = num/den with num, den > 0; num*den = a^2+b^2+c^2+e^2 turns
        // d_k q^T q into unit squares with rational factors s/den.
        Integer num = boost::multiprecision::numerator(po.d[k].re());
        Integer den = boost::multiprecision::denominator(po.d[k].re());
        for (const Integer& s : four_squares(num * den)) {
            if (s == 0) continue;
            FreePoly h = Scalar(Rational(s, den)) * q;
            total += h.transpose() * h;
            out.push_back(std::move(h));
        }
    }
    if (total != p)
        throw std::logic_error("bounded_below_sos: square expansion mismatch");
    return out;
}

namespace {

// Coefficients expressing q in the span of the given polynomials, if any.
std::optional<SVec> solve_combo(const std::vector<FreePoly>& targets,
                                const FreePoly& q) {
    std::map<Word, std::size_t, WordLess> rows;
    auto row_of = [&](const Word& w) {
        auto it = rows.find(w);
        if (it == rows.end()) it = rows.emplace(w, rows.size()).first;
        return it->second;
    };
    std::vector<std::map<std::size_t, Scalar>> cols(targets.size());
    for (std::size_t j = 0; j < targets.size(); ++j)
        for (const auto& [w, c] : targets[j].terms()) cols[j][row_of(w)] = c;
    for (const auto& [w, c] : q.terms()) row_of(w);
    SMat A = smat(rows.size(), targets.size());
    for (std::size_t j = 0; j < targets.size(); ++j)
        for (const auto& [r, c] : cols[j]) A[r][j] = c;
    SVec b(rows.size(), Scalar(0));
    for (const auto& [w, c] : q.terms()) b[rows[w]] = c;
    return solve(A, b);
}

// Free lifts of the real and imaginary parts of (x1 + i x2)^d; both are
// harmonic of degree d.
std::pair<FreePoly, FreePoly> re_im_lift(unsigned d) {
    CommPoly re(2), im(2);
    for (unsigned k = 0; k <= d; ++k) {
        CommPoly::Expo e(3, 0);
        e[0] = d - k;
        e[1] = k;
        Scalar c(binomial(d, k));
        switch (k % 4) {
            case 0: re.add_term(e, c); break;
            case 1: im.add_term(e, c); break;
            case 2: re.add_term(e, -c); break;
            default: im.add_term(e, -c); break;
        }
    }
    return {lift_symm(re), lift_symm(im)};
}

SMat congruence(const SMat& T, const SMat& A) {
    return smat_mul(smat_transpose(T), smat_mul(A, T));
}

}  // namespace

TwoVarSos two_var_sos_decompose(const FreePoly& p) {
    if (p.mode() != Mode::symmetric)
        throw std::invalid_argument("two_var_sos_decompose: requires symmetric mode");
    if (p.g() != 2)
        throw std::invalid_argument("two_var_sos_decompose: requires exactly two variables");
    if (!p.is_real())
        throw std::invalid_argument("two_var_sos_decompose: complex coefficients");
    if (p.contains_direction())
        throw std::invalid_argument("two_var_sos_decompose: the input must not involve h");
    if (!p.is_zero() && !p.is_homogeneous())
        throw std::invalid_argument("two_var_sos_decompose: input must be homogeneous");
    if (!p.is_zero() && p.degree() % 2 != 0)
        throw std::invalid_argument("two_var_sos_decompose: odd degree");
    if (is_subharmonic(p).verdict != SubharmonicVerdict::subharmonic)
        throw std::invalid_argument("two_var_sos_decompose: input is not subharmonic");

    std::vector<std::pair<Scalar, FreePoly>> squares;
    Scalar half(Rational(1, 2));
    FreePoly S = half * (p + p.transpose());

    if (!is_ell_harmonic(S, 2)) {
        unsigned deg = static_cast<unsigned>(S.degree());
        if (deg == 2) {
            Scalar A = S.coeff(power_word(1, 2)) + S.coeff(power_word(2, 2));
            if (A.re() < 0)
                throw std::logic_error("two_var_sos_decompose: negative trace on a "
                                       "certified subharmonic input");
            squares.emplace_back(A, FreePoly::variable(2, Mode::symmetric, 1));
        } else if (deg == 4) {
            HarmonicGramRep rep = harmonic_gram_rep(S);
            FreePoly f1(2, Mode::symmetric), f2(2, Mode::symmetric), f3(2, Mode::symmetric);
            f1.add_term(power_word(1, 2), Scalar(1));
            f1.add_term(power_word(2, 2), Scalar(-1));
            f2.add_term(Word{Letter{1, false}, Letter{2, false}}, Scalar(1));
            f2.add_term(Word{Letter{2, false}, Letter{1, false}}, Scalar(1));
            f3.add_term(Word{Letter{1, false}, Letter{2, false}}, Scalar(1));
            std::vector<FreePoly> frame{f1, f2, f3};
            SMat T = smat(rep.basis.size(), 3);
            for (std::size_t i = 0; i < rep.basis.size(); ++i) {
                std::optional<SVec> row = solve_combo(frame, rep.basis[i]);
                if (!row)
                    throw std::logic_error("two_var_sos_decompose: kernel basis "
                                           "escapes the degree-two frame");
                T[i] = *row;
            }
            SMat G = congruence(T, rep.M);
            // The harmonic directions absorb the upper-left 2x2 corner into
            // [[0,0],[0,b]]; only (a, b, c, dd) below affect p modulo
            // harmonics.
            Scalar a = G[0][2];
            Scalar c = G[1][2];
            Scalar dd = G[2][2];
            Scalar b = G[0][0] + G[1][1];
            Scalar s = a * a + c * c;
            if (s.is_zero()) {
                if (b.re() < 0 || dd.re() < 0)
                    throw std::logic_error("two_var_sos_decompose: indefinite head on "
                                           "a certified subharmonic input");
                if (!b.is_zero()) squares.emplace_back(b, f2);
                if (!dd.is_zero()) squares.emplace_back(dd, f3);
            } else {
                if (!(Scalar(0).re() < b.re()) || (b * dd - s).re() < 0)
                    throw std::logic_error("two_var_sos_decompose: the PSD condition "
                                           "fails on a certified subharmonic input");
                SMat G2 = smat(3, 3);
                G2[0][0] = b * a * a / s;
                G2[0][1] = G2[1][0] = a * b * c / s;
                G2[0][2] = G2[2][0] = a;
                G2[1][1] = b * c * c / s;
                G2[1][2] = G2[2][1] = c;
                G2[2][2] = dd;
                PsdOutcome po = psd_decompose(G2);
                if (!po.psd)
                    throw std::logic_error("two_var_sos_decompose: shifted Gram "
                                           "unexpectedly not PSD");
                for (std::size_t k = 0; k < po.d.size(); ++k) {
                    if (po.d[k].is_zero()) continue;
                    FreePoly R(2, Mode::symmetric);
                    for (std::size_t j = 0; j < 3; ++j)
                        if (!po.P[k][j].is_zero()) R += po.P[k][j] * frame[j];
                    if (!R.is_zero()) squares.emplace_back(po.d[k], R);
                }
            }
        } else {
            HarmonicGramRep rep = harmonic_gram_rep(S);
            auto [re, im] = re_im_lift(deg / 2);
            std::vector<FreePoly> frame{re, im};
            SMat T = smat(rep.basis.size(), 2);
            for (std::size_t i = 0; i < rep.basis.size(); ++i) {
                std::optional<SVec> row = solve_combo(frame, rep.basis[i]);
                if (!row)
                    throw std::logic_error("two_var_sos_decompose: kernel basis "
                                           "escapes the real/imaginary frame");
                T[i] = *row;
            }
            SMat G = congruence(T, rep.M);
            // transpose(im) im - transpose(re) re and the two mixed products
            // are harmonic, so modulo harmonics p is (G11 + G22) re^T re.
            Scalar c1 = G[0][0] + G[1][1];
            if (c1.re() < 0)
                throw std::logic_error("two_var_sos_decompose: negative leading "
                                       "square on a certified subharmonic input");
            if (!c1.is_zero()) squares.emplace_back(c1, re);
        }
    }

    FreePoly H = p;
    for (const auto& [c, R] : squares) H -= c * (R.transpose() * R);
    if (!is_ell_harmonic(H, 2))
        throw std::logic_error("two_var_sos_decompose: remainder is not harmonic");
    for (const auto& [c, R] : squares)
        if (!is_ell_harmonic(R, 2))
            throw std::logic_error("two_var_sos_decompose: a square root is not harmonic");
    return TwoVarSos{std::move(squares), std::move(H)};
}

std::pair<FreePoly, FreePoly> split_sym_harm(const FreePoly& p) {
    if (is_subharmonic(p).verdict != SubharmonicVerdict::subharmonic)
        throw std::invalid_argument("split_sym_harm: input is not certified subharmonic");
    Scalar half(Rational(1, 2));
    FreePoly S = half * (p + p.transpose());
    FreePoly N = half * (p - p.transpose());
    if (!is_ell_harmonic(N, 2))
        throw std::logic_error("split_sym_harm: antisymmetric part is not harmonic");
    if (is_subharmonic(S).verdict != SubharmonicVerdict::subharmonic)
        throw std::logic_error("split_sym_harm: symmetric part lost subharmonicity");
    return {std::move(S), std::move(N)};
}

Deg2NormalForm deg2_normal_form(const FreePoly& p) {
    if (p.degree() > 2)
        throw std::invalid_argument("deg2_normal_form: degree exceeds two");
    if (!p.is_real())
        throw std::invalid_argument("deg2_normal_form: complex coefficients");
    unsigned g = p.g();
    SMat matrix;
    FreePoly head(g, p.mode());
    bool psd = false;
    if (p.mode() == Mode::symmetric) {
        Scalar A(0);
        for (unsigned i = 1; i <= g; ++i) A += p.coeff(power_word(i, 2));
        head.add_term(power_word(1, 2), A);
        matrix = SMat{{A}};
        psd = !(A.re() < 0);
    } else {
        Scalar A(0), B1(0), B2(0), C(0);
        for (unsigned i = 1; i <= g; ++i) {
            A += p.coeff(Word{Letter{i, true}, Letter{i, false}});
            B1 += p.coeff(Word{Letter{i, true}, Letter{i, true}});
            B2 += p.coeff(Word{Letter{i, false}, Letter{i, false}});
            C += p.coeff(Word{Letter{i, false}, Letter{i, true}});
        }
        head.add_term(Word{Letter{1, true}, Letter{1, false}}, A);
        head.add_term(Word{Letter{1, true}, Letter{1, true}}, B1);
        head.add_term(Word{Letter{1, false}, Letter{1, false}}, B2);
        head.add_term(Word{Letter{1, false}, Letter{1, true}}, C);
        matrix = SMat{{A, B1}, {B2, C}};
        psd = (B1 == B2) && psd_decompose(matrix).psd;
    }
    FreePoly H = p - head;
    if (!is_ell_harmonic(H, 2))
        throw std::logic_error("deg2_normal_form: remainder is not harmonic");
    return Deg2NormalForm{std::move(matrix), std::move(H), psd};
}

std::optional<SampleCounterexample> sample_matrix_positivity(const FreePoly& p,
                                                             unsigned n,
                                                             unsigned trials,
                                                             std::uint64_t seed) {
    if (!p.is_real())
        throw std::invalid_argument("sample_matrix_positivity: complex coefficients");
    if (n == 0)
        throw std::invalid_argument("sample_matrix_positivity: dimension must be positive");
    FreePoly lap = laplacian(p);
    if (lap.is_zero()) return std::nullopt;
    for (unsigned t = 0; t < trials; ++t) {
        SplitMix64 rng(seed + t);
        MatrixTuple X;
        X.n = n;
        for (unsigned i = 0; i < p.g(); ++i) X.mats.push_back(random_matrix(n, true, rng));
        Eigen::MatrixXd H = random_matrix(n, true, rng);
        Eigen::MatrixXd E = evaluate_real(lap, X, H);
        Eigen::MatrixXd sym = 0.5 * (E + E.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
        double least = es.eigenvalues()(0);
        if (least < kSampleTolerance)
            return SampleCounterexample{t, std::move(X), std::move(H), least};
    }
    return std::nullopt;
}

}  // namespace freeharm
