#include "freeharm/harmonic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "freeharm/linalg.hpp"

namespace freeharm {

bool is_ell_harmonic(const FreePoly& p, unsigned ell) {
    return laplacian_ell(p, ell).is_zero();
}

namespace {

// All words of the given length in canonical order over the mode's letter
// set (variables only, no direction letters).
std::vector<Word> words_of_degree(unsigned g, unsigned d, Mode mode) {
    std::vector<Letter> letters;
    for (unsigned i = 1; i <= g; ++i) {
        letters.push_back(Letter{i, false});
        if (mode == Mode::nonsymmetric) letters.push_back(Letter{i, true});
    }
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out{Word{}};
    for (unsigned k = 0; k < d; ++k) {
        std::vector<Word> next;
        next.reserve(out.size() * letters.size());
        for (const Word& w : out)
            for (const Letter& l : letters) {
                Word nw = w;
                nw.push_back(l);
                next.push_back(std::move(nw));
            }
        out = std::move(next);
        if (out.size() > size_cap())
            throw std::length_error("words_of_degree: word count exceeds the size cap");
    }
    std::sort(out.begin(), out.end(), WordLess{});
    return out;
}

}  // namespace

std::vector<FreePoly> harmonic_kernel_basis(unsigned g, unsigned d, unsigned ell,
                                            Mode mode) {
    if (g == 0) throw std::invalid_argument("harmonic_kernel_basis: g must be positive");
    std::vector<Word> basis_words = words_of_degree(g, d, mode);
    std::map<Word, std::size_t, WordLess> col_of;
    for (std::size_t j = 0; j < basis_words.size(); ++j) col_of[basis_words[j]] = j;

    std::map<Word, SVec, WordLess> rows;
    for (std::size_t j = 0; j < basis_words.size(); ++j) {
        FreePoly lap =
            laplacian_ell(FreePoly::from_word(g, mode, basis_words[j]), ell);
        for (const auto& [w, c] : lap.terms()) {
            auto it = rows.find(w);
            if (it == rows.end())
                it = rows.emplace(w, SVec(basis_words.size(), Scalar(0))).first;
            it->second[j] = c;
        }
    }
    SMat A;
    A.reserve(rows.size());
    for (auto& [w, row] : rows) A.push_back(std::move(row));
    std::vector<SVec> kernel = nullspace(A, basis_words.size());
    std::vector<FreePoly> out;
    out.reserve(kernel.size());
    for (const SVec& v : kernel) {
        FreePoly p(g, mode);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) p.add_term(basis_words[j], v[j]);
        out.push_back(std::move(p));
    }
    return out;
}

CommPoly delta_ell(const CommPoly& q, unsigned ell) {
    CommPoly r(q.g());
    for (unsigned j = 1; j <= q.g(); ++j) r += q.derivative(j, ell);
    return r;
}

CommPoly hm_extend(const CommPoly& q, unsigned index, unsigned ell) {
    if (ell == 0) throw std::invalid_argument("hm_extend: ell must be positive");
    if (index == kDirectionIndex || index > q.g())
        throw std::invalid_argument("hm_extend: bad variable index");
    if (q.contains_direction())
        throw std::invalid_argument("hm_extend: the input must not involve h");
    if (q.degree_in(index) >= ell)
        throw std::invalid_argument("hm_extend: degree in the chosen variable must be below ell");
    std::vector<CommPoly> parts = q.split_by_power(index);
    CommPoly out(q.g());
    for (unsigned r = 0; r < parts.size(); ++r) {
        CommPoly term = parts[r];
        unsigned k = 0;
        while (!term.is_zero()) {
            Scalar coeff(Rational(Integer(k % 2 ? -1 : 1), factorial(ell * k + r)));
            out += coeff * (CommPoly::power(q.g(), index, ell * k + r) * term);
            term = delta_ell(term, ell) - term.derivative(index, ell);
            ++k;
        }
    }
    return out;
}

CommPoly hm_normalized_power(unsigned g, unsigned index, unsigned r,
                             const std::vector<unsigned>& aux, unsigned ell) {
    if (r >= ell)
        throw std::invalid_argument("hm_normalized_power: r must be below ell");
    std::set<unsigned> seen{index};
    CommPoly q = CommPoly::power(g, index, r);
    for (unsigned a : aux) {
        if (a == kDirectionIndex || a > g || seen.count(a))
            throw std::invalid_argument(
                "hm_normalized_power: aux indices must be distinct variables different from index");
        seen.insert(a);
        q = q * CommPoly::power(g, a, ell);
    }
    CommPoly e = hm_extend(q, index, ell);
    CommPoly::Expo top(g + 1, 0);
    top[index - 1] = ell * static_cast<unsigned>(aux.size()) + r;
    Scalar c = e.coeff(top);
    if (c.is_zero())
        throw std::logic_error("hm_normalized_power: leading coefficient vanished");
    return (Scalar(1) / c) * e;
}

std::vector<FreePoly> basis_degree_ell(unsigned g, unsigned ell) {
    if (g == 0 || ell == 0)
        throw std::invalid_argument("basis_degree_ell: g and ell must be positive");
    std::vector<FreePoly> out;
    for (unsigned k = 2; k <= g; ++k) {
        FreePoly p(g, Mode::symmetric);
        p.add_term(power_word(k, ell), Scalar(1));
        p.add_term(power_word(1, ell), Scalar(-1));
        out.push_back(std::move(p));
    }
    for (const Word& w : words_of_degree(g, ell, Mode::symmetric)) {
        bool pure = true;
        for (const Letter& l : w) pure = pure && (l == w[0]);
        if (pure) continue;
        out.push_back(FreePoly::from_word(g, Mode::symmetric, w));
    }
    return out;
}

std::vector<FreePoly> one_harmonic_basis(unsigned g, unsigned d) {
    if (g < 2)
        throw std::invalid_argument("one_harmonic_basis: needs at least two variables");
    std::vector<FreePoly> forms;
    for (unsigned k = 1; k + 1 <= g; ++k) {
        FreePoly f(g, Mode::symmetric);
        f.add_term(Word{Letter{k, false}}, Scalar(1));
        f.add_term(Word{Letter{k + 1, false}}, Scalar(-1));
        forms.push_back(std::move(f));
    }
    std::vector<FreePoly> out{FreePoly::constant(g, Mode::symmetric, Scalar(1))};
    for (unsigned t = 0; t < d; ++t) {
        std::vector<FreePoly> next;
        next.reserve(out.size() * forms.size());
        for (const FreePoly& p : out)
            for (const FreePoly& f : forms) next.push_back(p * f);
        out = std::move(next);
    }
    return out;
}

std::vector<FreePoly> basis_two_var(unsigned d, unsigned ell) {
    if (ell == 0) throw std::invalid_argument("basis_two_var: ell must be positive");
    std::vector<FreePoly> out;
    for (const Word& w : words_of_degree(2, d, Mode::symmetric)) {
        if (degree_in_word(w, 1) < ell && degree_in_word(w, 2) < ell)
            out.push_back(FreePoly::from_word(2, Mode::symmetric, w));
    }
    for (unsigned r = 0; r < ell && r <= d; ++r) {
        if (d - r < ell) continue;
        CommPoly seed =
            CommPoly::power(2, 1, r) * CommPoly::power(2, 2, d - r);
        out.push_back(lift_symm(hm_extend(seed, 1, ell)));
    }
    return out;
}

FreePoly expand(const Decomposition& dec) {
    FreePoly acc(dec.alphabet, dec.mode);
    for (const DecompSummand& s : dec.summands) {
        FreePoly prod = FreePoly::constant(dec.alphabet, dec.mode, Scalar(1));
        for (const FreePoly& f : s.factors) prod = prod * f;
        acc += permute(s.sigma, prod);
    }
    return acc;
}

void validate_decomposition(const Decomposition& dec) {
    for (const DecompSummand& s : dec.summands) {
        if (!is_independent_product(s.factors))
            throw std::invalid_argument(
                "validate_decomposition: factors share a variable");
        unsigned total = 0;
        for (const FreePoly& f : s.factors) {
            if (f.g() != dec.alphabet || f.mode() != dec.mode)
                throw std::invalid_argument(
                    "validate_decomposition: factor context mismatch");
            if (f.is_zero() || !f.is_homogeneous())
                throw std::invalid_argument(
                    "validate_decomposition: factors must be nonzero and homogeneous");
            if (!is_symmetrized(f))
                throw std::invalid_argument(
                    "validate_decomposition: factor is not symmetrized");
            if (!is_ell_harmonic(f, dec.ell))
                throw std::invalid_argument(
                    "validate_decomposition: factor is not ell-harmonic");
            total += static_cast<unsigned>(f.degree());
        }
        if (total != s.sigma.degree())
            throw std::invalid_argument(
                "validate_decomposition: permutation degree differs from the summand degree");
    }
}

namespace {

FreePoly product_of(const std::vector<FreePoly>& fs, unsigned g, Mode mode) {
    FreePoly prod = FreePoly::constant(g, mode, Scalar(1));
    for (const FreePoly& f : fs) prod = prod * f;
    return prod;
}

// Folds degree-0 factors into the first positive-degree factor so summands
// stay tidy; the product is unchanged.
std::vector<FreePoly> fold_constants(std::vector<FreePoly> fs, unsigned g, Mode mode) {
    Scalar k(1);
    std::vector<FreePoly> kept;
    for (FreePoly& f : fs) {
        if (f.degree() <= 0) {
            k *= f.coeff(Word{});
        } else {
            kept.push_back(std::move(f));
        }
    }
    if (kept.empty()) return {FreePoly::constant(g, mode, k)};
    if (!k.is_one()) kept.front() = k * kept.front();
    return kept;
}

FreePoly pair_difference(unsigned a, unsigned b, unsigned g, Mode mode, unsigned ell) {
    FreePoly f(g, mode);
    f.add_term(power_word(a, ell), Scalar(1));
    f.add_term(power_word(b, ell), Scalar(-1));
    return f;
}

FreePoly expand_pairs(const std::vector<std::pair<unsigned, unsigned>>& pairs,
                      unsigned g, Mode mode, unsigned ell) {
    FreePoly prod = FreePoly::constant(g, mode, Scalar(1));
    for (const auto& [a, b] : pairs) prod = prod * pair_difference(a, b, g, mode, ell);
    return prod;
}

std::vector<SpanElement> fully_span_rec(FreePoly p, unsigned ell,
                                        std::vector<unsigned> V) {
    std::vector<SpanElement> out;
    if (p.is_zero()) return out;
    unsigned g = p.g();
    Mode mode = p.mode();
    unsigned deg = static_cast<unsigned>(p.degree());
    unsigned dd = deg / ell;
    if (V.size() < 2 * dd)
        throw std::invalid_argument("fully_span_decompose: variable list is too small");

    if (dd == 1) {
        unsigned anchor = V.front();
        Scalar total(0);
        std::vector<std::pair<unsigned, Scalar>> coeffs;
        for (const auto& [w, c] : p.terms()) {
            for (const Letter& l : w)
                if (l != w[0])
                    throw std::logic_error("fully_span_rec: non-power word at depth one");
            coeffs.emplace_back(w[0].index, c);
            total += c;
        }
        if (!total.is_zero())
            throw std::invalid_argument("fully_span_decompose: input is not ell-harmonic");
        for (const auto& [v, c] : coeffs) {
            if (v == anchor) continue;
            out.push_back(SpanElement{c, Permutation(ell), {{v, anchor}}});
        }
        return out;
    }

    unsigned w_var = V.back();
    std::vector<unsigned> V_minus(V.begin(), V.end() - 1);

    if (p.degree_in(w_var) == ell) {
        NeighborDecomposition nd = neighbor_decompose(p, w_var, ell);
        p = nd.remainder;
        for (const NeighborPiece& piece : nd.pieces) {
            std::vector<SpanElement> subs = fully_span_rec(piece.tail, ell, V_minus);
            for (const SpanElement& el : subs) {
                std::set<unsigned> used;
                for (const auto& [a, b] : el.pairs) {
                    used.insert(a);
                    used.insert(b);
                }
                unsigned partner = 0;
                for (unsigned v : V_minus)
                    if (!used.count(v)) {
                        partner = v;
                        break;
                    }
                if (partner == 0)
                    throw std::logic_error("fully_span_rec: no free partner variable");
                Permutation omega =
                    el.sigma.embed_after(ell).compose(piece.sigma);
                std::vector<std::pair<unsigned, unsigned>> pairs{{w_var, partner}};
                pairs.insert(pairs.end(), el.pairs.begin(), el.pairs.end());
                out.push_back(SpanElement{el.c, omega, pairs});
                // p keeps the partner's share so the running difference
                // stays fully of degree ell with w_var eliminated.
                FreePoly addback =
                    FreePoly::from_word(g, mode, power_word(partner, ell)) *
                    expand_pairs(el.pairs, g, mode, ell);
                p += el.c * permute(omega, addback);
            }
        }
    }

    if (p.is_zero()) return out;
    if (p.degree_in(w_var) != 0)
        throw std::logic_error("fully_span_rec: largest variable not eliminated");

    FullySplit fs = fully_degree_ell_split(p, ell, V_minus);
    for (const auto& [sigma_i, w_i] : fs.parts) {
        std::map<unsigned, FreePoly> groups;
        FreePoly tail_sum(g, mode);
        for (const auto& [bw, c] : w_i.terms()) {
            unsigned lead = bw[0].index;
            Word tail(bw.begin() + ell, bw.end());
            auto it = groups.find(lead);
            if (it == groups.end()) it = groups.emplace(lead, FreePoly(g, mode)).first;
            it->second.add_term(tail, c);
            tail_sum.add_term(tail, c);
        }
        if (!tail_sum.is_zero())
            throw std::invalid_argument("fully_span_decompose: input is not ell-harmonic");
        for (const auto& [lead, pv] : groups) {
            if (pv.is_zero()) continue;
            std::vector<unsigned> V_sub;
            for (unsigned v : V_minus)
                if (v != lead) V_sub.push_back(v);
            std::vector<SpanElement> subs = fully_span_rec(pv, ell, V_sub);
            for (const SpanElement& el : subs) {
                Permutation omega = el.sigma.embed_after(ell).compose(sigma_i);
                std::vector<std::pair<unsigned, unsigned>> pairs{{lead, w_var}};
                pairs.insert(pairs.end(), el.pairs.begin(), el.pairs.end());
                out.push_back(SpanElement{el.c, omega, pairs});
            }
        }
    }
    return out;
}

}  // namespace

FreePoly expand_span_element(const SpanElement& el, unsigned g, Mode mode,
                             unsigned ell) {
    return el.c * permute(el.sigma, expand_pairs(el.pairs, g, mode, ell));
}

std::vector<SpanElement> fully_span_decompose(const FreePoly& p, unsigned ell,
                                              std::vector<unsigned> variables) {
    if (ell == 0)
        throw std::invalid_argument("fully_span_decompose: ell must be positive");
    if (p.mode() != Mode::symmetric || p.contains_direction())
        throw std::invalid_argument(
            "fully_span_decompose: requires symmetric mode without h");
    if (!p.is_homogeneous())
        throw std::invalid_argument("fully_span_decompose: input must be homogeneous");
    if (!is_fully_degree_ell(p, ell))
        throw std::invalid_argument("fully_span_decompose: input is not fully of degree ell");
    if (p.is_zero()) return {};
    std::sort(variables.begin(), variables.end());
    variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
    for (unsigned v : variables)
        if (v == kDirectionIndex || v > p.g())
            throw std::invalid_argument("fully_span_decompose: bad candidate variable");
    std::set<unsigned> vset(variables.begin(), variables.end());
    for (unsigned v : p.support_variables())
        if (!vset.count(v))
            throw std::invalid_argument(
                "fully_span_decompose: candidate variables must contain the support");
    return fully_span_rec(p, ell, variables);
}

namespace {

class DecomposeEngine {
public:
    DecomposeEngine(unsigned ell, unsigned alphabet, Mode mode)
        : ell_(ell), G_(alphabet), mode_(mode) {}

    std::vector<DecompSummand> rec(FreePoly p, std::set<unsigned> forbidden) {
        std::vector<DecompSummand> out;
        if (p.is_zero()) return out;
        unsigned d = static_cast<unsigned>(p.degree());
        if (d == 0) {
            out.push_back(DecompSummand{Permutation(0), {p}});
            return out;
        }

        // Step one: while some variable degree exceeds ell, peel it and
        // replace the pure power head by its harmonic extension, pushing the
        // difference back into the running polynomial.
        for (unsigned dstar = d; dstar >= ell_ + 1; --dstar) {
            for (unsigned i = 1; i <= G_; ++i) {
                if (p.degree_in(i) != dstar) continue;
                NeighborDecomposition nd = neighbor_decompose(p, i, dstar);
                p = nd.remainder;
                unsigned r = dstar % ell_;
                unsigned Q = dstar / ell_;
                std::set<unsigned> forb_inner = forbidden;
                forb_inner.insert(i);
                for (const NeighborPiece& piece : nd.pieces) {
                    std::vector<DecompSummand> subs = rec(piece.tail, forb_inner);
                    for (const DecompSummand& sub : subs) {
                        std::set<unsigned> used = forb_inner;
                        for (const FreePoly& f : sub.factors)
                            for (unsigned v : f.support_variables()) used.insert(v);
                        std::vector<unsigned> aux;
                        for (unsigned v = 1; v <= G_ && aux.size() < Q; ++v)
                            if (!used.count(v)) aux.push_back(v);
                        if (aux.size() < Q)
                            throw std::logic_error("decompose_main: alphabet budget exhausted");
                        FreePoly s =
                            lift_symm(hm_normalized_power(G_, i, r, aux, ell_), mode_);
                        Permutation omega =
                            sub.sigma.embed_after(dstar).compose(piece.sigma);
                        std::vector<FreePoly> factors{s};
                        factors.insert(factors.end(), sub.factors.begin(),
                                       sub.factors.end());
                        out.push_back(DecompSummand{
                            omega, fold_constants(factors, G_, mode_)});
                        FreePoly head =
                            FreePoly::from_word(G_, mode_, power_word(i, dstar)) - s;
                        p += permute(omega,
                                     head * product_of(sub.factors, G_, mode_));
                    }
                }
            }
        }

        // Step two: degrees are at most ell now; split every variable by
        // degree modulo ell and peel the pure power x_i^k off the class-k
        // part, which consists exactly of the words with degree k in x_i.
        for (unsigned i = 1; i <= G_; ++i) {
            if (p.degree_in(i) == 0) continue;
            std::vector<FreePoly> parts = mod_ell_split(p, i, ell_);
            std::set<unsigned> forb_inner = forbidden;
            forb_inner.insert(i);
            for (unsigned k = 1; k < ell_; ++k) {
                if (parts[k].is_zero()) continue;
                NeighborDecomposition nd = neighbor_decompose(parts[k], i, k);
                if (!nd.remainder.is_zero())
                    throw std::logic_error(
                        "decompose_main: modular class left a remainder");
                for (const NeighborPiece& piece : nd.pieces) {
                    std::vector<DecompSummand> subs = rec(piece.tail, forb_inner);
                    for (const DecompSummand& sub : subs) {
                        Permutation omega =
                            sub.sigma.embed_after(k).compose(piece.sigma);
                        std::vector<FreePoly> factors{
                            FreePoly::from_word(G_, mode_, power_word(i, k))};
                        factors.insert(factors.end(), sub.factors.begin(),
                                       sub.factors.end());
                        out.push_back(DecompSummand{
                            omega, fold_constants(factors, G_, mode_)});
                    }
                }
            }
            p = parts[0];
        }

        // Step three: the residue is fully of degree ell.
        if (!p.is_zero()) {
            unsigned dd = static_cast<unsigned>(p.degree()) / ell_;
            std::set<unsigned> vset = p.support_variables();
            for (unsigned v = 1; v <= G_ && vset.size() < 2 * dd; ++v)
                if (!vset.count(v) && !forbidden.count(v)) vset.insert(v);
            if (vset.size() < 2 * dd)
                throw std::logic_error("decompose_main: alphabet budget exhausted");
            std::vector<unsigned> V(vset.begin(), vset.end());
            for (const SpanElement& el : fully_span_decompose(p, ell_, V)) {
                std::vector<FreePoly> factors;
                for (std::size_t t = 0; t < el.pairs.size(); ++t) {
                    FreePoly f = pair_difference(el.pairs[t].first,
                                                 el.pairs[t].second, G_, mode_, ell_);
                    if (t == 0) f = el.c * f;
                    factors.push_back(std::move(f));
                }
                out.push_back(DecompSummand{el.sigma, std::move(factors)});
            }
        }
        return out;
    }

private:
    unsigned ell_;
    unsigned G_;
    Mode mode_;
};

}  // namespace

Decomposition decompose_main(const FreePoly& p, unsigned ell) {
    if (ell == 0) throw std::invalid_argument("decompose_main: ell must be positive");
    if (p.mode() != Mode::symmetric)
        throw std::invalid_argument("decompose_main: requires symmetric mode");
    if (p.contains_direction())
        throw std::invalid_argument("decompose_main: the input must not involve h");
    if (!is_ell_harmonic(p, ell))
        throw std::invalid_argument("decompose_main: the input is not ell-harmonic");
    unsigned d = p.is_zero() ? 0 : static_cast<unsigned>(p.degree());
    unsigned G = std::max({p.g(), d, 2 * ((d + ell - 1) / ell)});
    FreePoly work = p.with_alphabet(G);
    Decomposition dec;
    dec.ell = ell;
    dec.alphabet = G;
    dec.mode = p.mode();
    DecomposeEngine engine(ell, G, p.mode());
    for (unsigned deg : work.homogeneous_degrees()) {
        std::vector<DecompSummand> subs =
            engine.rec(work.homogeneous_component(deg), {});
        dec.summands.insert(dec.summands.end(), subs.begin(), subs.end());
    }
    if (expand(dec) != work)
        throw std::logic_error("decompose_main: internal reassembly check failed");
    return dec;
}

std::vector<PartialSymbolPiece> partial_symbol_decompose(const FreePoly& p,
                                                         unsigned split_index,
                                                         unsigned ell) {
    if (p.mode() != Mode::symmetric || p.contains_direction())
        throw std::invalid_argument(
            "partial_symbol_decompose: requires symmetric mode without h");
    CommPoly high(p.g());
    for (unsigned i = split_index + 1; i <= p.g(); ++i)
        high += CommPoly::power(p.g(), i, ell);
    if (!dird_symbol(p, high).is_zero())
        throw std::invalid_argument(
            "partial_symbol_decompose: the derivative in the upper variables must vanish");

    struct Key {
        std::size_t d;
        std::vector<unsigned> I;
        Word u;
        bool operator<(const Key& o) const {
            if (d != o.d) return d < o.d;
            if (I != o.I) return I < o.I;
            return WordLess{}(u, o.u);
        }
    };
    std::map<Key, FreePoly> groups;
    for (const auto& [w, c] : p.terms()) {
        Key key;
        key.d = w.size();
        Word tail;
        for (unsigned k = 0; k < w.size(); ++k) {
            if (w[k].index <= split_index) {
                key.I.push_back(k + 1);
                key.u.push_back(w[k]);
            } else {
                tail.push_back(w[k]);
            }
        }
        auto it = groups.find(key);
        if (it == groups.end()) it = groups.emplace(key, FreePoly(p.g(), p.mode())).first;
        it->second.add_term(tail, c);
    }
    std::vector<PartialSymbolPiece> out;
    for (auto& [key, tail] : groups) {
        if (!is_ell_harmonic(tail, ell))
            throw std::logic_error(
                "partial_symbol_decompose: a tail failed the harmonicity guarantee");
        out.push_back(PartialSymbolPiece{
            position_subset_permutation(key.I, static_cast<unsigned>(key.d)), key.u,
            std::move(tail)});
    }
    return out;
}

CommPoly power_sum_symbol(const std::vector<std::vector<Scalar>>& B, unsigned ell) {
    if (B.empty()) throw std::invalid_argument("power_sum_symbol: empty matrix");
    unsigned g = static_cast<unsigned>(B[0].size());
    CommPoly q(g);
    for (const auto& row : B) {
        if (row.size() != g)
            throw std::invalid_argument("power_sum_symbol: ragged matrix");
        CommPoly form(g);
        for (unsigned j = 0; j < g; ++j) {
            CommPoly::Expo e(g + 1, 0);
            e[j] = 1;
            form.add_term(e, row[j]);
        }
        CommPoly powed = CommPoly::constant(g, Scalar(1));
        for (unsigned t = 0; t < ell; ++t) powed = powed * form;
        q += powed;
    }
    return q;
}

bool change_of_variables_transport(const FreePoly& p,
                                   const std::vector<std::vector<Scalar>>& B,
                                   unsigned ell) {
    if (B.size() != p.g())
        throw std::invalid_argument("change_of_variables_transport: B is not g-by-g");
    SMat M(B.begin(), B.end());
    if (!inverse(M))
        throw std::invalid_argument("change_of_variables_transport: B is singular");
    return dird_symbol(p, power_sum_symbol(B, ell)).is_zero();
}

bool check_main_condition(const std::vector<std::vector<Scalar>>& A, unsigned ell) {
    if (ell == 0)
        throw std::invalid_argument("check_main_condition: ell must be positive");
    std::size_t k = A.size();
    std::size_t m = k == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != m)
            throw std::invalid_argument("check_main_condition: ragged matrix");
    if (k < ell) return true;
    std::vector<std::size_t> idx(ell);
    // Enumerate strictly increasing index tuples.
    auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> bool {
        if (pos == ell) {
            Scalar s(0);
            for (std::size_t j = 0; j < m; ++j) {
                Scalar prodc(1);
                for (std::size_t t = 0; t < ell; ++t) prodc *= A[idx[t]][j];
                s += prodc;
            }
            return s.is_zero();
        }
        for (std::size_t v = start; v + (ell - 1 - pos) < k; ++v) {
            idx[pos] = v;
            if (!self(self, pos + 1, v + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

FreePoly product_of_linear_forms(const std::vector<std::vector<Scalar>>& A) {
    if (A.empty())
        throw std::invalid_argument("product_of_linear_forms: empty matrix");
    unsigned g = static_cast<unsigned>(A[0].size());
    FreePoly p = FreePoly::constant(g, Mode::symmetric, Scalar(1));
    for (const auto& row : A) {
        if (row.size() != g)
            throw std::invalid_argument("product_of_linear_forms: ragged matrix");
        FreePoly form(g, Mode::symmetric);
        for (unsigned j = 0; j < g; ++j)
            form.add_term(Word{Letter{j + 1, false}}, row[j]);
        p = p * form;
    }
    return p;
}

}  // namespace freeharm
