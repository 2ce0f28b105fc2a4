#include "freeharm/certificates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "freeharm/calculus.hpp"
#include "freeharm/io.hpp"
#include "freeharm/linalg.hpp"
#include "freeharm/matrix_eval.hpp"

namespace freeharm {

namespace {

using nlohmann::json;

void check(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument("certificate replay failed: " + msg);
}

json j_rational(const Rational& r) {
    return json::array({numerator(r).str(), denominator(r).str()});
}

Rational rational_of(const json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
    check(j.is_array() && j.size() == 2, "expected a [numerator, denominator] pair");
    auto part = [](const json& v) -> Integer {
        if (v.is_number_integer()) return Integer(v.get<long long>());
        if (v.is_string()) return Integer(v.get<std::string>());
        throw std::invalid_argument(
            "certificate replay failed: rational parts must be integers or strings");
    };
    Integer den = part(j[1]);
    check(den != 0, "zero denominator");
    return Rational(part(j[0]), den);
}

json j_real(const Scalar& s) {
    s.require_real("certificate serialization");
    return j_rational(s.re());
}

json j_svec(const SVec& v) {
    json out = json::array();
    for (const Scalar& s : v) out.push_back(j_real(s));
    return out;
}

SVec svec_of(const json& j) {
    check(j.is_array(), "expected an array vector");
    SVec v;
    for (const auto& e : j) v.emplace_back(rational_of(e));
    return v;
}

json j_smat(const SMat& M) {
    json out = json::array();
    for (const SVec& row : M) out.push_back(j_svec(row));
    return out;
}

SMat smat_of(const json& j) {
    check(j.is_array(), "expected an array matrix");
    SMat M;
    for (const auto& row : j) M.push_back(svec_of(row));
    for (const auto& row : M)
        check(row.size() == (M.empty() ? 0 : M[0].size()), "ragged matrix");
    return M;
}

Word word_of(const std::string& text, Mode mode, unsigned g) {
    FreePoly p = parse_poly(text, mode, g);
    check(p.terms().size() == 1, "a basis entry must be a single word");
    const auto& [w, c] = *p.terms().begin();
    check(c == Scalar(1), "a basis word must have coefficient one");
    return w;
}

json psd_payload(const std::vector<std::string>& basis, const char* basis_kind,
                 const SMat& M, const PsdOutcome& out) {
    json doc;
    doc["basis_kind"] = basis_kind;
    doc["basis"] = basis;
    doc["matrix"] = j_smat(M);
    doc["psd"] = out.psd;
    if (out.psd)
        doc["factors"] = json{{"P", j_smat(out.P)}, {"d", j_svec(out.d)}};
    else
        doc["witness"] = j_svec(out.witness);
    return doc;
}

// Sum of d_k P_k^T P_k accumulated entrywise, so an empty factor list still
// yields the zero matrix of the right size.
SMat factor_product(const SMat& P, const SVec& d, std::size_t k) {
    SMat S = smat(k, k);
    check(P.size() == d.size(), "factor row count differs from pivot count");
    for (std::size_t r = 0; r < P.size(); ++r) {
        check(P[r].size() == k, "factor row has the wrong width");
        for (std::size_t a = 0; a < k; ++a) {
            if (P[r][a].is_zero()) continue;
            for (std::size_t b = 0; b < k; ++b)
                S[a][b] += d[r] * P[r][a] * P[r][b];
        }
    }
    return S;
}

void verify_psd_payload(const json& doc, const SMat& M) {
    if (doc.at("psd").get<bool>()) {
        const json& f = doc.at("factors");
        SMat P = smat_of(f.at("P"));
        SVec d = svec_of(f.at("d"));
        for (const Scalar& s : d) check(!(s.re() < 0), "a pivot is negative");
        check(factor_product(P, d, M.size()) == M,
              "the factorization does not reproduce the matrix");
    } else {
        SVec v = svec_of(doc.at("witness"));
        check(v.size() == M.size(), "witness dimension mismatch");
        Scalar val = dot(v, smat_apply(M, v));
        val.require_real("psd witness replay");
        check(val.re() < 0, "the claimed witness is not negative");
    }
}

json decomposition_payload(const FreePoly& input, const Decomposition& dec) {
    json doc;
    doc["schema"] = kCertSchema;
    doc["kind"] = "harmonic-decomposition";
    doc["ell"] = dec.ell;
    doc["mode"] = mode_name(dec.mode);
    doc["alphabet"] = dec.alphabet;
    doc["input"] = to_string(input);
    doc["input_g"] = input.g();
    json summands = json::array();
    for (const DecompSummand& s : dec.summands) {
        json factors = json::array();
        for (const FreePoly& f : s.factors) factors.push_back(to_string(f));
        summands.push_back({{"sigma", s.sigma.images()}, {"factors", factors}});
    }
    doc["summands"] = std::move(summands);
    return doc;
}

void verify_plain_decomposition(const json& doc) {
    unsigned ell = doc.at("ell").get<unsigned>();
    Mode mode = mode_from_name(doc.at("mode").get<std::string>());
    unsigned alphabet = doc.at("alphabet").get<unsigned>();
    unsigned g = doc.at("input_g").get<unsigned>();
    check(alphabet >= g, "alphabet smaller than the input alphabet");
    FreePoly p = parse_poly(doc.at("input").get<std::string>(), mode, g);

    Decomposition dec;
    dec.ell = ell;
    dec.alphabet = alphabet;
    dec.mode = mode;
    for (const auto& s : doc.at("summands")) {
        DecompSummand sm;
        sm.sigma = Permutation::from_images(s.at("sigma").get<std::vector<unsigned>>());
        for (const auto& f : s.at("factors"))
            sm.factors.push_back(parse_poly(f.get<std::string>(), mode, alphabet));
        dec.summands.push_back(std::move(sm));
    }
    validate_decomposition(dec);
    check(expand(dec) == p.with_alphabet(alphabet),
          "the decomposition does not re-expand to the input");
}

void verify_nonsym_decomposition(const json& doc) {
    unsigned ell = doc.at("ell").get<unsigned>();
    unsigned g = doc.at("input_g").get<unsigned>();
    FreePoly p = parse_poly(doc.at("input").get<std::string>(), Mode::nonsymmetric, g);

    unsigned widest = g;
    for (const auto& part : doc.at("parts"))
        widest = std::max(widest,
                          part.at("decomposition").at("alphabet").get<unsigned>());
    FreePoly total(widest, Mode::nonsymmetric);
    std::set<std::string> seen;
    for (const auto& part : doc.at("parts")) {
        std::string alpha_text = part.at("alpha").get<std::string>();
        check(seen.insert(alpha_text).second, "duplicate pattern");
        AlphaTuple alpha = alpha_from_string(alpha_text);
        const json& inner = part.at("decomposition");
        check(inner.at("ell").get<unsigned>() == ell, "pattern piece has a different ell");
        verify_plain_decomposition(inner);
        Decomposition dec;
        dec.ell = ell;
        dec.alphabet = inner.at("alphabet").get<unsigned>();
        dec.mode = mode_from_name(inner.at("mode").get<std::string>());
        check(dec.mode == Mode::symmetric, "pattern pieces must be symmetric mode");
        for (const auto& s : inner.at("summands")) {
            DecompSummand sm;
            sm.sigma =
                Permutation::from_images(s.at("sigma").get<std::vector<unsigned>>());
            for (const auto& f : s.at("factors"))
                sm.factors.push_back(
                    parse_poly(f.get<std::string>(), Mode::symmetric, dec.alphabet));
            dec.summands.push_back(std::move(sm));
        }
        total += apply_alpha(expand(dec).with_alphabet(widest), alpha);
    }
    check(total == p.with_alphabet(widest),
          "the pattern pieces do not re-assemble to the input");
}

void verify_psd_certificate(const json& doc) {
    unsigned g = doc.at("g").get<unsigned>();
    Mode mode = mode_from_name(doc.at("mode").get<std::string>());
    FreePoly p = parse_poly(doc.at("polynomial").get<std::string>(), mode, g);
    SMat M = smat_of(doc.at("matrix"));
    const json& basis = doc.at("basis");
    check(M.size() == basis.size() && (M.empty() || M[0].size() == basis.size()),
          "matrix and basis sizes differ");
    check(smat_is_symmetric(M), "the claimed Gram matrix is not symmetric");

    FreePoly acc(g, mode);
    std::string basis_kind = doc.at("basis_kind").get<std::string>();
    if (basis_kind == "words") {
        bool toggle = mode == Mode::nonsymmetric;
        std::vector<Word> words;
        for (const auto& b : basis) words.push_back(word_of(b.get<std::string>(), mode, g));
        for (std::size_t j = 0; j < words.size(); ++j)
            for (std::size_t l = 0; l < words.size(); ++l) {
                if (M[j][l].is_zero()) continue;
                Word w = concat_words(transpose_word(words[j], toggle), words[l]);
                acc.add_term(w, M[j][l]);
            }
    } else if (basis_kind == "polynomials") {
        std::vector<FreePoly> fs;
        for (const auto& b : basis) fs.push_back(parse_poly(b.get<std::string>(), mode, g));
        for (std::size_t j = 0; j < fs.size(); ++j) {
            FreePoly fjT = fs[j].transpose();
            for (std::size_t l = 0; l < fs.size(); ++l)
                if (!M[j][l].is_zero()) acc += M[j][l] * (fjT * fs[l]);
        }
    } else {
        check(false, "unknown basis kind '" + basis_kind + "'");
    }
    check(acc == p, "the Gram matrix does not represent the polynomial");
    verify_psd_payload(doc, M);
}

void verify_subharmonic_verdict(const json& doc) {
    unsigned g = doc.at("g").get<unsigned>();
    Mode mode = mode_from_name(doc.at("mode").get<std::string>());
    FreePoly p = parse_poly(doc.at("input").get<std::string>(), mode, g);
    FreePoly lap = laplacian(p);
    check(parse_poly(doc.at("laplacian").get<std::string>(), mode, g) == lap,
          "the recorded Laplacian does not match");

    SubharmonicResult fresh = is_subharmonic(p);
    check(doc.at("verdict").get<std::string>() == verdict_name(fresh.verdict),
          "the verdict does not replay");

    for (const auto& b : doc.at("blocks")) {
        unsigned degree = b.at("degree").get<unsigned>();
        GramRep rep = gram_rep(lap.homogeneous_component(degree));
        const json& basis = b.at("basis");
        check(basis.size() == rep.basis.size(), "block basis size mismatch");
        for (std::size_t j = 0; j < rep.basis.size(); ++j)
            check(word_of(basis[j].get<std::string>(), mode, g) == rep.basis[j],
                  "block basis word mismatch");
        SMat M = smat_of(b.at("matrix"));
        check(M == rep.M, "block Gram matrix mismatch");
        verify_psd_payload(b, M);
    }
    if (doc.contains("asymmetry")) {
        const json& a = doc.at("asymmetry");
        Word wa = word_of(a.at(0).get<std::string>(), mode, g);
        Word wb = word_of(a.at(1).get<std::string>(), mode, g);
        check(wb == transpose_word(wa, mode == Mode::nonsymmetric),
              "asymmetry words are not transposes");
        check(lap.coeff(wa) != lap.coeff(wb), "the Laplacian is symmetric at the "
                                              "claimed word pair");
    }
    if (doc.contains("eval_witness")) {
        const json& w = doc.at("eval_witness");
        std::vector<SMat> X;
        for (const auto& m : w.at("X")) X.push_back(smat_of(m));
        SMat H = smat_of(w.at("H"));
        SVec v = svec_of(w.at("v"));
        Scalar val = dot(v, smat_apply(evaluate_exact(lap, X, H), v));
        val.require_real("evaluation witness replay");
        check(val == Scalar(rational_of(w.at("value"))), "witness value mismatch");
        check(val.re() < 0, "the evaluation witness is not negative");
    }
}

void verify_sampling_report(const json& doc) {
    unsigned g = doc.at("g").get<unsigned>();
    Mode mode = mode_from_name(doc.at("mode").get<std::string>());
    FreePoly p = parse_poly(doc.at("input").get<std::string>(), mode, g);
    unsigned n = doc.at("n").get<unsigned>();
    if (doc.at("counterexample").is_null()) {
        std::optional<SampleCounterexample> ce = sample_matrix_positivity(
            p, n, doc.at("trials").get<unsigned>(), doc.at("seed").get<std::uint64_t>());
        check(!ce, "a counterexample exists where the report claims none");
        return;
    }
    const json& c = doc.at("counterexample");
    FreePoly lap = laplacian(p);
    MatrixTuple X;
    X.n = n;
    for (const auto& m : c.at("X")) {
        Eigen::MatrixXd A(n, n);
        for (unsigned r = 0; r < n; ++r)
            for (unsigned s = 0; s < n; ++s) A(r, s) = m.at(r).at(s).get<double>();
        X.mats.push_back(std::move(A));
    }
    Eigen::MatrixXd H(n, n);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = 0; s < n; ++s) H(r, s) = c.at("H").at(r).at(s).get<double>();
    Eigen::MatrixXd E = evaluate_real(lap, X, H);
    Eigen::MatrixXd sym = 0.5 * (E + E.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    check(es.eigenvalues()(0) < kSampleTolerance,
          "the claimed counterexample is not negative enough");
}

json matrix_json(const Eigen::MatrixXd& A) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < A.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < A.cols(); ++c) row.push_back(A(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

nlohmann::json psd_certificate_json(const GramRep& rep, const PsdOutcome& out) {
    std::vector<std::string> basis;
    for (const Word& w : rep.basis) basis.push_back(to_string(w));
    json doc = psd_payload(basis, "words", rep.M, out);
    doc["schema"] = kCertSchema;
    doc["kind"] = "psd-certificate";
    doc["g"] = rep.represented.g();
    doc["mode"] = mode_name(rep.represented.mode());
    doc["polynomial"] = to_string(rep.represented);
    return doc;
}

nlohmann::json harmonic_psd_certificate_json(const HarmonicGramRep& rep,
                                             const PsdOutcome& out) {
    std::vector<std::string> basis;
    for (const FreePoly& f : rep.basis) basis.push_back(to_string(f));
    json doc = psd_payload(basis, "polynomials", rep.M, out);
    doc["schema"] = kCertSchema;
    doc["kind"] = "psd-certificate";
    doc["g"] = rep.represented.g();
    doc["mode"] = mode_name(rep.represented.mode());
    doc["polynomial"] = to_string(rep.represented);
    return doc;
}

nlohmann::json decomposition_json(const FreePoly& input, const Decomposition& dec) {
    return decomposition_payload(input, dec);
}

nlohmann::json nonsym_decomposition_json(
    const FreePoly& input,
    const std::vector<std::pair<AlphaTuple, Decomposition>>& parts,
    unsigned ell) {
    json doc;
    doc["schema"] = kCertSchema;
    doc["kind"] = "nonsym-harmonic-decomposition";
    doc["ell"] = ell;
    doc["input"] = to_string(input);
    doc["input_g"] = input.g();
    json jparts = json::array();
    for (const auto& [alpha, dec] : parts) {
        FreePoly piece = sx_collapse(proj_alpha(input, alpha));
        jparts.push_back({{"alpha", alpha_to_string(alpha)},
                          {"decomposition", decomposition_payload(piece, dec)}});
    }
    doc["parts"] = std::move(jparts);
    return doc;
}

nlohmann::json subharmonic_json(const FreePoly& input, const SubharmonicResult& res) {
    json doc;
    doc["schema"] = kCertSchema;
    doc["kind"] = "subharmonic-verdict";
    doc["input"] = to_string(input);
    doc["g"] = input.g();
    doc["mode"] = mode_name(input.mode());
    doc["verdict"] = verdict_name(res.verdict);
    doc["laplacian"] = to_string(res.laplacian);
    doc["note"] = res.note;
    json blocks = json::array();
    for (const BlockReport& b : res.blocks) {
        std::vector<std::string> basis;
        for (const Word& w : b.gram.basis) basis.push_back(to_string(w));
        json jb = psd_payload(basis, "words", b.gram.M, b.psd);
        jb["degree"] = b.degree;
        blocks.push_back(std::move(jb));
    }
    doc["blocks"] = std::move(blocks);
    doc["odd_block_degrees"] = res.odd_block_degrees;
    if (res.asymmetry)
        doc["asymmetry"] =
            json::array({to_string(res.asymmetry->first), to_string(res.asymmetry->second)});
    if (res.witness) {
        json w;
        w["n"] = res.witness->n;
        json xs = json::array();
        for (const SMat& A : res.witness->X) xs.push_back(j_smat(A));
        w["X"] = std::move(xs);
        w["H"] = j_smat(res.witness->H);
        w["v"] = j_svec(res.witness->v);
        w["value"] = j_real(res.witness->value);
        doc["eval_witness"] = std::move(w);
    }
    return doc;
}

nlohmann::json sample_report_json(const FreePoly& input, unsigned n, unsigned trials,
                                  std::uint64_t seed,
                                  const std::optional<SampleCounterexample>& ce) {
    json doc;
    doc["schema"] = kCertSchema;
    doc["kind"] = "sampling-report";
    doc["input"] = to_string(input);
    doc["g"] = input.g();
    doc["mode"] = mode_name(input.mode());
    doc["n"] = n;
    doc["trials"] = trials;
    doc["seed"] = seed;
    if (!ce) {
        doc["counterexample"] = nullptr;
        return doc;
    }
    json c;
    c["trial"] = ce->trial;
    json xs = json::array();
    for (const Eigen::MatrixXd& A : ce->X.mats) xs.push_back(matrix_json(A));
    c["X"] = std::move(xs);
    c["H"] = matrix_json(ce->H);
    c["least_eigenvalue"] = ce->least_eigenvalue;
    doc["counterexample"] = std::move(c);
    return doc;
}

void verify_certificate(const nlohmann::json& doc) {
    check(doc.is_object(), "document is not an object");
    check(doc.value("schema", "") == kCertSchema, "unknown schema");
    std::string kind = doc.value("kind", "");
    if (kind == "psd-certificate") verify_psd_certificate(doc);
    else if (kind == "subharmonic-verdict") verify_subharmonic_verdict(doc);
    else if (kind == "sampling-report") verify_sampling_report(doc);
    else if (kind == "harmonic-decomposition" || kind == "nonsym-harmonic-decomposition")
        verify_decomposition_doc(doc);
    else check(false, "unknown certificate kind '" + kind + "'");
}

void verify_decomposition_doc(const nlohmann::json& doc) {
    check(doc.is_object(), "document is not an object");
    check(doc.value("schema", "") == kCertSchema, "unknown schema");
    std::string kind = doc.value("kind", "");
    if (kind == "harmonic-decomposition") verify_plain_decomposition(doc);
    else if (kind == "nonsym-harmonic-decomposition") verify_nonsym_decomposition(doc);
    else check(false, "not a decomposition document");
}

}  // namespace freeharm
