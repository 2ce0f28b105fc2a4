#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "freeharm/calculus.hpp"
#include "freeharm/certificates.hpp"
#include "freeharm/harmonic.hpp"
#include "freeharm/io.hpp"
#include "freeharm/nonsym.hpp"
#include "freeharm/subharmonic.hpp"
#include "freeharm/symmetry.hpp"

namespace {

using freeharm::FreePoly;
using freeharm::Mode;
using nlohmann::json;

// Thrown for command misuse that CLI11 cannot catch itself; maps to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string expr;
    std::string file;
    unsigned ell = 2;
    std::optional<unsigned> g;
    std::optional<std::string> mode;
    bool as_json = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string input_text(const Options& opt) {
    if (!opt.file.empty()) return slurp(opt.file);
    if (opt.expr.empty()) throw UsageError("no input expression given");
    return opt.expr;
}

FreePoly input_poly(const Options& opt) {
    std::optional<Mode> mode;
    if (opt.mode) mode = freeharm::mode_from_name(*opt.mode);
    return freeharm::parse_poly(input_text(opt), mode, opt.g);
}

void add_common(CLI::App* cmd, Options& opt, bool takes_expr = true,
                bool takes_g = true) {
    if (takes_expr) {
        cmd->add_option("expr", opt.expr, "input polynomial expression");
        cmd->add_option("--file", opt.file, "read the input expression from a file");
    }
    if (takes_g)
        cmd->add_option("--g", opt.g, "alphabet size (default: inferred from the input)");
    cmd->add_option("--mode", opt.mode, "symmetric or nonsymmetric (default: inferred)")
        ->check(CLI::IsMember({"symmetric", "nonsymmetric"}));
    cmd->add_flag("--json", opt.as_json, "emit a JSON document");
}

void print_poly(const FreePoly& p, bool as_json) {
    if (as_json)
        std::cout << freeharm::poly_to_json(p).dump(2) << "\n";
    else
        std::cout << freeharm::to_string(p) << "\n";
}

// Commutative symbol from an expression; words commute, flags and h are
// rejected.
freeharm::CommPoly symbol_of(const std::string& text, unsigned g) {
    FreePoly q = freeharm::parse_poly(text, Mode::symmetric, g);
    if (q.contains_direction())
        throw std::invalid_argument("the derivative symbol must not involve h");
    return freeharm::comm_collapse(q);
}

json decomposition_document(const FreePoly& p, unsigned ell) {
    if (p.mode() == Mode::nonsymmetric)
        return freeharm::nonsym_decomposition_json(
            p, freeharm::nonsym_ell_harmonic_decompose(p, ell), ell);
    return freeharm::decomposition_json(p, freeharm::decompose_main(p, ell));
}

void print_decomposition_text(const json& doc) {
    if (doc.at("kind") == "nonsym-harmonic-decomposition") {
        for (const auto& part : doc.at("parts")) {
            std::cout << "alpha " << part.at("alpha").get<std::string>() << ":\n";
            for (const auto& s : part.at("decomposition").at("summands")) {
                std::cout << "  sigma " << s.at("sigma").dump() << " :";
                for (const auto& f : s.at("factors"))
                    std::cout << "  [ " << f.get<std::string>() << " ]";
                std::cout << "\n";
            }
        }
        return;
    }
    std::cout << "alphabet " << doc.at("alphabet").get<unsigned>() << ", ell "
              << doc.at("ell").get<unsigned>() << "\n";
    for (const auto& s : doc.at("summands")) {
        std::cout << "sigma " << s.at("sigma").dump() << " :";
        for (const auto& f : s.at("factors"))
            std::cout << "  [ " << f.get<std::string>() << " ]";
        std::cout << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact calculus of noncommutative polynomials: derivatives, "
                 "Laplacians, harmonic decomposition, subharmonicity certificates"};
    app.require_subcommand(1);
    int exit_code = 0;

    Options diff_opt;
    unsigned diff_x = 0;
    std::string diff_symbol;
    auto* diff = app.add_subcommand("diff", "directional derivative in direction h");
    add_common(diff, diff_opt);
    diff->add_option("--x", diff_x, "differentiate in x<index>");
    diff->add_option("--symbol", diff_symbol,
                     "iterated derivative with a commutative symbol expression");
    diff->callback([&] {
        FreePoly p = input_poly(diff_opt);
        if ((diff_x == 0) == diff_symbol.empty())
            throw UsageError("diff needs exactly one of --x or --symbol");
        FreePoly out = diff_symbol.empty()
                           ? freeharm::dird(p, diff_x)
                           : freeharm::dird_symbol(p, symbol_of(diff_symbol, p.g()));
        print_poly(out, diff_opt.as_json);
    });

    Options lap_opt;
    auto* lap = app.add_subcommand("lap", "ell-Laplacian (default ell = 2)");
    add_common(lap, lap_opt);
    lap->add_option("--ell", lap_opt.ell, "Laplacian order")->check(CLI::PositiveNumber);
    lap->callback([&] {
        print_poly(freeharm::laplacian_ell(input_poly(lap_opt), lap_opt.ell),
                   lap_opt.as_json);
    });

    Options ish_opt;
    auto* ish = app.add_subcommand("is-harmonic", "test whether the ell-Laplacian vanishes");
    add_common(ish, ish_opt);
    ish->add_option("--ell", ish_opt.ell, "Laplacian order")->check(CLI::PositiveNumber);
    ish->callback([&] {
        bool yes = freeharm::is_ell_harmonic(input_poly(ish_opt), ish_opt.ell);
        std::cout << (yes ? "true" : "false") << "\n";
        exit_code = yes ? 0 : 1;
    });

    Options basis_opt;
    unsigned basis_g = 0, basis_degree = 0;
    auto* basis = app.add_subcommand("harmonic-basis",
                                     "basis of the homogeneous ell-harmonic polynomials");
    add_common(basis, basis_opt, false, false);
    basis->add_option("--g", basis_g, "alphabet size")->required();
    basis->add_option("--degree", basis_degree, "homogeneous degree")->required();
    basis->add_option("--ell", basis_opt.ell, "Laplacian order")->check(CLI::PositiveNumber);
    basis->callback([&] {
        Mode mode = basis_opt.mode ? freeharm::mode_from_name(*basis_opt.mode)
                                   : Mode::symmetric;
        std::vector<FreePoly> out =
            freeharm::harmonic_kernel_basis(basis_g, basis_degree, basis_opt.ell, mode);
        if (basis_opt.as_json) {
            json arr = json::array();
            for (const FreePoly& f : out) arr.push_back(freeharm::to_string(f));
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const FreePoly& f : out) std::cout << freeharm::to_string(f) << "\n";
        }
    });

    Options dec_opt;
    auto* dec = app.add_subcommand(
        "decompose", "write an ell-harmonic polynomial as permuted independent products");
    add_common(dec, dec_opt);
    dec->add_option("--ell", dec_opt.ell, "Laplacian order")->check(CLI::PositiveNumber);
    dec->callback([&] {
        json doc = decomposition_document(input_poly(dec_opt), dec_opt.ell);
        if (dec_opt.as_json)
            std::cout << doc.dump(2) << "\n";
        else
            print_decomposition_text(doc);
    });

    Options sub_opt;
    auto* sub = app.add_subcommand("is-subharmonic",
                                   "test matrix positivity of the Laplacian");
    add_common(sub, sub_opt);
    sub->callback([&] {
        FreePoly p = input_poly(sub_opt);
        freeharm::SubharmonicResult res = freeharm::is_subharmonic(p);
        if (sub_opt.as_json) {
            std::cout << freeharm::subharmonic_json(p, res).dump(2) << "\n";
        } else {
            const char* text =
                res.verdict == freeharm::SubharmonicVerdict::subharmonic ? "true"
                : res.verdict == freeharm::SubharmonicVerdict::not_subharmonic
                    ? "false"
                    : "undecided";
            std::cout << text << "\n" << res.note << "\n";
        }
        exit_code = res.verdict == freeharm::SubharmonicVerdict::subharmonic ? 0 : 1;
    });

    Options sos_opt;
    bool sos_bounded = false;
    auto* sos = app.add_subcommand(
        "sos", "sum-of-squares plus harmonic decompositions of subharmonic inputs");
    add_common(sos, sos_opt);
    sos->add_flag("--bounded-below", sos_bounded,
                  "harmonic-square representation via the harmonic Gram matrix");
    sos->callback([&] {
        FreePoly p = input_poly(sos_opt);
        if (sos_bounded) {
            auto squares = freeharm::bounded_below_sos(p);
            if (sos_opt.as_json) {
                json doc{{"schema", freeharm::kCertSchema}, {"kind", "bounded-below-sos"},
                         {"input", freeharm::to_string(p)}, {"g", p.g()},
                         {"mode", freeharm::mode_name(p.mode())}};
                if (squares) {
                    json arr = json::array();
                    for (const FreePoly& h : *squares) arr.push_back(freeharm::to_string(h));
                    doc["squares"] = std::move(arr);
                } else {
                    doc["squares"] = nullptr;
                }
                std::cout << doc.dump(2) << "\n";
            } else if (squares) {
                for (const FreePoly& h : *squares)
                    std::cout << "[ " << freeharm::to_string(h) << " ]\n";
            } else {
                std::cout << "none\n";
            }
            exit_code = squares ? 0 : 1;
            return;
        }
        freeharm::TwoVarSos out = freeharm::two_var_sos_decompose(p);
        if (sos_opt.as_json) {
            json arr = json::array();
            for (const auto& [c, R] : out.squares) {
                arr.push_back({{"coeff", json::array({numerator(c.re()).str(),
                                                      denominator(c.re()).str()})},
                               {"poly", freeharm::to_string(R)}});
            }
            json doc{{"schema", freeharm::kCertSchema}, {"kind", "two-var-sos"},
                     {"input", freeharm::to_string(p)}, {"g", p.g()},
                     {"mode", freeharm::mode_name(p.mode())}, {"squares", std::move(arr)},
                     {"harmonic", freeharm::to_string(out.harmonic_part)}};
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const auto& [c, R] : out.squares)
                std::cout << freeharm::to_string(FreePoly::constant(p.g(), p.mode(), c))
                          << " * [ " << freeharm::to_string(R) << " ]\n";
            std::cout << "harmonic part: " << freeharm::to_string(out.harmonic_part)
                      << "\n";
        }
    });

    Options eval_opt;
    unsigned eval_n = 0, eval_trials = 100;
    std::uint64_t eval_seed = 0;
    auto* eval = app.add_subcommand(
        "eval", "sample the Laplacian on random symmetric matrix tuples");
    add_common(eval, eval_opt);
    eval->add_option("--n", eval_n, "matrix dimension")->required()
        ->check(CLI::PositiveNumber);
    eval->add_option("--trials", eval_trials, "number of sampled tuples");
    eval->add_option("--seed", eval_seed, "base seed; trial t uses seed + t");
    eval->callback([&] {
        FreePoly p = input_poly(eval_opt);
        auto ce = freeharm::sample_matrix_positivity(p, eval_n, eval_trials, eval_seed);
        if (eval_opt.as_json) {
            std::cout << freeharm::sample_report_json(p, eval_n, eval_trials, eval_seed, ce)
                             .dump(2)
                      << "\n";
        } else if (ce) {
            std::cout << "counterexample at trial " << ce->trial
                      << ", least eigenvalue " << ce->least_eigenvalue << "\n";
        } else {
            std::cout << "no counterexample in " << eval_trials << " trials\n";
        }
        exit_code = ce ? 1 : 0;
    });

    Options split_opt;
    auto* split = app.add_subcommand("nonsym-split",
                                     "direct-sum pieces by transpose pattern");
    add_common(split, split_opt);
    split->callback([&] {
        FreePoly p = input_poly(split_opt);
        if (split_opt.as_json) {
            json parts = json::array();
            for (const freeharm::AlphaTuple& a : freeharm::alpha_support(p)) {
                FreePoly piece = freeharm::proj_alpha(p, a);
                parts.push_back({{"alpha", freeharm::alpha_to_string(a)},
                                 {"projection", freeharm::to_string(piece)},
                                 {"collapse",
                                  freeharm::to_string(freeharm::sx_collapse(piece))}});
            }
            json doc{{"schema", freeharm::kCertSchema}, {"kind", "nonsym-split"},
                     {"input", freeharm::to_string(p)}, {"g", p.g()},
                     {"mode", freeharm::mode_name(p.mode())}, {"parts", std::move(parts)}};
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const freeharm::AlphaTuple& a : freeharm::alpha_support(p))
                std::cout << freeharm::alpha_to_string(a) << " : "
                          << freeharm::to_string(freeharm::proj_alpha(p, a)) << "\n";
        }
    });

    std::string cert_file;
    auto* vcert = app.add_subcommand("verify-cert",
                                     "replay a certificate document from scratch");
    vcert->add_option("file", cert_file, "certificate JSON file")->required();
    vcert->callback([&] {
        json doc = json::parse(slurp(cert_file));
        freeharm::verify_certificate(doc);
        std::cout << "ok\n";
    });

    std::string dec_file;
    auto* vdec = app.add_subcommand("verify-decomp",
                                    "replay a decomposition document from scratch");
    vdec->add_option("file", dec_file, "decomposition JSON file")->required();
    vdec->callback([&] {
        json doc = json::parse(slurp(dec_file));
        freeharm::verify_decomposition_doc(doc);
        std::cout << "ok\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const freeharm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::parse_error& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
