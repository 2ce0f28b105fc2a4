#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "exec.hpp"
#include "freeharm/calculus.hpp"
#include "freeharm/harmonic.hpp"
#include "freeharm/io.hpp"
#include "freeharm/poly.hpp"
#include "freeharm/symmetry.hpp"

using freeharm::FreePoly;
using freeharm::Mode;
using freeharm::Scalar;
using json = nlohmann::json;
using testutil::run_cli;
using testutil::shell_quote;

namespace {

const std::string kCli = FREEHARM_CLI_PATH;

const char* kGap =
    "x1 x2 x2 x1 + x2 x1 x1 x2 + x1 x3 x3 x1 + x3 x1 x1 x3 "
    "- x2 x3 x3 x2 - x3 x2 x2 x3";

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

FreePoly parse_sym(const std::string& text, unsigned g) {
    return freeharm::parse_poly(text, Mode::symmetric, g);
}

}  // namespace

TEST_CASE("derivative and Laplacian commands print canonical text") {
    auto lap = run_cli(kCli + " lap --ell 2 " + shell_quote("x1^2"));
    CHECK(lap.status == 0);
    CHECK(lap.out == "2 h^2\n");

    auto diff = run_cli(kCli + " diff --x 1 " + shell_quote("x1^2 x2"));
    CHECK(diff.status == 0);
    FreePoly expected = freeharm::dird(parse_sym("x1^2 x2", 2), 1);
    CHECK(diff.out == freeharm::to_string(expected) + "\n");

    auto zero = run_cli(kCli + " diff --x 2 --g 2 " + shell_quote("x1^2"));
    CHECK(zero.status == 0);
    CHECK(zero.out == "0\n");

    auto out_of_range = run_cli(kCli + " diff --x 2 " + shell_quote("x1^2"));
    CHECK(out_of_range.status == 1);

    auto symbol = run_cli(kCli + " diff --symbol " + shell_quote("x1^2 + 2 x2") + " " +
                          shell_quote("x1^3 + x1 x2"));
    CHECK(symbol.status == 0);
    FreePoly p = parse_sym("x1^3 + x1 x2", 2);
    FreePoly want = freeharm::dird_symbol(p, freeharm::comm_collapse(parse_sym("x1^2 + 2 x2", 2)));
    CHECK(symbol.out == freeharm::to_string(want) + "\n");

    auto both = run_cli(kCli + " diff --x 1 --symbol " + shell_quote("x1") + " " +
                        shell_quote("x1^2"));
    CHECK(both.status == 2);
    auto neither = run_cli(kCli + " diff " + shell_quote("x1^2"));
    CHECK(neither.status == 2);

    auto bad_symbol = run_cli(kCli + " diff --symbol " + shell_quote("h") + " " +
                              shell_quote("x1^2"));
    CHECK(bad_symbol.status == 1);
}

TEST_CASE("input sources, mode overrides, and parse failures") {
    auto path = write_temp("freeharm_cli_input.txt", "x1 x2 - x2 x1");
    auto from_file = run_cli(kCli + " is-harmonic --file " + shell_quote(path.string()));
    CHECK(from_file.status == 0);
    CHECK(from_file.out == "true\n");
    std::filesystem::remove(path);

    auto no_input = run_cli(kCli + " lap");
    CHECK(no_input.status == 2);

    auto missing_file = run_cli(kCli + " lap --file " + shell_quote("/nonexistent/poly.txt"));
    CHECK(missing_file.status == 2);

    auto dangling = run_cli(kCli + " lap " + shell_quote("x1 +"));
    CHECK(dangling.status == 2);
    auto bad_index = run_cli(kCli + " lap " + shell_quote("x0"));
    CHECK(bad_index.status == 2);

    auto flag_in_sym = run_cli(kCli + " lap --mode symmetric " + shell_quote("x1' x2"));
    CHECK(flag_in_sym.status == 2);

    auto widened = run_cli(kCli + " lap --g 3 " + shell_quote("x1^2"));
    CHECK(widened.status == 0);
    CHECK(widened.out == "2 h^2\n");

    auto unknown = run_cli(kCli + " frobnicate " + shell_quote("x1"));
    CHECK(unknown.status == 2);
    auto no_verb = run_cli(kCli);
    CHECK(no_verb.status == 2);
}

TEST_CASE("harmonicity queries and kernel bases") {
    auto yes = run_cli(kCli + " is-harmonic " + shell_quote("x1 x2 - x2 x1"));
    CHECK(yes.status == 0);
    CHECK(yes.out == "true\n");

    auto no = run_cli(kCli + " is-harmonic " + shell_quote("x1^2"));
    CHECK(no.status == 1);
    CHECK(no.out == "false\n");

    auto ell3 = run_cli(kCli + " is-harmonic --ell 3 " + shell_quote("x1^2"));
    CHECK(ell3.status == 0);
    CHECK(ell3.out == "true\n");

    auto basis = run_cli(kCli + " harmonic-basis --g 2 --degree 2");
    CHECK(basis.status == 0);
    auto rows = lines_of(basis.out);
    REQUIRE(rows.size() == 3);
    for (const std::string& row : rows) {
        FreePoly f = parse_sym(row, 2);
        CHECK(freeharm::is_harmonic(f));
        CHECK(f.is_homogeneous());
        CHECK(f.degree() == 2);
    }

    auto basis_json = run_cli(kCli + " harmonic-basis --g 2 --degree 2 --json");
    CHECK(basis_json.status == 0);
    json arr = json::parse(basis_json.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 3);
    for (std::size_t k = 0; k < arr.size(); ++k)
        CHECK(arr[k].get<std::string>() == rows[k]);

    auto nonsym = run_cli(kCli + " harmonic-basis --g 2 --degree 2 --mode nonsymmetric");
    CHECK(nonsym.status == 0);
    CHECK(lines_of(nonsym.out).size() == 12);
}

TEST_CASE("decomposition text output and JSON replay") {
    auto text = run_cli(kCli + " decompose " + shell_quote("x1 x2 + x2 x1"));
    CHECK(text.status == 0);
    auto rows = lines_of(text.out);
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == "alphabet 2, ell 2");
    for (std::size_t k = 1; k < rows.size(); ++k) {
        CHECK(rows[k].rfind("sigma ", 0) == 0);
        CHECK(rows[k].find("[ ") != std::string::npos);
    }

    auto as_json = run_cli(kCli + " decompose --json " + shell_quote("x1 x2 + x2 x1"));
    CHECK(as_json.status == 0);
    json doc = json::parse(as_json.out);
    CHECK(doc.at("kind") == "harmonic-decomposition");
    auto path = write_temp("freeharm_cli_decomp.json", doc.dump());
    auto replay = run_cli(kCli + " verify-decomp " + shell_quote(path.string()));
    CHECK(replay.status == 0);
    CHECK(replay.out == "ok\n");
    std::filesystem::remove(path);

    auto ns_text = run_cli(kCli + " decompose " + shell_quote("x1' x1 x3 - x2' x2 x3"));
    CHECK(ns_text.status == 0);
    auto ns_rows = lines_of(ns_text.out);
    REQUIRE(!ns_rows.empty());
    CHECK(ns_rows[0] == "alpha T11:");

    auto ns_json = run_cli(kCli + " decompose --json " + shell_quote("x1' x1 x3 - x2' x2 x3"));
    CHECK(ns_json.status == 0);
    json ns_doc = json::parse(ns_json.out);
    CHECK(ns_doc.at("kind") == "nonsym-harmonic-decomposition");
    auto ns_path = write_temp("freeharm_cli_nonsym_decomp.json", ns_doc.dump());
    auto ns_replay = run_cli(kCli + " verify-decomp " + shell_quote(ns_path.string()));
    CHECK(ns_replay.status == 0);
    CHECK(ns_replay.out == "ok\n");
    std::filesystem::remove(ns_path);

    auto not_harmonic = run_cli(kCli + " decompose " + shell_quote("x1^2"));
    CHECK(not_harmonic.status == 1);
}

TEST_CASE("subharmonicity verdicts and certificate replay") {
    auto good = run_cli(kCli + " is-subharmonic " + shell_quote(kGap));
    CHECK(good.status == 0);
    auto good_rows = lines_of(good.out);
    REQUIRE(!good_rows.empty());
    CHECK(good_rows[0] == "true");

    auto bad = run_cli(kCli + " is-subharmonic " + shell_quote("x1^4"));
    CHECK(bad.status == 1);
    auto bad_rows = lines_of(bad.out);
    REQUIRE(!bad_rows.empty());
    CHECK(bad_rows[0] == "false");

    for (const char* expr : {kGap, "x1^4", "x1 x2 - x2 x1"}) {
        auto doc_run = run_cli(kCli + " is-subharmonic --json " + shell_quote(expr));
        json doc = json::parse(doc_run.out);
        CHECK(doc.at("kind") == "subharmonic-verdict");
        auto path = write_temp("freeharm_cli_verdict.json", doc.dump());
        auto replay = run_cli(kCli + " verify-cert " + shell_quote(path.string()));
        CHECK(replay.status == 0);
        CHECK(replay.out == "ok\n");
        std::filesystem::remove(path);
    }

    auto tampered_run = run_cli(kCli + " is-subharmonic --json " + shell_quote("x1^4"));
    json tampered = json::parse(tampered_run.out);
    tampered["input"] = "x1^2";
    auto tam_path = write_temp("freeharm_cli_tampered.json", tampered.dump());
    auto tam = run_cli(kCli + " verify-cert " + shell_quote(tam_path.string()));
    CHECK(tam.status == 1);
    std::filesystem::remove(tam_path);

    auto garbled_path = write_temp("freeharm_cli_garbled.json", "{ not json");
    auto garbled = run_cli(kCli + " verify-cert " + shell_quote(garbled_path.string()));
    CHECK(garbled.status == 2);
    std::filesystem::remove(garbled_path);

    json mystery{{"schema", "freeharm-cert/1"}, {"kind", "mystery"}};
    auto myst_path = write_temp("freeharm_cli_mystery.json", mystery.dump());
    auto myst = run_cli(kCli + " verify-cert " + shell_quote(myst_path.string()));
    CHECK(myst.status == 1);
    std::filesystem::remove(myst_path);
}

TEST_CASE("sum-of-squares commands") {
    auto text = run_cli(kCli + " sos " + shell_quote("x1^2 + x2^2"));
    CHECK(text.status == 0);
    auto rows = lines_of(text.out);
    REQUIRE(!rows.empty());
    CHECK(rows.back().rfind("harmonic part: ", 0) == 0);
    for (std::size_t k = 0; k + 1 < rows.size(); ++k)
        CHECK(rows[k].find(" * [ ") != std::string::npos);

    auto as_json = run_cli(kCli + " sos --json " + shell_quote("x1^2 + x2^2"));
    CHECK(as_json.status == 0);
    json doc = json::parse(as_json.out);
    CHECK(doc.at("kind") == "two-var-sos");
    FreePoly input = parse_sym(doc.at("input").get<std::string>(), 2);
    FreePoly rebuilt = FreePoly::zero(input.g(), input.mode());
    for (const auto& sq : doc.at("squares")) {
        Scalar c = Scalar::of_fraction(
            freeharm::Integer(sq.at("coeff")[0].get<std::string>()),
            freeharm::Integer(sq.at("coeff")[1].get<std::string>()));
        FreePoly r = parse_sym(sq.at("poly").get<std::string>(), input.g());
        rebuilt = rebuilt + c * (r.transpose() * r);
    }
    rebuilt = rebuilt + parse_sym(doc.at("harmonic").get<std::string>(), input.g());
    CHECK(rebuilt == input);

    auto none = run_cli(kCli + " sos --bounded-below " + shell_quote(kGap));
    CHECK(none.status == 1);
    CHECK(none.out == "none\n");

    auto some = run_cli(kCli + " sos --bounded-below " + shell_quote("x1^2"));
    CHECK(some.status == 0);
    auto sq_rows = lines_of(some.out);
    REQUIRE(!sq_rows.empty());
    FreePoly total = FreePoly::zero(1, Mode::symmetric);
    for (const std::string& row : sq_rows) {
        REQUIRE(row.size() > 4);
        REQUIRE(row.rfind("[ ", 0) == 0);
        REQUIRE(row.substr(row.size() - 2) == " ]");
        FreePoly r = parse_sym(row.substr(2, row.size() - 4), 1);
        total = total + r.transpose() * r;
    }
    CHECK(total == parse_sym("x1^2", 1));

    auto rejected = run_cli(kCli + " sos " + shell_quote("x1^4"));
    CHECK(rejected.status == 1);
}

TEST_CASE("matrix sampling of the Laplacian") {
    auto found = run_cli(kCli + " eval --n 2 --trials 100 --seed 1 " + shell_quote("x1^4"));
    CHECK(found.status == 1);
    CHECK(found.out.rfind("counterexample at trial ", 0) == 0);

    auto clean = run_cli(kCli + " eval --n 1 --trials 50 --seed 3 " + shell_quote("x1^4"));
    CHECK(clean.status == 0);
    CHECK(clean.out == "no counterexample in 50 trials\n");

    auto gap_clean = run_cli(kCli + " eval --n 2 --trials 60 --seed 5 " + shell_quote(kGap));
    CHECK(gap_clean.status == 0);
    CHECK(gap_clean.out == "no counterexample in 60 trials\n");

    auto report_run = run_cli(kCli + " eval --json --n 2 --trials 40 --seed 1 " +
                              shell_quote("x1^4"));
    CHECK(report_run.status == 1);
    json report = json::parse(report_run.out);
    CHECK(report.at("kind") == "sampling-report");
    auto path = write_temp("freeharm_cli_report.json", report.dump());
    auto replay = run_cli(kCli + " verify-cert " + shell_quote(path.string()));
    CHECK(replay.status == 0);
    CHECK(replay.out == "ok\n");
    std::filesystem::remove(path);

    auto zero_n = run_cli(kCli + " eval --n 0 --trials 5 " + shell_quote("x1^2"));
    CHECK(zero_n.status == 2);
}

TEST_CASE("transpose-pattern splitting") {
    const std::string expr = "x1' x2 x2' x1 - x1 x2 x2 x1' + 3 x1' x1 x1 x1";
    auto text = run_cli(kCli + " nonsym-split " + shell_quote(expr));
    CHECK(text.status == 0);
    auto rows = lines_of(text.out);
    REQUIRE(rows.size() == 3);

    FreePoly input = freeharm::parse_poly(expr, Mode::nonsymmetric, 2);
    FreePoly sum = FreePoly::zero(2, Mode::nonsymmetric);
    std::vector<std::string> alphas;
    for (const std::string& row : rows) {
        auto split_at = row.find(" : ");
        REQUIRE(split_at != std::string::npos);
        alphas.push_back(row.substr(0, split_at));
        sum = sum + freeharm::parse_poly(row.substr(split_at + 3), Mode::nonsymmetric, 2);
    }
    CHECK(sum == input);
    CHECK(std::count(alphas.begin(), alphas.end(), "T1T1") == 1);
    CHECK(std::count(alphas.begin(), alphas.end(), "111T") == 1);
    CHECK(std::count(alphas.begin(), alphas.end(), "T111") == 1);

    auto as_json = run_cli(kCli + " nonsym-split --json " + shell_quote(expr));
    CHECK(as_json.status == 0);
    json doc = json::parse(as_json.out);
    CHECK(doc.at("kind") == "nonsym-split");
    REQUIRE(doc.at("parts").size() == 3);
    for (const auto& part : doc.at("parts")) {
        if (part.at("alpha").get<std::string>() != "T111") continue;
        FreePoly collapse =
            freeharm::parse_poly(part.at("collapse").get<std::string>(), Mode::symmetric, 2);
        CHECK(collapse == Scalar(3) * parse_sym("x1^4", 2));
    }
}
