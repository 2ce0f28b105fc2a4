#include "freeharm/io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>

namespace freeharm {

namespace {

std::string letter_str(const Letter& l) {
    std::string s = l.is_direction() ? "h" : "x" + std::to_string(l.index);
    if (l.adjoint) s += "'";
    return s;
}

// Renders a word as space-separated power runs, e.g. "x1^2 x2 h".
std::string word_str(const Word& w) {
    std::string s;
    std::size_t k = 0;
    while (k < w.size()) {
        std::size_t j = k;
        while (j < w.size() && w[j] == w[k]) ++j;
        if (!s.empty()) s += " ";
        s += letter_str(w[k]);
        if (j - k > 1) s += "^" + std::to_string(j - k);
        k = j;
    }
    return s;
}

// Coefficient in front of a nonempty word. Returns the sign separately so
// terms can be joined with " + " / " - ". A unit coefficient renders as "".
struct CoeffText {
    bool negative = false;
    std::string text;  // without sign; empty means an implicit 1
};

CoeffText coeff_text(const Scalar& c, bool word_follows) {
    CoeffText out;
    if (c.im() == 0) {
        Rational r = c.re();
        if (r < 0) {
            out.negative = true;
            r = -r;
        }
        if (!(word_follows && r == 1)) out.text = rational_str(r);
        return out;
    }
    if (c.re() == 0) {
        Rational m = c.im();
        if (m < 0) {
            out.negative = true;
            m = -m;
        }
        out.text = (m == 1) ? "i" : rational_str(m) + " i";
        return out;
    }
    Scalar a = c;
    if (c.re() < 0) {
        out.negative = true;
        a = -c;
    }
    std::string im = a.im() == 1 ? "" : a.im() == -1 ? "-" : rational_str(a.im());
    out.text = "(" + rational_str(a.re()) + (a.im() > 0 ? "+" : "") + im + "i)";
    return out;
}

std::string join_terms(std::vector<std::pair<Scalar, std::string>> parts) {
    if (parts.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [c, word] : parts) {
        CoeffText ct = coeff_text(c, !word.empty());
        if (first) {
            if (ct.negative) s += "-";
            first = false;
        } else {
            s += ct.negative ? " - " : " + ";
        }
        std::string body = ct.text;
        if (!word.empty()) {
            if (!body.empty()) body += " ";
            body += word;
        }
        s += body;
    }
    return s;
}

}  // namespace

std::string to_string(const Word& w) { return word_str(w); }

std::string to_string(const FreePoly& p) {
    std::vector<std::pair<Scalar, std::string>> parts;
    for (const auto& [w, c] : p.terms()) parts.emplace_back(c, word_str(w));
    return join_terms(std::move(parts));
}

std::string to_string(const CommPoly& q) {
    std::vector<std::pair<Scalar, std::string>> parts;
    for (const auto& [e, c] : q.terms()) {
        std::string s;
        for (unsigned j = 0; j < q.g(); ++j) {
            if (e[j] == 0) continue;
            if (!s.empty()) s += " ";
            s += "x" + std::to_string(j + 1);
            if (e[j] > 1) s += "^" + std::to_string(e[j]);
        }
        if (e[q.g()] != 0) {
            if (!s.empty()) s += " ";
            s += "h";
            if (e[q.g()] > 1) s += "^" + std::to_string(e[q.g()]);
        }
        parts.emplace_back(c, s);
    }
    return join_terms(std::move(parts));
}

namespace {

class Parser {
public:
    Parser(const std::string& text, Mode mode, unsigned g)
        : text_(text), mode_(mode), g_(g) {}

    FreePoly run() {
        FreePoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Integer parse_nat() {
        skip_ws();
        if (!at_digit()) fail("expected a number");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return Integer(digits);
    }

    unsigned parse_small_nat(const char* what) {
        Integer n = parse_nat();
        if (n > 1000000) fail(std::string(what) + " is implausibly large");
        return n.convert_to<unsigned>();
    }

    FreePoly parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('+')) {
        } else if (eat('-')) {
            neg = true;
        }
        FreePoly p = parse_term();
        if (neg) p = Scalar(-1) * p;
        for (;;) {
            skip_ws();
            if (eat('+')) {
                p += parse_term();
            } else if (eat('-')) {
                p -= parse_term();
            } else {
                break;
            }
        }
        return p;
    }

    FreePoly parse_term() {
        FreePoly p = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                p = p * parse_factor();
                continue;
            }
            if (pos_ < text_.size()) {
                char c = text_[pos_];
                if (c == 'x' || c == 'h' || c == 'i' || c == '(' ||
                    std::isdigit(static_cast<unsigned char>(c))) {
                    p = p * parse_factor();
                    continue;
                }
            }
            break;
        }
        return p;
    }

    FreePoly parse_factor() {
        FreePoly p = parse_primary();
        skip_ws();
        if (eat('^')) {
            unsigned k = parse_small_nat("exponent");
            FreePoly r = FreePoly::constant(g_, mode_, Scalar(1));
            for (unsigned j = 0; j < k; ++j) r = r * p;
            return r;
        }
        return p;
    }

    FreePoly parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            FreePoly p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_nat();
            if (eat('/')) {
                std::size_t at = pos_;
                Integer den = parse_nat();
                if (den == 0) throw ParseError("zero denominator", at);
                return FreePoly::constant(g_, mode_, Scalar(Rational(num, den)));
            }
            return FreePoly::constant(g_, mode_, Scalar(Rational(num)));
        }
        if (c == 'i') {
            ++pos_;
            return FreePoly::constant(g_, mode_, Scalar::i());
        }
        if (c == 'x' || c == 'h') {
            std::size_t at = pos_;
            ++pos_;
            unsigned index = 0;
            if (c == 'x') {
                if (pos_ >= text_.size() ||
                    !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError("expected a variable index after 'x'", pos_);
                std::string digits;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    digits += text_[pos_++];
                Integer n(digits);
                if (n == 0) throw ParseError("variable indices start at 1", at);
                if (n > 1000000) throw ParseError("variable index is implausibly large", at);
                index = n.convert_to<unsigned>();
                if (index > g_)
                    throw ParseError("variable index exceeds the alphabet size " +
                                         std::to_string(g_),
                                     at);
            }
            bool adjoint = false;
            if (pos_ < text_.size() && text_[pos_] == '\'') {
                if (mode_ == Mode::symmetric)
                    throw ParseError("adjoint letter in symmetric mode", pos_);
                adjoint = true;
                ++pos_;
            }
            Word w{Letter{index, adjoint}};
            return FreePoly::from_word(g_, mode_, w);
        }
        fail("unexpected character");
    }

    const std::string& text_;
    Mode mode_;
    unsigned g_;
    std::size_t pos_ = 0;
};

}  // namespace

FreePoly parse_poly(const std::string& text, std::optional<Mode> mode,
                    std::optional<unsigned> g) {
    // Pre-scan for mode and alphabet inference.
    bool saw_prime = false;
    unsigned max_index = 1;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '\'') saw_prime = true;
        if (text[k] == 'x' && k + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[k + 1]))) {
            unsigned long v = 0;
            std::size_t j = k + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) &&
                   v <= 1000000)
                v = v * 10 + static_cast<unsigned long>(text[j++] - '0');
            if (v > 0 && v <= 1000000) max_index = std::max(max_index, static_cast<unsigned>(v));
        }
    }
    Mode m = mode.value_or(saw_prime ? Mode::nonsymmetric : Mode::symmetric);
    unsigned gg = g.value_or(max_index);
    return Parser(text, m, gg).run();
}

namespace {

nlohmann::json rational_json(const Rational& r) {
    return nlohmann::json::array({numerator(r).str(), denominator(r).str()});
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational_from_json: expected [num, den]");
    auto part = [](const nlohmann::json& v) -> Integer {
        if (v.is_number_integer()) return Integer(v.get<long long>());
        if (v.is_string()) return Integer(v.get<std::string>());
        throw std::invalid_argument("rational_from_json: expected integer or string");
    };
    Integer den = part(j[1]);
    if (den == 0) throw std::invalid_argument("rational_from_json: zero denominator");
    return Rational(part(j[0]), den);
}

}  // namespace

std::string mode_name(Mode m) {
    return m == Mode::symmetric ? "symmetric" : "nonsymmetric";
}

Mode mode_from_name(const std::string& s) {
    if (s == "symmetric") return Mode::symmetric;
    if (s == "nonsymmetric") return Mode::nonsymmetric;
    throw std::invalid_argument("mode_from_name: unknown mode '" + s + "'");
}

nlohmann::json poly_to_json(const FreePoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : p.terms()) {
        nlohmann::json word = nlohmann::json::array();
        for (const Letter& l : w)
            word.push_back(nlohmann::json::array({l.index, l.adjoint}));
        terms.push_back({{"word", word},
                         {"re", rational_json(c.re())},
                         {"im", rational_json(c.im())}});
    }
    return {{"g", p.g()}, {"mode", mode_name(p.mode())}, {"terms", terms}};
}

FreePoly poly_from_json(const nlohmann::json& j) {
    FreePoly p(j.at("g").get<unsigned>(), mode_from_name(j.at("mode").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        Word w;
        for (const auto& l : t.at("word"))
            w.push_back(Letter{l.at(0).get<unsigned>(), l.at(1).get<bool>()});
        p.add_term(w, Scalar(rational_from_json(t.at("re")),
                             rational_from_json(t.at("im"))));
    }
    return p;
}

}  // namespace freeharm
