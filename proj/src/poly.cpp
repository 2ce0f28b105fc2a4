#include "freeharm/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace freeharm {

namespace {

std::size_t initial_cap() {
    if (const char* env = std::getenv("FREEHARM_SIZE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 200000;
}

std::size_t g_size_cap = 0;

}  // namespace

std::size_t size_cap() {
    if (g_size_cap == 0) g_size_cap = initial_cap();
    return g_size_cap;
}

void set_size_cap(std::size_t cap) {
    if (cap == 0) throw std::invalid_argument("set_size_cap: cap must be positive");
    g_size_cap = cap;
}

FreePoly FreePoly::constant(unsigned g, Mode mode, const Scalar& c) {
    FreePoly p(g, mode);
    p.add_term(Word{}, c);
    return p;
}

FreePoly FreePoly::variable(unsigned g, Mode mode, unsigned index, bool adjoint) {
    if (index == kDirectionIndex)
        throw std::invalid_argument("FreePoly::variable: index 0 is the direction letter");
    FreePoly p(g, mode);
    p.add_term(Word{Letter{index, adjoint}}, Scalar(1));
    return p;
}

FreePoly FreePoly::direction(unsigned g, Mode mode, bool adjoint) {
    FreePoly p(g, mode);
    p.add_term(Word{Letter{kDirectionIndex, adjoint}}, Scalar(1));
    return p;
}

FreePoly FreePoly::from_word(unsigned g, Mode mode, const Word& w, const Scalar& c) {
    FreePoly p(g, mode);
    p.add_term(w, c);
    return p;
}

Scalar FreePoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void FreePoly::check_letter(const Letter& l) const {
    if (!l.is_direction() && l.index > g_)
        throw std::invalid_argument("FreePoly: letter index " + std::to_string(l.index) +
                                    " exceeds alphabet size " + std::to_string(g_));
    if (mode_ == Mode::symmetric && l.adjoint)
        throw std::invalid_argument("FreePoly: adjoint letter in symmetric mode");
}

void FreePoly::check_room(std::size_t incoming) const {
    if (terms_.size() + incoming > size_cap())
        throw std::length_error("FreePoly: support would exceed the size cap of " +
                                std::to_string(size_cap()) + " words");
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    for (const Letter& l : w) check_letter(l);
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        check_room(1);
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreePoly FreePoly::with_alphabet(unsigned g) const {
    for (const auto& [w, c] : terms_) {
        for (const Letter& l : w)
            if (!l.is_direction() && l.index > g)
                throw std::invalid_argument(
                    "FreePoly::with_alphabet: support uses index beyond the new alphabet");
    }
    FreePoly p(g, mode_);
    p.terms_ = terms_;
    return p;
}

namespace {
void require_same_context(const FreePoly& a, const FreePoly& b, const char* where) {
    if (a.g() != b.g() || a.mode() != b.mode())
        throw std::invalid_argument(std::string(where) +
                                    ": operands live over different alphabets or modes");
}
}  // namespace

FreePoly& FreePoly::operator+=(const FreePoly& o) {
    require_same_context(*this, o, "FreePoly::operator+=");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
    require_same_context(*this, o, "FreePoly::operator-=");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreePoly FreePoly::operator-() const {
    FreePoly r(g_, mode_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

FreePoly operator*(const Scalar& c, const FreePoly& p) {
    FreePoly r(p.g_, p.mode_);
    if (c.is_zero()) return r;
    for (const auto& [w, cw] : p.terms_) r.terms_.emplace(w, c * cw);
    return r;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    require_same_context(a, b, "FreePoly::operator*");
    FreePoly r(a.g_, a.mode_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(concat_words(wa, wb), ca * cb);
    return r;
}

FreePoly FreePoly::transpose() const {
    FreePoly r(g_, mode_);
    bool toggle = (mode_ == Mode::nonsymmetric);
    for (const auto& [w, c] : terms_) r.terms_.emplace(transpose_word(w, toggle), c);
    return r;
}

bool FreePoly::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_real(); });
}

bool FreePoly::contains_direction() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return word_contains_direction(t.first); });
}

int FreePoly::degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max<int>(d, static_cast<int>(w.size()));
    return d;
}

bool FreePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::size_t d = terms_.begin()->first.size();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.size() == d; });
}

unsigned FreePoly::degree_in(unsigned index) const {
    unsigned d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, degree_in_word(w, index));
    return d;
}

FreePoly FreePoly::homogeneous_component(unsigned d) const {
    FreePoly r(g_, mode_);
    for (const auto& [w, c] : terms_)
        if (w.size() == d) r.terms_.emplace(w, c);
    return r;
}

std::vector<unsigned> FreePoly::homogeneous_degrees() const {
    std::set<unsigned> ds;
    for (const auto& [w, c] : terms_) ds.insert(static_cast<unsigned>(w.size()));
    return std::vector<unsigned>(ds.begin(), ds.end());
}

FreePoly FreePoly::component_with_degree_in(unsigned index, unsigned k) const {
    FreePoly r(g_, mode_);
    for (const auto& [w, c] : terms_)
        if (degree_in_word(w, index) == k) r.terms_.emplace(w, c);
    return r;
}

std::set<unsigned> FreePoly::support_variables() const {
    std::set<unsigned> s;
    for (const auto& [w, c] : terms_) collect_support(w, s);
    return s;
}

CommPoly CommPoly::constant(unsigned g, const Scalar& c) {
    CommPoly q(g);
    q.add_term(Expo(g + 1, 0), c);
    return q;
}

CommPoly CommPoly::monomial(unsigned g, const Expo& e, const Scalar& c) {
    CommPoly q(g);
    q.add_term(e, c);
    return q;
}

CommPoly CommPoly::power(unsigned g, unsigned index, unsigned exponent) {
    if (index > g)
        throw std::invalid_argument("CommPoly::power: index exceeds alphabet size");
    CommPoly q(g);
    Expo e(g + 1, 0);
    unsigned slot = (index == kDirectionIndex) ? g : index - 1;
    e[slot] = exponent;
    q.add_term(e, Scalar(1));
    return q;
}

Scalar CommPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void CommPoly::add_term(const Expo& e, const Scalar& c) {
    if (e.size() != g_ + 1)
        throw std::invalid_argument("CommPoly::add_term: exponent vector has wrong length");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (terms_.size() + 1 > size_cap())
            throw std::length_error("CommPoly: support would exceed the size cap");
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CommPoly CommPoly::with_alphabet(unsigned g) const {
    CommPoly q(g);
    for (const auto& [e, c] : terms_) {
        for (unsigned j = g; j < g_; ++j)
            if (e[j] != 0)
                throw std::invalid_argument(
                    "CommPoly::with_alphabet: support uses index beyond the new alphabet");
        Expo ne(g + 1, 0);
        for (unsigned j = 0; j < std::min(g, g_); ++j) ne[j] = e[j];
        ne[g] = e[g_];
        q.add_term(ne, c);
    }
    return q;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    if (g_ != o.g_)
        throw std::invalid_argument("CommPoly::operator+=: different alphabets");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    if (g_ != o.g_)
        throw std::invalid_argument("CommPoly::operator-=: different alphabets");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

CommPoly operator*(const Scalar& c, const CommPoly& q) {
    CommPoly r(q.g_);
    if (c.is_zero()) return r;
    for (const auto& [e, ce] : q.terms_) r.terms_.emplace(e, c * ce);
    return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    if (a.g_ != b.g_)
        throw std::invalid_argument("CommPoly::operator*: different alphabets");
    CommPoly r(a.g_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            CommPoly::Expo e(ea);
            for (std::size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
            r.add_term(e, ca * cb);
        }
    return r;
}

int CommPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        d = std::max<int>(d, static_cast<int>(t));
    }
    return d;
}

bool CommPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (unsigned x : e) t += x;
        if (d == -1)
            d = static_cast<int>(t);
        else if (d != static_cast<int>(t))
            return false;
    }
    return true;
}

unsigned CommPoly::degree_in(unsigned index) const {
    unsigned slot = (index == kDirectionIndex) ? g_ : index - 1;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[slot]);
    return d;
}

bool CommPoly::contains_direction() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [this](const auto& t) { return t.first[g_] != 0; });
}

CommPoly CommPoly::derivative(unsigned index, unsigned k) const {
    if (index == kDirectionIndex || index > g_)
        throw std::invalid_argument("CommPoly::derivative: bad variable index");
    unsigned slot = index - 1;
    CommPoly r(g_);
    for (const auto& [e, c] : terms_) {
        if (e[slot] < k) continue;
        Expo ne(e);
        ne[slot] -= k;
        r.add_term(ne, Scalar(falling_factorial(e[slot], k)) * c);
    }
    return r;
}

std::vector<CommPoly> CommPoly::split_by_power(unsigned index) const {
    if (index == kDirectionIndex || index > g_)
        throw std::invalid_argument("CommPoly::split_by_power: bad variable index");
    unsigned slot = index - 1;
    std::vector<CommPoly> parts(degree_in(index) + 1, CommPoly(g_));
    for (const auto& [e, c] : terms_) {
        Expo ne(e);
        unsigned r = ne[slot];
        ne[slot] = 0;
        parts[r].add_term(ne, c);
    }
    return parts;
}

}  // namespace freeharm
