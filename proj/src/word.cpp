#include "freeharm/word.hpp"

#include <algorithm>

namespace freeharm {

Word transpose_word(const Word& w, bool toggle_adjoint) {
    Word r(w.rbegin(), w.rend());
    if (toggle_adjoint) {
        for (Letter& l : r) l.adjoint = !l.adjoint;
    }
    return r;
}

unsigned degree_in_word(const Word& w, unsigned index) {
    unsigned d = 0;
    for (const Letter& l : w)
        if (l.index == index) ++d;
    return d;
}

bool word_contains_direction(const Word& w) {
    return std::any_of(w.begin(), w.end(),
                       [](const Letter& l) { return l.is_direction(); });
}

void collect_support(const Word& w, std::set<unsigned>& out) {
    for (const Letter& l : w)
        if (!l.is_direction()) out.insert(l.index);
}

Word power_word(unsigned index, unsigned exponent, bool adjoint) {
    return Word(exponent, Letter{index, adjoint});
}

Word concat_words(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace freeharm
