#ifndef FREEHARM_WORD_HPP
#define FREEHARM_WORD_HPP

#include <cstddef>
#include <set>
#include <vector>

namespace freeharm {

// Index 0 is the reserved direction letter h; indices >= 1 are variables.
constexpr unsigned kDirectionIndex = 0;

// One letter of a word. In symmetric mode adjoint is always false; in
// nonsymmetric mode x3' is {3, true} and h' is {0, true}.
struct Letter {
    unsigned index = 0;
    bool adjoint = false;

    bool is_direction() const { return index == kDirectionIndex; }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.index == b.index && a.adjoint == b.adjoint;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
    // Variables sort before direction letters; within a class, by index then
    // by adjoint flag (plain before primed).
    friend bool operator<(const Letter& a, const Letter& b) {
        if (a.is_direction() != b.is_direction()) return b.is_direction();
        if (a.index != b.index) return a.index < b.index;
        return a.adjoint < b.adjoint;
    }
};

inline Letter var(unsigned index, bool adjoint = false) {
    return Letter{index, adjoint};
}
inline Letter dir_letter(bool adjoint = false) {
    return Letter{kDirectionIndex, adjoint};
}

using Word = std::vector<Letter>;

// Canonical word order: shorter words first, then lexicographic by letter.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] != b[k]) return a[k] < b[k];
        }
        return false;
    }
};

// Reverse the word; with toggle_adjoint also flip every adjoint flag (the
// nonsymmetric transpose). No conjugation happens anywhere.
Word transpose_word(const Word& w, bool toggle_adjoint);

// Number of letters with the given index (plain and primed both count).
unsigned degree_in_word(const Word& w, unsigned index);

bool word_contains_direction(const Word& w);

// Indices of variable letters occurring in w (direction letters excluded).
void collect_support(const Word& w, std::set<unsigned>& out);

Word power_word(unsigned index, unsigned exponent, bool adjoint = false);

Word concat_words(const Word& a, const Word& b);

}  // namespace freeharm

#endif
