#ifndef FREEHARM_TESTS_UTIL_HPP
#define FREEHARM_TESTS_UTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "freeharm/matrix_eval.hpp"
#include "freeharm/poly.hpp"
#include "freeharm/scalar.hpp"
#include "freeharm/word.hpp"

namespace testutil {

inline freeharm::Scalar small_rational(freeharm::SplitMix64& rng) {
    long num = static_cast<long>(rng.next() % 7) - 3;
    long den = 1 + static_cast<long>(rng.next() % 2);
    return freeharm::Scalar(
        freeharm::Rational(freeharm::Integer(num), freeharm::Integer(den)));
}

inline freeharm::Word random_word(freeharm::SplitMix64& rng, unsigned g, unsigned len,
                                  bool allow_h, bool allow_flags) {
    freeharm::Word w;
    for (unsigned k = 0; k < len; ++k) {
        unsigned index = allow_h ? static_cast<unsigned>(rng.next() % (g + 1))
                                 : 1 + static_cast<unsigned>(rng.next() % g);
        bool adjoint = allow_flags && (rng.next() & 1);
        w.push_back(freeharm::Letter{index, adjoint});
    }
    return w;
}

// A sparse random polynomial with small rational coefficients. Terms may
// collide; the result can have fewer than `terms` words and may be zero.
inline freeharm::FreePoly random_poly(freeharm::SplitMix64& rng, unsigned g,
                                      freeharm::Mode mode, unsigned max_len,
                                      unsigned terms, bool allow_h = false) {
    freeharm::FreePoly p(g, mode);
    bool flags = mode == freeharm::Mode::nonsymmetric;
    for (unsigned t = 0; t < terms; ++t) {
        unsigned len = static_cast<unsigned>(rng.next() % (max_len + 1));
        freeharm::Word w = random_word(rng, g, len, allow_h, flags);
        p.add_term(w, p.coeff(w) + small_rational(rng));
    }
    return p;
}

inline freeharm::FreePoly random_homogeneous(freeharm::SplitMix64& rng, unsigned g,
                                             freeharm::Mode mode, unsigned degree,
                                             unsigned terms, bool allow_h = false) {
    freeharm::FreePoly p(g, mode);
    bool flags = mode == freeharm::Mode::nonsymmetric;
    for (unsigned t = 0; t < terms; ++t) {
        freeharm::Word w = random_word(rng, g, degree, allow_h, flags);
        p.add_term(w, p.coeff(w) + small_rational(rng));
    }
    return p;
}

inline freeharm::CommPoly random_symbol(freeharm::SplitMix64& rng, unsigned g,
                                        unsigned max_deg, unsigned terms) {
    freeharm::CommPoly q(g);
    for (unsigned t = 0; t < terms; ++t) {
        freeharm::CommPoly::Expo e(g + 1, 0);
        unsigned deg = 1 + static_cast<unsigned>(rng.next() % max_deg);
        for (unsigned k = 0; k < deg; ++k) ++e[rng.next() % g];
        q.add_term(e, q.coeff(e) + small_rational(rng));
    }
    return q;
}

}  // namespace testutil

#endif
