#include "freeharm/scalar.hpp"

namespace freeharm {

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    if (re_ == 0) {
        if (im_ == 1) return "i";
        if (im_ == -1) return "-i";
        return rational_str(im_) + "i";
    }
    std::string s = "(" + rational_str(re_);
    if (im_ > 0) s += "+";
    if (im_ == 1)
        s += "i";
    else if (im_ == -1)
        s += "-i";
    else
        s += rational_str(im_) + "i";
    s += ")";
    return s;
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

Integer falling_factorial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned j = 0; j < k; ++j) r *= Integer(n - j);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace freeharm
