#ifndef FREEHARM_SCALAR_HPP
#define FREEHARM_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace freeharm {

using Integer = boost::multiprecision::cpp_int;
// cpp_rational keeps values reduced with a positive denominator, which is
// exactly the storage invariant we need.
using Rational = boost::multiprecision::cpp_rational;

// Exact Gaussian rational re + im*i. Equality is exact; arithmetic never
// rounds. Operations that are contractually real call require_real().
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(int v) : re_(v), im_(0) {}
    Scalar(long long v) : re_(v), im_(0) {}
    Scalar(const Integer& v) : re_(v), im_(0) {}
    Scalar(const Rational& re) : re_(re), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar of_fraction(const Integer& num, const Integer& den) {
        if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
        return Scalar(Rational(num, den));
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    void require_real(const char* where) const {
        if (!is_real())
            throw std::invalid_argument(std::string(where) +
                                        ": nonzero imaginary part in a real-only context");
    }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational m = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // Order: real part then imaginary part. Used only for canonical storage.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    double re_double() const { return re_.convert_to<double>(); }
    double im_double() const { return im_.convert_to<double>(); }

    // Diagnostic form, e.g. "3", "-1/2", "i", "(1/2+3/4i)". The canonical
    // coefficient rendering inside polynomial text lives in io.
    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

std::string rational_str(const Rational& r);

// n! as an exact integer.
Integer factorial(unsigned n);

// Falling factorial n(n-1)...(n-k+1).
Integer falling_factorial(unsigned n, unsigned k);

Integer binomial(unsigned n, unsigned k);

}  // namespace freeharm

#endif
