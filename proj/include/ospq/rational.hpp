#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ospq/errors.hpp"

namespace ospq {

/// Arbitrary-precision rational, always stored canonically
/// (gcd(|num|, den) = 1, den > 0, zero is 0/1).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inv() const;
    Rational pow(unsigned e) const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// "p" or "p/q"; minus sign on the numerator.
    std::string str() const;
    /// Accepts "p", "-p", "p/q". Throws parse_error.
    static Rational parse(const std::string& text);

  private:
    mpq_class v_;
};

inline Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw division_by_zero();
    v_.canonicalize();
}

inline Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    v_ /= o.v_;
    return *this;
}

inline Rational Rational::inv() const {
    if (is_zero()) throw division_by_zero("inversion of zero");
    return Rational(mpq_class(1 / v_));
}

inline Rational Rational::pow(unsigned e) const {
    mpq_class r(1);
    mpq_class b = v_;
    for (unsigned k = e; k != 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return Rational(r);
}

std::string to_string(const Rational& q);
std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace ospq
