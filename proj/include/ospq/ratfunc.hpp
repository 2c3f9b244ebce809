#pragma once

#include <string>

#include "ospq/lmpoly.hpp"

namespace ospq {

/// Element of Q(lam, mu), stored reduced with a grlex-monic denominator.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rational::one()) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational::one()) {}  // NOLINT
    RatFunc(long n) : RatFunc(Rational(n)) {}                       // NOLINT
    RatFunc(LmPoly num, LmPoly den);
    explicit RatFunc(const LmPoly& p) : num_(p), den_(Rational::one()) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rational::one()); }
    static RatFunc lambda() { return RatFunc(LmPoly::lambda()); }
    static RatFunc mu() { return RatFunc(LmPoly::mu()); }
    static RatFunc from_rational(const Rational& c) { return RatFunc(c); }

    const LmPoly& num() const { return num_; }
    const LmPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == LmPoly(Rational::one()) && den_ == LmPoly(Rational::one()); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
    friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const;
    RatFunc pow(unsigned e) const;

    friend bool operator==(const RatFunc& x, const RatFunc& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

    /// Exact substitution lam -> l, mu -> m; throws resonance_error when the
    /// denominator vanishes there.
    Rational eval(const Rational& l, const Rational& m) const;

    /// Canonical text, e.g. "lam/(lam - mu)".
    std::string str() const;

  private:
    void reduce();
    LmPoly num_, den_;
};

std::string to_string(const RatFunc& r);

}  // namespace ospq
