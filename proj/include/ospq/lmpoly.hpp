#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ospq/rational.hpp"

namespace ospq {

/// Exponent pair of a lam^a * mu^b monomial, ordered graded-lexicographically
/// with lam before mu.
struct LmExp {
    int a = 0;  // lam exponent
    int b = 0;  // mu exponent

    int total() const { return a + b; }
    friend bool operator==(const LmExp& x, const LmExp& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const LmExp& x, const LmExp& y) {
        if (x.total() != y.total()) return x.total() < y.total();
        return x.a < y.a;  // higher lam power is grlex-larger at equal total degree
    }
};

/// Sparse bivariate polynomial in lam, mu over Rational.
class LmPoly {
  public:
    LmPoly() = default;
    LmPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_[LmExp{0, 0}] = c;
    }
    LmPoly(long n) : LmPoly(Rational(n)) {}  // NOLINT(google-explicit-constructor)

    static LmPoly lambda() { return monomial(Rational::one(), 1, 0); }
    static LmPoly mu() { return monomial(Rational::one(), 0, 1); }
    static LmPoly monomial(const Rational& c, int a, int b);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == LmExp{0, 0});
    }
    Rational constant_value() const;  // requires is_constant()

    int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }
    int degree_lam() const;
    int degree_mu() const;

    /// Leading term in grlex order; requires nonzero.
    std::pair<LmExp, Rational> leading() const { return *terms_.rbegin(); }

    const std::map<LmExp, Rational>& terms() const { return terms_; }

    LmPoly operator-() const;
    LmPoly& operator+=(const LmPoly& o);
    LmPoly& operator-=(const LmPoly& o);
    friend LmPoly operator+(LmPoly x, const LmPoly& y) { return x += y; }
    friend LmPoly operator-(LmPoly x, const LmPoly& y) { return x -= y; }
    friend LmPoly operator*(const LmPoly& x, const LmPoly& y);
    LmPoly& operator*=(const LmPoly& o) { return *this = *this * o; }
    LmPoly scaled(const Rational& c) const;
    LmPoly pow(unsigned e) const;

    friend bool operator==(const LmPoly& x, const LmPoly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const LmPoly& x, const LmPoly& y) { return !(x == y); }

    Rational eval(const Rational& lam, const Rational& mu) const;

    /// Exact quotient; throws internal_error when the division is not exact.
    static LmPoly divexact(const LmPoly& num, const LmPoly& den);

    /// Monic-normalized gcd (leading grlex coefficient 1); gcd(0,0) = 0.
    static LmPoly gcd(const LmPoly& x, const LmPoly& y);

    /// If the polynomial can be written as g(mu - lam), returns the
    /// coefficients of g (index = power of delta).
    std::optional<std::vector<Rational>> as_delta_poly() const;

    /// Rational roots in delta = mu - lam, when the polynomial is a delta
    /// polynomial; empty when it is not.
    std::vector<Rational> delta_roots() const;

    /// Canonical text, grlex-descending, e.g. "2*lam^2*mu - mu + 1/2".
    std::string str() const;

  private:
    std::map<LmExp, Rational> terms_;  // invariant: no zero coefficients
};

std::string to_string(const LmPoly& p);

}  // namespace ospq
