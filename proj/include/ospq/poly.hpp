#pragma once

#include <string>
#include <vector>

#include "ospq/scalar.hpp"

namespace ospq {

/// Dense univariate polynomial in x over a scalar field.
template <ScalarField K>
class Poly {
  public:
    Poly() = default;
    Poly(const K& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K::one()); }
    static Poly x() { return monomial(K::one(), 1); }
    static Poly monomial(const K& c, int deg) {
        Poly p;
        if (c.is_zero()) return p;
        p.coeffs_.assign(static_cast<std::size_t>(deg) + 1, K::zero());
        p.coeffs_.back() = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return K::zero();
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return coeffs_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> out(std::max(a.coeffs_.size(), b.coeffs_.size()), K::zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(int(i)) + b.coeff(int(i));
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> out(a.coeffs_.size() + b.coeffs_.size() - 1, K::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(out));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& c) const {
        if (c.is_zero()) return Poly();
        Poly r = *this;
        for (auto& v : r.coeffs_) v = v * c;
        r.trim();
        return r;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<K> out(coeffs_.size() - 1, K::zero());
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            out[i - 1] = coeffs_[i] * K::from_rational(Rational(static_cast<long>(i)));
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Canonical text, descending powers; coefficients needing structure are
    /// parenthesized so output re-parses to the same value.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            K c = coeff(i);
            if (c.is_zero()) continue;
            std::string cs = c.str();
            bool compound = cs.find(" + ") != std::string::npos ||
                            cs.find(" - ") != std::string::npos;
            bool neg = !compound && !cs.empty() && cs[0] == '-';
            bool mag_one = neg ? (-c).is_one() : (!compound && c.is_one());
            if (neg) cs = cs.substr(1);
            if (compound) cs = "(" + cs + ")";
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (i == 0) {
                out += cs;
            } else {
                std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
                out += mag_one ? xs : cs + "*" + xs;
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<K> coeffs_;
};

template <ScalarField K>
std::string to_string(const Poly<K>& p) {
    return p.str();
}

}  // namespace ospq
