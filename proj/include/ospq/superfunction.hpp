#pragma once

#include <string>

#include "ospq/errors.hpp"
#include "ospq/poly.hpp"

namespace ospq {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return Parity((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// Koszul sign from swapping two homogeneous objects.
inline int koszul(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

/// f = f0 + xi1*f1 + xi2*f2 + xi1*xi2*f12 with polynomial components in x.
/// The component representation is canonical: equality is componentwise.
template <ScalarField K>
class SuperFunction {
  public:
    SuperFunction() = default;
    SuperFunction(Poly<K> f0, Poly<K> f1, Poly<K> f2, Poly<K> f12)
        : c_{std::move(f0), std::move(f1), std::move(f2), std::move(f12)} {}

    static SuperFunction zero() { return {}; }
    static SuperFunction one() { return from_body(Poly<K>::one()); }
    static SuperFunction x() { return from_body(Poly<K>::x()); }
    static SuperFunction xi1() { return {Poly<K>(), Poly<K>::one(), Poly<K>(), Poly<K>()}; }
    static SuperFunction xi2() { return {Poly<K>(), Poly<K>(), Poly<K>::one(), Poly<K>()}; }
    static SuperFunction xi12() { return {Poly<K>(), Poly<K>(), Poly<K>(), Poly<K>::one()}; }
    static SuperFunction from_body(Poly<K> f0) {
        return {std::move(f0), Poly<K>(), Poly<K>(), Poly<K>()};
    }
    static SuperFunction from_scalar(const K& c) { return from_body(Poly<K>(c)); }

    const Poly<K>& f0() const { return c_[0]; }
    const Poly<K>& f1() const { return c_[1]; }
    const Poly<K>& f2() const { return c_[2]; }
    const Poly<K>& f12() const { return c_[3]; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_homogeneous() const { return even_part().is_zero() || odd_part().is_zero(); }

    /// Parity of a homogeneous element; zero counts as even. Throws on mixed.
    Parity parity() const {
        bool ev = c_[1].is_zero() && c_[2].is_zero();
        bool od = c_[0].is_zero() && c_[3].is_zero();
        if (ev) return Parity::even;
        if (od) return Parity::odd;
        throw parity_error();
    }

    SuperFunction even_part() const { return {c_[0], Poly<K>(), Poly<K>(), c_[3]}; }
    SuperFunction odd_part() const { return {Poly<K>(), c_[1], c_[2], Poly<K>()}; }

    SuperFunction operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    friend SuperFunction operator+(const SuperFunction& a, const SuperFunction& b) {
        return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
    }
    friend SuperFunction operator-(const SuperFunction& a, const SuperFunction& b) {
        return a + (-b);
    }
    SuperFunction& operator+=(const SuperFunction& o) { return *this = *this + o; }
    SuperFunction& operator-=(const SuperFunction& o) { return *this = *this - o; }

    /// Graded-commutative product; xi_i^2 = 0, xi1*xi2 = -xi2*xi1.
    friend SuperFunction operator*(const SuperFunction& a, const SuperFunction& b) {
        return {a.c_[0] * b.c_[0],
                a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0],
                a.c_[0] * b.c_[2] + a.c_[2] * b.c_[0],
                a.c_[0] * b.c_[3] + a.c_[3] * b.c_[0] + a.c_[1] * b.c_[2] - a.c_[2] * b.c_[1]};
    }
    SuperFunction& operator*=(const SuperFunction& o) { return *this = *this * o; }

    SuperFunction scaled(const K& k) const {
        return {c_[0].scaled(k), c_[1].scaled(k), c_[2].scaled(k), c_[3].scaled(k)};
    }
    SuperFunction scaled(const Rational& q) const { return scaled(K::from_rational(q)); }

    friend bool operator==(const SuperFunction& a, const SuperFunction& b) {
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] &&
               a.c_[3] == b.c_[3];
    }
    friend bool operator!=(const SuperFunction& a, const SuperFunction& b) { return !(a == b); }

    /// Components printed in the fixed order f0, xi1*f1, xi2*f2, xi1*xi2*f12.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        auto emit = [&](const Poly<K>& p, const char* tag) {
            if (p.is_zero()) return;
            std::string ps = p.str();
            bool simple = ps.find(' ') == std::string::npos;
            bool neg = simple && !ps.empty() && ps[0] == '-';
            if (neg) ps = ps.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (!tag[0]) {
                out += ps;
            } else if (ps == "1") {
                out += tag;
            } else {
                out += (simple ? ps : "(" + ps + ")") + std::string("*") + tag;
            }
        };
        emit(c_[0], "");
        emit(c_[1], "xi1");
        emit(c_[2], "xi2");
        emit(c_[3], "xi1*xi2");
        return out;
    }

  private:
    Poly<K> c_[4];
};

template <ScalarField K>
Parity parity_or_throw(const SuperFunction<K>& f) {
    return f.parity();
}

/// d/dx, componentwise.
template <ScalarField K>
SuperFunction<K> partial_x(const SuperFunction<K>& f) {
    return {f.f0().derivative(), f.f1().derivative(), f.f2().derivative(), f.f12().derivative()};
}

/// Left Grassmann derivatives: del_xi1(xi2*xi1) = -xi2.
template <ScalarField K>
SuperFunction<K> del_xi(int i, const SuperFunction<K>& f) {
    if (i == 1) return {f.f1(), Poly<K>(), f.f12(), Poly<K>()};
    return {f.f2(), -f.f12(), Poly<K>(), Poly<K>()};
}

/// Dbar_i = del_xi_i - xi_i * d/dx (the contact distribution generators).
template <ScalarField K>
SuperFunction<K> dbar(int i, const SuperFunction<K>& f) {
    SuperFunction<K> xi = i == 1 ? SuperFunction<K>::xi1() : SuperFunction<K>::xi2();
    return del_xi(i, f) - xi * partial_x(f);
}

/// D_i = del_xi_i + xi_i * d/dx.
template <ScalarField K>
SuperFunction<K> d_plus(int i, const SuperFunction<K>& f) {
    SuperFunction<K> xi = i == 1 ? SuperFunction<K>::xi1() : SuperFunction<K>::xi2();
    return del_xi(i, f) + xi * partial_x(f);
}

template <ScalarField K>
std::string to_string(const SuperFunction<K>& f) {
    return f.str();
}

}  // namespace ospq
