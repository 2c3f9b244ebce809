#pragma once

#include <concepts>
#include <string>

#include "ospq/ratfunc.hpp"

namespace ospq {

/// The one field interface every higher module is generic over: exact
/// rationals Q and rational functions Q(lam, mu) both satisfy it.
template <class K>
concept ScalarField = requires(K a, K b, const Rational& q) {
    { K::zero() } -> std::same_as<K>;
    { K::one() } -> std::same_as<K>;
    { K::from_rational(q) } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inv() } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_one() } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
};

// Rational lacks the static factories above under those names; provide them.
inline Rational rational_from(const Rational& q) { return q; }

template <ScalarField K>
K scalar_from_rational(const Rational& q) {
    return K::from_rational(q);
}

/// Substitute field values for lam and mu in a table coefficient.
/// For K = RatFunc with lam, mu the generators this is the identity; for
/// numeric K it performs the exact specialization and surfaces resonances.
template <ScalarField K>
K eval_scalar(const RatFunc& rf, const K& lam, const K& mu) {
    auto eval_poly = [&](const LmPoly& p) {
        K acc = K::zero();
        for (const auto& [e, c] : p.terms()) {
            K t = K::from_rational(c);
            for (int i = 0; i < e.a; ++i) t = t * lam;
            for (int i = 0; i < e.b; ++i) t = t * mu;
            acc = acc + t;
        }
        return acc;
    };
    K d = eval_poly(rf.den());
    if (d.is_zero()) {
        std::string factor = rf.den().str();
        throw resonance_error(factor, "denominator " + factor + " vanishes at lam=" + lam.str() +
                                          ", mu=" + mu.str());
    }
    return eval_poly(rf.num()) * d.inv();
}

// Fast path: RatFunc evaluated at its own generators is itself.
template <>
inline RatFunc eval_scalar<RatFunc>(const RatFunc& rf, const RatFunc& lam, const RatFunc& mu) {
    if (lam == RatFunc::lambda() && mu == RatFunc::mu()) return rf;
    auto eval_poly = [&](const LmPoly& p) {
        RatFunc acc;
        for (const auto& [e, c] : p.terms())
            acc += RatFunc(c) * lam.pow(static_cast<unsigned>(e.a)) *
                   mu.pow(static_cast<unsigned>(e.b));
        return acc;
    };
    RatFunc d = eval_poly(rf.den());
    if (d.is_zero())
        throw resonance_error(rf.den().str(), "denominator " + rf.den().str() +
                                                  " vanishes at lam=" + lam.str() +
                                                  ", mu=" + mu.str());
    return eval_poly(rf.num()) / d;
}

}  // namespace ospq
