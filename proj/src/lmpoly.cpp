#include "ospq/lmpoly.hpp"

#include <algorithm>

#include "ospq/errors.hpp"

namespace ospq {

LmPoly LmPoly::monomial(const Rational& c, int a, int b) {
    LmPoly p;
    if (!c.is_zero()) p.terms_[LmExp{a, b}] = c;
    return p;
}

Rational LmPoly::constant_value() const {
    if (terms_.empty()) return Rational::zero();
    if (!is_constant()) throw internal_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int LmPoly::degree_lam() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.a);
    return d;
}

int LmPoly::degree_mu() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.b);
    return d;
}

LmPoly LmPoly::operator-() const {
    LmPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LmPoly& LmPoly::operator+=(const LmPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LmPoly& LmPoly::operator-=(const LmPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LmPoly operator*(const LmPoly& x, const LmPoly& y) {
    LmPoly r;
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) {
            LmExp e{ex.a + ey.a, ex.b + ey.b};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, cx * cy);
            } else {
                it->second += cx * cy;
            }
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
    return r;
}

LmPoly LmPoly::scaled(const Rational& c) const {
    LmPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

LmPoly LmPoly::pow(unsigned e) const {
    LmPoly r(Rational::one());
    LmPoly b = *this;
    for (unsigned k = e; k != 0; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

Rational LmPoly::eval(const Rational& lam, const Rational& mu) const {
    Rational r;
    for (const auto& [e, c] : terms_)
        r += c * lam.pow(static_cast<unsigned>(e.a)) * mu.pow(static_cast<unsigned>(e.b));
    return r;
}

LmPoly LmPoly::divexact(const LmPoly& num, const LmPoly& den) {
    if (den.is_zero()) throw division_by_zero("polynomial division by zero");
    LmPoly rem = num, quot;
    const auto [dl, dc] = den.leading();
    while (!rem.is_zero()) {
        const auto [rl, rc] = rem.leading();
        if (rl.a < dl.a || rl.b < dl.b)
            throw internal_error("divexact: leading monomial not divisible");
        LmPoly t = monomial(rc / dc, rl.a - dl.a, rl.b - dl.b);
        quot += t;
        rem -= t * den;
    }
    return quot;
}

namespace {

// Univariate view in lam: coefficients are mu-only polynomials.
using LamCoeffs = std::vector<LmPoly>;  // index = lam power

LamCoeffs to_lam_coeffs(const LmPoly& p) {
    LamCoeffs out(static_cast<std::size_t>(std::max(0, p.degree_lam() + 1)));
    for (const auto& [e, c] : p.terms()) {
        out[static_cast<std::size_t>(e.a)] += LmPoly::monomial(c, 0, e.b);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

LmPoly from_lam_coeffs(const LamCoeffs& cs) {
    LmPoly r;
    for (std::size_t i = 0; i < cs.size(); ++i)
        r += cs[i] * LmPoly::lambda().pow(static_cast<unsigned>(i));
    return r;
}

// gcd of univariate polynomials in mu only, normalized monic.
LmPoly gcd_mu_only(LmPoly x, LmPoly y) {
    auto degree = [](const LmPoly& p) { return p.degree_mu(); };
    while (!y.is_zero()) {
        // plain Euclid over Q[mu]
        LmPoly r = x;
        while (!r.is_zero() && degree(r) >= degree(y)) {
            const auto [rl, rc] = r.leading();
            const auto [yl, yc] = y.leading();
            r -= y * LmPoly::monomial(rc / yc, 0, rl.b - yl.b);
        }
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(x.leading().second.inv());
}

// Monic gcd over Q[mu] of all lam-coefficients.
LmPoly content_in_mu(const LamCoeffs& cs) {
    LmPoly g;
    for (const auto& c : cs) {
        g = gcd_mu_only(g, c);
        if (g.is_constant() && !g.is_zero()) return LmPoly(Rational::one());
    }
    return g;
}

}  // namespace

LmPoly LmPoly::gcd(const LmPoly& x, const LmPoly& y) {
    auto monic = [](const LmPoly& p) {
        return p.is_zero() ? p : p.scaled(p.leading().second.inv());
    };
    if (x.is_zero()) return monic(y);
    if (y.is_zero()) return monic(x);
    if (x.is_constant() || y.is_constant()) return LmPoly(Rational::one());

    LamCoeffs a = to_lam_coeffs(x), b = to_lam_coeffs(y);
    LmPoly ca = content_in_mu(a), cb = content_in_mu(b);
    LmPoly content_gcd = gcd_mu_only(ca, cb);

    auto primitive = [](LamCoeffs cs, const LmPoly& content) {
        for (auto& c : cs)
            if (!c.is_zero()) c = divexact(c, content);
        return cs;
    };
    LamCoeffs pa = primitive(std::move(a), ca), pb = primitive(std::move(b), cb);
    if (pa.size() < pb.size()) std::swap(pa, pb);

    // primitive PRS: pseudo-remainders in lam, content stripped each step
    while (!pb.empty()) {
        // prem(pa, pb): multiply pa by lc(pb)^(deg difference + 1), divide out
        LamCoeffs r = pa;
        const LmPoly lcb = pb.back();
        int steps = static_cast<int>(r.size()) - static_cast<int>(pb.size()) + 1;
        for (int s = 0; s < steps && r.size() >= pb.size(); ++s) {
            for (auto& c : r) c = c * lcb;
            const LmPoly t = r.back();
            const std::size_t shift = r.size() - pb.size();
            for (std::size_t i = 0; i < pb.size(); ++i) {
                r[shift + i] -= divexact(t, lcb) * pb[i];
            }
            while (!r.empty() && r.back().is_zero()) r.pop_back();
        }
        if (!r.empty()) {
            LmPoly cr = content_in_mu(r);
            for (auto& c : r)
                if (!c.is_zero()) c = divexact(c, cr);
        }
        pa = std::move(pb);
        pb = std::move(r);
    }

    LmPoly g = from_lam_coeffs(pa) * content_gcd;
    return monic(g);
}

std::optional<std::vector<Rational>> LmPoly::as_delta_poly() const {
    // candidate g(t) = p(0, t); check p(lam, mu) == g(mu - lam)
    int n = degree_mu();
    if (is_zero()) return std::vector<Rational>{};
    std::vector<Rational> g(static_cast<std::size_t>(std::max(0, n) + 1));
    for (const auto& [e, c] : terms_) {
        if (e.a > 0) continue;
        g[static_cast<std::size_t>(e.b)] = c;
    }
    LmPoly delta = LmPoly::mu() - LmPoly::lambda();
    LmPoly rebuilt;
    for (std::size_t i = 0; i < g.size(); ++i)
        rebuilt += delta.pow(static_cast<unsigned>(i)).scaled(g[i]);
    if (rebuilt != *this) return std::nullopt;
    while (!g.empty() && g.back().is_zero()) g.pop_back();
    return g;
}

std::vector<Rational> LmPoly::delta_roots() const {
    auto gopt = as_delta_poly();
    std::vector<Rational> roots;
    if (!gopt || gopt->size() < 2) return roots;
    std::vector<Rational> g = *gopt;

    // clear to integer coefficients
    mpz_class denlcm = 1;
    for (const auto& c : g) denlcm = lcm(denlcm, c.denominator());
    std::vector<mpz_class> zi;
    zi.reserve(g.size());
    for (const auto& c : g) zi.push_back(c.numerator() * (denlcm / c.denominator()));
    while (!zi.empty() && zi.front() == 0) {
        // delta = 0 root
        if (roots.empty() || roots.back() != Rational(0)) roots.push_back(Rational(0));
        zi.erase(zi.begin());
    }
    if (zi.size() < 2) return roots;

    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> ds;
        n = abs(n);
        for (mpz_class d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        return ds;
    };
    auto evalq = [&](const Rational& r) {
        Rational acc;
        Rational p = Rational::one();
        for (const auto& z : zi) {
            acc += Rational(mpq_class(z)) * p;
            p = p * r;
        }
        return acc;
    };
    for (const auto& p : divisors(zi.front()))
        for (const auto& q : divisors(zi.back()))
            for (int s : {1, -1}) {
                Rational cand(mpq_class(s * p, q));
                if (evalq(cand).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string LmPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // grlex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational coef = c;
        if (out.empty()) {
            if (coef.sign() < 0) {
                out += "-";
                coef = -coef;
            }
        } else {
            out += coef.sign() < 0 ? " - " : " + ";
            if (coef.sign() < 0) coef = -coef;
        }
        std::string mono;
        if (e.a > 0) mono += e.a == 1 ? "lam" : "lam^" + std::to_string(e.a);
        if (e.b > 0) {
            if (!mono.empty()) mono += "*";
            mono += e.b == 1 ? "mu" : "mu^" + std::to_string(e.b);
        }
        if (mono.empty()) {
            out += coef.str();
        } else if (coef.is_one()) {
            out += mono;
        } else {
            out += coef.str() + "*" + mono;
        }
    }
    return out;
}

std::string to_string(const LmPoly& p) { return p.str(); }

}  // namespace ospq
