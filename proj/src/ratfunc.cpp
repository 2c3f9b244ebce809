#include "ospq/ratfunc.hpp"

#include "ospq/errors.hpp"

namespace ospq {

RatFunc::RatFunc(LmPoly num, LmPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LmPoly(Rational::one());
        return;
    }
    LmPoly g = LmPoly::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = LmPoly::divexact(num_, g);
        den_ = LmPoly::divexact(den_, g);
    }
    Rational lead = den_.leading().second;
    if (!lead.is_one()) {
        Rational li = lead.inv();
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) {
    if (y.is_zero()) throw division_by_zero();
    return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw division_by_zero("inversion of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(unsigned e) const {
    RatFunc r = RatFunc::one();
    RatFunc b = *this;
    for (unsigned k = e; k != 0; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

Rational RatFunc::eval(const Rational& l, const Rational& m) const {
    Rational d = den_.eval(l, m);
    if (d.is_zero()) {
        std::string factor = den_.str();
        auto roots = den_.delta_roots();
        for (const auto& r : roots) {
            if (m - l == r) {
                factor = r.is_zero() ? "mu - lam" : "mu - lam - (" + r.str() + ")";
                break;
            }
        }
        throw resonance_error(factor, "denominator " + den_.str() + " vanishes at lam=" +
                                          l.str() + ", mu=" + m.str() +
                                          " (vanishing factor: " + factor + ")");
    }
    return num_.eval(l, m) / d;
}

std::string RatFunc::str() const {
    if (den_ == LmPoly(Rational::one())) return num_.str();
    std::string n = num_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    bool dsimple = den_.terms().size() == 1 && den_.leading().second.is_one() &&
                   den_.leading().second.is_integer();
    if (!dsimple || den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

std::string to_string(const RatFunc& r) { return r.str(); }

}  // namespace ospq
