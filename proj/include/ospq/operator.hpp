#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ospq/contact.hpp"

namespace ospq {

/// Normal-form basis word dx^l Dbar1^m Dbar2^n with m, n in {0, 1}.
struct TermKey {
    int l = 0;
    std::uint8_t m = 0, n = 0;

    int order2() const { return 2 * l + m + n; }
    friend bool operator==(const TermKey& a, const TermKey& b) {
        return a.l == b.l && a.m == b.m && a.n == b.n;
    }
    friend bool operator<(const TermKey& a, const TermKey& b) {
        if (a.order2() != b.order2()) return a.order2() < b.order2();
        if (a.l != b.l) return a.l < b.l;
        if (a.m != b.m) return a.m < b.m;
        return a.n < b.n;
    }
    std::string str() const {
        std::string out;
        auto app = [&](const std::string& s) {
            if (!out.empty()) out += "*";
            out += s;
        };
        if (l == 1) app("dx");
        if (l > 1) app("dx^" + std::to_string(l));
        if (m) app("Dbar1");
        if (n) app("Dbar2");
        return out.empty() ? "1" : out;
    }
};

/// Differential operator between density spaces F_src -> F_tgt, kept in the
/// normal form  sum a_{l,m,n} dx^l Dbar1^m Dbar2^n.
template <ScalarField K>
class DiffOperator {
  public:
    DiffOperator() : src_(K::zero()), tgt_(K::zero()) {}
    DiffOperator(K source_weight, K target_weight)
        : src_(std::move(source_weight)), tgt_(std::move(target_weight)) {}

    static DiffOperator identity(const K& src, const K& tgt) {
        DiffOperator A(src, tgt);
        A.add_term({0, 0, 0}, SuperFunction<K>::one());
        return A;
    }
    static DiffOperator multiplication(const SuperFunction<K>& a, const K& src, const K& tgt) {
        DiffOperator A(src, tgt);
        A.add_term({0, 0, 0}, a);
        return A;
    }
    static DiffOperator monomial(const SuperFunction<K>& a, TermKey w, const K& src, const K& tgt) {
        DiffOperator A(src, tgt);
        A.add_term(w, a);
        return A;
    }

    const K& source_weight() const { return src_; }
    const K& target_weight() const { return tgt_; }
    DiffOperator with_weights(const K& src, const K& tgt) const {
        DiffOperator A(src, tgt);
        A.terms_ = terms_;
        return A;
    }

    const std::map<TermKey, SuperFunction<K>>& terms() const { return terms_; }
    SuperFunction<K> coeff(const TermKey& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? SuperFunction<K>::zero() : it->second;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TermKey& w, const SuperFunction<K>& a) {
        if (a.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, a);
        } else {
            it->second += a;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    DiffOperator operator-() const {
        DiffOperator r(src_, tgt_);
        for (const auto& [w, a] : terms_) r.terms_.emplace(w, -a);
        return r;
    }
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) {
        if (!(a.src_ == b.src_) || !(a.tgt_ == b.tgt_))
            throw weight_mismatch("operator sum with different weights");
        for (const auto& [w, c] : b.terms_) a.add_term(w, c);
        return a;
    }
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
        return a + (-b);
    }
    DiffOperator& operator+=(const DiffOperator& o) { return *this = *this + o; }
    DiffOperator& operator-=(const DiffOperator& o) { return *this = *this - o; }
    DiffOperator scaled(const K& c) const {
        DiffOperator r(src_, tgt_);
        if (c.is_zero()) return r;
        for (const auto& [w, a] : terms_) r.add_term(w, a.scaled(c));
        return r;
    }
    DiffOperator scaled(const Rational& q) const { return scaled(K::from_rational(q)); }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    /// Twice the contact order, max over nonzero terms of 2l + m + n.
    int contact_order2() const {
        if (terms_.empty()) throw order_error("the zero operator has no contact order");
        return terms_.rbegin()->first.order2();
    }

    /// Operator parity p(a_{l,m,n}) + m + n; throws on mixed.
    Parity parity() const {
        bool has_even = false, has_odd = false;
        for (const auto& [w, a] : terms_) {
            Parity shift = Parity((w.m + w.n) % 2);
            for (const SuperFunction<K>& h : {a.even_part(), a.odd_part()}) {
                if (h.is_zero()) continue;
                ((h.parity() + shift) == Parity::even ? has_even : has_odd) = true;
            }
        }
        if (has_even && has_odd) throw parity_error("mixed-parity operator");
        return has_odd ? Parity::odd : Parity::even;
    }
    bool is_homogeneous() const {
        try {
            parity();
            return true;
        } catch (const parity_error&) {
            return false;
        }
    }
    DiffOperator parity_part(Parity p) const {
        DiffOperator r(src_, tgt_);
        for (const auto& [w, a] : terms_) {
            Parity shift = Parity((w.m + w.n) % 2);
            SuperFunction<K> keep = (p + shift) == Parity::even ? a.even_part() : a.odd_part();
            r.add_term(w, keep);
        }
        return r;
    }

    /// Apply to a function: the words act with Dbar2 first, then Dbar1, dx.
    SuperFunction<K> apply(const SuperFunction<K>& h) const {
        SuperFunction<K> out = SuperFunction<K>::zero();
        for (const auto& [w, a] : terms_) {
            SuperFunction<K> t = h;
            if (w.n) t = dbar(2, t);
            if (w.m) t = dbar(1, t);
            for (int i = 0; i < w.l; ++i) t = partial_x(t);
            out += a * t;
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, a] : terms_) {
            std::string cs = a.str();
            bool simple = cs.find(' ') == std::string::npos;
            bool neg = simple && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string word = w.str();
            if (word == "1") {
                out += simple ? cs : "(" + cs + ")";
            } else if (cs == "1") {
                out += word;
            } else {
                out += (simple ? cs : "(" + cs + ")") + "*" + word;
            }
        }
        return out;
    }

  private:
    std::map<TermKey, SuperFunction<K>> terms_;
    K src_, tgt_;
};

namespace detail {

/// dx o B, normal form.
template <ScalarField K>
DiffOperator<K> left_dx(const DiffOperator<K>& B) {
    DiffOperator<K> out(B.source_weight(), B.target_weight());
    for (const auto& [w, b] : B.terms()) {
        out.add_term(w, partial_x(b));
        out.add_term({w.l + 1, w.m, w.n}, b);
    }
    return out;
}

/// Dbar_i o B, normal form. Uses the rewrites Dbar_i a = Dbar_i(a) +
/// (-1)^p(a) a Dbar_i, Dbar_i^2 = -dx, Dbar2 Dbar1 = -Dbar1 Dbar2.
template <ScalarField K>
DiffOperator<K> left_dbar(int i, const DiffOperator<K>& B) {
    DiffOperator<K> out(B.source_weight(), B.target_weight());
    for (const auto& [w, b] : B.terms()) {
        for (const SuperFunction<K>& h : {b.even_part(), b.odd_part()}) {
            if (h.is_zero()) continue;
            int sgn = h.parity() == Parity::odd ? -1 : 1;
            out.add_term(w, dbar(i, h));
            SuperFunction<K> s = h.scaled(Rational(sgn));
            if (i == 1) {
                if (w.m == 0) {
                    out.add_term({w.l, 1, w.n}, s);
                } else {
                    out.add_term({w.l + 1, 0, w.n}, -s);
                }
            } else {
                if (w.m == 1) s = -s;  // cross Dbar1
                if (w.n == 0) {
                    out.add_term({w.l, w.m, 1}, s);
                } else {
                    out.add_term({w.l + 1, w.m, 0}, -s);
                }
            }
        }
    }
    return out;
}

template <ScalarField K>
DiffOperator<K> left_mul(const SuperFunction<K>& a, const DiffOperator<K>& B) {
    DiffOperator<K> out(B.source_weight(), B.target_weight());
    for (const auto& [w, b] : B.terms()) out.add_term(w, a * b);
    return out;
}

/// word o B for word = dx^l Dbar1^m Dbar2^n.
template <ScalarField K>
DiffOperator<K> left_word(const TermKey& w, const DiffOperator<K>& B) {
    DiffOperator<K> t = B;
    if (w.n) t = left_dbar(2, t);
    if (w.m) t = left_dbar(1, t);
    for (int i = 0; i < w.l; ++i) t = left_dx(t);
    return t;
}

}  // namespace detail

/// Composition A o B; requires A.source_weight == B.target_weight.
template <ScalarField K>
DiffOperator<K> compose(const DiffOperator<K>& A, const DiffOperator<K>& B) {
    if (!(A.source_weight() == B.target_weight()))
        throw weight_mismatch("compose: source weight " + A.source_weight().str() +
                              " does not match target weight " + B.target_weight().str());
    DiffOperator<K> out(B.source_weight(), A.target_weight());
    for (const auto& [w, a] : A.terms())
        out += detail::left_mul(a, detail::left_word(w, B)).with_weights(B.source_weight(),
                                                                         A.target_weight());
    return out;
}

/// One letter of a raw operator word: a function coefficient or a derivation.
enum class DerivAtom { dx, del_xi1, del_xi2, dbar1, dbar2 };

template <ScalarField K>
using WordAtom = std::variant<SuperFunction<K>, DerivAtom>;

/// Rewrite a formal word into normal form, folding atoms right to left onto
/// the identity. del_xi_i rewrites as Dbar_i + xi_i dx first.
template <ScalarField K>
DiffOperator<K> normalize(const std::vector<WordAtom<K>>& word, const K& src, const K& tgt) {
    DiffOperator<K> acc = DiffOperator<K>::identity(src, tgt);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (std::holds_alternative<SuperFunction<K>>(*it)) {
            acc = detail::left_mul(std::get<SuperFunction<K>>(*it), acc);
            continue;
        }
        switch (std::get<DerivAtom>(*it)) {
            case DerivAtom::dx:
                acc = detail::left_dx(acc);
                break;
            case DerivAtom::dbar1:
                acc = detail::left_dbar(1, acc);
                break;
            case DerivAtom::dbar2:
                acc = detail::left_dbar(2, acc);
                break;
            case DerivAtom::del_xi1:
                acc = detail::left_dbar(1, acc) +
                      detail::left_mul(SuperFunction<K>::xi1(), detail::left_dx(acc));
                break;
            case DerivAtom::del_xi2:
                acc = detail::left_dbar(2, acc) +
                      detail::left_mul(SuperFunction<K>::xi2(), detail::left_dx(acc));
                break;
        }
    }
    return acc;
}

/// L^w_{X_f} = X_f + w f' as a normal-form operator F_w -> F_w.
template <ScalarField K>
DiffOperator<K> lie_derivative_operator(const ContactHamiltonian<K>& f, const K& w) {
    Rational s(f.parity() == Parity::odd ? -1 : 1);
    DiffOperator<K> L(w, w);
    L.add_term({1, 0, 0}, f.value());
    L.add_term({0, 1, 0}, dbar(1, f.value()).scaled(-s * Rational(1, 2)));
    L.add_term({0, 0, 1}, dbar(2, f.value()).scaled(-s * Rational(1, 2)));
    L.add_term({0, 0, 0}, partial_x(f.value()).scaled(w));
    return L;
}

/// The K(2)-action on operators:
/// L_{X_f}(A) = L^mu_{X_f} o A - (-1)^{p(f)p(A)} A o L^lam_{X_f}.
template <ScalarField K>
DiffOperator<K> lie_operator(const ContactHamiltonian<K>& f, const DiffOperator<K>& A) {
    if (A.is_zero()) return A;
    int sgn = koszul(f.parity(), A.parity());
    DiffOperator<K> L_tgt = lie_derivative_operator(f, A.target_weight());
    DiffOperator<K> L_src = lie_derivative_operator(f, A.source_weight());
    return compose(L_tgt, A) - compose(A, L_src).scaled(Rational(sgn));
}

/// Membership in the fine filtration D^k (doubled order); the zero operator
/// belongs to every D^k.
template <ScalarField K>
bool in_filtration(const DiffOperator<K>& A, int k2) {
    return A.is_zero() || A.contact_order2() <= k2;
}

template <ScalarField K>
std::string to_string(const DiffOperator<K>& A) {
    return A.str();
}

}  // namespace ospq
