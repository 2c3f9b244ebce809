#pragma once

#include "ospq/operator.hpp"

namespace ospq {

/// Principal-symbol pair (F1, F2) of contact order k (stored doubled as k2)
/// with the density weights (lam, mu) of the operators it grades.
///   integer k:      F1 = coeff of dx^k,           F2 = coeff of dx^{k-1} Dbar1 Dbar2
///   half-integer k: F1 = coeff of dx^{k-1/2} Dbar1, F2 = coeff of dx^{k-1/2} Dbar2
template <ScalarField K>
struct Symbol {
    SuperFunction<K> F1, F2;
    int k2 = 0;
    K lam = K::zero(), mu = K::zero();

    bool is_zero() const { return F1.is_zero() && F2.is_zero(); }

    /// Parity of a homogeneous symbol; throws on mixed.
    Parity parity() const {
        if (F1.is_zero()) return F2.parity();
        if (F2.is_zero()) return F1.parity();
        Parity p1 = F1.parity(), p2 = F2.parity();
        if (p1 != p2) throw parity_error("symbol components of unequal parity");
        return p1;
    }
    bool is_homogeneous() const {
        try {
            parity();
            return true;
        } catch (const parity_error&) {
            return false;
        }
    }
    Symbol parity_part(Parity p) const {
        auto pick = [&](const SuperFunction<K>& F) {
            return p == Parity::even ? F.even_part() : F.odd_part();
        };
        return {pick(F1), pick(F2), k2, lam, mu};
    }

    friend Symbol operator+(const Symbol& a, const Symbol& b) {
        if (a.k2 != b.k2 || !(a.lam == b.lam) || !(a.mu == b.mu))
            throw weight_mismatch("symbol sum with different order or weights");
        return {a.F1 + b.F1, a.F2 + b.F2, a.k2, a.lam, a.mu};
    }
    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.k2 == b.k2 && a.F1 == b.F1 && a.F2 == b.F2 && a.lam == b.lam && a.mu == b.mu;
    }
};

/// The two coefficients of A sitting at contact order k2 (zero pair when A
/// has no terms there).
template <ScalarField K>
Symbol<K> symbol_at_order(const DiffOperator<K>& A, int k2) {
    Symbol<K> S;
    S.k2 = k2;
    S.lam = A.source_weight();
    S.mu = A.target_weight();
    if (k2 % 2 == 0) {
        int k = k2 / 2;
        S.F1 = A.coeff({k, 0, 0});
        S.F2 = k >= 1 ? A.coeff({k - 1, 1, 1}) : SuperFunction<K>::zero();
    } else {
        int k = (k2 - 1) / 2;
        S.F1 = A.coeff({k, 1, 0});
        S.F2 = A.coeff({k, 0, 1});
    }
    return S;
}

/// Principal symbol: the top-order pair. Throws on the zero operator.
template <ScalarField K>
Symbol<K> principal_symbol(const DiffOperator<K>& A) {
    return symbol_at_order(A, A.contact_order2());
}

/// The naive quantization sigma_pr^{-1}: leading terms only, zero lower part.
template <ScalarField K>
DiffOperator<K> inject_symbol(const Symbol<K>& S) {
    DiffOperator<K> A(S.lam, S.mu);
    if (S.k2 % 2 == 0) {
        int k = S.k2 / 2;
        A.add_term({k, 0, 0}, S.F1);
        if (k >= 1) {
            A.add_term({k - 1, 1, 1}, S.F2);
        } else if (!S.F2.is_zero()) {
            throw order_error("order-0 symbol with nonzero second component");
        }
    } else {
        int k = (S.k2 - 1) / 2;
        A.add_term({k, 1, 0}, S.F1);
        A.add_term({k, 0, 1}, S.F2);
    }
    return A;
}

/// The K(2)-action on symbols of order k2. Integer order acts componentwise
/// through L^{mu-lam-k}; half-integer order picks up the twist
/// -+ (1/2) Dbar1 Dbar2 (f) times the other component.
template <ScalarField K>
Symbol<K> symbol_action(const ContactHamiltonian<K>& f, const Symbol<K>& S) {
    K w = S.mu - S.lam - K::from_rational(Rational(S.k2, 2));
    DiffOperator<K> L = lie_derivative_operator(f, w);
    Symbol<K> out;
    out.k2 = S.k2;
    out.lam = S.lam;
    out.mu = S.mu;
    out.F1 = L.apply(S.F1);
    out.F2 = L.apply(S.F2);
    if (S.k2 % 2 == 1) {
        SuperFunction<K> t = dbar(1, dbar(2, f.value())).scaled(Rational(1, 2));
        out.F1 -= t * S.F2;
        out.F2 += t * S.F1;
    }
    return out;
}

/// Oracle for Props. 3-4: the principal symbol of the operator action agrees
/// with the symbol action (at the original order; a dropped order means the
/// symbol action result must vanish).
template <ScalarField K>
bool induced_action_check(const ContactHamiltonian<K>& f, const DiffOperator<K>& A) {
    if (A.is_zero()) return true;
    int k2 = A.contact_order2();
    DiffOperator<K> B = lie_operator(f, A);
    Symbol<K> got = symbol_at_order(B, k2);
    Symbol<K> want = symbol_action(f, principal_symbol(A));
    return got.F1 == want.F1 && got.F2 == want.F2;
}

}  // namespace ospq
