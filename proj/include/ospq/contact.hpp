#pragma once

#include <string>
#include <vector>

#include "ospq/superfunction.hpp"

namespace ospq {

/// X = coef_x * d/dx + coef_xi1 * del_xi1 + coef_xi2 * del_xi2.
template <ScalarField K>
struct VectorField {
    SuperFunction<K> coef_x, coef_xi1, coef_xi2;

    bool is_zero() const { return coef_x.is_zero() && coef_xi1.is_zero() && coef_xi2.is_zero(); }

    SuperFunction<K> apply(const SuperFunction<K>& h) const {
        return coef_x * partial_x(h) + coef_xi1 * del_xi(1, h) + coef_xi2 * del_xi(2, h);
    }

    /// Parity as an operator; throws on mixed.
    Parity parity() const {
        bool has_even = false, has_odd = false;
        auto note = [&](const SuperFunction<K>& c, Parity shift) {
            if (c.is_zero()) return;
            Parity p = c.parity() + shift;
            (p == Parity::even ? has_even : has_odd) = true;
        };
        note(coef_x, Parity::even);
        note(coef_xi1, Parity::odd);
        note(coef_xi2, Parity::odd);
        if (has_even && has_odd) throw parity_error("mixed-parity vector field");
        return has_odd ? Parity::odd : Parity::even;
    }

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.coef_x == b.coef_x && a.coef_xi1 == b.coef_xi1 && a.coef_xi2 == b.coef_xi2;
    }
};

/// Super-commutator [X, Y] = X Y - (-1)^{p(X)p(Y)} Y X, read off a derivation's
/// action on the coordinates x, xi1, xi2.
template <ScalarField K>
VectorField<K> super_commutator(const VectorField<K>& X, const VectorField<K>& Y) {
    int sgn = koszul(X.parity(), Y.parity());
    auto on = [&](const SuperFunction<K>& u) {
        SuperFunction<K> a = X.apply(Y.apply(u));
        SuperFunction<K> b = Y.apply(X.apply(u)).scaled(Rational(sgn));
        return a - b;
    };
    return {on(SuperFunction<K>::x()), on(SuperFunction<K>::xi1()), on(SuperFunction<K>::xi2())};
}

template <ScalarField K>
VectorField<K> dbar_field(int i) {
    SuperFunction<K> xi = i == 1 ? SuperFunction<K>::xi1() : SuperFunction<K>::xi2();
    VectorField<K> D;
    D.coef_x = -xi;
    (i == 1 ? D.coef_xi1 : D.coef_xi2) = SuperFunction<K>::one();
    return D;
}

/// A homogeneous function acting as the contact field X_f.
template <ScalarField K>
class ContactHamiltonian {
  public:
    ContactHamiltonian() : f_(SuperFunction<K>::zero()) {}
    explicit ContactHamiltonian(SuperFunction<K> f) : f_(std::move(f)) {
        f_.parity();  // homogeneity required
    }

    const SuperFunction<K>& value() const { return f_; }
    Parity parity() const { return f_.parity(); }

    friend bool operator==(const ContactHamiltonian& a, const ContactHamiltonian& b) {
        return a.f_ == b.f_;
    }

  private:
    SuperFunction<K> f_;
};

/// X_f = f d/dx - (-1)^p(f) (1/2)(Dbar1(f) Dbar1 + Dbar2(f) Dbar2).
template <ScalarField K>
VectorField<K> contact_field(const ContactHamiltonian<K>& ham) {
    const SuperFunction<K>& f = ham.value();
    Rational s(ham.parity() == Parity::odd ? -1 : 1);
    SuperFunction<K> d1 = dbar(1, f), d2 = dbar(2, f);
    SuperFunction<K> xi1 = SuperFunction<K>::xi1(), xi2 = SuperFunction<K>::xi2();
    VectorField<K> X;
    // expand Dbar_i = del_xi_i - xi_i d/dx into components
    X.coef_x = f + (d1 * xi1 + d2 * xi2).scaled(s * Rational(1, 2));
    X.coef_xi1 = d1.scaled(-s * Rational(1, 2));
    X.coef_xi2 = d2.scaled(-s * Rational(1, 2));
    return X;
}

/// True iff [X, Dbar_i] lies in the C^inf-span of Dbar1, Dbar2 for i = 1, 2.
template <ScalarField K>
bool is_contact(const VectorField<K>& X) {
    for (int i : {1, 2}) {
        VectorField<K> C = super_commutator(X, dbar_field<K>(i));
        // psi1 Dbar1 + psi2 Dbar2 has d/dx component -(psi1 xi1 + psi2 xi2)
        SuperFunction<K> expect =
            -(C.coef_xi1 * SuperFunction<K>::xi1() + C.coef_xi2 * SuperFunction<K>::xi2());
        if (!(C.coef_x == expect)) return false;
    }
    return true;
}

/// {f,g} = f g' - f' g - (-1)^p(f) (1/2)(Dbar1(f)Dbar1(g) + Dbar2(f)Dbar2(g)).
template <ScalarField K>
ContactHamiltonian<K> contact_bracket(const ContactHamiltonian<K>& fh,
                                      const ContactHamiltonian<K>& gh) {
    const SuperFunction<K>&f = fh.value(), &g = gh.value();
    Rational s(fh.parity() == Parity::odd ? -1 : 1);
    SuperFunction<K> r = f * partial_x(g) - partial_x(f) * g;
    r -= (dbar(1, f) * dbar(1, g) + dbar(2, f) * dbar(2, g)).scaled(s * Rational(1, 2));
    return ContactHamiltonian<K>(r);
}

/// A weighted density: value in C^inf(S^{1|2}), weight carried immutably.
template <ScalarField K>
struct Density {
    SuperFunction<K> value;
    K weight;

    friend bool operator==(const Density& a, const Density& b) {
        return a.value == b.value && a.weight == b.weight;
    }
};

/// L^lam_{X_f}(g) = X_f(g) + lam f' g on densities of weight lam.
template <ScalarField K>
Density<K> lie_density(const ContactHamiltonian<K>& f, const K& lam, const Density<K>& g) {
    if (!(g.weight == lam))
        throw weight_mismatch("lie_density weight " + lam.str() + " does not match density weight " +
                              g.weight.str());
    SuperFunction<K> out = contact_field(f).apply(g.value);
    out += (partial_x(f.value) * g.value).scaled(lam);
    return {out, lam};
}

/// Poisson bracket F_lam (x) F_mu -> F_{lam+mu+1}:
/// {f,g} = mu f' g - lam f g' - (-1)^p(f) (1/2) sum Dbar_i(f) Dbar_i(g).
template <ScalarField K>
Density<K> density_bracket(const Density<K>& f, const Density<K>& g) {
    Rational s(f.value.parity() == Parity::odd ? -1 : 1);
    g.value.parity();  // homogeneity required on both arguments
    SuperFunction<K> r =
        (partial_x(f.value) * g.value).scaled(g.weight) - (f.value * partial_x(g.value)).scaled(f.weight);
    r -= (dbar(1, f.value) * dbar(1, g.value) + dbar(2, f.value) * dbar(2, g.value))
             .scaled(s * Rational(1, 2));
    return {r, f.weight + g.weight + K::one()};
}

template <ScalarField K>
struct NamedHamiltonian {
    std::string name;
    ContactHamiltonian<K> ham;
};

/// Contact Hamiltonians spanning osp(2|2): {1, x, x^2, xi1*xi2} even,
/// {xi1, xi2, x*xi1, x*xi2} odd.
template <ScalarField K>
std::vector<NamedHamiltonian<K>> osp_generators() {
    using SF = SuperFunction<K>;
    auto H = [](std::string n, SF f) {
        return NamedHamiltonian<K>{std::move(n), ContactHamiltonian<K>(std::move(f))};
    };
    return {
        H("1", SF::one()),
        H("x", SF::x()),
        H("x2", SF::x() * SF::x()),
        H("xi12", SF::xi12()),
        H("xi1", SF::xi1()),
        H("xi2", SF::xi2()),
        H("xxi1", SF::x() * SF::xi1()),
        H("xxi2", SF::x() * SF::xi2()),
    };
}

/// The affine subalgebra Aff(2|2): {1, x, xi1*xi2; xi1, xi2}.
template <ScalarField K>
std::vector<NamedHamiltonian<K>> aff_generators() {
    std::vector<NamedHamiltonian<K>> out;
    for (auto& g : osp_generators<K>())
        if (g.name == "1" || g.name == "x" || g.name == "xi12" || g.name == "xi1" ||
            g.name == "xi2")
            out.push_back(g);
    return out;
}

}  // namespace ospq
