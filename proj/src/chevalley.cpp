#include "schubert/chevalley.hpp"

#include <set>

#include "schubert/structure.hpp"

namespace schubert {

Poly chevalley_weight_term(const RootSystem& rs, int i, const WeylElement& u) {
    // chi - w(chi) = sum_b <chi, alpha_{i_b}^vee> gamma_b over a reduced word
    // of w; for a fundamental weight only the letters equal to i contribute.
    ReducedWordData data = inversion_roots(rs, rs.reduced_word(u));
    Poly out(VarKind::alpha, rs.rank());
    for (size_t b = 0; b < data.word.size(); ++b)
        if (data.word[b] == i) out += rs.root_linear_form(data.roots[b]);
    return out;
}

QuantumClass quantum_chevalley_gb(const RootSystem& rs, int i, const WeylElement& u) {
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("divisor index out of range");
    const int n = rs.rank();
    const QDeg zero(n, 0);
    QuantumClass out;
    out.add_checked(u, zero, chevalley_weight_term(rs, i, u), 1);
    for (int idx = 0; idx < rs.num_positive_roots(); ++idx) {
        const auto& coroot = rs.coroot_of(idx);
        const long chi_pairing = coroot[i - 1];  // <chi_i, gamma^vee>
        if (chi_pairing == 0) continue;
        WeylElement w = rs.multiply(u, rs.reflection(idx));
        if (w.length() == u.length() + 1) {
            out.add_checked(w, zero, Poly::constant(VarKind::alpha, n, chi_pairing), 0);
        } else {
            const long tr = RootSystem::two_rho_pairing(coroot);
            if (w.length() == u.length() + 1 - tr) {
                QDeg q(coroot.begin(), coroot.end());
                out.add_checked(w, q, Poly::constant(VarKind::alpha, n, chi_pairing), 0);
            }
        }
    }
    return out;
}

QuantumClass apply_divisor_gb(const RootSystem& rs, int i, const QuantumClass& cls) {
    QuantumClass out;
    for (const auto& [key, poly] : cls.terms()) {
        QuantumClass piece = quantum_chevalley_gb(rs, i, key.w);
        for (const auto& [pkey, pcoeff] : piece.terms()) {
            QDeg q = key.q;
            for (size_t j = 0; j < q.size(); ++j) q[j] += pkey.q[j];
            out.add(pkey.w, q, poly * pcoeff);
        }
    }
    return out;
}

QuantumClass divisor_product_gp(const FlagShape& shape, int i, const WeylElement& u) {
    if (i < 1 || i > shape.k()) throw std::invalid_argument("flag step index out of range");
    if (!shape.in_wp(u))
        throw std::invalid_argument("divisor_product_gp expects u in W^P");
    RootSystem rs = RootSystem::type_a(shape.n);
    const ParabolicSubset parabolic = shape.parabolic();
    QuantumClass gb = quantum_chevalley_gb(rs, shape.steps[i - 1], u);

    // Candidate classes lam_P: projections of the quantum degrees that occur
    // on G/B. Every nonzero G/P coefficient shows up at its psi image, whose
    // lift lies in the same class, so no candidate is missed.
    std::set<QDeg> candidates;
    for (const auto& [key, poly] : gb.terms()) {
        QDeg lam_p(shape.k(), 0);
        for (int j = 0; j < shape.k(); ++j) lam_p[j] = key.q[shape.steps[j] - 1];
        if (is_effective(lam_p)) candidates.insert(std::move(lam_p));
    }

    std::vector<WeylElement> wp = rs.enumerate_wp(parabolic);
    QuantumClass out;
    for (const QDeg& lam_p : candidates) {
        LiftResult lift = pw_lift(rs, parabolic, lam_p);
        const long qdeg = RootSystem::two_rho_pairing(lift.lambda_b) + lift.omega_factor.length();
        for (const auto& w : wp) {
            WeylElement image = rs.multiply(w, lift.omega_factor);
            const Poly* coeff = gb.find(image, lift.lambda_b);
            if (!coeff) continue;
            out.add_checked(w, lam_p, *coeff, 1 + u.length() - w.length() - qdeg);
        }
    }
    return out;
}

}  // namespace schubert
