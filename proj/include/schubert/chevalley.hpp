#pragma once

#include "schubert/quantum.hpp"

namespace schubert {

// Equivariant quantum Chevalley formula on G/B:
//   sigma^{s_i} * sigma^u = (chi_i - u(chi_i)) sigma^u
//     + sum <chi_i, gamma^vee> sigma^{u s_gamma}              (l(u s_g) = l(u)+1)
//     + sum <chi_i, gamma^vee> q_{gamma^vee} sigma^{u s_gamma} (l(u s_g) = l(u)+1-<2rho,g^vee>).
// Quantum degrees in the result have length rank(rs).
QuantumClass quantum_chevalley_gb(const RootSystem& rs, int i, const WeylElement& u);

// chi_i - u(chi_i), expanded in the simple roots.
Poly chevalley_weight_term(const RootSystem& rs, int i, const WeylElement& u);

// S[q]-linear extension of the divisor operator to a whole class.
QuantumClass apply_divisor_gb(const RootSystem& rs, int i, const QuantumClass& cls);

// sigma^{c[n_i,1]} *_P sigma^u on a type A partial flag variety, assembled
// from the G/B Chevalley expansion through the Peterson-Woodward comparison
// formula: the independent quantum oracle for p = 1.
QuantumClass divisor_product_gp(const FlagShape& shape, int i, const WeylElement& u);

}  // namespace schubert
