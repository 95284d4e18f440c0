#pragma once

#include <optional>
#include <tuple>

#include "schubert/kostant.hpp"
#include "schubert/quantum.hpp"

namespace schubert {

// The special class c[r,p] = s_{r-p+1} ... s_{r-1} s_r as a permutation of
// {1..n+1}; corresponds to 1^p under phi_r.
WeylElement special_class_perm(int n, int r, int p);

// S_{j,p}(u): all w = u z_1...z_d for pairwise disjoint cycles
// z = (r i_q ... i_1) with i_1..i_q <= j < r, u(r) > u(i_1) > ... > u(i_q),
// per-cycle and total length increases matching the cycle degrees.
std::vector<WeylElement> special_superior_set(const WeylElement& u, int j, int p);
// Degree l(w)-l(u) when w is special j-superior to u, nullopt otherwise.
std::optional<int> special_superior_degree(const WeylElement& u, const WeylElement& w, int j);

// mu_{w,u,j}: sort {u(1..j)} minus the cycle values, subtract the staircase.
Partition mu_partition(const WeylElement& w, const WeylElement& u, int j);

// Robinson's element v_{[w,u,r]}: u with the moved entries re-inserted at
// positions r-j+1..r.
WeylElement robinson_element(const WeylElement& w, const WeylElement& u, int r);

// Classical equivariant Pieri product on the full flag variety Fl_{n+1},
// with restriction coefficients evaluated by Billey localization.
QuantumClass robinson_pieri(int n, int r, int p, const WeylElement& u);

// Classical equivariant Pieri product on a partial flag variety, in the
// xi-coefficient form.
QuantumClass classical_pieri_gp(const FlagShape& shape, int i, int p, const WeylElement& u);

// A candidate quantum degree: the padded sequence [0, d_1..d_k, 0] climbs
// 0..m and descends back in unit steps, with jumps at h_1<...<h_m <= l_m<...<l_1.
struct PieriDegree {
    std::vector<int> d;
    std::vector<int> h, l;  // h[j-1] = h_j, l[j-1] = l_j
    int m = 0;
};

// All mountain-shaped degree vectors with d_i = m <= max_m (no (*) filter).
std::vector<PieriDegree> pieri_degree_shapes(const FlagShape& shape, int i, int max_m);
// Pie_{i,p}(u): the shapes with m <= p whose jumps satisfy
// u(n_{h_j}) > max{ u(r) : n_{h_j}+1 <= r <= n_{l_j+1} } for every j.
std::vector<PieriDegree> pieri_degrees(const FlagShape& shape, int i, int p,
                                       const WeylElement& u);
bool pieri_degree_star(const FlagShape& shape, const PieriDegree& deg, const WeylElement& u);

// tau_d and phi_d, built both from the value-placement description and from
// the reduced-word products; the two constructions are compared.
std::pair<WeylElement, WeylElement> tau_phi(const FlagShape& shape, const PieriDegree& deg);

// Per(d) membership: w(n_{h_j-1}+1) < min{ w(r) : n_{h_j-1}+2 <= r <= n_{l_j}+1 }.
bool per_membership(const FlagShape& shape, const PieriDegree& deg, const WeylElement& w);

// The equivariant quantum Pieri rule: sigma^{c[n_i,p]} * sigma^u on
// Fl_{n_1..n_k; n+1}.
QuantumClass eq_quantum_pieri(const FlagShape& shape, int i, int p, const WeylElement& u);

// Grassmannian form: sigma^{1^p} * sigma^nu on Gr(m, n+1), via vertical
// strips and associated partitions. Terms come back partition-keyed.
std::vector<std::tuple<Partition, int, Poly>> grassmann_pieri_terms(int m, int n, int p,
                                                                    const Partition& nu);
QuantumClass grassmann_pieri(int m, int n, int p, const Partition& nu);

// S[q]-linear extension of sigma^{1^p} * (-) on Gr(m, n+1).
QuantumClass apply_grassmann_special(int m, int n, int p, const QuantumClass& cls);

// Closed form of sigma^{1^p} * sigma^{(n+1-m, 0, ..., 0)}.
QuantumClass top_row_products(int m, int n, int p);

}  // namespace schubert
