#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/quantum.hpp"

namespace schubert {

// Z^2 grading value, ordered lexicographically.
struct Grading {
    long a1 = 0, a2 = 0;
    friend bool operator==(const Grading&, const Grading&) = default;
    friend bool operator<(const Grading& x, const Grading& y) {
        return x.a1 < y.a1 || (x.a1 == y.a1 && x.a2 < y.a2);
    }
    friend bool operator<=(const Grading& x, const Grading& y) { return x < y || x == y; }
    friend Grading operator+(const Grading& x, const Grading& y) {
        return Grading{x.a1 + y.a1, x.a2 + y.a2};
    }
};

// gr_beta(w, I, lam) = (sgn_beta(w) + <beta, lam>,
//                       l(w) + |I| + <2rho, lam> - sgn_beta(w) - <beta, lam>).
// lam is a G/B quantum degree (length n, coroot coordinates).
Grading gr_beta(const RootSystem& rs, int beta, const WeylElement& w, long abs_i,
                const QDeg& lam);
Grading gr_beta(const RootSystem& rs, int beta, const WeylElement& w,
                const std::vector<int>& exponents, const QDeg& lam);

struct FiltrationReport {
    bool ok = true;
    std::vector<std::string> violations;  // "VIOLATION term=..." lines
};

// Checks that every monomial term sigma^w a^I q_lam of a G/B product whose
// factors have gradings a and b satisfies gr_beta(w, I, lam) <= a + b.
FiltrationReport filtration_check(const RootSystem& rs, const QuantumClass& product, int beta,
                                  const Grading& a, const Grading& b);

// The monomial terms of a G/B class with gr_beta exactly g.
struct GradedTerm {
    WeylElement w;
    std::vector<int> exponents;
    QDeg lam;
    Int coeff;
};
std::vector<GradedTerm> terms_with_grading(const RootSystem& rs, const QuantumClass& cls,
                                           int beta, const Grading& g);

// Peterson-Woodward lifting of lam_p in Q^vee/Q_P^vee: the unique
// representative lambda_B with <gamma, lambda_B> in {0,-1} for all
// gamma in R_P^+, together with omega_P omega_P'.
struct LiftResult {
    QDeg lambda_b;                   // length n, simple-coroot coordinates
    WeylElement omega_factor;        // omega_P omega_P'
    std::vector<int> delta_p_prime;  // {alpha in Delta_P : <alpha, lambda_B> = 0}
};

// lam_p has one coordinate per element of the complement of Delta_P (the flag
// steps, in increasing order). Solved constructively block-by-block in type A;
// elsewhere by bounded search.
LiftResult pw_lift(const RootSystem& rs, const ParabolicSubset& p, const QDeg& lam_p);

// Exhaustive-search test oracle: all representatives within |adjustment
// coefficient| <= bound satisfying the lifting conditions.
std::vector<QDeg> pw_lift_search(const RootSystem& rs, const ParabolicSubset& p,
                                 const QDeg& lam_p, int bound);

// psi: sigma_P^w q_{lam_P} -> sigma_B^{w omega_P omega_P'} q_{lambda_B}.
std::pair<WeylElement, QDeg> psi_map(const FlagShape& shape, const WeylElement& w,
                                     const QDeg& lam_p);

// Degree of q_{lam_P} on G/P: <2rho, lambda_B> + l(omega_P omega_P').
long gp_qdegree(const FlagShape& shape, const QDeg& lam_p);

// Necessary vanishing condition: N_{u,v}^{w,lam} = 0 unless
// sgn_i(w) + <alpha_i, lam> <= sgn_i(u) + sgn_i(v) for every i.
bool qtc_vanishing(const RootSystem& rs, const WeylElement& u, const WeylElement& v,
                   const WeylElement& w, const QDeg& lam);

// Index identities equating structure coefficients of QH_T^*(G/B).
enum class QtcIdentity { theorem_two, corollary_one, corollary_two };

struct CoeffIndex {
    WeylElement u, v, w;
    QDeg lam;
};

// Given that the hypothesis of the chosen identity holds at (u, v, w, lam, k),
// returns index tuples whose coefficients equal N_{u,v}^{w,lam}. Throws
// std::invalid_argument when the hypothesis fails.
std::vector<CoeffIndex> qtc_reductions(const RootSystem& rs, const WeylElement& u,
                                       const WeylElement& v, const WeylElement& w,
                                       const QDeg& lam, int k, QtcIdentity which);

}  // namespace schubert
