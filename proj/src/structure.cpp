#include "schubert/structure.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

namespace {

long pair_simple(const RootSystem& rs, int beta, const QDeg& lam) {
    long s = 0;
    for (int j = 0; j < rs.rank(); ++j) s += static_cast<long>(lam[j]) * rs.cartan(beta, j + 1);
    return s;
}

long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

bool lift_conditions_hold(const RootSystem& rs, const std::vector<int>& delta_p,
                          const QDeg& lam_b) {
    std::vector<bool> in_p(rs.rank() + 1, false);
    for (int i : delta_p) in_p[i] = true;
    for (int idx = 0; idx < rs.num_positive_roots(); ++idx) {
        const auto& root = rs.positive_root(idx);
        bool supported = true;
        for (int j = 0; j < rs.rank() && supported; ++j)
            if (root[j] != 0 && !in_p[j + 1]) supported = false;
        if (!supported) continue;
        long v = rs.pairing(root, lam_b);
        if (v != 0 && v != -1) return false;
    }
    return true;
}

QDeg lift_representative(const RootSystem& rs, const ParabolicSubset& p, const QDeg& lam_p) {
    std::vector<int> steps = p.complement(rs.rank());
    if (lam_p.size() != steps.size())
        throw std::invalid_argument("quantum degree has the wrong number of coordinates");
    QDeg c(rs.rank(), 0);
    for (size_t j = 0; j < steps.size(); ++j) c[steps[j] - 1] = lam_p[j];
    return c;
}

}  // namespace

Grading gr_beta(const RootSystem& rs, int beta, const WeylElement& w, long abs_i,
                const QDeg& lam) {
    if (static_cast<int>(lam.size()) != rs.rank())
        throw std::invalid_argument("gr_beta expects a G/B quantum degree");
    long sg = rs.sgn(w, beta) ? 1 : 0;
    long bl = pair_simple(rs, beta, lam);
    long tr = RootSystem::two_rho_pairing(lam);
    return Grading{sg + bl, w.length() + abs_i + tr - sg - bl};
}

Grading gr_beta(const RootSystem& rs, int beta, const WeylElement& w,
                const std::vector<int>& exponents, const QDeg& lam) {
    long total = 0;
    for (int e : exponents) total += e;
    return gr_beta(rs, beta, w, total, lam);
}

FiltrationReport filtration_check(const RootSystem& rs, const QuantumClass& product, int beta,
                                  const Grading& a, const Grading& b) {
    FiltrationReport report;
    const Grading bound = a + b;
    for (const auto& [key, poly] : product.terms()) {
        for (const auto& [mono, coeff] : poly.terms()) {
            Grading g = gr_beta(rs, beta, key.w, mono.deg, key.q);
            if (g <= bound) continue;
            report.ok = false;
            std::ostringstream line;
            line << "VIOLATION term=" << rs.to_string(key.w) << '|';
            for (int j = 0; j < poly.nvars(); ++j) {
                if (j) line << ',';
                line << mono.exp(j);
            }
            line << '|';
            for (size_t j = 0; j < key.q.size(); ++j) {
                if (j) line << ',';
                line << key.q[j];
            }
            line << " gr=(" << g.a1 << ',' << g.a2 << ") bound=(" << bound.a1 << ',' << bound.a2
                 << ')';
            report.violations.push_back(line.str());
        }
    }
    return report;
}

std::vector<GradedTerm> terms_with_grading(const RootSystem& rs, const QuantumClass& cls,
                                           int beta, const Grading& g) {
    std::vector<GradedTerm> out;
    for (const auto& [key, poly] : cls.terms())
        for (const auto& [mono, coeff] : poly.terms())
            if (gr_beta(rs, beta, key.w, mono.deg, key.q) == g)
                out.push_back(GradedTerm{key.w, mono.exps(poly.nvars()), key.q, coeff});
    return out;
}

LiftResult pw_lift(const RootSystem& rs, const ParabolicSubset& p, const QDeg& lam_p) {
    QDeg c = lift_representative(rs, p, lam_p);
    const int n = rs.rank();

    if (rs.is_type_a()) {
        // Each connected component [a..b] of Delta_P is an interval; with
        // u_i := c_i - c_{i-1}, the conditions <gamma, c> in {0,-1} for the
        // block's roots say u_a..u_{b+1} is weakly increasing with spread at
        // most 1, and the block sum is fixed by the boundary values.
        std::vector<bool> in_p(n + 2, false);
        for (int i : p.delta_p) in_p[i] = true;
        int a = 1;
        while (a <= n) {
            if (!in_p[a]) { ++a; continue; }
            int b = a;
            while (b + 1 <= n && in_p[b + 1]) ++b;
            const long L = a > 1 ? c[a - 2] : 0;
            const long R = b + 1 <= n ? c[b] : 0;
            const long len = b - a + 2;
            const long D = R - L;
            const long v = floordiv(D, len);
            const long rem = D - v * len;
            long prev = L;
            for (int i = a; i <= b; ++i) {
                long u = (i - a) < len - rem ? v : v + 1;
                prev += u;
                c[i - 1] = static_cast<int>(prev);
            }
            a = b + 1;
        }
    } else if (!lift_conditions_hold(rs, p.delta_p, c)) {
        // Non-type-A fallback: bounded search over Q_P^vee adjustments.
        bool found = false;
        for (int bound = 1; bound <= 10 && !found; ++bound) {
            auto results = pw_lift_search(rs, p, lam_p, bound);
            if (!results.empty()) {
                c = results.front();
                found = true;
            }
        }
        if (!found)
            throw invariant_error("no Peterson-Woodward lift found within the search bound");
    }

    if (!lift_conditions_hold(rs, p.delta_p, c))
        throw invariant_error("computed lift violates the lifting conditions");

    LiftResult result;
    result.lambda_b = c;
    std::vector<int> alpha(n, 0);
    for (int i : p.delta_p) {
        std::fill(alpha.begin(), alpha.end(), 0);
        alpha[i - 1] = 1;
        if (rs.pairing(alpha, c) == 0) result.delta_p_prime.push_back(i);
    }
    WeylElement omega_p = rs.longest_element(p.delta_p);
    WeylElement omega_pp = rs.longest_element(result.delta_p_prime);
    result.omega_factor = rs.multiply(omega_p, omega_pp);
    return result;
}

std::vector<QDeg> pw_lift_search(const RootSystem& rs, const ParabolicSubset& p,
                                 const QDeg& lam_p, int bound) {
    QDeg rep = lift_representative(rs, p, lam_p);
    const auto& dp = p.delta_p;
    std::vector<QDeg> found;
    std::vector<int> x(dp.size(), -bound);
    for (;;) {
        QDeg cand = rep;
        for (size_t j = 0; j < dp.size(); ++j) cand[dp[j] - 1] += x[j];
        if (lift_conditions_hold(rs, dp, cand)) found.push_back(cand);
        size_t j = 0;
        while (j < x.size() && x[j] == bound) x[j++] = -bound;
        if (j == x.size()) break;
        ++x[j];
        if (dp.empty()) break;
    }
    if (dp.empty() && found.empty()) found.push_back(rep);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::pair<WeylElement, QDeg> psi_map(const FlagShape& shape, const WeylElement& w,
                                     const QDeg& lam_p) {
    RootSystem rs = RootSystem::type_a(shape.n);
    if (!shape.in_wp(w))
        throw std::invalid_argument("psi_map expects a minimal coset representative");
    LiftResult lift = pw_lift(rs, shape.parabolic(), lam_p);
    return {rs.multiply(w, lift.omega_factor), lift.lambda_b};
}

long gp_qdegree(const FlagShape& shape, const QDeg& lam_p) {
    RootSystem rs = RootSystem::type_a(shape.n);
    LiftResult lift = pw_lift(rs, shape.parabolic(), lam_p);
    return RootSystem::two_rho_pairing(lift.lambda_b) + lift.omega_factor.length();
}

bool qtc_vanishing(const RootSystem& rs, const WeylElement& u, const WeylElement& v,
                   const WeylElement& w, const QDeg& lam) {
    for (int i = 1; i <= rs.rank(); ++i) {
        long lhs = (rs.sgn(w, i) ? 1 : 0) + pair_simple(rs, i, lam);
        long rhs = (rs.sgn(u, i) ? 1 : 0) + (rs.sgn(v, i) ? 1 : 0);
        if (lhs > rhs) return false;
    }
    return true;
}

std::vector<CoeffIndex> qtc_reductions(const RootSystem& rs, const WeylElement& u,
                                       const WeylElement& v, const WeylElement& w,
                                       const QDeg& lam, int k, QtcIdentity which) {
    auto minus_coroot = [&](QDeg d) {
        d[k - 1] -= 1;
        return d;
    };
    const bool su = rs.sgn(u, k), sv = rs.sgn(v, k), sw = rs.sgn(w, k);
    const long bl = pair_simple(rs, k, lam);
    std::vector<CoeffIndex> out;
    switch (which) {
        case QtcIdentity::theorem_two: {
            if (!((sw ? 1 : 0) + bl == 2 && su && sv))
                throw std::invalid_argument("theorem hypothesis fails: need sgn_k(w)+<a_k,lam> = "
                                            "sgn_k(u)+sgn_k(v) = 2");
            out.push_back({rs.right_simple(u, k), rs.right_simple(v, k), w, minus_coroot(lam)});
            if (!sw)
                out.push_back({u, rs.right_simple(v, k), rs.right_simple(w, k), minus_coroot(lam)});
            else
                out.push_back({u, rs.right_simple(v, k), rs.right_simple(w, k), lam});
            break;
        }
        case QtcIdentity::corollary_one: {
            if (!(bl == 0 && !su && sw && sv))
                throw std::invalid_argument(
                    "corollary (1) hypothesis fails: need <a,lam>=sgn_a(u)=0, sgn_a(w)=sgn_a(v)=1");
            out.push_back({u, rs.right_simple(v, k), rs.right_simple(w, k), lam});
            break;
        }
        case QtcIdentity::corollary_two: {
            if (!(bl == 1 && su && !sw && !sv))
                throw std::invalid_argument(
                    "corollary (2) hypothesis fails: need <a,lam>=sgn_a(u)=1, sgn_a(w)=sgn_a(v)=0");
            out.push_back({rs.right_simple(u, k), v, rs.right_simple(w, k), minus_coroot(lam)});
            break;
        }
    }
    return out;
}

}  // namespace schubert
