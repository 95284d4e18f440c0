#include "schubert/giambelli.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

FormalEPoly FormalEPoly::unit(int m, int n) {
    FormalEPoly f(m, n);
    f.terms_.emplace(Key{}, Poly::one(VarKind::t, n + 1));
    return f;
}

FormalEPoly FormalEPoly::e(int m, int n, int p) {
    FormalEPoly f(m, n);
    if (p < 0 || p > m) return f;  // e_p = 0 outside 0..m
    if (p == 0) return unit(m, n);
    f.terms_.emplace(Key{p}, Poly::one(VarKind::t, n + 1));
    return f;
}

void FormalEPoly::add_term(Key key, const Poly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormalEPoly& FormalEPoly::operator+=(const FormalEPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

FormalEPoly& FormalEPoly::operator-=(const FormalEPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

FormalEPoly operator*(const FormalEPoly& a, const FormalEPoly& b) {
    FormalEPoly r(a.m_, a.n_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            FormalEPoly::Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            std::sort(k.begin(), k.end(), std::greater<int>());
            r.add_term(std::move(k), ca * cb);
        }
    return r;
}

FormalEPoly& FormalEPoly::operator*=(const Poly& t_coeff) {
    FormalEPoly r(m_, n_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * t_coeff);
    *this = std::move(r);
    return *this;
}

Poly t_var(int n, int s) {
    if (s <= 0 || s >= n + 2) return Poly::zero(VarKind::t, n + 1);
    return Poly::variable(VarKind::t, n + 1, s - 1);
}

namespace {

// The tau recursions index the torus weights in the order opposite to the
// simple-root numbering used by the Pieri coefficients, so the conversion
// used inside this module composes the embedding with the diagram flip
// a_i <-> a_{n+1-i}; the net effect is a_i -> t_{i+1} - t_i.
Poly reverse_alpha(const Poly& p) {
    const int n = p.nvars();
    std::vector<Poly> images;
    images.reserve(n);
    for (int i = 1; i <= n; ++i) images.push_back(Poly::variable(VarKind::alpha, n, n - i));
    return substitute_vars(p, VarKind::alpha, n, images);
}

Poly embed_t(const Poly& alpha_poly) { return alpha_to_t(reverse_alpha(alpha_poly)); }

Poly retract_t(const Poly& t_poly) { return reverse_alpha(t_to_alpha(t_poly)); }

}  // namespace

FormalEPoly tau_shift_e(int m, int n, int s, int p) {
    if (s < 0) throw std::invalid_argument("tau_shift_e: shift must be nonnegative");
    if (p < 0 || p > m) return FormalEPoly(m, n);
    if (s == 0 || p == 0) return FormalEPoly::e(m, n, p);
    FormalEPoly prev = tau_shift_e(m, n, s - 1, p);
    FormalEPoly lower = tau_shift_e(m, n, s - 1, p - 1);
    lower *= t_var(n, s) - t_var(n, m - p + s + 1);
    return prev + lower;
}

namespace {

FormalEPoly determinant(int k, int m, int n,
                        const std::vector<std::vector<FormalEPoly>>& entries) {
    FormalEPoly det(m, n);
    if (k == 0) return FormalEPoly::unit(m, n);
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
        int inv = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[a] > perm[b]) ++inv;
        FormalEPoly prod = FormalEPoly::unit(m, n);
        bool zero = false;
        for (int j = 0; j < k && !zero; ++j) {
            if (entries[perm[j]][j].is_zero()) zero = true;
            else prod = prod * entries[perm[j]][j];
        }
        if (zero) continue;
        if (inv % 2) prod *= Poly::constant(VarKind::t, n + 1, -1);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace

FormalEPoly h_determinant(int k, int m, int n) {
    if (k < 0) throw std::invalid_argument("h_determinant: negative size");
    std::vector<std::vector<FormalEPoly>> entries(
        k, std::vector<FormalEPoly>(k, FormalEPoly(m, n)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) entries[i - 1][j - 1] = tau_shift_e(m, n, j - 1, 1 + j - i);
    return determinant(k, m, n, entries);
}

FormalEPoly tau_neg_shift_h(int m, int n, int s, int j) {
    if (s < 0) throw std::invalid_argument("tau_neg_shift_h: shift must be nonnegative");
    if (j < 0) return FormalEPoly(m, n);
    if (s == 0) return h_determinant(j, m, n);
    FormalEPoly prev = tau_neg_shift_h(m, n, s - 1, j);
    FormalEPoly lower = tau_neg_shift_h(m, n, s - 1, j - 1);
    lower *= t_var(n, j + m - s) - t_var(n, 1 - s);
    return prev + lower;
}

GrTable gr_unit_table(int m, int n) {
    return gr_single_table(m, n, Partition::zero(m, n + 1));
}

GrTable gr_single_table(int m, int n, const Partition& nu) {
    if (nu.rows() != m || nu.ambient() != n + 1)
        throw std::invalid_argument("base partition does not live in P_{m,n+1}");
    GrTable t;
    t.emplace(std::make_pair(nu, 0), Poly::one(VarKind::t, n + 1));
    return t;
}

GrTable apply_special_t(int m, int n, int p, const GrTable& cls, bool classical_only) {
    GrTable out;
    for (const auto& [key, f] : cls) {
        for (const auto& [eta, dq, coeff] : grassmann_pieri_terms(m, n, p, key.first)) {
            if (classical_only && dq > 0) continue;
            Poly add = f * embed_t(coeff);
            auto k = std::make_pair(eta, key.second + dq);
            auto [it, inserted] = out.emplace(std::move(k), add);
            if (!inserted) {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

GrTable eval_formal(const FormalEPoly& f, const GrTable& base, bool classical_only) {
    GrTable acc;
    for (const auto& [key, coeff] : f.terms()) {
        GrTable cur = base;
        for (int p : key) cur = apply_special_t(f.m(), f.n(), p, cur, classical_only);
        for (const auto& [k, c] : cur) {
            Poly add = c * coeff;
            auto [it, inserted] = acc.emplace(k, add);
            if (!inserted) {
                it->second += add;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    return acc;
}

namespace {

QuantumClass table_to_class(int n, const GrTable& t, bool checked,
                            long lam_size_plus_mu_size) {
    QuantumClass out;
    for (const auto& [key, coeff] : t) {
        Poly a = retract_t(coeff);
        if (checked) {
            long expected =
                lam_size_plus_mu_size - key.first.size() - static_cast<long>(key.second) * (n + 1);
            out.add_checked(grassmannian_permutation(key.first), QDeg{key.second}, a, expected);
        } else {
            out.add(grassmannian_permutation(key.first), QDeg{key.second}, a);
        }
    }
    return out;
}

FormalEPoly giambelli_determinant(int m, int n, const Partition& lam) {
    const Partition lt = lam.transpose();
    const int k = n + 1 - m;
    std::vector<std::vector<FormalEPoly>> entries(
        k, std::vector<FormalEPoly>(k, FormalEPoly(m, n)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            entries[i - 1][j - 1] = tau_shift_e(m, n, j - 1, lt.part(i) + j - i);
    return determinant(k, m, n, entries);
}

}  // namespace

QuantumClass giambelli_class(int m, int n, const Partition& lam) {
    if (lam.rows() != m || lam.ambient() != n + 1)
        throw std::invalid_argument("lam does not live in P_{m,n+1}");
    FormalEPoly det = giambelli_determinant(m, n, lam);
    GrTable t = eval_formal(det, gr_unit_table(m, n), false);
    QuantumClass out = table_to_class(n, t, false, 0);
    QuantumClass expected;
    expected.add(grassmannian_permutation(lam), QDeg{0}, Poly::one(VarKind::alpha, n));
    if (!(out == expected))
        throw invariant_error("Giambelli determinant did not evaluate to sigma^lam for lam = " +
                              lam.to_string());
    return out;
}

QuantumClass gr_full_product(int m, int n, const Partition& lam, const Partition& mu) {
    if (lam.rows() != m || mu.rows() != m || lam.ambient() != n + 1 || mu.ambient() != n + 1)
        throw std::invalid_argument("factors must live in P_{m,n+1}");
    FormalEPoly det = giambelli_determinant(m, n, lam);
    GrTable t = eval_formal(det, gr_single_table(m, n, mu), false);
    return table_to_class(n, t, true, lam.size() + mu.size());
}

RingReport ring_relation_check(int m, int n) {
    RingReport report;
    auto note = [&](const std::string& name, bool ok) {
        report.relations.emplace_back(name, ok);
        report.all_ok = report.all_ok && ok;
    };
    const GrTable unit = gr_unit_table(m, n);
    for (int r = 0; r <= n + 1; ++r) {
        std::ostringstream name;
        name << "H_" << r << " on Gr(" << m << "," << n + 1 << ")";
        bool ok = false;
        try {
            GrTable t = eval_formal(h_determinant(r, m, n), unit, false);
            QuantumClass val = table_to_class(n, t, false, 0);
            QuantumClass expected;
            if (r <= n + 1 - m) {
                std::vector<int> parts{r};
                name << " == sigma^" << r;
                expected.add(grassmannian_permutation(Partition(std::move(parts), m, n + 1)),
                             QDeg{0}, Poly::one(VarKind::alpha, n));
            } else if (r <= n) {
                name << " == 0";
            } else {
                name << " == " << (m % 2 == 1 ? "q" : "-q");
                expected.add(grassmannian_permutation(Partition::zero(m, n + 1)), QDeg{1},
                             Poly::constant(VarKind::alpha, n, m % 2 == 1 ? 1 : -1));
            }
            ok = val == expected;
        } catch (const invariant_error&) {
            ok = false;
        }
        note(name.str(), ok);
    }
    // sum_p (-1)^p sigma^{1^p} o tau^{1-M} H_{M-p} = 0 in H_T^*.
    for (int M = 1; M <= n + 1; ++M) {
        GrTable sum;
        for (int p = 0; p <= m; ++p) {
            if (M - p < 0) continue;
            GrTable t = eval_formal(tau_neg_shift_h(m, n, M - 1, M - p), unit, true);
            if (p > 0) t = apply_special_t(m, n, p, t, true);
            for (const auto& [k, c] : t) {
                Poly add = p % 2 ? -c : c;
                auto [it, inserted] = sum.emplace(k, add);
                if (!inserted) {
                    it->second += add;
                    if (it->second.is_zero()) sum.erase(it);
                }
            }
        }
        std::ostringstream name;
        name << "alternating identity M=" << M << " on Gr(" << m << "," << n + 1 << ")";
        note(name.str(), sum.empty());
    }
    return report;
}

}  // namespace schubert
