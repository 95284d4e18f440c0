#include "schubert/pieri.hpp"

#include <algorithm>
#include <set>

#include "schubert/structure.hpp"

namespace schubert {

WeylElement special_class_perm(int n, int r, int p) {
    if (p < 0 || r < p || r > n) throw std::invalid_argument("bad special class c[r,p]");
    RootSystem rs = RootSystem::type_a(n);
    std::vector<int> word;
    for (int i = r - p + 1; i <= r; ++i) word.push_back(i);
    return rs.from_word(word);
}

namespace {

struct Cycle {
    OneLine perm;        // the cycle as a permutation
    unsigned mask = 0;   // support bitmask over positions 1..N
    int degree = 0;      // q = cycle length - 1
    int min_index = 0;
};

// All single cycles z = (r i_q ... i_1) that make u z special j-superior to u.
std::vector<Cycle> candidate_cycles(const OneLine& u, int j) {
    const int N = static_cast<int>(u.size());
    const int ulen = oneline_length(u);
    std::vector<Cycle> out;
    for (int r = j + 1; r <= N; ++r) {
        std::vector<int> small;
        for (int i = 1; i <= j; ++i)
            if (u[i - 1] < u[r - 1]) small.push_back(i);
        const int s = static_cast<int>(small.size());
        for (unsigned mask = 1; mask < (1u << s); ++mask) {
            std::vector<int> picked;
            for (int t = 0; t < s; ++t)
                if (mask & (1u << t)) picked.push_back(small[t]);
            // Order i_1..i_q by decreasing u-value.
            std::sort(picked.begin(), picked.end(),
                      [&](int a, int b) { return u[a - 1] > u[b - 1]; });
            const int q = static_cast<int>(picked.size());
            Cycle c;
            c.perm = oneline_identity(N);
            c.perm[r - 1] = picked[q - 1];           // r -> i_q
            for (int t = q - 1; t >= 1; --t)
                c.perm[picked[t] - 1] = picked[t - 1];  // i_{t+1} -> i_t
            c.perm[picked[0] - 1] = r;               // i_1 -> r
            if (oneline_length(oneline_compose(u, c.perm)) != ulen + q) continue;
            c.mask = 1u << (r - 1);
            for (int v : picked) c.mask |= 1u << (v - 1);
            c.degree = q;
            c.min_index = std::min(r, picked.back());
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Cycle& a, const Cycle& b) { return a.min_index < b.min_index; });
    return out;
}

}  // namespace

std::vector<WeylElement> special_superior_set(const WeylElement& u, int j, int p) {
    const OneLine& up = u.perm();
    const int N = static_cast<int>(up.size());
    if (j < 0 || p < 0 || j > N - 1 || p > j)
        throw std::invalid_argument("special_superior_set: need 0 <= p <= j <= n");
    if (p == 0) return {u};
    std::vector<Cycle> cycles = candidate_cycles(up, j);
    std::set<WeylElement> found;
    // Disjoint combinations in increasing min-index order, so each cycle set
    // is generated once.
    auto rec = [&](auto&& self, size_t start, unsigned used, int left, const OneLine& acc) -> void {
        if (left == 0) {
            if (oneline_length(acc) == u.length() + p)
                found.insert(WeylElement::from_perm(acc));
            return;
        }
        for (size_t c = start; c < cycles.size(); ++c) {
            if (cycles[c].degree > left) continue;
            if (used & cycles[c].mask) continue;
            self(self, c + 1, used | cycles[c].mask, left - cycles[c].degree,
                 oneline_compose(acc, cycles[c].perm));
        }
    };
    rec(rec, 0, 0, p, up);
    return std::vector<WeylElement>(found.begin(), found.end());
}

std::optional<int> special_superior_degree(const WeylElement& u, const WeylElement& w, int j) {
    const OneLine& up = u.perm();
    const OneLine& wp = w.perm();
    const int N = static_cast<int>(up.size());
    OneLine z = oneline_compose(oneline_inverse(up), wp);  // w = u z
    std::vector<bool> seen(N + 1, false);
    const int ulen = u.length();
    int total = 0;
    for (int start = 1; start <= N; ++start) {
        if (seen[start] || z[start - 1] == start) continue;
        std::vector<int> cyc;
        int cur = start;
        do {
            seen[cur] = true;
            cyc.push_back(cur);
            cur = z[cur - 1];
        } while (cur != start);
        int r = -1;
        for (int v : cyc) {
            if (v > j) {
                if (r != -1) return std::nullopt;  // more than one large entry
                r = v;
            }
        }
        if (r == -1) return std::nullopt;
        // Walk from r: z(r) = i_q, ..., z^q(r) = i_1; need
        // u(r) > u(i_1) > ... > u(i_q).
        const int q = static_cast<int>(cyc.size()) - 1;
        int prev_val = -1;
        int cur2 = z[r - 1];
        for (int t = 1; t <= q; ++t) {
            int val = up[cur2 - 1];
            if (t > 1 && !(val > prev_val)) return std::nullopt;
            prev_val = val;
            cur2 = z[cur2 - 1];
        }
        if (!(prev_val < up[r - 1])) return std::nullopt;
        // Per-cycle length condition l(u z_s) = l(u) + q.
        OneLine zc = oneline_identity(N);
        for (size_t t = 0; t < cyc.size(); ++t)
            zc[cyc[t] - 1] = cyc[(t + 1) % cyc.size()];
        if (oneline_length(oneline_compose(up, zc)) != ulen + q) return std::nullopt;
        total += q;
    }
    if (w.length() != ulen + total) return std::nullopt;
    return total;
}

Partition mu_partition(const WeylElement& w, const WeylElement& u, int j) {
    const OneLine& up = u.perm();
    const int N = static_cast<int>(up.size());
    std::optional<int> deg = special_superior_degree(u, w, j);
    if (!deg) throw std::invalid_argument("mu_partition: w is not special j-superior to u");
    const int p = *deg;
    OneLine z = oneline_compose(oneline_inverse(up), w.perm());
    std::vector<int> kept;
    for (int i = 1; i <= j; ++i)
        if (z[i - 1] == i) kept.push_back(up[i - 1]);
    std::sort(kept.begin(), kept.end(), std::greater<int>());
    if (static_cast<int>(kept.size()) != j - p)
        throw invariant_error("mu_partition: unexpected number of kept values");
    std::vector<int> parts(j - p);
    for (int s = 1; s <= j - p; ++s) parts[s - 1] = kept[s - 1] - (j - p + 1 - s);
    return Partition(std::move(parts), j - p, N);
}

WeylElement robinson_element(const WeylElement& w, const WeylElement& u, int r) {
    const OneLine& up = u.perm();
    const int N = static_cast<int>(up.size());
    OneLine z = oneline_compose(oneline_inverse(up), w.perm());
    std::vector<int> moved;  // indices i <= r in a nontrivial cycle, ascending
    for (int i = 1; i <= r; ++i)
        if (z[i - 1] != i) moved.push_back(i);
    OneLine v;
    v.reserve(N);
    for (int i = 1; i <= r; ++i)
        if (z[i - 1] == i) v.push_back(up[i - 1]);
    for (int i : moved) v.push_back(up[i - 1]);
    for (int i = r + 1; i <= N; ++i) v.push_back(up[i - 1]);
    return WeylElement::from_perm(std::move(v));
}

QuantumClass robinson_pieri(int n, int r, int p, const WeylElement& u) {
    if (!(1 <= p && p <= r && r <= n))
        throw std::invalid_argument("robinson_pieri: need 1 <= p <= r <= n");
    RootSystem rs = RootSystem::type_a(n);
    const QDeg zero(n, 0);
    QuantumClass out;
    for (int j = 0; j <= p; ++j) {
        WeylElement cls = special_class_perm(n, r - j, p - j);
        for (const auto& w : special_superior_set(u, r, j)) {
            WeylElement v = robinson_element(w, u, r);
            Poly coeff = billey_restriction(rs, cls, v);
            out.add_checked(w, zero, coeff, p + u.length() - w.length());
        }
    }
    return out;
}

QuantumClass classical_pieri_gp(const FlagShape& shape, int i, int p, const WeylElement& u) {
    if (i < 1 || i > shape.k()) throw std::invalid_argument("flag step index out of range");
    const int ni = shape.steps[i - 1];
    if (p < 1 || p > ni) throw std::invalid_argument("need 1 <= p <= n_i");
    if (!shape.in_wp(u)) throw std::invalid_argument("classical_pieri_gp expects u in W^P");
    const QDeg zero(shape.k(), 0);
    QuantumClass out;
    for (int j = 0; j <= p; ++j) {
        for (const auto& w : special_superior_set(u, ni, j)) {
            Partition mu = mu_partition(w, u, ni);
            if (p - j > mu.transpose().part(1)) continue;  // xi vanishes
            Poly coeff = xi(ni - j, p - j, mu);
            if (coeff.is_zero()) continue;
            if (!shape.in_wp(w))
                throw invariant_error("classical Pieri term outside W^P has nonzero coefficient");
            out.add_checked(w, zero, coeff, p + u.length() - w.length());
        }
    }
    return out;
}

std::vector<PieriDegree> pieri_degree_shapes(const FlagShape& shape, int i, int max_m) {
    const int k = shape.k();
    std::vector<PieriDegree> out;
    out.push_back(PieriDegree{std::vector<int>(k, 0), {}, {}, 0});
    for (int m = 1; m <= max_m; ++m) {
        // h_1 < ... < h_m <= i and l_m < ... < l_1 with l_m >= i.
        std::vector<std::vector<int>> hsets, lsets;
        std::vector<int> cur;
        auto combos = [&](auto&& self, int lo, int hi, int need, std::vector<std::vector<int>>& dst)
            -> void {
            if (need == 0) {
                dst.push_back(cur);
                return;
            }
            for (int v = lo; v <= hi - need + 1; ++v) {
                cur.push_back(v);
                self(self, v + 1, hi, need - 1, dst);
                cur.pop_back();
            }
        };
        combos(combos, 1, i, m, hsets);
        combos(combos, i, k, m, lsets);
        for (const auto& h : hsets)
            for (const auto& lasc : lsets) {
                PieriDegree deg;
                deg.m = m;
                deg.h = h;
                deg.l = std::vector<int>(lasc.rbegin(), lasc.rend());  // l_1 > ... > l_m
                deg.d.assign(k, 0);
                for (int jj = 0; jj < m; ++jj)
                    for (int r = deg.h[jj]; r <= deg.l[jj]; ++r) ++deg.d[r - 1];
                out.push_back(std::move(deg));
            }
    }
    return out;
}

bool pieri_degree_star(const FlagShape& shape, const PieriDegree& deg, const WeylElement& u) {
    const OneLine& up = u.perm();
    for (int jj = 1; jj <= deg.m; ++jj) {
        const int lo = shape.step(deg.h[jj - 1]);
        const int hi = shape.step(deg.l[jj - 1] + 1);
        int mx = 0;
        for (int r = lo + 1; r <= hi; ++r) mx = std::max(mx, up[r - 1]);
        if (!(up[lo - 1] > mx)) return false;
    }
    return true;
}

std::vector<PieriDegree> pieri_degrees(const FlagShape& shape, int i, int p,
                                       const WeylElement& u) {
    if (!shape.in_wp(u)) throw std::invalid_argument("pieri_degrees expects u in W^P");
    std::vector<PieriDegree> out;
    for (auto& deg : pieri_degree_shapes(shape, i, p))
        if (pieri_degree_star(shape, deg, u)) out.push_back(std::move(deg));
    return out;
}

std::pair<WeylElement, WeylElement> tau_phi(const FlagShape& shape, const PieriDegree& deg) {
    RootSystem rs = RootSystem::type_a(shape.n);
    const int N = shape.ambient();
    auto place = [&](const std::vector<std::pair<int, int>>& pos_val) {
        OneLine w(N, 0);
        std::vector<bool> pos_used(N + 1, false), val_used(N + 1, false);
        for (auto [pos, val] : pos_val) {
            w[pos - 1] = val;
            pos_used[pos] = true;
            val_used[val] = true;
        }
        int next = 1;
        for (int pos = 1; pos <= N; ++pos) {
            if (pos_used[pos]) continue;
            while (val_used[next]) ++next;
            w[pos - 1] = next;
            val_used[next] = true;
        }
        return WeylElement::from_perm(std::move(w));
    };

    std::vector<std::pair<int, int>> tau_pv, phi_pv;
    std::vector<int> tau_word, phi_word;
    long tau_len = 0, phi_len = 0;
    for (int jj = deg.m; jj >= 1; --jj) {
        const int h = deg.h[jj - 1], l = deg.l[jj - 1];
        for (int s = shape.step(h); s <= shape.step(l + 1) - 1; ++s) tau_word.push_back(s);
        for (int s = shape.step(h - 1) + 1; s <= shape.step(l) - 1; ++s) phi_word.push_back(s);
    }
    for (int jj = 1; jj <= deg.m; ++jj) {
        const int h = deg.h[jj - 1], l = deg.l[jj - 1];
        tau_pv.emplace_back(shape.step(l + 1) - jj + 1, shape.step(h));
        phi_pv.emplace_back(shape.step(l) - jj + 1, shape.step(h - 1) + 1);
        tau_len += shape.step(l + 1) - shape.step(h);
        phi_len += shape.step(l) - shape.step(h - 1);
    }
    phi_len -= deg.m;

    WeylElement tau = place(tau_pv);
    WeylElement phi = place(phi_pv);
    WeylElement tau_w = rs.from_word(tau_word);
    WeylElement phi_w = rs.from_word(phi_word);
    if (!(tau == tau_w) || !(phi == phi_w))
        throw invariant_error("tau/phi: value placement and reduced word disagree");
    if (tau.length() != tau_len || phi.length() != phi_len)
        throw invariant_error("tau/phi: length formula mismatch");
    return {tau, phi};
}

bool per_membership(const FlagShape& shape, const PieriDegree& deg, const WeylElement& w) {
    if (!shape.in_wp(w)) throw std::invalid_argument("per_membership expects w in W^P");
    // w(n_{h_j-1}+1) < min{ w(r) : n_{h_j-1}+2 <= r <= n_{l_j} } for every j.
    // The range ends at n_{l_j}: this is the reading equivalent to
    // l(w phi_d) = l(w) + l(phi_d), which the defining jump data satisfy.
    const OneLine& wp = w.perm();
    for (int jj = 1; jj <= deg.m; ++jj) {
        const int a = shape.step(deg.h[jj - 1] - 1) + 1;
        const int hi = shape.step(deg.l[jj - 1]);
        int mn = shape.ambient() + 1;
        for (int r = a + 1; r <= hi; ++r) mn = std::min(mn, wp[r - 1]);
        if (!(wp[a - 1] < mn)) return false;
    }
    return true;
}

QuantumClass eq_quantum_pieri(const FlagShape& shape, int i, int p, const WeylElement& u) {
    if (i < 1 || i > shape.k()) throw std::invalid_argument("flag step index out of range");
    const int ni = shape.steps[i - 1];
    if (p < 1 || p > ni) throw std::invalid_argument("need 1 <= p <= n_i");
    if (!shape.in_wp(u)) throw std::invalid_argument("eq_quantum_pieri expects u in W^P");
    RootSystem rs = RootSystem::type_a(shape.n);
    const ParabolicSubset parabolic = shape.parabolic();
    QuantumClass out;
    for (const auto& deg : pieri_degrees(shape, i, p, u)) {
        auto [tau, phi] = tau_phi(shape, deg);
        WeylElement u2 = rs.multiply(u, tau);
        if (u2.length() != u.length() - tau.length())
            throw invariant_error("Pie membership does not match the length condition");
        WeylElement phi_inv = rs.inverse(phi);
        const int di = deg.d[i - 1];
        LiftResult lift = pw_lift(rs, parabolic, deg.d);
        const long qdeg =
            RootSystem::two_rho_pairing(lift.lambda_b) + lift.omega_factor.length();
        for (int j = 0; j <= p - di; ++j) {
            for (const auto& x : special_superior_set(u2, ni - di, j)) {
                WeylElement w = rs.multiply(x, phi_inv);
                if (!shape.in_wp(w)) continue;
                if (!per_membership(shape, deg, w)) continue;
                Partition mu = mu_partition(x, u2, ni - di);
                if (p - di - j > mu.transpose().part(1)) continue;
                Poly coeff = xi(ni - di - j, p - di - j, mu);
                if (coeff.is_zero()) continue;
                out.add_checked(w, deg.d, coeff, p + u.length() - w.length() - qdeg);
            }
        }
    }
    return out;
}

std::vector<std::tuple<Partition, int, Poly>> grassmann_pieri_terms(int m, int n, int p,
                                                                    const Partition& nu) {
    if (nu.rows() != m || nu.ambient() != n + 1)
        throw std::invalid_argument("nu does not live in P_{m,n+1}");
    if (p < 1 || p > m) throw std::invalid_argument("need 1 <= p <= m");
    std::vector<std::tuple<Partition, int, Poly>> terms;
    for (int r = 0; r <= p; ++r) {
        for (const auto& eta : vertical_strip_extensions(nu, r)) {
            Partition assoc = associated_partition(eta, nu);
            if (p - r > assoc.transpose().part(1)) continue;
            Poly coeff = xi(m - r, p - r, assoc);
            if (!coeff.is_zero()) terms.emplace_back(eta, 0, std::move(coeff));
        }
    }
    if (nu.part(1) == n + 1 - m) {
        std::vector<int> tail(nu.parts().begin() + 1, nu.parts().end());
        Partition nu_tail(std::move(tail), m - 1, n + 1);
        for (int r = 0; r <= p - 1; ++r) {
            for (const auto& kp : vertical_strip_extensions(nu_tail, r)) {
                // kp plays kappa' = (kappa_1+1, ..., kappa_{m-1}+1).
                if (m >= 2 && kp.part(m - 1) < 1) continue;
                Partition assoc = associated_partition(kp, nu_tail);
                if (p - 1 - r > assoc.transpose().part(1)) continue;
                Poly coeff = xi(m - 1 - r, p - 1 - r, assoc);
                if (coeff.is_zero()) continue;
                std::vector<int> kparts;
                for (int s = 1; s <= m - 1; ++s) kparts.push_back(kp.part(s) - 1);
                kparts.push_back(0);
                terms.emplace_back(Partition(std::move(kparts), m, n + 1), 1, std::move(coeff));
            }
        }
    }
    return terms;
}

QuantumClass grassmann_pieri(int m, int n, int p, const Partition& nu) {
    QuantumClass out;
    for (const auto& [eta, d, coeff] : grassmann_pieri_terms(m, n, p, nu)) {
        long expected = p + nu.size() - eta.size() - static_cast<long>(d) * (n + 1);
        out.add_checked(grassmannian_permutation(eta), QDeg{d}, coeff, expected);
    }
    return out;
}

QuantumClass apply_grassmann_special(int m, int n, int p, const QuantumClass& cls) {
    QuantumClass out;
    for (const auto& [key, poly] : cls.terms()) {
        Partition nu = grassmannian_partition(m, n + 1, key.w);
        for (const auto& [eta, d, coeff] : grassmann_pieri_terms(m, n, p, nu))
            out.add(grassmannian_permutation(eta), QDeg{key.q[0] + d}, poly * coeff);
    }
    return out;
}

QuantumClass top_row_products(int m, int n, int p) {
    if (p < 1 || p > m) throw std::invalid_argument("need 1 <= p <= m");
    const int top = n + 1 - m;
    QuantumClass out;
    auto row_class = [&](int ones) {
        std::vector<int> parts{top};
        for (int s = 0; s < ones; ++s) parts.push_back(1);
        return grassmannian_permutation(Partition(std::move(parts), m, n + 1));
    };
    std::vector<int> form(n, 0);
    for (int s = m - p + 1; s <= n; ++s) form[s - 1] = 1;
    out.add(row_class(p - 1), QDeg{0}, Poly::linear_form(VarKind::alpha, form));
    if (p <= m - 1) out.add(row_class(p), QDeg{0}, Poly::one(VarKind::alpha, n));
    if (p == m)
        out.add(grassmannian_permutation(Partition::zero(m, n + 1)), QDeg{1},
                Poly::one(VarKind::alpha, n));
    return out;
}

}  // namespace schubert
