#include "schubert/kostant.hpp"

#include <algorithm>

namespace schubert {

ReducedWordData grassmannian_reduced_word(const Partition& a) {
    const int m = a.rows();
    const int n = a.ambient() - 1;
    const Partition at = a.transpose();
    std::vector<int> word;
    // Rows t = n+1-m, ..., 1; row t contributes the ascending run ending at m+t-1.
    for (int t = n + 1 - m; t >= 1; --t) {
        const int last = m + t - 1;
        for (int i = last - at.part(t) + 1; i <= last; ++i) word.push_back(i);
    }
    RootSystem rs = RootSystem::type_a(n);
    ReducedWordData data = inversion_roots(rs, word);
    WeylElement prod = rs.from_word(word);
    if (prod.length() != static_cast<int>(word.size()) ||
        !(prod == grassmannian_permutation(a)))
        throw invariant_error("grassmannian word is not a reduced word of phi_m^{-1}(a)");
    return data;
}

Poly xi(int m, int p, const Partition& a) {
    if (m != a.rows()) throw std::invalid_argument("xi: m must match the box of a");
    if (p < 0 || p > m) throw std::invalid_argument("xi: need 0 <= p <= m");
    const int n = a.ambient() - 1;
    if (p == 0) return Poly::one(VarKind::alpha, n);
    ReducedWordData data = grassmannian_reduced_word(a);
    // f[s] accumulates, over subsequences matching the first s needed letters
    // [m-p+1, ..., m-p+s], the sum of the products of their inversion roots.
    std::vector<Poly> f(p + 1, Poly::zero(VarKind::alpha, n));
    f[0] = Poly::one(VarKind::alpha, n);
    for (size_t b = 0; b < data.word.size(); ++b) {
        int s = data.word[b] - (m - p);
        if (s < 1 || s > p) continue;
        if (f[s - 1].is_zero()) continue;
        f[s] += f[s - 1] * Poly::linear_form(VarKind::alpha, data.roots[b]);
    }
    return f[p];
}

namespace {

struct BilleyContext {
    const RootSystem& rs;
    const WeylElement& v;
    const std::vector<int>& word;
    const std::vector<std::vector<int>>& roots;
    std::vector<Poly> root_forms;
    Poly sum;
};

// Enumerate subsequences of w's reduced word that are reduced words of v,
// multiplying the inversion roots along the way.
void billey_walk(BilleyContext& ctx, size_t pos, const WeylElement& partial, int picked,
                 const Poly& prod) {
    const int need = ctx.v.length();
    if (picked == need) {
        if (partial == ctx.v) ctx.sum += prod;
        return;
    }
    if (ctx.word.size() - pos < static_cast<size_t>(need - picked)) return;
    // Viability: the rest of v must still be reachable by a reduced completion.
    WeylElement rest = ctx.rs.multiply(ctx.rs.inverse(partial), ctx.v);
    if (rest.length() != need - picked) return;
    for (size_t b = pos; b + (need - picked) <= ctx.word.size(); ++b) {
        WeylElement next = ctx.rs.right_simple(partial, ctx.word[b]);
        if (next.length() != picked + 1) continue;
        billey_walk(ctx, b + 1, next, picked + 1, prod * ctx.root_forms[b]);
    }
}

}  // namespace

Poly billey_restriction(const RootSystem& rs, const WeylElement& v, const WeylElement& w) {
    const int n = rs.rank();
    if (v.length() > w.length()) return Poly::zero(VarKind::alpha, n);
    if (v.length() == 0) return Poly::one(VarKind::alpha, n);
    std::vector<int> word = rs.reduced_word(w);
    ReducedWordData data = inversion_roots(rs, word);
    BilleyContext ctx{rs, v, data.word, data.roots, {}, Poly::zero(VarKind::alpha, n)};
    ctx.root_forms.reserve(word.size());
    for (const auto& g : data.roots) ctx.root_forms.push_back(rs.root_linear_form(g));
    billey_walk(ctx, 0, rs.identity(), 0, Poly::one(VarKind::alpha, n));
    return ctx.sum;
}

const Poly& RestrictionTable::get(const WeylElement& v, const WeylElement& w) {
    auto key = std::make_pair(v, w);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(std::move(key), billey_restriction(rs_, v, w)).first->second;
}

QuantumClass classical_product_oracle(const RootSystem& rs, const ParabolicSubset& parabolic,
                                      const WeylElement& u, const WeylElement& v,
                                      int qdeg_len, RestrictionTable* table) {
    if (!rs.in_wp(parabolic, u) || !rs.in_wp(parabolic, v))
        throw std::invalid_argument("oracle factors must be minimal coset representatives");
    RestrictionTable local(rs);
    RestrictionTable& t = table ? *table : local;

    std::vector<WeylElement> points = rs.enumerate_wp(parabolic);
    const QDeg zero(qdeg_len, 0);
    // Solve sigma^u|_x sigma^v|_x = sum_w N^w sigma^w|_x in increasing length
    // order; sigma^w|_x vanishes unless w <= x, and same-length w != x never
    // contribute, so every step is an exact division by sigma^x|_x.
    std::vector<std::pair<WeylElement, Poly>> solved;
    QuantumClass out;
    for (const auto& x : points) {
        Poly rhs = t.get(u, x) * t.get(v, x);
        for (const auto& [w, nw] : solved) {
            const Poly& rw = t.get(w, x);
            if (!rw.is_zero()) rhs -= nw * rw;
        }
        if (rhs.is_zero()) continue;
        Poly nx = exact_div(rhs, t.get(x, x));
        out.add_checked(x, zero, nx, u.length() + v.length() - x.length());
        solved.emplace_back(x, std::move(nx));
    }
    return out;
}

}  // namespace schubert
