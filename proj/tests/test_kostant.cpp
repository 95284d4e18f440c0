#include <set>

#include "doctest.h"
#include "schubert/kostant.hpp"
#include "schubert/pieri.hpp"

using namespace schubert;

namespace {

Poly ap(const std::string& s, int n) { return Poly::parse(s, VarKind::alpha, n); }

std::vector<Partition> all_partitions(int m, int ambient) {
    std::vector<Partition> out;
    std::vector<int> cur(m, 0);
    auto rec = [&](auto&& self, int row, int maxv) -> void {
        if (row == m) {
            out.emplace_back(cur, m, ambient);
            return;
        }
        for (int v = 0; v <= maxv; ++v) {
            cur[row] = v;
            self(self, row + 1, v);
        }
    };
    rec(rec, 0, ambient - m);
    return out;
}

// Billey's subword sum evaluated over an explicitly supplied word.
Poly restriction_over_word(const RootSystem& rs, const WeylElement& v,
                           const std::vector<int>& word) {
    ReducedWordData data = inversion_roots(rs, word);
    Poly sum(VarKind::alpha, rs.rank());
    const int need = v.length();
    auto rec = [&](auto&& self, size_t pos, const WeylElement& partial, int picked,
                   const Poly& prod) -> void {
        if (picked == need) {
            if (partial == v) sum += prod;
            return;
        }
        if (word.size() - pos < static_cast<size_t>(need - picked)) return;
        for (size_t b = pos; b < word.size(); ++b) {
            WeylElement next = rs.right_simple(partial, word[b]);
            if (next.length() != picked + 1) continue;
            self(self, b + 1, next, picked + 1, prod * rs.root_linear_form(data.roots[b]));
        }
    };
    rec(rec, 0, rs.identity(), 0, Poly::one(VarKind::alpha, rs.rank()));
    return sum;
}

}  // namespace

TEST_CASE("grassmannian reduced word") {
    ReducedWordData data = grassmannian_reduced_word(Partition({5, 4}, 2, 7));
    CHECK(data.word == std::vector<int>{6, 4, 5, 3, 4, 2, 3, 1, 2});

    CHECK(grassmannian_reduced_word(Partition::zero(2, 7)).word.empty());

    ReducedWordData small = grassmannian_reduced_word(Partition({2, 1}, 2, 7));
    CHECK(small.word == std::vector<int>{3, 1, 2});
    CHECK(small.roots[2] == std::vector<int>{1, 1, 1, 0, 0, 0});
}

TEST_CASE("restriction coefficients xi") {
    Partition a({5, 4}, 2, 7);
    CHECK(xi(2, 1, a) == ap("a1 + 2*a2 + 2*a3 + 2*a4 + a5 + a6", 6));
    CHECK(xi(2, 2, a) == ap("(a1+a2+a3+a4)*(a1+a2+a3+a4+a5+a6)", 6));
    CHECK(xi(2, 2, Partition({2, 0}, 2, 7)).is_zero());  // p > a^T_1
    CHECK(xi(2, 0, a).is_one());
    CHECK(xi(0, 0, Partition::zero(0, 5)).is_one());
    CHECK_THROWS_AS(xi(2, 3, a), std::invalid_argument);

    // xi agrees with localization of the special class at phi_m^{-1}(a).
    for (int ambient = 2; ambient <= 7; ++ambient) {
        RootSystem rs = RootSystem::type_a(ambient - 1);
        for (int m = 1; m < ambient; ++m)
            for (const auto& part : all_partitions(m, ambient))
                for (int p = 0; p <= m; ++p)
                    CHECK(xi(m, p, part) ==
                          billey_restriction(rs, special_class_perm(ambient - 1, m, p),
                                             grassmannian_permutation(part)));
    }
}

TEST_CASE("billey restriction basics") {
    RootSystem a2 = RootSystem::type_a(2);
    for (const auto& w : a2.enumerate_w()) CHECK(billey_restriction(a2, a2.identity(), w).is_one());
    CHECK(billey_restriction(a2, a2.simple_reflection(1), a2.simple_reflection(1)) ==
          ap("a1", 2));
    // sigma^v|_w = 0 unless v <= w.
    CHECK(billey_restriction(a2, a2.simple_reflection(1), a2.simple_reflection(2)).is_zero());

    // sigma^w|_w is the product of the l(w) inversion roots.
    RootSystem a3 = RootSystem::type_a(3);
    for (const auto& w : a3.enumerate_w()) {
        Poly prod = Poly::one(VarKind::alpha, 3);
        for (const auto& g : inversion_roots(a3, a3.reduced_word(w)).roots)
            prod = prod * a3.root_linear_form(g);
        CHECK(billey_restriction(a3, w, w) == prod);
    }
}

TEST_CASE("billey restriction is reduced-word independent") {
    RootSystem a3 = RootSystem::type_a(3);
    std::vector<WeylElement> all = a3.enumerate_w();
    for (const auto& w : all) {
        if (w.length() > 6) continue;
        // Build every reduced word of w by stripping right descents.
        std::vector<std::vector<int>> words;
        auto rec = [&](auto&& self, const WeylElement& x, std::vector<int>& acc) -> void {
            if (x.is_identity()) {
                std::vector<int> word(acc.rbegin(), acc.rend());
                words.push_back(std::move(word));
                return;
            }
            for (int i = 1; i <= 3; ++i) {
                if (!a3.sgn(x, i)) continue;
                acc.push_back(i);
                self(self, a3.right_simple(x, i), acc);
                acc.pop_back();
            }
        };
        std::vector<int> acc;
        rec(rec, w, acc);
        REQUIRE(!words.empty());
        for (const auto& v : all) {
            if (v.length() > w.length()) continue;
            Poly expect = restriction_over_word(a3, v, words.front());
            for (const auto& word : words)
                CHECK(restriction_over_word(a3, v, word) == expect);
            CHECK(billey_restriction(a3, v, w) == expect);
        }
    }
}

TEST_CASE("classical product oracle") {
    RootSystem a6 = RootSystem::type_a(6);
    FlagShape gr37 = FlagShape::grassmannian(3, 7);
    RestrictionTable table(a6);
    WeylElement u = grassmannian_permutation(Partition({1, 1, 0}, 3, 7));
    WeylElement v = grassmannian_permutation(Partition({4, 2, 1}, 3, 7));
    QuantumClass prod = classical_product_oracle(a6, gr37.parabolic(), u, v, 1, &table);
    const Poly* self_coeff = prod.find(v, QDeg{0});
    REQUIRE(self_coeff);
    CHECK(*self_coeff == ap("(a1+a2+a3)*(a1+a2+a3+a4+a5+a6)", 6));
    const Poly* top = prod.find(grassmannian_permutation(Partition({4, 3, 2}, 3, 7)), QDeg{0});
    REQUIRE(top);
    CHECK(top->is_one());

    // Unit, positivity, degree and triangularity across all of H_T^*(Fl_4).
    RootSystem a3 = RootSystem::type_a(3);
    ParabolicSubset none = ParabolicSubset::of({});
    RestrictionTable t3(a3);
    std::vector<WeylElement> all = a3.enumerate_w();
    for (const auto& x : all) {
        QuantumClass unit = classical_product_oracle(a3, none, x, a3.identity(), 0, &t3);
        REQUIRE(unit.terms().size() == 1);
        CHECK(unit.find(x, QDeg{}) != nullptr);
        CHECK(unit.find(x, QDeg{})->is_one());
    }
    for (const auto& x : all)
        for (const auto& y : all) {
            QuantumClass p = classical_product_oracle(a3, none, x, y, 0, &t3);
            for (const auto& [key, coeff] : p.terms()) {
                CHECK(coeff.is_homogeneous_of_degree(x.length() + y.length() - key.w.length()));
                CHECK(coeff.has_nonnegative_coeffs());
                CHECK(key.w.length() >= std::max(x.length(), y.length()));
            }
        }
}

TEST_CASE("oracle products are commutative and associative") {
  for (int rank = 2; rank <= 3; ++rank) {
    RootSystem a2 = RootSystem::type_a(rank);
    ParabolicSubset none = ParabolicSubset::of({});
    RestrictionTable table(a2);
    std::vector<WeylElement> all = a2.enumerate_w();
    std::map<std::pair<WeylElement, WeylElement>, QuantumClass> cache;
    auto prod = [&](const WeylElement& x, const WeylElement& y) -> const QuantumClass& {
        auto key = std::make_pair(x, y);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, classical_product_oracle(a2, none, x, y, 0, &table)).first;
        return it->second;
    };
    auto mult_class = [&](const WeylElement& x, const QuantumClass& cls) {
        QuantumClass out;
        for (const auto& [key, coeff] : cls.terms())
            for (const auto& [k2, c2] : prod(x, key.w).terms()) out.add(k2.w, k2.q, c2 * coeff);
        return out;
    };
    for (const auto& x : all)
        for (const auto& y : all) CHECK(prod(x, y) == prod(y, x));
    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& z : all) {
                if (!(mult_class(z, prod(x, y)) == mult_class(x, prod(y, z)))) {
                    CHECK(false);
                }
            }
  }
}
