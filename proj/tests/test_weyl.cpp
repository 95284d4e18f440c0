#include <set>

#include "doctest.h"
#include "schubert/partition.hpp"
#include "schubert/weyl.hpp"

using namespace schubert;

namespace {

WeylElement wperm(const std::string& s, int n_values) {
    return WeylElement::from_perm(parse_permutation(s, n_values));
}

}  // namespace

TEST_CASE("type A root data") {
    CHECK_THROWS_AS(RootSystem::type_a(0), std::invalid_argument);

    RootSystem a1 = RootSystem::type_a(1);
    CHECK(a1.num_positive_roots() == 1);
    CHECK(a1.reflection(0) == wperm("[21]", 2));

    CHECK(RootSystem::type_a(6).num_positive_roots() == 21);

    RootSystem a2 = RootSystem::type_a(2);
    int idx = a2.positive_root_index({1, 1});
    REQUIRE(idx >= 0);
    CHECK(a2.coroot_of(idx) == std::vector<int>{1, 1});
    CHECK(RootSystem::two_rho_pairing(a2.coroot_of(idx)) == 4);
    for (int j = 1; j <= 2; ++j) CHECK(a2.cartan(j, j) == 2);

    // <2rho, gamma^vee> telescopes over the coroot coordinates.
    RootSystem a4 = RootSystem::type_a(4);
    for (int r = 0; r < a4.num_positive_roots(); ++r) {
        long total = 0;
        for (int c : a4.coroot_of(r)) total += 2 * c;
        CHECK(RootSystem::two_rho_pairing(a4.coroot_of(r)) == total);
    }
}

TEST_CASE("other finite types") {
    CHECK(RootSystem::type_b(2).num_positive_roots() == 4);
    CHECK(RootSystem::type_c(2).num_positive_roots() == 4);
    CHECK(RootSystem::type_b(3).num_positive_roots() == 9);
    CHECK(RootSystem::type_c(3).num_positive_roots() == 9);
    CHECK(RootSystem::type_g2().num_positive_roots() == 6);
    CHECK(RootSystem::type_b(3).enumerate_w().size() == 48);
    CHECK(RootSystem::type_g2().enumerate_w().size() == 12);

    // An affine Cartan matrix is rejected as not of finite type.
    CHECK_THROWS_AS(RootSystem::from_cartan({{2, -2}, {-2, 2}}), budget_error);

    RootSystem b3 = RootSystem::type_b(3);
    for (const auto& w : b3.enumerate_w()) {
        CHECK(b3.multiply(w, b3.inverse(w)).is_identity());
        for (int i = 1; i <= 3; ++i) {
            int d = b3.right_simple(w, i).length() - w.length();
            CHECK((d == 1 || d == -1));
        }
    }
}

TEST_CASE("lengths and the composition convention") {
    CHECK(wperm("[1234567]", 7).length() == 0);
    // Brute-force inversion count: [3,7,1,5,2,4,6] has 2+5+0+2 inversions.
    CHECK(wperm("[3715246]", 7).length() == 9);
    CHECK(wperm("[4321]", 4).length() == 6);

    // u tau_{(1,1)} = [3152467] with tau = (234567), composing (xy)(i) = x(y(i)).
    OneLine tau = parse_permutation("(2 3 4 5 6 7)", 7);
    CHECK(tau == parse_permutation("[1345672]", 7));
    CHECK(oneline_compose(parse_permutation("[3715246]", 7), tau) ==
          parse_permutation("[3152467]", 7));
}

TEST_CASE("sgn and its two characterizations") {
    RootSystem a2 = RootSystem::type_a(2);
    CHECK_FALSE(a2.sgn(a2.identity(), 1));
    CHECK(a2.sgn(a2.simple_reflection(1), 1));
    // w = s_2 s_1 sends alpha_1 to a negative root.
    WeylElement w = a2.multiply(a2.simple_reflection(2), a2.simple_reflection(1));
    CHECK(a2.sgn(w, 1));

    for (const RootSystem& rs : {RootSystem::type_a(3), RootSystem::type_b(3)}) {
        for (const auto& u : rs.enumerate_w())
            for (int i = 1; i <= rs.rank(); ++i)
                CHECK(rs.sgn(u, i) == (rs.right_simple(u, i).length() == u.length() - 1));
    }
}

TEST_CASE("coset decomposition") {
    RootSystem a2 = RootSystem::type_a(2);
    ParabolicSubset p1 = ParabolicSubset::of({1});
    auto [min1, par1] = a2.coset_decompose(p1, wperm("[213]", 3));
    CHECK(min1.is_identity());
    CHECK(par1 == a2.simple_reflection(1));

    RootSystem a3 = RootSystem::type_a(3);
    ParabolicSubset p13 = ParabolicSubset::of({1, 3});
    WeylElement w = wperm("[2143]", 4);
    auto [wmin, wpar] = a3.coset_decompose(p13, w);
    CHECK(a3.multiply(wmin, wpar) == w);
    CHECK(wmin.length() + wpar.length() == w.length());
    CHECK(a3.in_wp(p13, wmin));
    // Cross-check against exhaustive search over the four-element W_P.
    bool found = false;
    for (const auto& x : a3.enumerate_w()) {
        if (!a3.in_wp(p13, x)) continue;
        for (const auto& y : {a3.identity(), a3.simple_reflection(1), a3.simple_reflection(3),
                              a3.multiply(a3.simple_reflection(1), a3.simple_reflection(3))}) {
            if (a3.multiply(x, y) == w && x.length() + y.length() == w.length()) {
                CHECK(x == wmin);
                CHECK(y == wpar);
                found = true;
            }
        }
    }
    CHECK(found);

    for (const auto& u : a3.enumerate_w()) {
        auto [mn, pr] = a3.coset_decompose(p13, u);
        CHECK(a3.multiply(mn, pr) == u);
        CHECK(mn.length() + pr.length() == u.length());
        if (a3.in_wp(p13, u)) {
            CHECK(mn == u);
            CHECK(pr.is_identity());
        }
    }
}

TEST_CASE("longest elements") {
    RootSystem a3 = RootSystem::type_a(3);
    CHECK(a3.longest_element({}).is_identity());
    WeylElement l13 = a3.longest_element({1, 3});
    CHECK(l13.length() == 2);
    CHECK(l13 == a3.multiply(a3.simple_reflection(1), a3.simple_reflection(3)));
    WeylElement l12 = a3.longest_element({1, 2});
    CHECK(l12.length() == 3);
    CHECK(l12 == wperm("[3214]", 4));
}

TEST_CASE("grassmannian bijection") {
    CHECK(grassmannian_partition(2, 7, wperm("[5712346]", 7)) == Partition({5, 4}, 2, 7));
    CHECK(grassmannian_partition(3, 7, wperm("[1234567]", 7)) == Partition::zero(3, 7));
    CHECK(grassmannian_permutation(Partition({4, 0, 0}, 3, 7)) == wperm("[1273456]", 7));
    CHECK_THROWS_AS(grassmannian_partition(2, 7, wperm("[3715246]", 7)), std::invalid_argument);

    for (int ambient = 2; ambient <= 8; ++ambient) {
        RootSystem rs = RootSystem::type_a(ambient - 1);
        for (int m = 1; m < ambient; ++m) {
            ParabolicSubset p = ParabolicSubset::of([&] {
                std::vector<int> d;
                for (int i = 1; i < ambient; ++i)
                    if (i != m) d.push_back(i);
                return d;
            }());
            for (const auto& w : rs.enumerate_wp(p)) {
                Partition a = grassmannian_partition(m, ambient, w);
                CHECK(grassmannian_permutation(a) == w);
                CHECK(a.size() == w.length());
                CHECK(grassmannian_partition(m, ambient, grassmannian_permutation(a)) == a);
            }
        }
    }
}

TEST_CASE("coset enumeration sizes") {
    RootSystem a2 = RootSystem::type_a(2);
    CHECK(a2.enumerate_wp(ParabolicSubset::of({})).size() == 6);
    RootSystem a3 = RootSystem::type_a(3);
    CHECK(a3.enumerate_wp(ParabolicSubset::of({1, 3})).size() == 6);
    RootSystem a6 = RootSystem::type_a(6);
    CHECK(a6.enumerate_wp(ParabolicSubset::of({1, 3, 5, 6})).size() == 5040 / (2 * 2 * 6));

    // Sorted by (length, one-line order) with no duplicates.
    auto wp = a3.enumerate_wp(ParabolicSubset::of({2}));
    for (size_t i = 1; i < wp.size(); ++i) CHECK(wp[i - 1] < wp[i]);
}

TEST_CASE("enumeration budget") {
    CHECK(RootSystem::enumeration_budget() == 40320);
    CHECK_THROWS_AS(RootSystem::type_a(8).enumerate_w(), budget_error);
}

TEST_CASE("length changes by one under simple reflections") {
    for (const RootSystem& rs :
         {RootSystem::type_a(4), RootSystem::type_b(3), RootSystem::type_c(3)}) {
        if (rs.is_type_a() && rs.rank() == 4) continue;  // covered in type A below
        for (const auto& w : rs.enumerate_w())
            for (int i = 1; i <= rs.rank(); ++i)
                CHECK(std::abs(rs.right_simple(w, i).length() - w.length()) == 1);
    }
    RootSystem a4 = RootSystem::type_a(4);
    for (const auto& w : a4.enumerate_w())
        for (int i = 1; i <= 4; ++i)
            CHECK(std::abs(a4.right_simple(w, i).length() - w.length()) == 1);
}

TEST_CASE("reduced words") {
    for (const RootSystem& rs : {RootSystem::type_a(3), RootSystem::type_b(2)}) {
        for (const auto& w : rs.enumerate_w()) {
            auto word = rs.reduced_word(w);
            CHECK(static_cast<int>(word.size()) == w.length());
            CHECK(rs.from_word(word) == w);
            if (!word.empty()) {
                auto data = inversion_roots(rs, word);
                for (const auto& g : data.roots) CHECK(rs.positive_root_index(g) >= 0);
            }
        }
    }
}

TEST_CASE("permutation text round trips") {
    CHECK(oneline_to_string(parse_permutation("[3715246]", 7)) == "[3715246]");
    OneLine big = parse_permutation("[10,3,7,1,2,4,5,6,8,9]", 10);
    CHECK(oneline_to_string(big) == "[10,3,7,1,2,4,5,6,8,9]");
    CHECK(parse_permutation("(1 6)(3 5)", 7) ==
          oneline_compose(parse_permutation("(16)", 7), parse_permutation("(35)", 7)));
    CHECK_THROWS_AS(parse_permutation("[1123]", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 4), std::invalid_argument);
}
