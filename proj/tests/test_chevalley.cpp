#include "doctest.h"
#include "schubert/chevalley.hpp"
#include "schubert/kostant.hpp"
#include "schubert/partition.hpp"
#include "schubert/pieri.hpp"

using namespace schubert;

namespace {

Poly ap(const std::string& s, int n) { return Poly::parse(s, VarKind::alpha, n); }

}  // namespace

TEST_CASE("divisor times the unit") {
    for (const RootSystem& rs : {RootSystem::type_a(3), RootSystem::type_b(2)}) {
        for (int i = 1; i <= rs.rank(); ++i) {
            QuantumClass c = quantum_chevalley_gb(rs, i, rs.identity());
            QuantumClass expected;
            expected.add(rs.simple_reflection(i), QDeg(rs.rank(), 0),
                         Poly::one(VarKind::alpha, rs.rank()));
            CHECK(c == expected);
        }
    }
}

TEST_CASE("A2 divisor square") {
    RootSystem a2 = RootSystem::type_a(2);
    WeylElement s1 = a2.simple_reflection(1);
    QuantumClass c = quantum_chevalley_gb(a2, 1, s1);
    QuantumClass expected;
    expected.add(a2.identity(), QDeg{1, 0}, ap("1", 2));
    expected.add(s1, QDeg{0, 0}, ap("a1", 2));
    expected.add(a2.multiply(a2.simple_reflection(2), s1), QDeg{0, 0}, ap("1", 2));
    CHECK(c == expected);
}

TEST_CASE("sigma^{s_b} * sigma^{s_b} via the displayed formula") {
    // q_{b^vee} + beta sigma^{s_b} + sum over adjacent alpha of
    // <chi_b, s_b(alpha^vee)> sigma^{s_a s_b}.
    for (const RootSystem& rs :
         {RootSystem::type_a(3), RootSystem::type_b(2), RootSystem::type_g2()}) {
        const int n = rs.rank();
        for (int beta = 1; beta <= n; ++beta) {
            WeylElement sb = rs.simple_reflection(beta);
            QuantumClass expected;
            std::vector<int> bvee(n, 0);
            bvee[beta - 1] = 1;
            expected.add(rs.identity(), QDeg(bvee.begin(), bvee.end()),
                         Poly::one(VarKind::alpha, n));
            expected.add(sb, QDeg(n, 0), Poly::variable(VarKind::alpha, n, beta - 1));
            for (int alpha = 1; alpha <= n; ++alpha) {
                if (alpha == beta || rs.cartan(alpha, beta) == 0) continue;
                std::vector<int> avee(n, 0);
                avee[alpha - 1] = 1;
                long coeff = rs.act_on_coroot(sb, avee)[beta - 1];
                expected.add(rs.multiply(rs.simple_reflection(alpha), sb), QDeg(n, 0),
                             Poly::constant(VarKind::alpha, n, coeff));
            }
            CHECK(quantum_chevalley_gb(rs, beta, sb) == expected);
        }
    }
}

TEST_CASE("divisor operators commute") {
    for (const RootSystem& rs :
         {RootSystem::type_a(3), RootSystem::type_b(3), RootSystem::type_g2()}) {
        for (const auto& u : rs.enumerate_w()) {
            QuantumClass base;
            base.add(u, QDeg(rs.rank(), 0), Poly::one(VarKind::alpha, rs.rank()));
            for (int i = 1; i <= rs.rank(); ++i)
                for (int j = i + 1; j <= rs.rank(); ++j)
                    CHECK(apply_divisor_gb(rs, i, apply_divisor_gb(rs, j, base)) ==
                          apply_divisor_gb(rs, j, apply_divisor_gb(rs, i, base)));
        }
    }
}

TEST_CASE("classical limit of Chevalley agrees with the localization oracle") {
    std::vector<RootSystem> systems;
    systems.push_back(RootSystem::type_a(1));
    systems.push_back(RootSystem::type_a(2));
    systems.push_back(RootSystem::type_a(3));
    systems.push_back(RootSystem::type_a(4));
    systems.push_back(RootSystem::type_b(2));
    systems.push_back(RootSystem::type_b(3));
    systems.push_back(RootSystem::type_c(3));
    systems.push_back(RootSystem::type_g2());
    for (const auto& rs : systems) {
        ParabolicSubset none = ParabolicSubset::of({});
        RestrictionTable table(rs);
        for (const auto& u : rs.enumerate_w())
            for (int i = 1; i <= rs.rank(); ++i) {
                QuantumClass lhs = quantum_chevalley_gb(rs, i, u).classical_limit();
                QuantumClass rhs = classical_product_oracle(rs, none, rs.simple_reflection(i), u,
                                                            rs.rank(), &table);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("divisor products on partial flags") {
    // Unit: sigma^{c[n_i,1]} * sigma^{id} = sigma^{c[n_i,1]}.
    FlagShape fl(3, {1, 3});
    WeylElement id = WeylElement::from_perm(oneline_identity(4));
    for (int i = 1; i <= 2; ++i) {
        QuantumClass expected;
        expected.add(special_class_perm(3, fl.steps[i - 1], 1), QDeg{0, 0}, ap("1", 3));
        CHECK(divisor_product_gp(fl, i, id) == expected);
    }

    // Gr(1,3) = P^2: sigma^1 * sigma^{(2)} = (a1+a2) sigma^{(2)} + q.
    FlagShape p2 = FlagShape::grassmannian(1, 3);
    WeylElement top = grassmannian_permutation(Partition({2}, 1, 3));
    QuantumClass expected;
    expected.add(top, QDeg{0}, ap("a1 + a2", 2));
    expected.add(WeylElement::from_perm(oneline_identity(3)), QDeg{1}, ap("1", 2));
    CHECK(divisor_product_gp(p2, 1, top) == expected);

    // Gr(3,7): sigma^1 * sigma^{(4,1,1)} contains q with coefficient 1.
    FlagShape gr37 = FlagShape::grassmannian(3, 7);
    WeylElement u = grassmannian_permutation(Partition({4, 1, 1}, 3, 7));
    QuantumClass prod = divisor_product_gp(gr37, 1, u);
    const Poly* qcoeff = prod.find(WeylElement::from_perm(oneline_identity(7)), QDeg{1});
    REQUIRE(qcoeff);
    CHECK(qcoeff->is_one());

    CHECK_THROWS_AS(divisor_product_gp(p2, 1, WeylElement::from_perm(parse_permutation("[231]", 3))),
                    std::invalid_argument);
}
