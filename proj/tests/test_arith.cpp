// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "test_support.hpp"

#include "cdalg/arith.hpp"

using namespace cdalg;
using cdalg::testing::Gen;
using cdalg::testing::example_def;

namespace {

// d = 7 shares the cubic field; a = (3 + sqrt(-7))/4 has norm 1 = N_M/F(1).
AlgebraDef d7_def() {
    AlgebraDef def = example_def();
    def.tower.d = 7;
    def.a = {Rat(3, 4), Rat(1, 4)};
    return def;
}

std::vector<TowerElem> third_roots_in_L(const CyclicAlgebra& A) {
    std::vector<TowerElem> out;
    for (const auto& q : third_roots_of_unity(A.tower()->d())) out.push_back(A.tower()->elem(q));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("arith") {
    TEST_CASE("integral basis of o_E") {
        auto z = QuadElem(3, Rat(-1, 2), Rat(1, 2));
        CHECK(to_oE_basis(z) == std::array<Rat, 2>{Rat(-1), Rat(1)});
        CHECK(to_oE_basis(z * z) == std::array<Rat, 2>{Rat(0), Rat(-1)});
        CHECK(is_oE_integral(z));
        CHECK_FALSE(is_oE_integral(QuadElem(3, 0, Rat(1, 2))));
        CHECK(is_oE_integral(QuadElem(2, 0, 1)));
        CHECK_FALSE(is_oE_integral(QuadElem(2, Rat(1, 2), Rat(1, 2))));
        Gen gen(5);
        for (std::int64_t d : {1, 2, 3, 7, 11}) {
            auto q = gen.quad(d, 6);
            auto c = to_oE_basis(q);
            CHECK(from_oE_basis(d, c[0], c[1]) == q);
        }
        CHECK(disc_E(3) == -3);
        CHECK(disc_E(1) == -4);
        CHECK(disc_E(7) == -7);
    }

    TEST_CASE("prime classification") {
        auto def = example_def();
        auto p5 = classify_prime(5, def);
        CHECK(p5.behavior_E == SplitE::inert);
        CHECK(p5.roots_mod_p == 2);
        CHECK(p5.split_M == SplitM::ramified);
        CHECK_FALSE(p5.sixth_roots_in_residue_field);
        CHECK(p5.property_B);
        CHECK_FALSE(p5.property_A);

        auto p7 = classify_prime(7, def);
        CHECK(p7.behavior_E == SplitE::split);
        CHECK(p7.sixth_roots_in_residue_field);
        CHECK_FALSE(p7.property_B);

        auto p3 = classify_prime(3, def);
        CHECK(p3.behavior_E == SplitE::ramified);
        CHECK(p3.split_M == SplitM::inert);
        CHECK(p3.property_B);

        auto p31 = classify_prime(31, def);
        CHECK(p31.behavior_E == SplitE::split);
        CHECK(p31.split_M == SplitM::split_completely);
        CHECK_FALSE(p31.property_A);

        CHECK(classify_prime(13, def).split_M == SplitM::ramified);
        CHECK(classify_prime(47, def).property_A);

        auto p2 = classify_prime(2, def);
        CHECK_FALSE(p2.property_A);
        CHECK_FALSE(p2.property_B);

        CHECK_THROWS_AS(classify_prime(9, def), Error);
        auto bad = def;
        bad.tower.f = {Rat(1, 2), Rat(0), Rat(0)};
        CHECK_THROWS_AS(classify_prime(5, bad), Error);
    }

    TEST_CASE("frozen Property A and B tables") {
        // Frozen from tests/oracles/derive_constants.py.
        const std::vector<std::int64_t> a3{47, 53, 83, 131};
        const std::vector<std::int64_t> b3{3, 5, 11, 17, 23, 29, 41, 47, 53, 59, 71, 83, 89, 101, 107, 113, 131, 137, 149};
        const std::vector<std::int64_t> a7{31, 47, 73, 83, 103, 131};
        const std::vector<std::int64_t> b7{3, 5, 17, 41, 47, 59, 83, 89, 101, 131};
        for (auto [def, ea, eb] : {std::tuple{example_def(), a3, b3}, std::tuple{d7_def(), a7, b7}}) {
            std::vector<std::int64_t> A, B;
            for (std::int64_t p = 2; p < 150; ++p) {
                if (!is_prime(p)) continue;
                auto pc = classify_prime(p, def);
                if (pc.property_A) A.push_back(p);
                if (pc.property_B) B.push_back(p);
                if (pc.property_A && pc.property_B) CHECK(pc.behavior_E == SplitE::inert);
            }
            CHECK(A == ea);
            CHECK(B == eb);
        }
    }

    TEST_CASE("behavior in E matches the minimal polynomial of omega mod p") {
        for (std::int64_t d : {1, 2, 3, 7, 11}) {
            TowerParams tp = example_def().tower;
            tp.d = d;
            // omega^2 - omega + (1 + d)/4 or omega^2 + d.
            std::int64_t c1 = d % 4 == 3 ? -1 : 0, c0 = d % 4 == 3 ? (1 + d) / 4 : d;
            for (std::int64_t p = 2; p < 200; ++p) {
                if (!is_prime(p)) continue;
                int roots = 0;
                bool double_root = false;
                for (std::int64_t x = 0; x < p; ++x)
                    if (((x * x + c1 * x + c0) % p + p) % p == 0) {
                        ++roots;
                        if (((2 * x + c1) % p + p) % p == 0) double_root = true;
                    }
                SplitE expect = double_root ? SplitE::ramified : (roots == 2 ? SplitE::split : SplitE::inert);
                CHECK(classify_prime(p, tp).behavior_E == expect);
            }
        }
    }

    TEST_CASE("p-units and S-integrality") {
        auto t = Tower::create(example_def().tower);
        CHECK(is_p_unit(t->cubic(1), 5));
        CHECK_FALSE(is_p_unit(t->theta(), 13));
        CHECK(is_p_unit(t->theta(), 5));
        CHECK_FALSE(is_p_unit(t->cubic(Rat(1, 5)), 5));

        SRing s5{{5}}, none{};
        CHECK(s_integral(QuadElem(3, Rat(1, 5)), s5));
        CHECK_FALSE(s_integral(QuadElem(3, Rat(1, 10)), s5));
        CHECK(s_integral(QuadElem(3, Rat(-1, 2), Rat(1, 2)), none));
        CHECK_FALSE(s_integral(QuadElem(3, 0, Rat(1, 2)), none));
        CHECK(s_integral(t->elem(t->theta()) + t->elem(QuadElem(3, Rat(-1, 2), Rat(1, 2))), none));

        Gen gen(19);
        SRing s35{{3, 5}};
        auto grid = height_grid(2, s35.primes);
        auto pick = [&] { return grid[gen.uniform(0, static_cast<int>(grid.size()) - 1)]; };
        for (int i = 0; i < 50; ++i) {
            auto x = t->elem(from_oE_basis(3, pick(), pick())) * t->elem(t->cubic(pick(), pick(), pick()));
            auto y = t->elem(from_oE_basis(3, pick(), pick())) * t->elem(t->cubic(pick(), pick(), pick()));
            REQUIRE(s_integral(x, s35));
            REQUIRE(s_integral(y, s35));
            CHECK(s_integral(x + y, s35));
            CHECK(s_integral(x * y, s35));
        }
    }

    TEST_CASE("discriminant of Lambda") {
        CyclicAlgebra A(example_def());
        auto t = A.tower();
        auto std_rep = discriminant_lambda(A, standard_basis(t));
        CHECK(std_rep.block_shape_ok);
        // disc(1, theta, theta^2) = disc(f), frozen from the oracle script.
        CHECK(std_rep.disc_basis == t->quad(4225));
        CHECK_FALSE(std_rep.rho_invariant);

        auto th2 = t->elem(t->theta() * t->theta());
        auto orbit = rho_orbit_basis(th2);
        CHECK(is_rho_invariant(orbit));
        auto rep = discriminant_lambda(A, orbit);
        CHECK(rep.rho_invariant);
        CHECK(rep.block_shape_ok);
        CHECK(rep.identity_holds);

        AlgebraDef def8 = example_def();
        def8.a = {Rat(-4), Rat(4)};
        def8.b = {Rat(4), Rat(0), Rat(0)};
        CyclicAlgebra A8(def8);
        auto t8 = A8.tower();
        CHECK(discriminant_lambda(A8, rho_orbit_basis(t8->elem(t8->theta() * t8->theta()))).identity_holds);

        CHECK_THROWS_AS(discriminant_lambda(A, rho_orbit_basis(t->elem(t->theta()))), Error);

        Gen gen(29);
        auto base = standard_basis(t);
        for (int i = 0; i < 4; ++i) {
            std::vector<std::vector<QuadElem>> T(3, std::vector<QuadElem>(3));
            OrderBasis nb = base;
            for (int r = 0; r < 3; ++r) {
                nb.e[r] = t->zero();
                for (int c = 0; c < 3; ++c) {
                    Rat v = gen.rat(3);
                    T[r][c] = t->quad(v);
                    nb.e[r] = nb.e[r] + v * base.e[c];
                }
            }
            QuadElem det = determinant(T);
            if (det.is_zero()) continue;
            auto r2 = discriminant_lambda(A, nb);
            QuadElem d2 = det * det;
            CHECK(r2.disc_basis == d2 * std_rep.disc_basis);
            CHECK(r2.disc_lambda == d2 * d2 * d2 * std_rep.disc_lambda);
        }
    }

    TEST_CASE("maximal order criterion") {
        auto def = example_def();
        auto rep = maximal_order_check(def);
        CHECK(rep.a_integral);
        CHECK(rep.maximal);
        def.a = {Rat(0), Rat(1)};
        rep = maximal_order_check(def);
        CHECK_FALSE(rep.maximal);
        CHECK(rep.norm_a == 3);
        def.a = {Rat(1), Rat(1)};
        rep = maximal_order_check(def);
        CHECK_FALSE(rep.maximal);
        CHECK(rep.norm_a == 4);
        def.a = {Rat(1, 3), Rat(1, 3)};
        rep = maximal_order_check(def);
        CHECK_FALSE(rep.a_integral);
        CHECK_FALSE(rep.maximal);
        CHECK_FALSE(rep.note.empty());
    }

    TEST_CASE("denominator admissibility") {
        CyclicAlgebra A(example_def());
        auto r = denominator_admissible(A, A.one());
        CHECK(r.denominator_primes.empty());
        CHECK(r.in_U);
        CHECK_FALSE(r.violation);

        r = denominator_admissible(A, A.scalar(A.tower()->quad(Rat(1, 7))));
        CHECK(r.denominator_primes == std::vector<std::int64_t>{7});
        CHECK(r.restricted.empty());

        r = denominator_admissible(A, A.scalar(A.tower()->quad(Rat(1, 5))));
        CHECK(r.restricted == std::vector<std::int64_t>{5});
        CHECK_FALSE(r.in_U);
        CHECK_FALSE(r.violation);

        CHECK_THROWS_AS(denominator_admissible(A, A.scalar(A.tower()->elem(A.tower()->theta()))), Error);
    }

    TEST_CASE("S-integral monomial scan") {
        CyclicAlgebra A(example_def());
        auto roots = third_roots_in_L(A);
        for (auto [primes, h] : {std::pair{std::vector<std::int64_t>{}, 3}, std::pair{std::vector<std::int64_t>{47}, 3},
                                 std::pair{std::vector<std::int64_t>{53}, 2}}) {
            auto scan = s_monomial_scan(A, SRing{primes}, h);
            CHECK(scan.solutions == roots);
            CHECK(scan.subset_of_third_roots);
            CHECK(scan.all_in_SU);
        }
        CHECK_THROWS_AS(s_monomial_scan(A, SRing{{5}}, 2), Error);
        CHECK(s_monomial_scan(A, SRing{}, 0).solutions.empty());

        CyclicAlgebra A7(d7_def());
        REQUIRE(A7.validate().ok());
        auto scan7 = s_monomial_scan(A7, SRing{{31}}, 2);
        CHECK(scan7.solutions == std::vector<TowerElem>{A7.tower()->one()});
    }

    TEST_CASE("rho-fixed scan over o_E(S)") {
        CyclicAlgebra A(example_def());
        for (auto [primes, h] : {std::pair{std::vector<std::int64_t>{}, 3}, std::pair{std::vector<std::int64_t>{5}, 3},
                                 std::pair{std::vector<std::int64_t>{3}, 3}, std::pair{std::vector<std::int64_t>{3, 5}, 2}}) {
            auto scan = rho_fixed_su_scan(A, SRing{primes}, h);
            CHECK(scan.su_equals_third_roots);
            CHECK(scan.u_members_monomial_units);
            // Units of o_E times 1, z, z^2.
            CHECK(scan.u_members.size() == 18);
            for (const auto& g : scan.su_members) CHECK(is_in_SU(A, g));
            for (const auto& g : scan.u_members) CHECK_FALSE(denominator_admissible(A, g).violation);
        }
        CHECK_THROWS_AS(rho_fixed_su_scan(A, SRing{{7}}, 2), Error);
        AlgebraDef nb = example_def();
        nb.b = {Rat(0), Rat(1), Rat(0)};
        CHECK_THROWS_AS(rho_fixed_su_scan(CyclicAlgebra(nb), SRing{}, 2), Error);
    }
}
