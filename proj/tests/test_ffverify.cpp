// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "cdalg/ffverify.hpp"
#include "cdalg/rational.hpp"

#include <set>

using namespace cdalg;

namespace {

void check_involution(const TableRing& r) {
    int fixed = 0;
    for (int x = 0; x < r.size(); ++x) {
        REQUIRE(r.conj(r.conj(x)) == x);
        if (r.conj(x) == x) ++fixed;
        for (int y = 0; y < r.size(); ++y) {
            REQUIRE(r.conj(r.add(x, y)) == r.add(r.conj(x), r.conj(y)));
            REQUIRE(r.conj(r.mul(x, y)) == r.mul(r.conj(x), r.conj(y)));
        }
    }
    CHECK(fixed == r.q());
}

}  // namespace

TEST_CASE("ring tables satisfy the ring axioms") {
    for (const auto& r : {build_fq(5, 1), build_fq(3, 2), build_dual(5, 1), build_dual(3, 2)}) {
        const int N = r.size();
        for (int x = 0; x < N; ++x) {
            CHECK(r.add(x, r.neg(x)) == 0);
            CHECK(r.mul(x, 1) == x);
            for (int y = 0; y < N; ++y) {
                CHECK(r.mul(x, y) == r.mul(y, x));
                for (int z = 0; z < N; z += 3)
                    CHECK(r.mul(x, r.add(y, z)) == r.add(r.mul(x, y), r.mul(x, z)));
            }
        }
    }
}

TEST_CASE("field units and dual-ring units") {
    auto f = build_fq(7, 1);
    for (int x = 1; x < f.size(); ++x) CHECK(f.mul(x, f.inv(x)) == 1);
    CHECK(f.inv(0) == -1);
    auto d = build_dual(7, 1);
    for (int x = 0; x < d.size(); ++x) CHECK((d.inv(x) >= 0) == (d.split(x)[0] != 0));
}

TEST_CASE("conjugation is an involutive automorphism fixing exactly F_q") {
    check_involution(build_fq(5, 1));
    check_involution(build_fq(5, 1, 1));
    check_involution(build_fq(3, 2));
    check_involution(build_dual(5, 1));
    check_involution(build_dual(3, 2));
}

TEST_CASE("builders reject bad parameters") {
    CHECK_THROWS_AS(build_fq(2, 1), Error);
    CHECK_THROWS_AS(build_dual(9, 1), Error);
    CHECK_THROWS_AS(build_fq(5, 0), Error);
    CHECK_THROWS_AS(build_fq(37, 1), Error);
    CHECK_THROWS_AS(build_dual(5, 2, 1e6), Error);
    CHECK_THROWS_AS(build_fq(5, 1, 1000), Error);
}

TEST_CASE("admissible pairs") {
    auto f = build_fq(5, 1);
    auto pairs = admissible_pairs(f);
    CHECK(pairs.size() == 20);
    for (const auto& pr : pairs) {
        CHECK_FALSE(f.in_base(pr.a));
        CHECK(f.in_base(pr.b));
        CHECK(f.mul(pr.a, f.conj(pr.a)) == f.mul(pr.b, f.mul(pr.b, pr.b)));
    }
    auto d = build_dual(3, 1);
    for (const auto& pr : admissible_pairs(d)) {
        CHECK(d.split(pr.a)[0] != 0);
        CHECK(d.split(pr.a)[1] != 0);
    }
}

// Totals from tests/oracles/ff_lemmas.py (independent brute force with a
// different model of F_{p^2}).
TEST_CASE("field case: q = 5 mod 6") {
    auto s = verify_all_pairs(build_fq(5, 1));
    CHECK(s.hypothesis);
    CHECK(s.reports.size() == 20);
    CHECK(s.total_solutions == 20);
    CHECK(s.pairs_with_nontrivial == 0);
    CHECK(s.all_verdicts);
    for (const auto& r : s.reports) CHECK(r.solution_count == 1);

    auto s11 = verify_all_pairs(build_fq(11, 1));
    CHECK(s11.hypothesis);
    CHECK_FALSE(s11.reports.empty());
    CHECK(s11.all_verdicts);
}

TEST_CASE("field case: p = 7 fails the hypothesis and has solutions") {
    auto s = verify_all_pairs(build_fq(7, 1));
    CHECK_FALSE(s.hypothesis);
    CHECK(s.reports.size() == 42);
    CHECK(s.total_solutions == 4074);
    CHECK(s.pairs_with_nontrivial == 42);
    CHECK_FALSE(s.all_verdicts);
    auto r = build_fq(7, 1);
    const auto& rep = s.reports.front();
    REQUIRE(rep.first_nontrivial);
    auto [l0, l1, l2] = *rep.first_nontrivial;
    int a = rep.pair.a, b = rep.pair.b, b2 = r.mul(b, b);
    auto N = [&](int x) { return r.mul(x, r.conj(x)); };
    CHECK(r.add(r.add(N(l0), r.mul(b, N(l1))), r.mul(b2, N(l2))) == 0);
    CHECK(r.add(r.add(r.mul(a, r.mul(r.conj(l0), l2)), r.mul(b, r.mul(r.conj(l1), l0))),
                r.mul(b2, r.mul(r.conj(l2), l1))) == 0);
}

TEST_CASE("dual case") {
    auto s3 = verify_all_pairs(build_dual(3, 1));
    CHECK(s3.hypothesis);
    CHECK(s3.reports.size() == 4);
    CHECK(s3.total_solutions == 108);
    CHECK(s3.all_verdicts);

    auto s5 = verify_all_pairs(build_dual(5, 1));
    CHECK(s5.hypothesis);
    CHECK(s5.reports.size() == 16);
    CHECK(s5.total_solutions == 2000);
    CHECK(s5.all_verdicts);

    auto s7 = verify_all_pairs(build_dual(7, 1));
    CHECK_FALSE(s7.hypothesis);
    CHECK(s7.reports.size() == 36);
    CHECK(s7.total_solutions == 33516);
    CHECK(s7.pairs_with_nontrivial == 36);
}

TEST_CASE("dual case: trivial solutions are exactly (pi R)^3") {
    auto d = build_dual(5, 1);
    for (const auto& r : verify_all_pairs(d).reports) CHECK(r.solution_count == 125);
}

TEST_CASE("results do not depend on the quadratic modulus") {
    for (int p : {5, 7}) {
        auto s0 = verify_all_pairs(build_fq(p, 1, 0));
        auto s1 = verify_all_pairs(build_fq(p, 1, 1));
        CHECK(s0.total_solutions == s1.total_solutions);
        CHECK(s0.pairs_with_nontrivial == s1.pairs_with_nontrivial);
        CHECK(s0.all_verdicts == s1.all_verdicts);
    }
}

TEST_CASE("scaling by a norm-one element permutes solutions") {
    auto r = build_fq(7, 1);
    auto pr = admissible_pairs(r).front();
    int lambda = -1;
    for (int x = r.q(); x < r.size() && lambda < 0; ++x)
        if (r.mul(x, r.conj(x)) == 1) lambda = x;
    REQUIRE(lambda >= 0);
    auto N = [&](int x) { return r.mul(x, r.conj(x)); };
    int a = pr.a, b = pr.b, b2 = r.mul(b, b);
    auto solves = [&](int l0, int l1, int l2) {
        return r.add(r.add(N(l0), r.mul(b, N(l1))), r.mul(b2, N(l2))) == 0 &&
               r.add(r.add(r.mul(a, r.mul(r.conj(l0), l2)), r.mul(b, r.mul(r.conj(l1), l0))),
                     r.mul(b2, r.mul(r.conj(l2), l1))) == 0;
    };
    int checked = 0;
    for (int l0 = 0; l0 < r.size(); ++l0)
        for (int l1 = 0; l1 < r.size(); ++l1)
            for (int l2 = 0; l2 < r.size(); ++l2)
                if (solves(l0, l1, l2)) {
                    CHECK(solves(r.mul(lambda, l0), r.mul(lambda, l1), r.mul(lambda, l2)));
                    ++checked;
                }
    CHECK(checked == static_cast<int>(verify_lemma(r, pr).solution_count));
}

TEST_CASE("thread count does not change the report") {
    auto r = build_fq(7, 1);
    auto pr = admissible_pairs(r)[3];
    auto one = verify_lemma(r, pr, 1);
    auto four = verify_lemma(r, pr, 4);
    CHECK(one.solution_count == four.solution_count);
    CHECK(one.first_nontrivial == four.first_nontrivial);
}

TEST_CASE("extension degree n = 2") {
    auto f = build_fq(3, 2);
    CHECK(f.q() == 9);
    CHECK(f.base_modulus().size() == 3);
    auto s = verify_all_pairs(f);
    CHECK_FALSE(s.hypothesis);
    auto d = build_dual(3, 2);
    auto sd = verify_all_pairs(d);
    CHECK(sd.hypothesis);
    CHECK(sd.all_verdicts);
}

TEST_CASE("element strings") {
    CHECK(element_str(build_fq(5, 1), 3 + 5 * 2) == "3+2s");
    CHECK(element_str(build_dual(5, 1), 1 + 5 * 4) == "1+4pi");
    CHECK(element_str(build_fq(3, 2), 1 + 9 * 5) == "[1,0]+[2,1]s");
}
