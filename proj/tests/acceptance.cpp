// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff
// every criterion passes. All comparisons are exact; the only pinned
// tolerances are the sample counts, height bounds and the runtime cap.

#include "cdalg/arith.hpp"
#include "cdalg/cli.hpp"
#include "cdalg/ffverify.hpp"
#include "cdalg/random.hpp"
#include "cdalg/unitary.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cdalg;

namespace {

constexpr int kSamples = 1000;
constexpr double kAxiomSeconds = 30.0;
constexpr int kUnitaryHeight = 2;
constexpr int kSHeight = 3;
constexpr int kOrderBound = 18;

struct Outcome {
    bool pass = false;
    std::string detail;
};

CyclicAlgebra example() { return CyclicAlgebra(cli::to_def(cli::example_config())); }

std::vector<TowerElem> third_roots_in_L(const CyclicAlgebra& A) {
    std::vector<TowerElem> out;
    for (const auto& q : third_roots_of_unity(A.tower()->d())) out.push_back(A.tower()->elem(q));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AlgElem> third_roots_in_D(const CyclicAlgebra& A) {
    std::vector<AlgElem> out;
    for (const auto& q : third_roots_of_unity(A.tower()->d())) out.push_back(A.scalar(q));
    std::sort(out.begin(), out.end());
    return out;
}

Outcome algebra_axioms() {
    auto start = std::chrono::steady_clock::now();
    auto A = example();
    RandomGen gen(1);
    int bad = 0;
    for (int i = 0; i < kSamples; ++i) {
        auto x = gen.alg(A, 2), y = gen.alg(A, 2);
        auto ex = A.embed(x), ey = A.embed(y);
        bool ok = A.embed(x + y) == ex + ey && A.embed(A.mul(x, y)) == ex * ey &&
                  A.alpha(A.alpha(x)) == x && A.alpha(x + y) == A.alpha(x) + A.alpha(y) &&
                  A.alpha(A.mul(x, y)) == A.mul(A.alpha(y), A.alpha(x)) &&
                  A.reduced_norm(A.mul(x, y)) == A.reduced_norm(x) * A.reduced_norm(y);
        auto q = gen.quad(3, 4);
        ok = ok && A.alpha(A.scalar(q)) == A.scalar(q.conj());
        if (!ok) ++bad;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << kSamples << " samples, " << bad << " failures, " << secs << " s (cap " << kAxiomSeconds << " s)";
    return {bad == 0 && secs < kAxiomSeconds, d.str()};
}

Outcome unitary_equivalence() {
    auto A = example();
    RandomGen gen(2);
    int bad = 0, members = 0, others = 0;
    for (int i = 0; i < kSamples; ++i) {
        AlgElem g = i % 2 == 0 ? random_unitary(A, gen) : gen.alg(A, 2);
        // A member perturbed by a small scalar: close to U but outside it.
        if (i % 4 == 1) g = random_unitary(A, gen) + A.scalar(A.tower()->elem(gen.nonzero_rat(3)));
        try {
            auto w = check_unitary(A, g);
            bool rhs = A.mul(g, A.alpha(g)) == A.one();
            if ((w.cond1_ok && w.cond2_ok) != rhs) ++bad;
            (rhs ? members : others)++;
        } catch (const Error&) {
            ++bad;
        }
    }
    std::ostringstream d;
    d << kSamples << " samples (" << members << " in U, " << others << " outside), " << bad << " disagreements";
    return {bad == 0 && members > 0 && others > 0, d.str()};
}

Outcome lemma_field() {
    std::ostringstream d;
    bool pass = true;
    for (int p : {5, 11}) {
        auto s = verify_all_pairs(build_fq(p, 1));
        bool ok = !s.reports.empty();
        for (const auto& r : s.reports) ok = ok && r.solution_count == 1 && r.verdict;
        d << "p=" << p << ": " << s.reports.size() << " pairs, " << s.total_solutions << " solutions; ";
        pass = pass && ok;
    }
    auto neg = verify_all_pairs(build_fq(7, 1));
    d << "p=7 control: " << neg.pairs_with_nontrivial << " pairs with nontrivial solutions";
    return {pass && neg.pairs_with_nontrivial > 0, d.str()};
}

Outcome lemma_dual() {
    std::ostringstream d;
    bool pass = true;
    for (int p : {3, 5}) {
        auto s = verify_all_pairs(build_dual(p, 1));
        pass = pass && !s.reports.empty() && s.all_verdicts;
        d << "(" << p << ",1): " << s.reports.size() << " pairs, " << s.total_solutions << " solutions, "
          << s.pairs_with_nontrivial << " with a solution outside pi R; ";
    }
    return {pass, d.str()};
}

Outcome su_scans() {
    auto A = example();
    std::vector<AlgElem> pm{-A.one(), A.one()};
    std::sort(pm.begin(), pm.end());
    bool pass = true;
    std::ostringstream d;
    for (int h = 1; h <= kUnitaryHeight; ++h) {
        auto su = eigenvector_scan_SU(A, h);
        auto even = even_order_scan_SU(A, h, kOrderBound);
        auto u = eigenvector_scan_U(A, h);
        std::sort(u.begin(), u.end());
        pass = pass && su.empty() && even.empty() && u == pm;
        d << "h=" << h << ": SU eigenvectors " << su.size() << ", even order " << even.size() << ", U eigenvectors "
          << u.size() << "; ";
    }
    return {pass, d.str()};
}

Outcome s_scans() {
    auto A = example();
    auto def = cli::to_def(cli::example_config());
    auto roots_L = third_roots_in_L(A);
    auto roots_D = third_roots_in_D(A);
    bool pass = true;
    std::ostringstream d;
    for (std::vector<std::int64_t> s : {std::vector<std::int64_t>{}, {47}}) {
        for (auto p : s) pass = pass && classify_prime(p, def).property_A;
        auto r = s_monomial_scan(A, SRing{s}, kSHeight);
        pass = pass && r.solutions == roots_L && r.all_in_SU;
        d << "L, S=" << SRing{s}.str() << ": " << r.solutions.size() << " solutions; ";
    }
    for (std::vector<std::int64_t> s : {std::vector<std::int64_t>{}, {3}, {5}}) {
        for (auto p : s) pass = pass && classify_prime(p, def).property_B;
        auto r = rho_fixed_su_scan(A, SRing{s}, kSHeight);
        auto su = r.su_members;
        std::sort(su.begin(), su.end());
        pass = pass && su == roots_D && r.su_equals_third_roots;
        d << "E(z), S=" << SRing{s}.str() << ": " << su.size() << " SU members; ";
    }
    d << "height " << kSHeight;
    return {pass, d.str()};
}

Outcome maximal_and_discriminant() {
    auto def = cli::to_def(cli::example_config());
    bool unit = maximal_order_check(def).maximal;
    auto sq = def;
    sq.a = {Rat(0), Rat(1)};
    bool root3 = maximal_order_check(sq).maximal;

    CyclicAlgebra A(def);
    auto t = A.tower();
    auto th = t->elem(t->theta());
    auto orbit = discriminant_lambda(A, rho_orbit_basis(th * th));
    bool identity = orbit.rho_invariant && orbit.identity_holds;

    auto base = standard_basis(t);
    auto std_rep = discriminant_lambda(A, base);
    RandomGen gen(7);
    int checked = 0, bad = 0;
    while (checked < 20) {
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
        ++checked;
        auto r2 = discriminant_lambda(A, nb);
        QuadElem d2 = det * det;
        if (!(r2.disc_basis == d2 * std_rep.disc_basis && r2.disc_lambda == d2 * d2 * d2 * std_rep.disc_lambda)) ++bad;
    }
    std::ostringstream d;
    d << "maximal(zeta_3)=" << unit << ", maximal(sqrt(-3))=" << root3 << ", identity=" << identity << ", scaling "
      << checked - bad << "/" << checked;
    return {unit && !root3 && identity && bad == 0, d.str()};
}

Outcome definite_and_validate() {
    auto A = example();
    bool tp = is_totally_positive(A.b());
    auto r = cli::cmd_validate(cli::example_config());
    std::string cmd = std::string(CDALG_TOOL) + " validate --config " + CDALG_CONFIG_DIR + "/example.json > /dev/null";
    int status = std::system(cmd.c_str());
    std::ostringstream d;
    d << "b totally positive=" << tp << ", cmd_validate exit " << r.exit_code << ", tool exit status " << status;
    return {tp && r.exit_code == 0 && status == 0, d.str()};
}

Outcome torsion() {
    auto A = example();
    auto z = A.z();
    auto oz = element_order(A, z, kOrderBound);
    auto nz = A.reduced_norm(z);
    QuadElem zeta3(3, Rat(-1, 2), Rat(1, 2));
    auto x = A.scalar(zeta3);
    auto ox = element_order(A, x, kOrderBound);
    bool pass = oz == 9 && nz == zeta3 && !(nz == A.tower()->quad(1)) && !is_in_SU(A, z) && is_in_SU(A, x) && ox == 3;
    std::ostringstream d;
    d << "order(z)=" << (oz ? std::to_string(*oz) : "none") << ", N_rd(z)=" << nz.str()
      << ", z in SU=" << is_in_SU(A, z) << ", order(zeta_3)=" << (ox ? std::to_string(*ox) : "none")
      << ", zeta_3 in SU=" << is_in_SU(A, x);
    return {pass, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"algebra axioms on random elements", algebra_axioms},
        {"unitary conditions equivalent to g alpha(g) = 1", unitary_equivalence},
        {"finite-field lemma over F_{p^2}", lemma_field},
        {"dual-number lemma", lemma_dual},
        {"SU eigenvector and even-order scans", su_scans},
        {"S-integral monomial and rho-fixed scans", s_scans},
        {"maximal order and discriminant", maximal_and_discriminant},
        {"definiteness and end-to-end validation", definite_and_validate},
        {"torsion of z and zeta_3", torsion},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
                  << o.detail << "]" << std::endl;
    }
    std::cout << (failed == 0 ? "acceptance: all criteria pass" : "acceptance: " + std::to_string(failed) + " failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
