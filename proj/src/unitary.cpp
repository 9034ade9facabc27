// SPDX-License-Identifier: Apache-2.0

#include "cdalg/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace cdalg {

namespace {

// Weights of the hermitian form: 1, rho(b), rho(b) rho^2(b).
CubicElem weight(const CyclicAlgebra& alg, int j) {
    if (j == 1) return alg.weight1();
    if (j == 2) return alg.weight2();
    return alg.tower()->cubic(1);
}

CubicElem weighted_norm(const CyclicAlgebra& alg, int j, const TowerElem& l) {
    return weight(alg, j) * norm_L_M(l);
}

TowerElem unit2_residual(const CyclicAlgebra& alg, const AlgElem& x) {
    const TowerPtr& t = alg.tower();
    return t->elem(alg.a()) * tau(x.l0) * rho(x.l2) + alg.weight1() * (tau(x.l1) * rho(x.l0)) +
           alg.weight2() * (tau(x.l2) * rho(x.l1));
}

}  // namespace

UnitaryWitness check_unitary(const CyclicAlgebra& alg, const AlgElem& x) {
    const TowerPtr& t = alg.tower();
    const CubicElem& w1 = alg.weight1();
    const CubicElem& w2 = alg.weight2();
    TowerElem r1 = x.l0 * tau(x.l0) + w1 * (x.l1 * tau(x.l1)) + w2 * (x.l2 * tau(x.l2));
    TowerElem r2 = unit2_residual(alg, x);
    UnitaryWitness w{x, r1 == t->one(), r2.is_zero(), false, r1, r2, alg.reduced_norm(x)};
    w.det_ok = w.residual3 == t->quad(1);
    bool product_is_one = alg.mul(x, alg.alpha(x)) == alg.one();
    if (product_is_one != w.in_U())
        throw Error("unitary conditions disagree with g alpha(g) = 1 at " + x.str());
    return w;
}

bool is_in_U(const CyclicAlgebra& alg, const AlgElem& x) { return check_unitary(alg, x).in_U(); }

bool is_in_SU(const CyclicAlgebra& alg, const AlgElem& x) { return check_unitary(alg, x).in_SU(); }

std::string to_string(MonomialKind kind) {
    switch (kind) {
        case MonomialKind::monomial_j0: return "monomial_j0";
        case MonomialKind::monomial_j1: return "monomial_j1";
        case MonomialKind::monomial_j2: return "monomial_j2";
        default: return "not_monomial";
    }
}

MonomialClass classify_monomial(const CyclicAlgebra& alg, const AlgElem& x) {
    MonomialClass out;
    int nonzero = 0, j = -1;
    for (int k = 0; k < 3; ++k)
        if (!x[k].is_zero()) {
            ++nonzero;
            j = k;
        }
    if (nonzero != 1) return out;
    out.kind = static_cast<MonomialKind>(j + 1);
    out.l = x[j];
    if (is_in_U(alg, x)) out.norm_equation_ok = weighted_norm(alg, j, x[j]) == alg.tower()->cubic(1);
    return out;
}

bool su_monomial_norm_check(const TowerElem& l) {
    if (l.is_zero()) throw Error("su_monomial_norm_check: l must be nonzero");
    const TowerPtr& t = l.tower();
    return norm_L_M(l) == t->cubic(1) && norm_L_E(l) == t->quad(1);
}

TowerElem hilbert90_element(const CubicElem& y0) {
    const TowerPtr& t = y0.tower();
    TowerElem num = t->elem(y0) + t->sqrt_minus_d();
    TowerElem den = t->elem(y0) - t->sqrt_minus_d();
    if (den.is_zero()) throw Error("hilbert90_element: degenerate denominator");
    return num * den.inverse();
}

bool hilbert90_norm_one_over_E(const CubicElem& y0) {
    return trace_M_F(y0 * rho(y0)) == Rat(y0.tower()->d());
}

std::vector<CubicElem> hilbert90_search(const TowerPtr& t, int height) {
    std::vector<CubicElem> out;
    if (height <= 0) return out;
    auto grid = height_grid(height);
    for (const auto& c0 : grid)
        for (const auto& c1 : grid)
            for (const auto& c2 : grid) {
                CubicElem y0 = t->cubic(c0, c1, c2);
                if (hilbert90_norm_one_over_E(y0)) out.push_back(y0);
            }
    return out;
}

std::string to_string(Eigen e) {
    switch (e) {
        case Eigen::plus: return "plus";
        case Eigen::minus: return "minus";
        default: return "none";
    }
}

Eigen eigenvector_check(const CyclicAlgebra& alg, const AlgElem& x) {
    AlgElem ax = alg.alpha(x);
    if (ax == x) return Eigen::plus;
    if (ax == -x) return Eigen::minus;
    return Eigen::none;
}

std::vector<TowerElem> grid_candidates(const TowerPtr& t, const std::vector<Rat>& grid, const CubicElem& weight,
                                       const Rat& bound, TauPart part) {
    // Gram matrix of c -> Tr_M/F(weight c^2) in the basis 1, theta, theta^2.
    std::array<CubicElem, 3> basis{t->cubic(1), t->theta(), t->theta() * t->theta()};
    std::array<std::array<Rat, 3>, 3> gram;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) gram[i][k] = trace_M_F(weight * basis[i] * basis[k]);

    struct Part {
        CubicElem c;
        Rat value;
    };
    Rat d(t->d());
    std::vector<Part> re, im;
    for (const auto& c0 : grid)
        for (const auto& c1 : grid)
            for (const auto& c2 : grid) {
                std::array<const Rat*, 3> c{&c0, &c1, &c2};
                Rat v = 0;
                for (int i = 0; i < 3; ++i)
                    for (int k = 0; k < 3; ++k) v += gram[i][k] * *c[i] * *c[k];
                if (v <= bound) re.push_back({t->cubic(c0, c1, c2), v});
                if (d * v <= bound) im.push_back({t->cubic(c0, c1, c2), d * v});
            }
    std::vector<TowerElem> out;
    for (const auto& r : re) {
        if (part == TauPart::negated && !r.c.is_zero()) continue;
        for (const auto& i : im) {
            if (part == TauPart::fixed && !i.c.is_zero()) continue;
            if (r.value + i.value <= bound) out.push_back(t->elem(r.c, i.c));
        }
    }
    return out;
}

namespace {

struct RatTripleHash {
    std::size_t operator()(const std::array<Rat, 3>& v) const {
        std::size_t h = 0;
        for (const auto& q : v) {
            h = h * 1000003u ^ mpz_get_ui(q.get_num_mpz_t()) ^ (static_cast<std::size_t>(mpz_sgn(q.get_num_mpz_t())) << 7);
            h = h * 1000003u ^ mpz_get_ui(q.get_den_mpz_t());
        }
        return h;
    }
};

}  // namespace

std::vector<AlgElem> unitary_points(const CyclicAlgebra& alg, const std::array<std::vector<TowerElem>, 3>& candidates) {
    if (!is_totally_positive(alg.b()))
        throw Error("b is not totally positive: the hermitian form is indefinite and bounded scans are not exhaustive");
    // v = w_j N_L/M(l) as coordinates in M, with its trace; sorted by trace.
    struct Val {
        std::array<Rat, 3> v;
        Rat trace;
        std::size_t index;
    };
    std::array<std::vector<Val>, 3> vals;
    for (int j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < candidates[j].size(); ++k) {
            CubicElem v = weighted_norm(alg, j, candidates[j][k]);
            vals[j].push_back({v.coeffs(), trace_M_F(v), k});
        }
        std::sort(vals[j].begin(), vals[j].end(), [](const Val& x, const Val& y) { return x.trace < y.trace; });
    }
    std::unordered_map<std::array<Rat, 3>, std::vector<std::size_t>, RatTripleHash> last;
    for (const auto& v : vals[2]) last[v.v].push_back(v.index);

    std::vector<AlgElem> out;
    std::array<Rat, 3> need, rest;
    Rat budget;
    for (const auto& v0 : vals[0]) {
        if (v0.trace > 3) break;
        need = {1 - v0.v[0], -v0.v[1], -v0.v[2]};
        budget = 3 - v0.trace;
        for (const auto& v1 : vals[1]) {
            if (v1.trace > budget) break;
            for (int k = 0; k < 3; ++k) mpq_sub(rest[k].get_mpq_t(), need[k].get_mpq_t(), v1.v[k].get_mpq_t());
            auto it = last.find(rest);
            if (it == last.end()) continue;
            for (std::size_t i2 : it->second) {
                AlgElem g{candidates[0][v0.index], candidates[1][v1.index], candidates[2][i2]};
                if (unit2_residual(alg, g).is_zero() && check_unitary(alg, g).in_U()) out.push_back(g);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

UnitaryScan scan_unitary(const CyclicAlgebra& alg, int height, TauPart part) {
    UnitaryScan scan;
    scan.height = height;
    scan.part = part;
    if (height <= 0) return scan;
    auto grid = height_grid(height);
    std::array<std::vector<TowerElem>, 3> cand;
    for (int j = 0; j < 3; ++j) {
        cand[j] = grid_candidates(alg.tower(), grid, weight(alg, j), Rat(3), part);
        scan.candidates[j] = cand[j].size();
    }
    scan.members = unitary_points(alg, cand);
    return scan;
}

std::vector<AlgElem> eigenvector_scan_SU(const CyclicAlgebra& alg, int height) {
    std::vector<AlgElem> out;
    for (const auto& g : scan_unitary(alg, height).members)
        if (is_in_SU(alg, g) && !(g == alg.one()) && eigenvector_check(alg, g) != Eigen::none) out.push_back(g);
    return out;
}

std::vector<AlgElem> eigenvector_scan_U(const CyclicAlgebra& alg, int height) {
    std::vector<AlgElem> out;
    for (const auto& g : scan_unitary(alg, height).members)
        if (eigenvector_check(alg, g) != Eigen::none) out.push_back(g);
    return out;
}

std::vector<AlgElem> even_order_scan_SU(const CyclicAlgebra& alg, int height, int bound) {
    std::vector<AlgElem> out;
    for (const auto& g : scan_unitary(alg, height).members) {
        if (!is_in_SU(alg, g)) continue;
        auto n = element_order(alg, g, bound);
        if (n && *n % 2 == 0) out.push_back(g);
    }
    return out;
}

std::vector<QuadElem> fourth_roots_of_unity(std::int64_t d) {
    std::vector<QuadElem> out{QuadElem(d, -1), QuadElem(d, 1)};
    // i = sqrt(-1) lies in E only for d = 1.
    if (d == 1) {
        out.push_back(QuadElem(d, 0, -1));
        out.push_back(QuadElem(d, 0, 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

MPointReport m_points_classify(const CyclicAlgebra& alg, int sign, int height) {
    if (sign != 1 && sign != -1) throw Error("m_points_classify: sign must be +1 or -1");
    MPointReport rep;
    rep.sign = sign;
    rep.height = height;
    rep.members = scan_unitary(alg, height, sign == 1 ? TauPart::fixed : TauPart::negated).members;
    for (const auto& g : rep.members) {
        if (is_in_SU(alg, g)) rep.su_members.push_back(g);
        auto mc = classify_monomial(alg, g);
        if (mc.kind == MonomialKind::not_monomial || !mc.norm_equation_ok.value_or(false)) {
            rep.classification_ok = false;
            rep.violations.push_back(g);
        }
    }
    return rep;
}

std::optional<int> element_order(const CyclicAlgebra& alg, const AlgElem& x, int bound) {
    if (x.is_zero()) throw Error("element_order: x must be nonzero");
    AlgElem y = x, one = alg.one();
    for (int n = 1; n <= bound; ++n) {
        if (y == one) return n;
        y = alg.mul(y, x);
    }
    return std::nullopt;
}

NormSearch norm_in_aF_search(const CyclicAlgebra& alg, int height, double limit) {
    NormSearch out;
    out.height = height;
    if (height <= 0) return out;
    auto grid = height_grid(height);
    double points = std::pow(static_cast<double>(grid.size()), 6.0);
    if (points > limit)
        throw Error("norm search grid of " + std::to_string(points) + " points exceeds the limit " +
                    std::to_string(limit));
    const TowerPtr& t = alg.tower();
    QuadElem a_inv = alg.a().inverse();
    std::array<std::size_t, 6> idx{};
    std::size_t n = grid.size();
    while (true) {
        std::array<Rat, 6> c;
        for (int i = 0; i < 6; ++i) c[i] = grid[idx[i]];
        TowerElem l = t->elem(c);
        if (!l.is_zero()) {
            ++out.examined;
            QuadElem q = norm_L_E(l) * a_inv;
            if (q.is_rational()) out.hits.push_back(l);
        }
        int k = 5;
        while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

}  // namespace cdalg
