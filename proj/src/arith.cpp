// SPDX-License-Identifier: Apache-2.0

#include "cdalg/arith.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cdalg {

namespace {

bool omega_is_half(std::int64_t d) { return d % 4 == 3; }

// Gram matrix of c -> Tr_M/F(w c^2) in the basis 1, theta, theta^2.
std::array<std::array<Rat, 3>, 3> trace_gram(const TowerPtr& t, const CubicElem& w) {
    std::array<CubicElem, 3> basis{t->cubic(1), t->theta(), t->theta() * t->theta()};
    std::array<std::array<Rat, 3>, 3> g;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) g[i][k] = trace_M_F(w * basis[i] * basis[k]);
    return g;
}

template <class T>
T quad_form(const std::array<std::array<T, 3>, 3>& g, const std::array<T, 3>& c) {
    T v = 0;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) v += g[i][k] * c[i] * c[k];
    return v;
}

std::string prime_context(const PrimeClass& pc) {
    return "p = " + std::to_string(pc.p) + " (E: " + to_string(pc.behavior_E) + ", M: " + to_string(pc.split_M) + ")";
}

}  // namespace

std::array<Rat, 2> to_oE_basis(const QuadElem& q) {
    if (omega_is_half(q.d())) return {q.x0() - q.x1(), 2 * q.x1()};
    return {q.x0(), q.x1()};
}

QuadElem from_oE_basis(std::int64_t d, const Rat& u, const Rat& v) {
    if (omega_is_half(d)) return {d, u + v / 2, v / 2};
    return {d, u, v};
}

bool is_oE_integral(const QuadElem& q) {
    auto c = to_oE_basis(q);
    return is_integer(c[0]) && is_integer(c[1]);
}

std::string to_string(SplitE s) {
    switch (s) {
        case SplitE::split: return "split";
        case SplitE::ramified: return "ramified";
        default: return "inert";
    }
}

std::string to_string(SplitM s) {
    switch (s) {
        case SplitM::split_completely: return "split_completely";
        case SplitM::ramified: return "ramified";
        case SplitM::partial: return "partial";
        default: return "inert";
    }
}

std::int64_t disc_E(std::int64_t d) { return omega_is_half(d) ? -d : -4 * d; }

PrimeClass classify_prime(std::int64_t p, const TowerParams& tower) {
    if (!is_prime(p)) throw Error("classify_prime: " + std::to_string(p) + " is not prime");
    for (const auto& c : tower.f)
        if (!is_integer(c)) throw Error("classify_prime: f must have integer coefficients");
    PrimeClass pc;
    pc.p = p;

    Int D(static_cast<long>(disc_E(tower.d)));
    Int P(static_cast<long>(p));
    if (D % P == 0) {
        pc.behavior_E = SplitE::ramified;
    } else if (p == 2) {
        Int r = D % 8;
        if (r < 0) r += 8;
        pc.behavior_E = r == 1 ? SplitE::split : SplitE::inert;
    } else {
        Int r = D % P;
        if (r < 0) r += P;
        pc.behavior_E = mpz_legendre(r.get_mpz_t(), P.get_mpz_t()) == 1 ? SplitE::split : SplitE::inert;
    }

    std::array<Int, 3> f;
    for (int i = 0; i < 3; ++i) f[i] = tower.f[i].get_num();
    for (Int x = 0; x < P; ++x) {
        Int v = ((x + f[2]) * x + f[1]) * x + f[0];
        if (v % P == 0) ++pc.roots_mod_p;
    }
    Rat disc = cubic_discriminant(tower.f);
    if (disc.get_num() % P == 0)
        pc.split_M = SplitM::ramified;
    else if (pc.roots_mod_p == 3)
        pc.split_M = SplitM::split_completely;
    else if (pc.roots_mod_p == 0)
        pc.split_M = SplitM::inert;
    else
        pc.split_M = SplitM::partial;

    pc.sixth_roots_in_residue_field = p != 2 && p != 3 && p % 6 == 1;
    bool odd = p != 2;
    pc.property_A = odd && pc.behavior_E == SplitE::inert && pc.split_M == SplitM::split_completely;
    pc.property_B = odd && pc.behavior_E != SplitE::split && !pc.sixth_roots_in_residue_field;
    return pc;
}

bool is_p_unit(const CubicElem& b, std::int64_t p) {
    if (b.is_zero()) return false;
    for (const auto& c : b.coeffs())
        if (c != 0 && valuation(c, p) < 0) return false;
    return valuation(norm_M_F(b), p) == 0;
}

bool SRing::contains(const Rat& q) const {
    for (auto f : prime_factors(q.get_den()))
        if (std::find(primes.begin(), primes.end(), f) == primes.end()) return false;
    return true;
}

std::string SRing::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < primes.size(); ++i) out += (i ? ", " : "") + std::to_string(primes[i]);
    return out + "}";
}

bool s_integral(const QuadElem& x, const SRing& s) {
    auto c = to_oE_basis(x);
    return s.contains(c[0]) && s.contains(c[1]);
}

bool s_integral(const TowerElem& x, const SRing& s) {
    for (int k = 0; k < 3; ++k)
        if (!s_integral(QuadElem(x.tower()->d(), x.re()[k], x.im()[k]), s)) return false;
    return true;
}

OrderBasis standard_basis(const TowerPtr& t) {
    auto th = t->theta();
    return {{t->one(), t->elem(th), t->elem(th * th)}};
}

OrderBasis rho_orbit_basis(const TowerElem& x) { return {{x, rho(x), rho2(x)}}; }

bool is_rho_invariant(const OrderBasis& basis) {
    for (const auto& e : basis.e) {
        auto r = rho(e);
        if (std::find(basis.e.begin(), basis.e.end(), r) == basis.e.end()) return false;
    }
    return true;
}

QuadElem determinant(std::vector<std::vector<QuadElem>> m) {
    std::size_t n = m.size();
    if (n == 0) throw Error("determinant of an empty matrix");
    std::int64_t d = m[0][0].d();
    QuadElem det(d, 1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return QuadElem(d, 0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        QuadElem inv = m[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            QuadElem factor = m[r][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[r][j] = m[r][j] - factor * m[col][j];
        }
    }
    return det;
}

DiscriminantReport discriminant_lambda(const CyclicAlgebra& alg, const OrderBasis& basis) {
    DiscriminantReport rep;
    std::vector<std::vector<QuadElem>> tb(3, std::vector<QuadElem>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) tb[i][j] = trace_L_E(basis.e[i] * basis.e[j]);
    rep.disc_basis = determinant(tb);
    if (rep.disc_basis.is_zero()) throw Error("discriminant_lambda: basis is linearly dependent over E");

    // Generators ordered by k, then j: index 3k + j holds e_j z^k.
    std::vector<AlgElem> gens;
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) gens.push_back(alg.monomial(basis.e[j], k));
    std::vector<std::vector<QuadElem>> gram(9, std::vector<QuadElem>(9));
    rep.block_shape_ok = true;
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) {
            gram[r][c] = alg.reduced_trace(alg.mul(gens[r], gens[c]));
            if ((r / 3 + c / 3) % 3 != 0 && !gram[r][c].is_zero()) rep.block_shape_ok = false;
        }
    rep.disc_lambda = determinant(gram);
    rep.rho_invariant = is_rho_invariant(basis);
    QuadElem base = -(alg.a() * alg.a() * rep.disc_basis);
    rep.identity_holds = rep.disc_lambda == base * base * base;
    return rep;
}

MaximalOrderReport maximal_order_check(const AlgebraDef& def) {
    MaximalOrderReport rep;
    QuadElem a(def.tower.d, def.a[0], def.a[1]);
    rep.norm_a = a.norm();
    rep.a_integral = is_oE_integral(a);
    if (!rep.a_integral) {
        rep.note = "a is not integral in o_E, so o_L + o_L z + o_L z^2 is not an order";
        return rep;
    }
    rep.maximal = abs(rep.norm_a) == 1;
    rep.note = rep.maximal ? "a is a unit of o_E" : "N(a) = " + to_string(rep.norm_a) + " is not a unit";
    return rep;
}

std::vector<QuadElem> third_roots_of_unity(std::int64_t d) {
    std::vector<QuadElem> out{QuadElem(d, 1)};
    if (d == 3) {
        out.push_back(QuadElem(d, Rat(-1, 2), Rat(1, 2)));
        out.push_back(QuadElem(d, Rat(-1, 2), Rat(-1, 2)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QuadElem> units_oE(std::int64_t d) {
    std::vector<QuadElem> out;
    if (d == 3) {
        for (auto& z : third_roots_of_unity(3)) {
            out.push_back(z);
            out.push_back(-z);
        }
    } else {
        out = fourth_roots_of_unity(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DenominatorReport denominator_admissible(const CyclicAlgebra& alg, const AlgElem& x) {
    if (!x.in_E_coords()) throw Error("denominator_admissible: coordinates must lie in E");
    if (!alg.b().is_rational()) throw Error("denominator_admissible: requires b in F");
    const Rat& b = alg.b()[0];
    DenominatorReport rep;
    std::set<std::int64_t> primes;
    for (int j = 0; j < 3; ++j)
        for (const auto& c : to_oE_basis(x[j].as_quad()))
            for (auto p : prime_factors(c.get_den())) primes.insert(p);
    rep.denominator_primes.assign(primes.begin(), primes.end());
    for (auto p : rep.denominator_primes)
        if (classify_prime(p, alg.def().tower).property_B && valuation(b, p) == 0) rep.restricted.push_back(p);
    rep.in_U = is_in_U(alg, x);
    rep.violation = rep.in_U && !rep.restricted.empty();
    return rep;
}

SMonomialScan s_monomial_scan(const CyclicAlgebra& alg, const SRing& s, int height) {
    const TowerPtr& t = alg.tower();
    for (auto p : s.primes) {
        PrimeClass pc = classify_prime(p, alg.def().tower);
        if (!pc.property_A) throw Error("s_monomial_scan: " + prime_context(pc) + " does not have Property A");
        if (!is_p_unit(alg.b(), p)) throw Error("s_monomial_scan: b is not a unit at p = " + std::to_string(p));
    }
    SMonomialScan out;
    out.s = s;
    out.height = height;
    if (height <= 0) return out;

    // omega = c + e sqrt(-d); l = (x + c y) + e y sqrt(-d) with x, y in M.
    std::int64_t d = t->d();
    Rat c = omega_is_half(d) ? Rat(1, 2) : Rat(0);
    Rat e = omega_is_half(d) ? Rat(1, 2) : Rat(1);
    auto gram = trace_gram(t, t->cubic(1));
    std::array<std::array<double, 3>, 3> gram_d;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) gram_d[i][k] = gram[i][k].get_d();
    Rat im_scale = Rat(d) * e * e;
    const Rat target = 3;  // Tr_M/F(N_L/M(l)) for N_L/M(l) = 1

    auto grid = height_grid(height, s.primes);
    std::vector<double> grid_d;
    for (const auto& g : grid) grid_d.push_back(g.get_d());
    std::size_t n = grid.size();
    CubicElem one = t->cubic(1);
    QuadElem one_E = t->quad(1);
    for (std::size_t a0 = 0; a0 < n; ++a0)
        for (std::size_t a1 = 0; a1 < n; ++a1)
            for (std::size_t a2 = 0; a2 < n; ++a2) {
                std::array<Rat, 3> y{grid[a0], grid[a1], grid[a2]};
                Rat im_val = im_scale * quad_form(gram, y);
                if (im_val > target) continue;
                double rest = Rat(target - im_val).get_d();
                double tol = 1e-9 * (1 + std::abs(rest));
                std::array<double, 3> cy{Rat(c * y[0]).get_d(), Rat(c * y[1]).get_d(), Rat(c * y[2]).get_d()};
                for (std::size_t b0 = 0; b0 < n; ++b0)
                    for (std::size_t b1 = 0; b1 < n; ++b1)
                        for (std::size_t b2 = 0; b2 < n; ++b2) {
                            ++out.candidates;
                            std::array<double, 3> re{grid_d[b0] + cy[0], grid_d[b1] + cy[1], grid_d[b2] + cy[2]};
                            if (std::abs(quad_form(gram_d, re) - rest) > tol) continue;
                            CubicElem re_m = t->cubic(grid[b0] + c * y[0], grid[b1] + c * y[1], grid[b2] + c * y[2]);
                            CubicElem im_m = t->cubic(e * y[0], e * y[1], e * y[2]);
                            TowerElem l = t->elem(re_m, im_m);
                            if (norm_L_M(l) == one && norm_L_E(l) == one_E) out.solutions.push_back(l);
                        }
            }
    std::sort(out.solutions.begin(), out.solutions.end());
    out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()), out.solutions.end());

    auto roots = third_roots_of_unity(d);
    out.subset_of_third_roots = true;
    out.all_in_SU = true;
    for (const auto& l : out.solutions) {
        bool is_root = l.in_E() && std::find(roots.begin(), roots.end(), l.as_quad()) != roots.end();
        out.subset_of_third_roots = out.subset_of_third_roots && is_root;
        out.all_in_SU = out.all_in_SU && is_in_SU(alg, alg.scalar(l));
    }
    return out;
}

RhoFixedScan rho_fixed_su_scan(const CyclicAlgebra& alg, const SRing& s, int height) {
    const TowerPtr& t = alg.tower();
    if (!alg.b().is_rational()) throw Error("rho_fixed_su_scan: requires b in F");
    const Rat& b = alg.b()[0];
    if (b <= 0) throw Error("rho_fixed_su_scan: requires b > 0");
    for (auto p : s.primes) {
        PrimeClass pc = classify_prime(p, alg.def().tower);
        if (!pc.property_B) throw Error("rho_fixed_su_scan: " + prime_context(pc) + " does not have Property B");
        if (valuation(b, p) != 0) throw Error("rho_fixed_su_scan: v_p(b) != 0 at p = " + std::to_string(p));
    }
    RhoFixedScan out;
    out.s = s;
    out.height = height;
    if (height <= 0) return out;

    std::int64_t d = t->d();
    auto grid = height_grid(height, s.primes);
    std::array<Rat, 3> w{Rat(1), b, b * b};
    std::array<std::vector<TowerElem>, 3> cand;
    for (const auto& u : grid)
        for (const auto& v : grid) {
            QuadElem l = from_oE_basis(d, u, v);
            Rat nl = l.norm();
            // Tr_M/F(w_j N(l)) = 3 w_j N(l) <= 3.
            for (int j = 0; j < 3; ++j)
                if (w[j] * nl <= 1) cand[j].push_back(t->elem(l));
        }
    for (int j = 0; j < 3; ++j) out.candidates[j] = cand[j].size();
    out.u_members = unitary_points(alg, cand);

    auto units = units_oE(d);
    out.u_members_monomial_units = true;
    for (const auto& g : out.u_members) {
        if (is_in_SU(alg, g)) out.su_members.push_back(g);
        auto mc = classify_monomial(alg, g);
        bool ok = mc.kind != MonomialKind::not_monomial && mc.l->in_E() &&
                  std::find(units.begin(), units.end(), mc.l->as_quad()) != units.end();
        out.u_members_monomial_units = out.u_members_monomial_units && ok;
    }
    std::vector<AlgElem> expect;
    for (const auto& z : third_roots_of_unity(d)) expect.push_back(alg.scalar(z));
    std::sort(expect.begin(), expect.end());
    out.su_equals_third_roots = out.su_members == expect;
    return out;
}

}  // namespace cdalg
