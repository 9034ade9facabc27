// SPDX-License-Identifier: Apache-2.0

#include "cdalg/numtower.hpp"

#include <set>
#include <sstream>

namespace cdalg {

namespace {

void same_tower(const TowerPtr& a, const TowerPtr& b) {
    if (a != b) throw Error("elements belong to different towers");
}

/// Inverse of a modulo m (m irreducible, a != 0 mod m) by the extended
/// Euclidean algorithm.
QPoly inverse_mod(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = a % m, s0, s1 = QPoly::constant(1);
    while (r1.degree() > 0) {
        auto [q, r] = QPoly::divmod(r0, r1);
        QPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.is_zero()) throw Error("polynomial not invertible modulo f");
    return (Rat(1) / r1.lead()) * s1 % m;
}

std::array<Rat, 3> to_array(const QPoly& p) {
    return {p.coeff(0), p.coeff(1), p.coeff(2)};
}

bool has_rational_root(const QPoly& f) {
    // Clear denominators, then apply the rational root theorem.
    Int l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> F;
    for (const auto& c : f.coeffs()) F.push_back(Int(c * Rat(l)));
    if (F.front() == 0) return true;
    auto divisors = [](const Int& n) {
        std::vector<Int> ds{1};
        Int m = abs(n);
        for (auto p : prime_factors(m)) {
            std::size_t sz = ds.size();
            Int pk = 1;
            while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
                m /= p;
                pk *= p;
                for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
            }
        }
        return ds;
    };
    for (const auto& p : divisors(F.front()))
        for (const auto& q : divisors(F.back()))
            for (int s : {1, -1}) {
                Rat r(p * s, q);
                r.canonicalize();
                if (f.eval(r) == 0) return true;
            }
    return false;
}

}  // namespace

QPoly TowerParams::f_poly() const { return QPoly({f[0], f[1], f[2], Rat(1)}); }

QPoly TowerParams::g_poly() const { return QPoly({g[0], g[1], g[2]}); }

void ValidationReport::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string ValidationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.ok) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
    return {};
}

Rat cubic_discriminant(const std::array<Rat, 3>& f) {
    // X^3 + b X^2 + c X + d with a = 1.
    const Rat &d = f[0], &c = f[1], &b = f[2];
    return b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
}

ValidationReport tower_validate(const TowerParams& p) {
    ValidationReport rep;
    rep.add("d_positive_squarefree", p.d > 0 && is_squarefree(p.d), "d = " + std::to_string(p.d));

    QPoly f = p.f_poly();
    bool irreducible = !has_rational_root(f);
    rep.add("f_irreducible", irreducible, f.str());

    Rat disc = cubic_discriminant(p.f), root;
    rep.add("disc_square", disc != 0 && rational_sqrt(disc, root), "disc(f) = " + disc.get_str());

    QPoly g = p.g_poly();
    bool is_root = f.compose(g) % f == QPoly();
    rep.add("g_root_of_f", is_root, "g = " + g.str());

    QPoly x = QPoly::x();
    bool not_identity = !(g % f == x);
    QPoly g3 = g.compose(g.compose(g) % f) % f;
    bool order3 = not_identity && g3 == x;
    rep.add("g_order_3", order3, not_identity ? "" : "g is the identity");
    return rep;
}

std::array<Rat, 3> derive_action(const std::array<Rat, 3>& fc, int branch) {
    Rat disc = cubic_discriminant(fc), root;
    if (disc == 0 || !rational_sqrt(disc, root))
        throw Error("disc(f) = " + disc.get_str() + " is not a nonzero rational square");
    if (branch < 0) root = -root;
    QPoly f({fc[0], fc[1], fc[2], Rat(1)});
    QPoly fprime_inv = inverse_mod(f.derivative(), f);
    QPoly g = Rat(1, 2) * (QPoly::constant(-fc[2]) - QPoly::x() + root * fprime_inv);
    return to_array(g % f);
}

// QuadElem

QuadElem QuadElem::inverse() const {
    Rat n = norm();
    if (n == 0) throw Error("division by zero in E");
    return {d_, x0_ / n, -x1_ / n};
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) { return {a.d_, a.x0_ + b.x0_, a.x1_ + b.x1_}; }

QuadElem operator-(const QuadElem& a, const QuadElem& b) { return {a.d_, a.x0_ - b.x0_, a.x1_ - b.x1_}; }

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    return {a.d_, a.x0_ * b.x0_ - Rat(a.d_) * a.x1_ * b.x1_, a.x0_ * b.x1_ + a.x1_ * b.x0_};
}

std::string QuadElem::str() const {
    return "(" + x0_.get_str() + ") + (" + x1_.get_str() + ")*sqrt(-" + std::to_string(d_) + ")";
}

// CubicElem

CubicElem operator+(const CubicElem& a, const CubicElem& b) {
    same_tower(a.t_, b.t_);
    return {a.t_, {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]}};
}

CubicElem operator-(const CubicElem& a, const CubicElem& b) {
    same_tower(a.t_, b.t_);
    return {a.t_, {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]}};
}

CubicElem operator-(const CubicElem& a) { return {a.t_, {-a.c_[0], -a.c_[1], -a.c_[2]}}; }

CubicElem operator*(const CubicElem& a, const CubicElem& b) {
    same_tower(a.t_, b.t_);
    const auto &x = a.c_, &y = b.c_;
    Rat p3 = x[1] * y[2] + x[2] * y[1];
    Rat p4 = x[2] * y[2];
    const auto &t3 = a.t_->theta3(), &t4 = a.t_->theta4();
    std::array<Rat, 3> r{x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[0] * y[2] + x[1] * y[1] + x[2] * y[0]};
    for (int i = 0; i < 3; ++i) r[i] += p3 * t3[i] + p4 * t4[i];
    return {a.t_, std::move(r)};
}

CubicElem operator*(const Rat& s, const CubicElem& a) { return {a.t_, {s * a.c_[0], s * a.c_[1], s * a.c_[2]}}; }

CubicElem CubicElem::inverse() const {
    CubicElem conj = rho(*this) * rho2(*this);
    Rat n = ((*this) * conj)[0];
    if (n == 0) throw Error("division by zero in M");
    return (Rat(1) / n) * conj;
}

std::string CubicElem::str() const {
    return "[" + c_[0].get_str() + ", " + c_[1].get_str() + ", " + c_[2].get_str() + "]";
}

// TowerElem

QuadElem TowerElem::as_quad() const {
    if (!in_E()) throw Error("element is not in E");
    return {tower()->d(), re_[0], im_[0]};
}

const CubicElem& TowerElem::as_cubic() const {
    if (!in_M()) throw Error("element is not in M");
    return re_;
}

TowerElem TowerElem::inverse() const {
    CubicElem n = norm_L_M(*this);
    if (n.is_zero()) throw Error("division by zero in L");
    CubicElem ni = n.inverse();
    return {re_ * ni, -(im_ * ni)};
}

TowerElem operator+(const TowerElem& a, const TowerElem& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }

TowerElem operator-(const TowerElem& a, const TowerElem& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }

TowerElem operator-(const TowerElem& a) { return {-a.re_, -a.im_}; }

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    Rat d(a.tower()->d());
    return {a.re_ * b.re_ - d * (a.im_ * b.im_), a.re_ * b.im_ + a.im_ * b.re_};
}

TowerElem operator*(const CubicElem& s, const TowerElem& a) { return {s * a.re_, s * a.im_}; }

TowerElem operator*(const Rat& s, const TowerElem& a) { return {s * a.re_, s * a.im_}; }

std::array<Rat, 6> TowerElem::coords() const {
    return {re_[0], re_[1], re_[2], im_[0], im_[1], im_[2]};
}

std::string TowerElem::str() const { return re_.str() + " + " + im_.str() + "*sqrt(-" + std::to_string(tower()->d()) + ")"; }

// Tower

TowerPtr Tower::create(const TowerParams& params) {
    auto rep = tower_validate(params);
    if (!rep.ok()) throw Error("invalid tower: " + rep.first_failure());
    std::shared_ptr<Tower> t(new Tower());
    t->params_ = params;
    t->f_ = params.f_poly();
    QPoly x = QPoly::x();
    t->t3_ = to_array(x * x * x % t->f_);
    t->t4_ = to_array(x * x * x * x % t->f_);
    QPoly g = params.g_poly();
    std::array<QPoly, 3> imgs{QPoly::constant(1), g % t->f_, g * g % t->f_};
    for (int col = 0; col < 3; ++col)
        for (int row = 0; row < 3; ++row) t->rho_[row][col] = imgs[col].coeff(row);
    t->roots_ = isolate_real_roots(t->f_);
    return t;
}

CubicElem Tower::cubic(const Rat& c0, const Rat& c1, const Rat& c2) const {
    return {shared_from_this(), {c0, c1, c2}};
}

TowerElem Tower::elem(const CubicElem& re) const { return {re, cubic(0)}; }

TowerElem Tower::elem(const QuadElem& q) const {
    if (q.d() != d()) throw Error("element of E has mismatched d");
    return {cubic(q.x0()), cubic(q.x1())};
}

TowerElem Tower::elem(const std::array<Rat, 6>& c) const {
    return {cubic(c[0], c[1], c[2]), cubic(c[3], c[4], c[5])};
}

// Galois action

CubicElem rho(const CubicElem& x) {
    const auto& m = x.tower()->rho_matrix();
    std::array<Rat, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
    return {x.tower(), std::move(r)};
}

CubicElem rho2(const CubicElem& x) { return rho(rho(x)); }

TowerElem rho(const TowerElem& x) { return {rho(x.re()), rho(x.im())}; }

TowerElem rho2(const TowerElem& x) { return {rho2(x.re()), rho2(x.im())}; }

TowerElem tau(const TowerElem& x) { return {x.re(), -x.im()}; }

TowerElem galois(const TowerElem& x, int rho_power, int tau_power) {
    TowerElem y = (((tau_power % 2) + 2) % 2) ? tau(x) : x;
    switch (((rho_power % 3) + 3) % 3) {
        case 1: return rho(y);
        case 2: return rho2(y);
        default: return y;
    }
}

// Norms and traces

QuadElem norm_L_E(const TowerElem& x) {
    TowerElem n = x * rho(x) * rho2(x);
    return n.as_quad();
}

CubicElem norm_L_M(const TowerElem& x) {
    Rat d(x.tower()->d());
    return x.re() * x.re() + d * (x.im() * x.im());
}

Rat norm_M_F(const CubicElem& x) {
    CubicElem n = x * rho(x) * rho2(x);
    if (!n.is_rational()) throw Error("internal: N_M/F not rational");
    return n[0];
}

Rat norm_M_F(const TowerElem& x) { return norm_M_F(x.as_cubic()); }

Rat norm_E_F(const QuadElem& x) { return x.norm(); }

Rat norm_E_F(const TowerElem& x) { return x.as_quad().norm(); }

QuadElem trace_L_E(const TowerElem& x) { return (x + rho(x) + rho2(x)).as_quad(); }

Rat trace_M_F(const CubicElem& x) {
    CubicElem t = x + rho(x) + rho2(x);
    if (!t.is_rational()) throw Error("internal: Tr_M/F not rational");
    return t[0];
}

// Positivity

std::array<int, 3> embedding_signs(const CubicElem& b) {
    const Tower& t = *b.tower();
    QPoly bp({b[0], b[1], b[2]});
    std::array<int, 3> signs{0, 0, 0};
    if (bp.is_zero()) return signs;
    if (bp.degree() == 0) {
        signs.fill(sgn(bp.lead()));
        return signs;
    }
    auto fchain = sturm_chain(t.f());
    auto bchain = sturm_chain(bp);
    const auto& roots = t.real_roots();
    for (std::size_t i = 0; i < roots.size() && i < 3; ++i) {
        RootInterval iv = roots[i];
        // b(root) != 0 since f is irreducible and deg b < 3, so the loop ends.
        while (sturm_count(bchain, iv.lo, iv.hi) != 0 || bp.eval(iv.hi) == 0) {
            Rat mid = (iv.lo + iv.hi) / 2;
            if (sturm_count(fchain, iv.lo, mid) == 1) iv.hi = mid;
            else iv.lo = mid;
        }
        signs[i] = bp.sign_at(iv.hi);
    }
    return signs;
}

bool is_totally_positive(const CubicElem& b) {
    if (b.tower()->real_roots().size() != 3) return false;
    auto s = embedding_signs(b);
    return s[0] > 0 && s[1] > 0 && s[2] > 0;
}

std::array<double, 3> real_embeddings(const Tower& t) {
    std::array<double, 3> out{0, 0, 0};
    const auto& roots = t.real_roots();
    for (std::size_t i = 0; i < roots.size() && i < 3; ++i) {
        auto iv = refine_root(t.f(), roots[i], Rat(1, 1L << 60));
        out[i] = Rat((iv.lo + iv.hi) / 2).get_d();
    }
    return out;
}

}  // namespace cdalg
