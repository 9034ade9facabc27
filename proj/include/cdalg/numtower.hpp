// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in the tower Q < E = Q(sqrt(-d)), Q < M = Q[theta]/(f),
// L = M(sqrt(-d)) = EM.
//
// tau is complex conjugation (sqrt(-d) -> -sqrt(-d)), rho is the order-3
// automorphism theta -> g(theta) of M extended to L. Gal(L/Q) = <rho tau>.

#ifndef CDALG_NUMTOWER_HPP
#define CDALG_NUMTOWER_HPP

#include "cdalg/poly.hpp"
#include "cdalg/rational.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cdalg {

/// f = X^3 + f[2] X^2 + f[1] X + f[0]; the action is theta -> g[0] + g[1] theta + g[2] theta^2.
struct TowerParams {
    std::int64_t d = 0;
    std::array<Rat, 3> f;
    std::array<Rat, 3> g;

    QPoly f_poly() const;
    QPoly g_poly() const;
};

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = {});
    bool ok() const;
    /// First failing check name, or empty.
    std::string first_failure() const;
};

/// Checks every tower invariant independently: d squarefree and
/// positive, f irreducible, disc(f) a nonzero square, g a root of f in
/// M, g of order exactly 3.
ValidationReport tower_validate(const TowerParams& params);

/// Discriminant of a monic cubic given by its three lower coefficients.
Rat cubic_discriminant(const std::array<Rat, 3>& f);

/// Second root of f inside Q[theta]/(f), i.e. the action polynomial g.
/// With f'(theta) = (theta - theta')(theta - theta'') and
/// theta' - theta'' = +-sqrt(disc f) / f'(theta), the two non-identity
/// actions are g = (-c2 - theta +- sqrt(disc)/f'(theta)) / 2.
/// branch selects the sign (+1 or -1). Throws if disc(f) is not a square.
std::array<Rat, 3> derive_action(const std::array<Rat, 3>& f, int branch = +1);

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class QuadElem {
public:
    QuadElem() = default;
    QuadElem(std::int64_t d, Rat x0, Rat x1 = 0) : d_(d), x0_(std::move(x0)), x1_(std::move(x1)) {}

    std::int64_t d() const { return d_; }
    const Rat& x0() const { return x0_; }
    const Rat& x1() const { return x1_; }

    bool is_zero() const { return x0_ == 0 && x1_ == 0; }
    bool is_rational() const { return x1_ == 0; }

    QuadElem conj() const { return {d_, x0_, -x1_}; }
    Rat norm() const { return x0_ * x0_ + Rat(d_) * x1_ * x1_; }
    Rat trace() const { return 2 * x0_; }
    QuadElem inverse() const;

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a) { return {a.d_, -a.x0_, -a.x1_}; }
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * b.inverse(); }
    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.d_ == b.d_ && a.x0_ == b.x0_ && a.x1_ == b.x1_;
    }
    friend bool operator<(const QuadElem& a, const QuadElem& b) {
        return a.x0_ != b.x0_ ? a.x0_ < b.x0_ : a.x1_ < b.x1_;
    }

    std::string str() const;

private:
    std::int64_t d_ = 0;
    Rat x0_ = 0;
    Rat x1_ = 0;
};

/// c0 + c1 theta + c2 theta^2 in M, always reduced mod f.
class CubicElem {
public:
    CubicElem(TowerPtr t, std::array<Rat, 3> c) : t_(std::move(t)), c_(std::move(c)) {}

    const TowerPtr& tower() const { return t_; }
    const std::array<Rat, 3>& coeffs() const { return c_; }
    const Rat& operator[](int i) const { return c_[i]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0; }

    CubicElem inverse() const;

    friend CubicElem operator+(const CubicElem& a, const CubicElem& b);
    friend CubicElem operator-(const CubicElem& a, const CubicElem& b);
    friend CubicElem operator-(const CubicElem& a);
    friend CubicElem operator*(const CubicElem& a, const CubicElem& b);
    friend CubicElem operator*(const Rat& s, const CubicElem& a);
    friend CubicElem operator/(const CubicElem& a, const CubicElem& b) { return a * b.inverse(); }
    friend bool operator==(const CubicElem& a, const CubicElem& b) { return a.c_ == b.c_; }
    friend bool operator<(const CubicElem& a, const CubicElem& b) { return a.c_ < b.c_; }

    std::string str() const;

private:
    TowerPtr t_;
    std::array<Rat, 3> c_;
};

/// re + im sqrt(-d) in L with re, im in M.
class TowerElem {
public:
    TowerElem(CubicElem re, CubicElem im) : re_(std::move(re)), im_(std::move(im)) {}

    const TowerPtr& tower() const { return re_.tower(); }
    const CubicElem& re() const { return re_; }
    const CubicElem& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool in_M() const { return im_.is_zero(); }
    bool in_E() const { return re_.is_rational() && im_.is_rational(); }
    /// Throws Error unless in_E().
    QuadElem as_quad() const;
    /// Throws Error unless in_M().
    const CubicElem& as_cubic() const;

    TowerElem inverse() const;

    friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator-(const TowerElem& a);
    friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator*(const CubicElem& s, const TowerElem& a);
    friend TowerElem operator*(const Rat& s, const TowerElem& a);
    friend TowerElem operator/(const TowerElem& a, const TowerElem& b) { return a * b.inverse(); }
    friend bool operator==(const TowerElem& a, const TowerElem& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator<(const TowerElem& a, const TowerElem& b) {
        return a.re_ == b.re_ ? a.im_ < b.im_ : a.re_ < b.re_;
    }

    /// The six rational coordinates (re0, re1, re2, im0, im1, im2).
    std::array<Rat, 6> coords() const;

    std::string str() const;

private:
    CubicElem re_;
    CubicElem im_;
};

/// Immutable, validated tower. Create through Tower::create, which
/// throws Error carrying the first failing check.
class Tower : public std::enable_shared_from_this<Tower> {
public:
    static TowerPtr create(const TowerParams& params);

    const TowerParams& params() const { return params_; }
    std::int64_t d() const { return params_.d; }
    const QPoly& f() const { return f_; }

    CubicElem cubic(const Rat& c0, const Rat& c1 = 0, const Rat& c2 = 0) const;
    CubicElem theta() const { return cubic(0, 1); }
    TowerElem elem(const CubicElem& re) const;
    TowerElem elem(const CubicElem& re, const CubicElem& im) const { return {re, im}; }
    TowerElem elem(const QuadElem& q) const;
    TowerElem elem(const Rat& r) const { return elem(cubic(r)); }
    /// From the six coordinates in TowerElem::coords order.
    TowerElem elem(const std::array<Rat, 6>& c) const;
    QuadElem quad(const Rat& x0, const Rat& x1 = 0) const { return {d(), x0, x1}; }
    TowerElem zero() const { return elem(Rat(0)); }
    TowerElem one() const { return elem(Rat(1)); }
    TowerElem sqrt_minus_d() const { return {cubic(0), cubic(1)}; }

    /// Matrix of rho on M: column j holds the coordinates of rho(theta^j).
    const std::array<std::array<Rat, 3>, 3>& rho_matrix() const { return rho_; }

    // Reduction data used by CubicElem multiplication.
    const std::array<Rat, 3>& theta3() const { return t3_; }
    const std::array<Rat, 3>& theta4() const { return t4_; }

    /// Intervals isolating the three real roots of f, ascending.
    const std::vector<RootInterval>& real_roots() const { return roots_; }

private:
    Tower() = default;
    TowerParams params_;
    QPoly f_;
    std::array<Rat, 3> t3_, t4_;
    std::array<std::array<Rat, 3>, 3> rho_;
    std::vector<RootInterval> roots_;
};

// Galois action. rho fixes E pointwise, tau fixes M pointwise.
CubicElem rho(const CubicElem& x);
CubicElem rho2(const CubicElem& x);
TowerElem rho(const TowerElem& x);
TowerElem rho2(const TowerElem& x);
TowerElem tau(const TowerElem& x);

/// rho^k tau^t applied to x (k mod 3, t mod 2). (rho tau)^n is
/// galois(x, n, n).
TowerElem galois(const TowerElem& x, int rho_power, int tau_power);

// Norms and traces.
QuadElem norm_L_E(const TowerElem& x);
CubicElem norm_L_M(const TowerElem& x);
Rat norm_M_F(const CubicElem& x);
/// Throws Error when x is not in M.
Rat norm_M_F(const TowerElem& x);
Rat norm_E_F(const QuadElem& x);
/// Throws Error when x is not in E.
Rat norm_E_F(const TowerElem& x);
QuadElem trace_L_E(const TowerElem& x);
Rat trace_M_F(const CubicElem& x);

/// True iff b is positive at all three real embeddings of M. Decided by
/// Sturm isolation of the roots of f and bisection with rational
/// endpoints until b has no root in each isolating interval.
bool is_totally_positive(const CubicElem& b);

/// Signs of b at the three real roots of f, ascending by root.
std::array<int, 3> embedding_signs(const CubicElem& b);

/// Floating-point images of theta under the three real embeddings, for
/// reporting and prefilters only.
std::array<double, 3> real_embeddings(const Tower& t);

}  // namespace cdalg

#endif  // CDALG_NUMTOWER_HPP
