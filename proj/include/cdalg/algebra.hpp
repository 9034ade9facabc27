// SPDX-License-Identifier: Apache-2.0
//
// The cyclic algebra D = L + Lz + Lz^2 with z^3 = a in E and
// z l = rho(l) z, its embedding into M_3(L), and the involutions of the
// second kind attached to b in M with N_E/F(a) = N_M/F(b).

#ifndef CDALG_ALGEBRA_HPP
#define CDALG_ALGEBRA_HPP

#include "cdalg/numtower.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cdalg {

struct AlgebraDef {
    TowerParams tower;
    /// Structure constant, coordinates in {1, sqrt(-d)}.
    std::array<Rat, 2> a;
    /// Involution constant, coordinates in {1, theta, theta^2}.
    std::array<Rat, 3> b;
    bool division_asserted = false;
};

/// g = l0 + l1 z + l2 z^2.
struct AlgElem {
    TowerElem l0, l1, l2;

    const TowerElem& operator[](int j) const { return j == 0 ? l0 : (j == 1 ? l1 : l2); }
    TowerElem& operator[](int j) { return j == 0 ? l0 : (j == 1 ? l1 : l2); }

    bool is_zero() const { return l0.is_zero() && l1.is_zero() && l2.is_zero(); }
    /// All coordinates fixed by rho, i.e. in E.
    bool in_E_coords() const { return l0.in_E() && l1.in_E() && l2.in_E(); }
    /// The 18 rational coordinates, l0 first.
    std::array<Rat, 18> coords() const;
    std::string str() const;

    friend AlgElem operator+(const AlgElem& x, const AlgElem& y) { return {x.l0 + y.l0, x.l1 + y.l1, x.l2 + y.l2}; }
    friend AlgElem operator-(const AlgElem& x, const AlgElem& y) { return {x.l0 - y.l0, x.l1 - y.l1, x.l2 - y.l2}; }
    friend AlgElem operator-(const AlgElem& x) { return {-x.l0, -x.l1, -x.l2}; }
    friend bool operator==(const AlgElem& x, const AlgElem& y) { return x.l0 == y.l0 && x.l1 == y.l1 && x.l2 == y.l2; }
    friend bool operator<(const AlgElem& x, const AlgElem& y);
};

/// 3x3 matrix over L, row-major.
class Mat3L {
public:
    explicit Mat3L(const TowerPtr& t);
    static Mat3L identity(const TowerPtr& t);

    const TowerElem& operator()(int i, int j) const { return e_[3 * i + j]; }
    TowerElem& operator()(int i, int j) { return e_[3 * i + j]; }

    TowerElem det() const;
    TowerElem trace() const { return e_[0] + e_[4] + e_[8]; }
    /// Gaussian elimination over L; nullopt when singular.
    std::optional<Mat3L> inverse() const;

    friend Mat3L operator+(const Mat3L& x, const Mat3L& y);
    friend Mat3L operator*(const Mat3L& x, const Mat3L& y);
    friend bool operator==(const Mat3L& x, const Mat3L& y) { return x.e_ == y.e_; }

private:
    std::vector<TowerElem> e_;
};

class CyclicAlgebra {
public:
    /// Builds the tower and the multiplication structure. Requires a
    /// valid tower, a != 0 and b != 0; the remaining conditions of the
    /// involution (a outside F, norm equation) are reported by validate().
    explicit CyclicAlgebra(const AlgebraDef& def);

    const AlgebraDef& def() const { return def_; }
    const TowerPtr& tower() const { return t_; }
    const QuadElem& a() const { return a_; }
    const CubicElem& b() const { return b_; }
    /// rho(b) and rho(b) rho^2(b), the weights of the hermitian form.
    const CubicElem& weight1() const { return w1_; }
    const CubicElem& weight2() const { return w2_; }

    /// Tower checks plus a != 0, a not in F, b != 0, N_E/F(a) = N_M/F(b).
    ValidationReport validate() const;

    AlgElem zero() const;
    AlgElem one() const;
    AlgElem z() const;
    AlgElem scalar(const TowerElem& l) const;
    AlgElem scalar(const QuadElem& q) const { return scalar(t_->elem(q)); }
    /// l z^j.
    AlgElem monomial(const TowerElem& l, int j) const;
    AlgElem from_coords(const std::array<Rat, 18>& c) const;

    AlgElem mul(const AlgElem& x, const AlgElem& y) const;
    AlgElem power(const AlgElem& x, std::uint64_t n) const;
    /// Throws Error when N_rd(x) = 0.
    AlgElem inverse(const AlgElem& x) const;

    Mat3L embed(const AlgElem& x) const;
    QuadElem reduced_norm(const AlgElem& x) const;
    QuadElem reduced_trace(const AlgElem& x) const;

    AlgElem alpha(const AlgElem& x) const;
    /// c^{-1} alpha(x) c for c in M^x. Throws Error when c = 0.
    AlgElem beta(const AlgElem& x, const CubicElem& c) const;
    /// The extension of alpha to M_3(L): m -> H conj(m)^T H^{-1} with
    /// H = diag(1, rho(b), rho(b) rho^2(b)).
    Mat3L alpha_matrix(const Mat3L& m) const;

private:
    AlgebraDef def_;
    TowerPtr t_;
    QuadElem a_;
    TowerElem aL_;
    CubicElem b_, w1_, w2_;
};

struct ZeroDivisorScan {
    int height = 0;
    std::uint64_t candidates = 0;
    /// Lexicographic by grid index; truncated at max_hits.
    std::vector<AlgElem> zero_divisors;
    bool truncated = false;
};

/// Enumerates every nonzero element whose 18 rational coordinates have
/// height <= `height` and collects those with N_rd = 0. Each candidate is
/// screened with a complex embedding and confirmed exactly. Throws Error
/// when the grid exceeds `grid_limit` points.
ZeroDivisorScan zero_divisor_scan(const CyclicAlgebra& alg, int height, std::size_t max_hits = 64,
                                  double grid_limit = 1e9, unsigned threads = 0);

}  // namespace cdalg

#endif  // CDALG_ALGEBRA_HPP
