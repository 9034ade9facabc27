// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate polynomials over Q and exact real-root isolation.

#ifndef CDALG_POLY_HPP
#define CDALG_POLY_HPP

#include "cdalg/rational.hpp"

#include <utility>
#include <vector>

namespace cdalg {

/// Coefficients in ascending order; the zero polynomial has no
/// coefficients. Leading zeros are always trimmed.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly constant(const Rat& c);
    static QPoly x();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return sgn(eval(x)); }
    QPoly derivative() const;
    QPoly monic() const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rat& s, const QPoly& a);
    friend QPoly operator-(const QPoly& a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; divisor nonzero.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
    friend QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

    /// a(b(X)).
    QPoly compose(const QPoly& b) const;

    static QPoly gcd(const QPoly& a, const QPoly& b);

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Sturm chain of p (p, p', -rem, ...).
std::vector<QPoly> sturm_chain(const QPoly& p);

/// Number of distinct real roots of the chain's polynomial in (lo, hi].
int sturm_count(const std::vector<QPoly>& chain, const Rat& lo, const Rat& hi);

/// Cauchy bound: every real root has |r| < bound.
Rat root_bound(const QPoly& p);

struct RootInterval {
    Rat lo;
    Rat hi;
};

/// Disjoint intervals (lo, hi], each holding exactly one distinct real
/// root of p, ascending.
std::vector<RootInterval> isolate_real_roots(const QPoly& p);

/// Shrinks the isolating interval of a simple root of p by bisection
/// until its width is at most `width`.
RootInterval refine_root(const QPoly& p, RootInterval iv, const Rat& width);

}  // namespace cdalg

#endif  // CDALG_POLY_HPP
