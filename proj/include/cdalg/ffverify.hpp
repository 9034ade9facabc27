// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive verification of the homogeneous systems
//   l0 l0' + b l1 l1' + b^2 l2 l2' = 0,
//   a l0' l2 + b l1' l0 + b^2 l2' l1 = 0        (x' the conjugate of x)
// over F_{p^2n} with x' = x^{p^n}, and over F_{p^n}[pi]/(pi^2) with pi' = -pi.
//
// Rings are small and tabulated. Elements are integer codes: a base-field
// element is its coefficient vector over F_p in base p; a ring element
// x0 + x1 s (or x0 + x1 pi) is x0 + q x1 with q = p^n.

#ifndef CDALG_FFVERIFY_HPP
#define CDALG_FFVERIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cdalg {

/// Finite commutative ring of size q^2 over a base field F_q with an
/// involution, stored as full operation tables.
class TableRing {
public:
    int p() const { return p_; }
    int n() const { return n_; }
    /// Base field size p^n.
    int q() const { return q_; }
    int size() const { return q_ * q_; }

    int add(int x, int y) const { return add_[x * size() + y]; }
    int mul(int x, int y) const { return mul_[x * size() + y]; }
    int neg(int x) const { return neg_[x]; }
    int conj(int x) const { return conj_[x]; }
    /// Multiplicative inverse, or -1 for non-units.
    int inv(int x) const { return inv_[x]; }

    bool in_base(int x) const { return x < q_; }
    std::array<int, 2> split(int x) const { return {x % q_, x / q_}; }

    /// Coefficients of the defining polynomials, low degree first: the base
    /// field modulus over F_p and the quadratic over F_q (field only).
    const std::vector<int>& base_modulus() const { return base_modulus_; }
    const std::vector<int>& modulus() const { return modulus_; }
    bool is_dual() const { return dual_; }

protected:
    friend TableRing build_fq(int, int, int, double);
    friend TableRing build_dual(int, int, double);
    int p_ = 0, n_ = 0, q_ = 0;
    bool dual_ = false;
    std::vector<int> base_modulus_, modulus_;
    std::vector<int> add_, mul_, neg_, conj_, inv_;
};

/// F_{p^2n} as F_q[s]/(s^2 + c1 s + c0), using the modulus_index-th monic
/// irreducible quadratic in lexicographic order of (c1, c0). Throws Error
/// when p is not an odd prime, n < 1, or p^{6n} exceeds `limit`.
TableRing build_fq(int p, int n, int modulus_index = 0, double limit = 1e9);

/// F_q[pi]/(pi^2). Same guards as build_fq.
TableRing build_dual(int p, int n, double limit = 1e9);

struct Pair {
    int a = 0;
    int b = 0;
};

/// Field: a outside F_q, b in F_q^x, a a' = b^3.
/// Dual ring: a a unit outside F_q, b in F_q^x, a a' = b^3.
std::vector<Pair> admissible_pairs(const TableRing& ring);

struct LemmaReport {
    int p = 0, n = 0;
    bool dual = false;
    Pair pair;
    /// Field: p^n = 5 mod 6. Dual: F_{p^n} has no primitive third root of unity.
    bool hypothesis = false;
    std::uint64_t solution_count = 0;
    std::uint64_t nontrivial_count = 0;
    /// Lexicographically first nontrivial solution.
    std::optional<std::array<int, 3>> first_nontrivial;
    /// No nontrivial solution. Field: only (0, 0, 0). Dual: all solutions = 0 mod pi.
    bool verdict = false;
};

/// Exhaustive over all triples, partitioned over l0 across `threads`
/// workers (0 = hardware concurrency).
LemmaReport verify_lemma(const TableRing& ring, const Pair& pair, unsigned threads = 0);

struct LemmaSuite {
    int p = 0, n = 0;
    bool dual = false;
    bool hypothesis = false;
    std::vector<LemmaReport> reports;
    std::uint64_t total_solutions = 0;
    std::size_t pairs_with_nontrivial = 0;
    bool all_verdicts = false;
};

LemmaSuite verify_all_pairs(const TableRing& ring, unsigned threads = 0);

/// Human-readable element, e.g. "3+2s" or "1+4pi"; base-field components
/// with n > 1 are written as coefficient lists.
std::string element_str(const TableRing& ring, int x);

}  // namespace cdalg

#endif  // CDALG_FFVERIFY_HPP
