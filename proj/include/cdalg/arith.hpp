// SPDX-License-Identifier: Apache-2.0
//
// Integral structure of the cyclic algebra: the order
// Lambda = o_L + o_L z + o_L z^2 and its discriminant, prime
// classification, S-integrality and the S-integral scans of U and SU.
//
// o_E has the integral basis {1, omega} with omega = (1 + sqrt(-d))/2 when
// -d = 1 mod 4 and omega = sqrt(-d) otherwise. o_L is modelled by the
// o_E-module spanned by 1, theta, theta^2 (not necessarily maximal).

#ifndef CDALG_ARITH_HPP
#define CDALG_ARITH_HPP

#include "cdalg/unitary.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cdalg {

/// Coordinates (u, v) of q = u + v omega.
std::array<Rat, 2> to_oE_basis(const QuadElem& q);
QuadElem from_oE_basis(std::int64_t d, const Rat& u, const Rat& v);
bool is_oE_integral(const QuadElem& q);

enum class SplitE { split, inert, ramified };
enum class SplitM { split_completely, inert, ramified, partial };
std::string to_string(SplitE s);
std::string to_string(SplitM s);

struct PrimeClass {
    std::int64_t p = 0;
    SplitE behavior_E = SplitE::inert;
    SplitM split_M = SplitM::inert;
    /// Distinct roots of f mod p.
    int roots_mod_p = 0;
    bool sixth_roots_in_residue_field = false;
    bool property_A = false;
    bool property_B = false;
};

/// Requires p prime and f with integer coefficients; throws Error
/// otherwise. p | disc(f) is reported as ramified in M.
PrimeClass classify_prime(std::int64_t p, const TowerParams& tower);
inline PrimeClass classify_prime(std::int64_t p, const AlgebraDef& def) { return classify_prime(p, def.tower); }

/// Discriminant of E: -d or -4d.
std::int64_t disc_E(std::int64_t d);

/// b has p-integral coordinates in 1, theta, theta^2 and p does not divide
/// N_M/F(b). Sufficient for v_P(b) = 0 at every P over p.
bool is_p_unit(const CubicElem& b, std::int64_t p);

struct SRing {
    std::vector<std::int64_t> primes;

    bool contains(const Rat& q) const;
    std::string str() const;
};

/// Coordinates in {1, omega} (times theta^k for TowerElem) have
/// denominators supported in S.
bool s_integral(const QuadElem& x, const SRing& s);
bool s_integral(const TowerElem& x, const SRing& s);

struct OrderBasis {
    std::array<TowerElem, 3> e;
};

/// {1, theta, theta^2}.
OrderBasis standard_basis(const TowerPtr& t);
/// The images of x under 1, rho, rho^2.
OrderBasis rho_orbit_basis(const TowerElem& x);
bool is_rho_invariant(const OrderBasis& basis);

struct DiscriminantReport {
    /// det(Tr_rd(b_jk b_j'k')) over the nine generators e_j z^k.
    QuadElem disc_lambda;
    /// det(Tr_L/E(e_i e_j)).
    QuadElem disc_basis;
    /// The Gram matrix vanishes outside the blocks (k, k') with k + k' = 0 mod 3.
    bool block_shape_ok = false;
    bool rho_invariant = false;
    /// disc_lambda = (-a^2 disc_basis)^3; meaningful when rho_invariant.
    bool identity_holds = false;
};

/// Throws Error when the basis is linearly dependent over E.
DiscriminantReport discriminant_lambda(const CyclicAlgebra& alg, const OrderBasis& basis);

/// Determinant of an n x n matrix over E by exact elimination.
QuadElem determinant(std::vector<std::vector<QuadElem>> m);

struct MaximalOrderReport {
    bool a_integral = false;
    Rat norm_a;
    /// Lambda is the maximal order iff a is a unit of o_E.
    bool maximal = false;
    std::string note;
};

MaximalOrderReport maximal_order_check(const AlgebraDef& def);

/// Third roots of unity in E, sorted: {1, zeta_3, zeta_3^2} for d = 3, else {1}.
std::vector<QuadElem> third_roots_of_unity(std::int64_t d);
/// Units of o_E, sorted.
std::vector<QuadElem> units_oE(std::int64_t d);

struct DenominatorReport {
    std::vector<std::int64_t> denominator_primes;
    /// Denominator primes with Property B and v_p(b) = 0.
    std::vector<std::int64_t> restricted;
    bool in_U = false;
    /// in_U and some restricted prime divides a denominator.
    bool violation = false;
};

/// Requires every coordinate of x in E and b in F; throws Error otherwise.
DenominatorReport denominator_admissible(const CyclicAlgebra& alg, const AlgElem& x);

struct SMonomialScan {
    SRing s;
    int height = 0;
    std::uint64_t candidates = 0;
    /// l in o_L(S) of bounded height with N_L/M(l) = 1 = N_L/E(l), sorted.
    std::vector<TowerElem> solutions;
    bool subset_of_third_roots = false;
    bool all_in_SU = false;
};

/// Coordinates: l = sum_k (x_k + y_k omega) theta^k with x_k, y_k in
/// height_grid(height, S). Requires every p in S to have Property A with b
/// a p-unit; throws Error naming the failing prime otherwise.
SMonomialScan s_monomial_scan(const CyclicAlgebra& alg, const SRing& s, int height);

struct RhoFixedScan {
    SRing s;
    int height = 0;
    std::array<std::size_t, 3> candidates{};
    /// Members of U with every l_j in o_E(S) of bounded height, sorted.
    std::vector<AlgElem> u_members;
    std::vector<AlgElem> su_members;
    /// Every U member is l z^j with l a unit of o_E and b^j N(l) = 1.
    bool u_members_monomial_units = false;
    bool su_equals_third_roots = false;
};

/// Coordinates l_j = x + y omega with x, y in height_grid(height, S).
/// Requires b in F, b > 0 and every p in S with Property B and
/// v_p(b) = 0; throws Error otherwise.
RhoFixedScan rho_fixed_su_scan(const CyclicAlgebra& alg, const SRing& s, int height);

}  // namespace cdalg

#endif  // CDALG_ARITH_HPP
