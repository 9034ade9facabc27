// SPDX-License-Identifier: Apache-2.0
//
// The unitary group U = {g : g alpha(g) = 1} and SU = {g in U : N_rd(g) = 1}
// of the cyclic algebra, in the coordinates g = l0 + l1 z + l2 z^2.

#ifndef CDALG_UNITARY_HPP
#define CDALG_UNITARY_HPP

#include "cdalg/algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cdalg {

struct UnitaryWitness {
    AlgElem element;
    bool cond1_ok = false;
    bool cond2_ok = false;
    bool det_ok = false;
    /// l0 tau(l0) + rho(b) l1 tau(l1) + rho(b) rho^2(b) l2 tau(l2).
    TowerElem residual1;
    /// a tau(l0) rho(l2) + rho(b) tau(l1) rho(l0) + rho(b) rho^2(b) tau(l2) rho(l1).
    TowerElem residual2;
    /// N_rd(g).
    QuadElem residual3;

    bool in_U() const { return cond1_ok && cond2_ok; }
    bool in_SU() const { return cond1_ok && cond2_ok && det_ok; }
};

/// Evaluates both unitary conditions and the determinant condition
/// exactly. The conjunction of the two unitary conditions is compared
/// against g alpha(g) = 1; a disagreement throws Error.
UnitaryWitness check_unitary(const CyclicAlgebra& alg, const AlgElem& x);
bool is_in_U(const CyclicAlgebra& alg, const AlgElem& x);
bool is_in_SU(const CyclicAlgebra& alg, const AlgElem& x);

enum class MonomialKind { not_monomial, monomial_j0, monomial_j1, monomial_j2 };
std::string to_string(MonomialKind kind);

struct MonomialClass {
    MonomialKind kind = MonomialKind::not_monomial;
    /// The coefficient l of g = l z^j.
    std::optional<TowerElem> l;
    /// For members of U: w_j N_L/M(l) = 1 with w = 1, rho(b), rho(b) rho^2(b).
    std::optional<bool> norm_equation_ok;
};

MonomialClass classify_monomial(const CyclicAlgebra& alg, const AlgElem& x);

/// N_L/M(l) = 1 and N_L/E(l) = 1. Throws Error on l = 0.
bool su_monomial_norm_check(const TowerElem& l);

/// (y0 + sqrt(-d)) / (y0 - sqrt(-d)), of relative norm 1 over M.
TowerElem hilbert90_element(const CubicElem& y0);
/// Tr_M/F(y0 rho(y0)) = d, equivalent to N_L/E(hilbert90_element(y0)) = 1.
bool hilbert90_norm_one_over_E(const CubicElem& y0);
/// All y0 with coordinates in height_grid(height) satisfying the trace
/// condition, lexicographic.
std::vector<CubicElem> hilbert90_search(const TowerPtr& t, int height);

enum class Eigen { plus, minus, none };
std::string to_string(Eigen e);
Eigen eigenvector_check(const CyclicAlgebra& alg, const AlgElem& x);

/// Which part of each coordinate a scan may populate: all of L, the
/// tau-fixed part M, or the tau-negated part sqrt(-d) M.
enum class TauPart { full, fixed, negated };

struct UnitaryScan {
    int height = 0;
    TauPart part = TauPart::full;
    /// Coordinate values that survived the trace bound, per j.
    std::array<std::size_t, 3> candidates{};
    /// Every member of U in the domain, sorted.
    std::vector<AlgElem> members;
};

/// Exhaustive exact enumeration of U over the given per-coordinate
/// candidate lists. Each list must contain every admissible l with
/// Tr_M/F(w_j N_L/M(l)) <= 3. Requires b totally positive (the hermitian
/// form is then definite and the bound is necessary); throws Error
/// otherwise.
std::vector<AlgElem> unitary_points(const CyclicAlgebra& alg, const std::array<std::vector<TowerElem>, 3>& candidates);

/// Elements l = x + y sqrt(-d) with x, y in M having coordinates in
/// `grid`, restricted to `part`, and Tr_M/F(weight N_L/M(l)) <= bound.
std::vector<TowerElem> grid_candidates(const TowerPtr& t, const std::vector<Rat>& grid, const CubicElem& weight,
                                       const Rat& bound, TauPart part = TauPart::full);

/// U restricted to coordinates of height <= `height` in all 18 rational
/// coordinates.
UnitaryScan scan_unitary(const CyclicAlgebra& alg, int height, TauPart part = TauPart::full);

/// Members of SU at the height bound that are alpha-eigenvectors, other
/// than 1.
std::vector<AlgElem> eigenvector_scan_SU(const CyclicAlgebra& alg, int height);
/// Members of U at the height bound that are alpha-eigenvectors.
std::vector<AlgElem> eigenvector_scan_U(const CyclicAlgebra& alg, int height);
/// Members of SU at the height bound with even order <= bound.
std::vector<AlgElem> even_order_scan_SU(const CyclicAlgebra& alg, int height, int bound = 18);

/// Roots of x^4 = 1 in E.
std::vector<QuadElem> fourth_roots_of_unity(std::int64_t d);

struct MPointReport {
    int sign = 1;
    int height = 0;
    /// Members of U with every coordinate tau-fixed (sign +1) or
    /// tau-negated (sign -1).
    std::vector<AlgElem> members;
    std::vector<AlgElem> su_members;
    /// Each member is monomial l z^j with w_j l tau(l) = 1.
    bool classification_ok = true;
    std::vector<AlgElem> violations;
};

MPointReport m_points_classify(const CyclicAlgebra& alg, int sign, int height);

/// Smallest n <= bound with x^n = 1, or nullopt. Throws Error on x = 0.
std::optional<int> element_order(const CyclicAlgebra& alg, const AlgElem& x, int bound);

struct NormSearch {
    int height = 0;
    std::uint64_t examined = 0;
    /// Elements l with N_L/E(l) in a Q^x.
    std::vector<TowerElem> hits;
};

/// Enumerates l in L with coordinates of height <= `height` and tests
/// whether N_L/E(l) / a is a nonzero rational. Throws Error when the grid
/// exceeds `limit` points.
NormSearch norm_in_aF_search(const CyclicAlgebra& alg, int height, double limit = 2e6);

}  // namespace cdalg

#endif  // CDALG_UNITARY_HPP
