// SPDX-License-Identifier: Apache-2.0
//
// Seeded generators for property checks. A fixed seed gives a fixed
// sequence for a given standard library.

#ifndef CDALG_RANDOM_HPP
#define CDALG_RANDOM_HPP

#include "cdalg/unitary.hpp"

#include <cstdint>
#include <random>

namespace cdalg {

class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : rng_(seed) {}

    /// n/m with |n| <= h, 1 <= m <= h.
    Rat rat(int h = 4) {
        std::uniform_int_distribution<int> num(-h, h), den(1, h);
        Rat q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }
    Rat nonzero_rat(int h = 4) {
        Rat q;
        do q = rat(h);
        while (q == 0);
        return q;
    }
    CubicElem cubic(const TowerPtr& t, int h = 4) { return t->cubic(rat(h), rat(h), rat(h)); }
    TowerElem tower(const TowerPtr& t, int h = 4) { return t->elem(cubic(t, h), cubic(t, h)); }
    TowerElem nonzero_tower(const TowerPtr& t, int h = 4) {
        TowerElem x = tower(t, h);
        while (x.is_zero()) x = tower(t, h);
        return x;
    }
    QuadElem quad(std::int64_t d, int h = 4) { return {d, rat(h), rat(h)}; }
    AlgElem alg(const CyclicAlgebra& A, int h = 3) {
        return {tower(A.tower(), h), tower(A.tower(), h), tower(A.tower(), h)};
    }
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

/// Product of one to four factors drawn from Hilbert-90 scalars, z and
/// the scalar a; every such product lies in U when a a' = 1.
inline AlgElem random_unitary(const CyclicAlgebra& A, RandomGen& gen) {
    auto t = A.tower();
    AlgElem g = A.one();
    int factors = gen.uniform(1, 4);
    for (int i = 0; i < factors; ++i) {
        switch (gen.uniform(0, 2)) {
            case 0: g = A.mul(g, A.scalar(hilbert90_element(gen.cubic(t, 3)))); break;
            case 1: g = A.mul(g, A.z()); break;
            default: g = A.mul(g, A.scalar(A.a())); break;
        }
    }
    return g;
}

}  // namespace cdalg

#endif  // CDALG_RANDOM_HPP
