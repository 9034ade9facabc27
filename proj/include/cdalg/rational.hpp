// SPDX-License-Identifier: Apache-2.0
//
// Exact rational helpers on top of GMP's mpq_class.

#ifndef CDALG_RATIONAL_HPP
#define CDALG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdalg {

/// Reduced rational with positive denominator. mpq_class keeps the
/// canonical form after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "n", "-n" or "n/d". Throws Error on malformed input or d == 0.
Rat parse_rat(const std::string& text);

/// Formats as "num/den"; integers are written as "n/1" so the encoding
/// round-trips bit-exactly.
std::string to_string(const Rat& q);

/// max(|num|, den) of the reduced fraction.
Int height(const Rat& q);

bool is_integer(const Rat& q);

/// Rational square root when q is a perfect square, otherwise false.
bool rational_sqrt(const Rat& q, Rat& root);

bool is_prime(std::int64_t n);

/// Prime factors (without multiplicity) of |n|, ascending. n != 0.
std::vector<std::int64_t> prime_factors(const Int& n);

bool is_squarefree(std::int64_t n);

/// p-adic valuation of a nonzero rational.
int valuation(const Rat& q, std::int64_t p);

/// All reduced rationals of height <= h, sorted ascending.
std::vector<Rat> height_grid(int h);

/// S-grid: reduced rationals num/den with |num| <= h and den a product of
/// p^e over p in `primes` with each e <= h. Sorted ascending.
std::vector<Rat> height_grid(int h, const std::vector<std::int64_t>& primes);

}  // namespace cdalg

#endif  // CDALG_RATIONAL_HPP
