// SPDX-License-Identifier: Apache-2.0

#include "cdalg/rational.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cdalg {

namespace {

bool parse_int(const std::string& s, Int& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    out.set_str(s[0] == '+' ? s.substr(1) : s, 10);
    return true;
}

Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    Int num, den = 1;
    if (!parse_int(text.substr(0, slash), num))
        throw Error("malformed rational: '" + text + "'");
    if (slash != std::string::npos && !parse_int(text.substr(slash + 1), den))
        throw Error("malformed rational: '" + text + "'");
    if (den == 0) throw Error("zero denominator: '" + text + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int height(const Rat& q) {
    Int n = abs(q.get_num());
    return n > q.get_den() ? n : Int(q.get_den());
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool rational_sqrt(const Rat& q, Rat& root) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return false;
    root = Rat(sqrt(q.get_num()), sqrt(q.get_den()));
    root.canonicalize();
    return true;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(const Int& n) {
    if (n == 0) throw Error("prime_factors of zero");
    Int m = abs(n);
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; Int(p) * p <= m; ++p) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
            out.push_back(p);
            while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) m /= p;
        }
    }
    if (m > 1) {
        if (!m.fits_slong_p()) throw Error("prime_factors: cofactor too large");
        out.push_back(m.get_si());
    }
    return out;
}

bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    if (n < 0) n = -n;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

int valuation(const Rat& q, std::int64_t p) {
    if (q == 0) throw Error("valuation of zero");
    int v = 0;
    Int n = q.get_num(), d = q.get_den();
    auto up = static_cast<unsigned long>(p);
    while (mpz_divisible_ui_p(n.get_mpz_t(), up)) { n /= p; ++v; }
    while (mpz_divisible_ui_p(d.get_mpz_t(), up)) { d /= p; --v; }
    return v;
}

std::vector<Rat> height_grid(int h) {
    std::set<Rat> vals;
    for (int den = 1; den <= h; ++den)
        for (int num = -h; num <= h; ++num) vals.insert(make_rat(num, den));
    if (h <= 0) vals.insert(Rat(0));
    return {vals.begin(), vals.end()};
}

std::vector<Rat> height_grid(int h, const std::vector<std::int64_t>& primes) {
    std::vector<Int> dens{Int(1)};
    for (auto p : primes) {
        std::vector<Int> next;
        for (const auto& d : dens) {
            Int q = d;
            for (int e = 0; e <= h; ++e, q *= p) next.push_back(q);
        }
        dens = std::move(next);
    }
    std::set<Rat> vals;
    vals.insert(Rat(0));
    for (const auto& den : dens)
        for (int num = -h; num <= h; ++num) {
            Rat q(Int(num), den);
            q.canonicalize();
            vals.insert(q);
        }
    return {vals.begin(), vals.end()};
}

}  // namespace cdalg
