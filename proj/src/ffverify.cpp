// SPDX-License-Identifier: Apache-2.0

#include "cdalg/ffverify.hpp"

#include "cdalg/rational.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace cdalg {

namespace {

// F_q = F_p[t]/(h) with tables indexed by coefficient codes.
struct BaseField {
    int p = 0, n = 0, q = 0;
    std::vector<int> modulus;  // h without its leading 1
    std::vector<int> add, mul;

    int a(int x, int y) const { return add[x * q + y]; }
    int m(int x, int y) const { return mul[x * q + y]; }
    int neg(int x) const {
        for (int y = 0; y < q; ++y)
            if (a(x, y) == 0) return y;
        return -1;
    }
};

std::vector<int> digits(int x, int p, int n) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i, x /= p) d[i] = x % p;
    return d;
}

int encode(const std::vector<int>& d, int p) {
    int x = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
    return x;
}

// Tables for F_p[t]/(t^n + h_{n-1} t^{n-1} + ... + h_0); true iff a field.
bool try_base(int p, int n, const std::vector<int>& h, BaseField& out) {
    int q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    out.p = p;
    out.n = n;
    out.q = q;
    out.modulus = h;
    out.add.assign(q * q, 0);
    out.mul.assign(q * q, 0);
    for (int x = 0; x < q; ++x) {
        auto dx = digits(x, p, n);
        for (int y = 0; y < q; ++y) {
            auto dy = digits(y, p, n);
            std::vector<int> s(n);
            for (int i = 0; i < n; ++i) s[i] = (dx[i] + dy[i]) % p;
            out.add[x * q + y] = encode(s, p);
            std::vector<int> prod(2 * n - 1, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
            // t^n = -(h_0 + ... + h_{n-1} t^{n-1}).
            for (int k = 2 * n - 2; k >= n; --k) {
                int c = prod[k];
                if (c == 0) continue;
                prod[k] = 0;
                for (int i = 0; i < n; ++i) prod[k - n + i] = ((prod[k - n + i] - c * h[i]) % p + p) % p;
            }
            prod.resize(n);
            out.mul[x * q + y] = encode(prod, p);
        }
    }
    for (int x = 1; x < q; ++x) {
        bool unit = false;
        for (int y = 1; y < q && !unit; ++y) unit = out.m(x, y) == 1;
        if (!unit) return false;
    }
    return true;
}

BaseField build_base(int p, int n) {
    int q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    BaseField f;
    if (n == 1) {
        try_base(p, 1, {0}, f);
        return f;
    }
    for (int code = 0; code < q; ++code)
        if (try_base(p, n, digits(code, p, n), f)) return f;
    throw Error("no irreducible polynomial of degree " + std::to_string(n) + " over F_" + std::to_string(p));
}

void check_params(int p, int n, double limit) {
    if (p < 3 || !is_prime(p)) throw Error("p must be an odd prime, got " + std::to_string(p));
    if (n < 1) throw Error("n must be positive");
    double work = std::pow(static_cast<double>(p), 6.0 * n);
    if (work > limit) {
        std::ostringstream msg;
        msg << "p^(6n) = " << work << " exceeds the size limit " << limit;
        throw Error(msg.str());
    }
}

// Fills the derived tables of a ring of size q^2 from its multiplication.
template <class Mul>
void fill_tables(std::vector<int>& add, std::vector<int>& mul, std::vector<int>& neg,
                 std::vector<int>& inv, const BaseField& f, Mul&& mul_fn) {
    int q = f.q, Q = q * q;
    add.assign(Q * Q, 0);
    mul.assign(Q * Q, 0);
    neg.assign(Q, 0);
    inv.assign(Q, -1);
    for (int x = 0; x < Q; ++x) {
        int x0 = x % q, x1 = x / q;
        neg[x] = f.neg(x0) + q * f.neg(x1);
        for (int y = 0; y < Q; ++y) {
            int y0 = y % q, y1 = y / q;
            add[x * Q + y] = f.a(x0, y0) + q * f.a(x1, y1);
            mul[x * Q + y] = mul_fn(x0, x1, y0, y1);
        }
    }
    for (int x = 0; x < Q; ++x)
        for (int y = 0; y < Q; ++y)
            if (mul[x * Q + y] == 1) {
                inv[x] = y;
                break;
            }
}

}  // namespace

TableRing build_fq(int p, int n, int modulus_index, double limit) {
    check_params(p, n, limit);
    BaseField f = build_base(p, n);
    int q = f.q;
    // Monic irreducible quadratics s^2 + c1 s + c0: no root in F_q.
    int found = -1, c0 = 0, c1 = 0;
    for (int a1 = 0; a1 < q && found < modulus_index; ++a1)
        for (int a0 = 0; a0 < q && found < modulus_index; ++a0) {
            bool root = false;
            for (int x = 0; x < q && !root; ++x) root = f.a(f.a(f.m(x, x), f.m(a1, x)), a0) == 0;
            if (!root && ++found == modulus_index) {
                c1 = a1;
                c0 = a0;
            }
        }
    if (found < modulus_index) throw Error("modulus index " + std::to_string(modulus_index) + " out of range");

    TableRing r;
    r.p_ = p;
    r.n_ = n;
    r.q_ = q;
    r.base_modulus_ = f.modulus;
    r.base_modulus_.push_back(1);
    r.modulus_ = {c0, c1, 1};
    int nc0 = f.neg(c0), nc1 = f.neg(c1);
    // (x0 + x1 s)(y0 + y1 s) with s^2 = -c1 s - c0.
    fill_tables(r.add_, r.mul_, r.neg_, r.inv_, f, [&](int x0, int x1, int y0, int y1) {
        int t = f.m(x1, y1);
        int lo = f.a(f.m(x0, y0), f.m(nc0, t));
        int hi = f.a(f.a(f.m(x0, y1), f.m(x1, y0)), f.m(nc1, t));
        return lo + q * hi;
    });
    // Conjugation x -> x^q.
    int Q = q * q;
    r.conj_.assign(Q, 0);
    for (int x = 0; x < Q; ++x) {
        int y = 1;
        for (int e = 0; e < q; ++e) y = r.mul(y, x);
        r.conj_[x] = y;
    }
    for (int x = 0; x < Q; ++x)
        if ((r.conj_[x] == x) != r.in_base(x)) throw Error("Frobenius does not fix exactly the base field");
    return r;
}

TableRing build_dual(int p, int n, double limit) {
    check_params(p, n, limit);
    BaseField f = build_base(p, n);
    int q = f.q;
    TableRing r;
    r.p_ = p;
    r.n_ = n;
    r.q_ = q;
    r.dual_ = true;
    r.base_modulus_ = f.modulus;
    r.base_modulus_.push_back(1);
    // (x0 + x1 pi)(y0 + y1 pi) with pi^2 = 0.
    fill_tables(r.add_, r.mul_, r.neg_, r.inv_, f, [&](int x0, int x1, int y0, int y1) {
        return f.m(x0, y0) + q * f.a(f.m(x0, y1), f.m(x1, y0));
    });
    int Q = q * q;
    r.conj_.assign(Q, 0);
    for (int x = 0; x < Q; ++x) r.conj_[x] = x % q + q * f.neg(x / q);
    return r;
}

std::vector<Pair> admissible_pairs(const TableRing& ring) {
    std::vector<Pair> out;
    int q = ring.q();
    for (int a = 0; a < ring.size(); ++a) {
        if (ring.in_base(a)) continue;
        if (ring.is_dual() && ring.inv(a) < 0) continue;
        int na = ring.mul(a, ring.conj(a));
        for (int b = 1; b < q; ++b)
            if (ring.mul(b, ring.mul(b, b)) == na) out.push_back({a, b});
    }
    return out;
}

LemmaReport verify_lemma(const TableRing& ring, const Pair& pair, unsigned threads) {
    LemmaReport rep;
    rep.p = ring.p();
    rep.n = ring.n();
    rep.dual = ring.is_dual();
    rep.pair = pair;
    int q = ring.q(), Q = ring.size();
    rep.hypothesis = rep.dual ? q % 3 != 1 : q % 6 == 5;

    std::vector<int> norm(Q);
    for (int x = 0; x < Q; ++x) norm[x] = ring.mul(x, ring.conj(x));
    const int a = pair.a, b = pair.b, b2 = ring.mul(b, b);
    auto trivial = [&](int x) { return rep.dual ? x % q == 0 : x == 0; };

    struct Slice {
        std::uint64_t count = 0, nontrivial = 0;
        std::optional<std::array<int, 3>> first;
    };
    std::vector<Slice> slices(Q);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int l0 = next++; l0 < Q; l0 = next++) {
            Slice& s = slices[l0];
            int ac0 = ring.mul(a, ring.conj(l0));
            for (int l1 = 0; l1 < Q; ++l1) {
                int s01 = ring.add(norm[l0], ring.mul(b, norm[l1]));
                int t1 = ring.mul(b, ring.mul(ring.conj(l1), l0));
                for (int l2 = 0; l2 < Q; ++l2) {
                    if (ring.add(s01, ring.mul(b2, norm[l2])) != 0) continue;
                    int e2 = ring.add(ring.add(ring.mul(ac0, l2), t1), ring.mul(b2, ring.mul(ring.conj(l2), l1)));
                    if (e2 != 0) continue;
                    ++s.count;
                    if (trivial(l0) && trivial(l1) && trivial(l2)) continue;
                    ++s.nontrivial;
                    if (!s.first) s.first = std::array<int, 3>{l0, l1, l2};
                }
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& s : slices) {
        rep.solution_count += s.count;
        rep.nontrivial_count += s.nontrivial;
        if (!rep.first_nontrivial && s.first) rep.first_nontrivial = s.first;
    }
    rep.verdict = rep.nontrivial_count == 0;
    return rep;
}

LemmaSuite verify_all_pairs(const TableRing& ring, unsigned threads) {
    LemmaSuite suite;
    suite.p = ring.p();
    suite.n = ring.n();
    suite.dual = ring.is_dual();
    suite.all_verdicts = true;
    for (const auto& pair : admissible_pairs(ring)) {
        auto rep = verify_lemma(ring, pair, threads);
        suite.hypothesis = rep.hypothesis;
        suite.total_solutions += rep.solution_count;
        if (!rep.verdict) ++suite.pairs_with_nontrivial;
        suite.all_verdicts = suite.all_verdicts && rep.verdict;
        suite.reports.push_back(std::move(rep));
    }
    if (suite.reports.empty()) suite.hypothesis = ring.is_dual() ? ring.q() % 3 != 1 : ring.q() % 6 == 5;
    return suite;
}

std::string element_str(const TableRing& ring, int x) {
    auto comp = [&](int c) {
        if (ring.n() == 1) return std::to_string(c);
        auto d = digits(c, ring.p(), ring.n());
        std::string s = "[";
        for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
        return s + "]";
    };
    auto parts = ring.split(x);
    return comp(parts[0]) + "+" + comp(parts[1]) + (ring.is_dual() ? "pi" : "s");
}

}  // namespace cdalg
