// SPDX-License-Identifier: Apache-2.0

#include "cdalg/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <thread>

namespace cdalg {

std::array<Rat, 18> AlgElem::coords() const {
    std::array<Rat, 18> out;
    for (int j = 0; j < 3; ++j) {
        auto c = (*this)[j].coords();
        std::copy(c.begin(), c.end(), out.begin() + 6 * j);
    }
    return out;
}

std::string AlgElem::str() const {
    return "(" + l0.str() + ", " + l1.str() + ", " + l2.str() + ")";
}

bool operator<(const AlgElem& x, const AlgElem& y) {
    if (!(x.l0 == y.l0)) return x.l0 < y.l0;
    if (!(x.l1 == y.l1)) return x.l1 < y.l1;
    return x.l2 < y.l2;
}

// Mat3L

Mat3L::Mat3L(const TowerPtr& t) : e_(9, t->zero()) {}

Mat3L Mat3L::identity(const TowerPtr& t) {
    Mat3L m(t);
    for (int i = 0; i < 3; ++i) m(i, i) = t->one();
    return m;
}

Mat3L operator+(const Mat3L& x, const Mat3L& y) {
    Mat3L r(x);
    for (int i = 0; i < 9; ++i) r.e_[i] = x.e_[i] + y.e_[i];
    return r;
}

Mat3L operator*(const Mat3L& x, const Mat3L& y) {
    Mat3L r(x.e_[0].tower());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
    return r;
}

TowerElem Mat3L::det() const {
    const Mat3L& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::optional<Mat3L> Mat3L::inverse() const {
    const TowerPtr& t = e_[0].tower();
    Mat3L a(*this), inv = identity(t);
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int r = col; r < 3; ++r)
            if (!a(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < 3; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        TowerElem s = a(col, col).inverse();
        for (int j = 0; j < 3; ++j) {
            a(col, j) = s * a(col, j);
            inv(col, j) = s * inv(col, j);
        }
        for (int r = 0; r < 3; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            TowerElem factor = a(r, col);
            for (int j = 0; j < 3; ++j) {
                a(r, j) = a(r, j) - factor * a(col, j);
                inv(r, j) = inv(r, j) - factor * inv(col, j);
            }
        }
    }
    return inv;
}

// CyclicAlgebra

namespace {

TowerPtr make_tower(const AlgebraDef& def) { return Tower::create(def.tower); }

}  // namespace

CyclicAlgebra::CyclicAlgebra(const AlgebraDef& def)
    : def_(def),
      t_(make_tower(def)),
      a_(def.tower.d, def.a[0], def.a[1]),
      aL_(t_->elem(a_)),
      b_(t_->cubic(def.b[0], def.b[1], def.b[2])),
      w1_(rho(b_)),
      w2_(rho(b_) * rho2(b_)) {
    if (a_.is_zero()) throw Error("structure constant a must be nonzero");
    if (b_.is_zero()) throw Error("involution constant b must be nonzero");
}

ValidationReport CyclicAlgebra::validate() const {
    ValidationReport rep = tower_validate(def_.tower);
    rep.add("a_nonzero", !a_.is_zero());
    rep.add("a_not_in_F", !a_.is_rational(), "a = " + a_.str());
    rep.add("b_nonzero", !b_.is_zero());
    Rat na = norm_E_F(a_), nb = norm_M_F(b_);
    rep.add("norm_equation", na == nb, "N_E/F(a) = " + na.get_str() + ", N_M/F(b) = " + nb.get_str());
    return rep;
}

AlgElem CyclicAlgebra::zero() const { return {t_->zero(), t_->zero(), t_->zero()}; }

AlgElem CyclicAlgebra::one() const { return {t_->one(), t_->zero(), t_->zero()}; }

AlgElem CyclicAlgebra::z() const { return {t_->zero(), t_->one(), t_->zero()}; }

AlgElem CyclicAlgebra::scalar(const TowerElem& l) const { return {l, t_->zero(), t_->zero()}; }

AlgElem CyclicAlgebra::monomial(const TowerElem& l, int j) const {
    AlgElem x = zero();
    x[((j % 3) + 3) % 3] = l;
    return x;
}

AlgElem CyclicAlgebra::from_coords(const std::array<Rat, 18>& c) const {
    auto part = [&](int j) {
        return t_->elem(std::array<Rat, 6>{c[6 * j], c[6 * j + 1], c[6 * j + 2], c[6 * j + 3], c[6 * j + 4], c[6 * j + 5]});
    };
    return {part(0), part(1), part(2)};
}

AlgElem CyclicAlgebra::mul(const AlgElem& x, const AlgElem& y) const {
    const auto &l0 = x.l0, &l1 = x.l1, &l2 = x.l2;
    const auto &k0 = y.l0, &k1 = y.l1, &k2 = y.l2;
    return {l0 * k0 + aL_ * (l1 * rho(k2) + l2 * rho2(k1)),
            l0 * k1 + l1 * rho(k0) + aL_ * (l2 * rho2(k2)),
            l0 * k2 + l1 * rho(k1) + l2 * rho2(k0)};
}

AlgElem CyclicAlgebra::power(const AlgElem& x, std::uint64_t n) const {
    AlgElem result = one(), base = x;
    while (n) {
        if (n & 1) result = mul(result, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return result;
}

AlgElem CyclicAlgebra::inverse(const AlgElem& x) const {
    auto inv = embed(x).inverse();
    if (!inv) throw Error("element is not invertible (reduced norm 0)");
    return {(*inv)(0, 0), (*inv)(0, 1), (*inv)(0, 2)};
}

Mat3L CyclicAlgebra::embed(const AlgElem& x) const {
    Mat3L m(t_);
    m(0, 0) = x.l0;
    m(0, 1) = x.l1;
    m(0, 2) = x.l2;
    m(1, 0) = aL_ * rho(x.l2);
    m(1, 1) = rho(x.l0);
    m(1, 2) = rho(x.l1);
    m(2, 0) = aL_ * rho2(x.l1);
    m(2, 1) = aL_ * rho2(x.l2);
    m(2, 2) = rho2(x.l0);
    return m;
}

QuadElem CyclicAlgebra::reduced_norm(const AlgElem& x) const {
    const QuadElem& a = a_;
    return norm_L_E(x.l0) + a * norm_L_E(x.l1) + a * a * norm_L_E(x.l2) -
           a * trace_L_E(x.l0 * rho(x.l1) * rho2(x.l2));
}

QuadElem CyclicAlgebra::reduced_trace(const AlgElem& x) const { return trace_L_E(x.l0); }

AlgElem CyclicAlgebra::alpha(const AlgElem& x) const {
    TowerElem inv_a = aL_.inverse();
    return {tau(x.l0), inv_a * rho(w2_ * tau(x.l2)), inv_a * rho2(w1_ * tau(x.l1))};
}

AlgElem CyclicAlgebra::beta(const AlgElem& x, const CubicElem& c) const {
    if (c.is_zero()) throw Error("beta requires c != 0");
    AlgElem cc = scalar(t_->elem(c));
    AlgElem ci = scalar(t_->elem(c.inverse()));
    return mul(mul(ci, alpha(x)), cc);
}

Mat3L CyclicAlgebra::alpha_matrix(const Mat3L& m) const {
    std::array<TowerElem, 3> h{t_->one(), t_->elem(w1_), t_->elem(w2_)};
    std::array<TowerElem, 3> hinv{t_->one(), t_->elem(w1_.inverse()), t_->elem(w2_.inverse())};
    Mat3L r(t_);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = h[i] * tau(m(j, i)) * hinv[j];
    return r;
}

// Zero-divisor scan

namespace {

using cplx = std::complex<double>;
using CMat = std::array<cplx, 9>;

cplx cdet(const CMat& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

struct ScanContext {
    std::vector<double> values;
    std::vector<CMat> basis;  // 18 embedded basis elements
    std::size_t zero_index = 0;
    double threshold = 0;
};

class ZeroScanner {
public:
    ZeroScanner(const ScanContext& ctx, const CyclicAlgebra& alg, const std::vector<Rat>& grid)
        : ctx_(ctx), alg_(alg), grid_(grid), idx_(18, 0) {}

    std::vector<std::vector<std::uint8_t>> hits;

    void run_prefix(const std::vector<std::size_t>& prefix, bool nonzero) {
        CMat m{};
        for (std::size_t lvl = 0; lvl < prefix.size(); ++lvl) {
            idx_[lvl] = static_cast<std::uint8_t>(prefix[lvl]);
            add(m, lvl, prefix[lvl]);
        }
        rec(prefix.size(), m, nonzero);
    }

private:
    void add(CMat& m, std::size_t lvl, std::size_t vi) const {
        double v = ctx_.values[vi];
        if (v == 0) return;
        const CMat& b = ctx_.basis[lvl];
        for (int i = 0; i < 9; ++i) m[i] += v * b[i];
    }

    void rec(std::size_t lvl, const CMat& m, bool nonzero) {
        if (lvl == 18) {
            if (!nonzero) return;
            if (std::abs(cdet(m)) > ctx_.threshold) return;
            std::array<Rat, 18> c;
            for (int i = 0; i < 18; ++i) c[i] = grid_[idx_[i]];
            if (alg_.reduced_norm(alg_.from_coords(c)).is_zero())
                hits.emplace_back(idx_.begin(), idx_.end());
            return;
        }
        // First nonzero coordinate positive: x and -x are both reported at merge.
        std::size_t start = nonzero ? 0 : ctx_.zero_index;
        for (std::size_t vi = start; vi < ctx_.values.size(); ++vi) {
            CMat next = m;
            add(next, lvl, vi);
            idx_[lvl] = static_cast<std::uint8_t>(vi);
            rec(lvl + 1, next, nonzero || vi != ctx_.zero_index);
        }
    }

    const ScanContext& ctx_;
    const CyclicAlgebra& alg_;
    const std::vector<Rat>& grid_;
    std::vector<std::uint8_t> idx_;
};

}  // namespace

ZeroDivisorScan zero_divisor_scan(const CyclicAlgebra& alg, int height, std::size_t max_hits, double grid_limit,
                                  unsigned threads) {
    ZeroDivisorScan out;
    out.height = height;
    if (height <= 0) return out;
    std::vector<Rat> grid = height_grid(height);
    double points = std::pow(static_cast<double>(grid.size()), 18.0);
    if (points > grid_limit)
        throw Error("zero-divisor grid of " + std::to_string(points) + " points exceeds the limit " +
                    std::to_string(grid_limit));
    out.candidates = static_cast<std::uint64_t>(points) - 1;

    const Tower& t = *alg.tower();
    ScanContext ctx;
    for (const auto& g : grid) ctx.values.push_back(g.get_d());
    ctx.zero_index = static_cast<std::size_t>(std::find(grid.begin(), grid.end(), Rat(0)) - grid.begin());

    // sigma: theta -> r0, rho^k(theta) -> r_k, sqrt(-d) -> i sqrt(d).
    std::array<double, 3> r;
    r[0] = real_embeddings(t)[0];
    auto g = t.params().g;
    r[1] = g[0].get_d() + g[1].get_d() * r[0] + g[2].get_d() * r[0] * r[0];
    r[2] = g[0].get_d() + g[1].get_d() * r[1] + g[2].get_d() * r[1] * r[1];
    cplx sd(0, std::sqrt(static_cast<double>(t.d())));
    cplx a(alg.a().x0().get_d(), alg.a().x1().get_d() * sd.imag());
    double max_entry = 0;
    for (int i = 0; i < 18; ++i) {
        int j = i / 6, part = (i % 6) / 3, k = i % 3;
        std::array<cplx, 3> s;  // sigma(rho^e(l)) for e = 0, 1, 2
        for (int e = 0; e < 3; ++e) s[e] = std::pow(r[e], k) * (part ? sd : cplx(1));
        CMat m{};
        // Rows (l0, l1, l2), (a rho l2, rho l0, rho l1), (a rho^2 l1, a rho^2 l2, rho^2 l0).
        if (j == 0) { m[0] = s[0]; m[4] = s[1]; m[8] = s[2]; }
        if (j == 1) { m[1] = s[0]; m[5] = s[1]; m[6] = a * s[2]; }
        if (j == 2) { m[2] = s[0]; m[3] = a * s[1]; m[7] = a * s[2]; }
        for (auto& v : m) max_entry = std::max(max_entry, std::abs(v));
        ctx.basis.push_back(m);
    }
    double vmax = std::abs(ctx.values.front());
    double entry = 6 * vmax * max_entry;  // six basis terms feed each entry
    ctx.threshold = 1e3 * std::numeric_limits<double>::epsilon() * 6 * entry * entry * entry + 1e-300;

    // Tasks: all admissible prefixes of length 2.
    std::vector<std::pair<std::vector<std::size_t>, bool>> tasks;
    for (std::size_t v0 = ctx.zero_index; v0 < grid.size(); ++v0) {
        bool nz0 = v0 != ctx.zero_index;
        for (std::size_t v1 = nz0 ? 0 : ctx.zero_index; v1 < grid.size(); ++v1)
            tasks.push_back({{v0, v1}, nz0 || v1 != ctx.zero_index});
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<std::vector<std::uint8_t>>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            ZeroScanner s(ctx, alg, grid);
            s.run_prefix(tasks[i].first, tasks[i].second);
            results[i] = std::move(s.hits);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<std::vector<std::uint8_t>> all;
    std::size_t neg_index_base = grid.size() - 1;
    for (auto& res : results)
        for (auto& h : res) {
            std::vector<std::uint8_t> neg(h.size());
            for (std::size_t i = 0; i < h.size(); ++i) neg[i] = static_cast<std::uint8_t>(neg_index_base - h[i]);
            all.push_back(std::move(neg));
            all.push_back(std::move(h));
        }
    std::sort(all.begin(), all.end());
    if (all.size() > max_hits) {
        all.resize(max_hits);
        out.truncated = true;
    }
    for (const auto& h : all) {
        std::array<Rat, 18> c;
        for (int i = 0; i < 18; ++i) c[i] = grid[h[i]];
        out.zero_divisors.push_back(alg.from_coords(c));
    }
    return out;
}

}  // namespace cdalg
