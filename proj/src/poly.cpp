// SPDX-License-Identifier: Apache-2.0

#include "cdalg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace cdalg {

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rat& c) { return QPoly({c}); }

QPoly QPoly::x() { return QPoly({Rat(0), Rat(1)}); }

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat QPoly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    Rat l = lead();
    std::vector<Rat> d(c_);
    for (auto& v : d) v /= l;
    return QPoly(std::move(d));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a) {
    std::vector<Rat> r(a.c_);
    for (auto& v : r) v = -v;
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(r));
}

QPoly operator*(const Rat& s, const QPoly& a) { return QPoly::constant(s) * a; }

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rat> rem(a.c_);
    int db = b.degree();
    std::vector<Rat> q(std::max(0, a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        Rat t = rem[i] / b.lead();
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= t * b.c_[j];
    }
    return {QPoly(std::move(q)), QPoly(std::move(rem))};
}

QPoly QPoly::compose(const QPoly& b) const {
    QPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * b + constant(*it);
    return acc;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << (sgn(c_[i]) < 0 ? " - " : " + ");
        else if (sgn(c_[i]) < 0) os << "-";
        Rat a = abs(c_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) os << "X";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        QPoly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int sign_changes(const std::vector<QPoly>& chain, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& q : chain) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int sturm_count(const std::vector<QPoly>& chain, const Rat& lo, const Rat& hi) {
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

Rat root_bound(const QPoly& p) {
    Rat m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = abs(p.coeff(i) / p.lead());
        if (r > m) m = r;
    }
    return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const QPoly& p) {
    if (p.degree() < 1) return {};
    auto chain = sturm_chain(p);
    std::vector<RootInterval> out;
    std::vector<RootInterval> work{{-root_bound(p), root_bound(p)}};
    while (!work.empty()) {
        RootInterval iv = work.back();
        work.pop_back();
        int n = sturm_count(chain, iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rat mid = (iv.lo + iv.hi) / 2;
        work.push_back({mid, iv.hi});
        work.push_back({iv.lo, mid});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_root(const QPoly& p, RootInterval iv, const Rat& width) {
    auto chain = sturm_chain(p);
    while (iv.hi - iv.lo > width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        if (sturm_count(chain, iv.lo, mid) == 1) iv.hi = mid;
        else iv.lo = mid;
    }
    return iv;
}

}  // namespace cdalg
