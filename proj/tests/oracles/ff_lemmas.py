#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
#
# Independent brute force for the two finite-field systems (n = 1 only).
# F_{p^2} is modelled as F_p[s]/(s^2 - r) with r the least non-residue; the
# dual ring as pairs (x0, x1) = x0 + x1 pi. Pair enumeration and solution
# counts are printed and frozen into tests/test_ffverify.cpp.

import itertools
import sys


def field(p):
    r = next(x for x in range(2, p) if pow(x, (p - 1) // 2, p) == p - 1)
    els = [(x, y) for y in range(p) for x in range(p)]
    mul = lambda u, v: ((u[0] * v[0] + r * u[1] * v[1]) % p, (u[0] * v[1] + u[1] * v[0]) % p)
    conj = lambda u: (u[0], (-u[1]) % p)
    base = [(x, 0) for x in range(p)]
    return els, mul, conj, base, lambda u: u[1] == 0, lambda u: u == (0, 0)


def dual(p):
    els = [(x, y) for y in range(p) for x in range(p)]
    mul = lambda u, v: (u[0] * v[0] % p, (u[0] * v[1] + u[1] * v[0]) % p)
    conj = lambda u: (u[0], (-u[1]) % p)
    base = [(x, 0) for x in range(p)]
    return els, mul, conj, base, lambda u: u[1] == 0, lambda u: u[0] == 0


def add(p, *xs):
    return (sum(x[0] for x in xs) % p, sum(x[1] for x in xs) % p)


def run(kind, p):
    els, mul, conj, base, in_base, trivial = (field if kind == "field" else dual)(p)
    zero = (0, 0)
    pairs = []
    for a in els:
        if in_base(a) or (kind == "dual" and a[0] == 0):
            continue
        for b in base:
            if b == zero:
                continue
            if mul(a, conj(a)) == mul(b, mul(b, b)):
                pairs.append((a, b))
    total = 0
    failing = 0
    for a, b in pairs:
        b2 = mul(b, b)
        count = 0
        bad = 0
        for l0, l1, l2 in itertools.product(els, repeat=3):
            e1 = add(p, mul(l0, conj(l0)), mul(b, mul(l1, conj(l1))), mul(b2, mul(l2, conj(l2))))
            if e1 != zero:
                continue
            e2 = add(p, mul(a, mul(conj(l0), l2)), mul(b, mul(conj(l1), l0)), mul(b2, mul(conj(l2), l1)))
            if e2 != zero:
                continue
            count += 1
            if not (trivial(l0) and trivial(l1) and trivial(l2)):
                bad += 1
        total += count
        failing += bad > 0
    print(f"{kind} p={p}: pairs={len(pairs)} total_solutions={total} pairs_with_nontrivial={failing}")


for kind, p in [("field", 5), ("field", 7), ("dual", 3), ("dual", 5), ("dual", 7)]:
    run(kind, p)
    sys.stdout.flush()
