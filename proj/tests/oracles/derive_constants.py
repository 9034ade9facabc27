#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
#
# Independent sympy computations whose outputs are frozen into the C++
# suites. Nothing here shares code with the library; rerun to audit.

from sympy import (Poly, Rational, discriminant, expand, factorint, invert,
                   nroots, primerange, rem, sqrt, symbols, Matrix, I, simplify,
                   legendre_symbol)

X, t = symbols("X t")


def section(title):
    print(f"\n== {title}")


f = X**3 - 13 * X + 13
ft = f.subs(X, t)

section("tower")
disc = discriminant(f, X)
print("disc(f) =", disc, factorint(disc))
fp_inv = invert(3 * t**2 - 13, ft, t)
g = rem(expand((-t + 65 * fp_inv) / 2), ft, t)
print("g (branch +1) =", g)
print("f(g) mod f =", rem(expand(f.subs(X, g)), ft, t))
print("N_M/Q(theta) =", -Poly(f, X).all_coeffs()[-1])
print("disc(X^3 - 2) =", discriminant(X**3 - 2, X))

roots = sorted(r for r in nroots(f, n=30) if abs(r.as_real_imag()[1]) < 1e-20)
roots = [r.as_real_imag()[0] for r in roots]
print("real roots:", roots)
for name, expr in [("theta", t), ("theta-2", t - 2), ("theta^2-2theta", t**2 - 2 * t),
                   ("theta+5", t + 5), ("theta^2", t**2)]:
    signs = [1 if expr.subs(t, r) > 0 else -1 for r in roots]
    print(f"signs of {name}:", signs)

section("primes for d = 3")
for p in primerange(2, 60):
    rts = [x for x in range(p) if (x**3 - 13 * x + 13) % p == 0]
    if p == 3:
        e = "ramified"
    elif p == 2:
        e = "inert"  # -3 = 5 mod 8
    else:
        e = "split" if legendre_symbol((-3) % p, p) == 1 else "inert"
    print(p, "E:", e, "roots of f:", rts)

section("property A / B for d = 3, p < 150")
disc_f = int(discriminant(f, X))
for d in (3, 7):
    A, B = [], []
    for p in primerange(2, 150):
        D = -d if d % 4 == 3 else -4 * d
        if D % p == 0:
            e = "ramified"
        elif p == 2:
            e = "split" if D % 8 == 1 else "inert"
        else:
            e = "split" if legendre_symbol(D % p, p) == 1 else "inert"
        nroots_p = len([x for x in range(p) if (x**3 - 13 * x + 13) % p == 0])
        m = "ramified" if disc_f % p == 0 else {3: "split_completely", 0: "inert", 1: "partial"}[nroots_p]
        sixth = p not in (2, 3) and p % 6 == 1
        if p != 2 and e == "inert" and m == "split_completely":
            A.append(p)
        if p != 2 and e != "split" and not sixth:
            B.append(p)
    print(f"d = {d}: property A {A}")
    print(f"d = {d}: property B {B}")

section("discriminants")
# Tr_M/Q(theta^k) by Newton: p0 = 3, p1 = 0, p2 = 26, p3 = -39, p4 = 338.
pk = [3, 0, 26, -39, 338]
print("det Tr(theta^(i+j)) =", Matrix(3, 3, lambda i, j: pk[i + j]).det())
