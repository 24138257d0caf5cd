"""Independent derivation of the frozen test values (plain Python integers).

Run once; the printed values are pasted into tests/frozen.hpp. Nothing here shares
code with the C++ library.
"""
from fractions import Fraction
from math import comb, gcd, log
import random


def ordp(n, p):
    if n == 0:
        return 10**9
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def peval(c, x):  # c: dict exp -> coef
    return sum(a * x**e for e, a in c.items())


def pderiv(c):
    return {e - 1: a * e for e, a in c.items() if e > 0}


def poly_divmod(a, b):
    # dense lists of Fractions, constant first
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        c = a[-1] / b[-1]
        s = len(a) - len(b)
        q[s] = c
        for i, bi in enumerate(b):
            a[s + i] -= c * bi
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def dense(c):
    d = max(c)
    out = [Fraction(0)] * (d + 1)
    for e, a in c.items():
        out[e] = Fraction(a)
    return out


def pgcd(a, b):
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return [x / a[-1] for x in a]


def sqfree(c):
    lo = min(c)
    c = {e - lo: a for e, a in c.items()}
    a = dense(c)
    da = [a[i] * i for i in range(1, len(a))]
    g = pgcd(a, da) if len(da) else [Fraction(1)]
    q, _ = poly_divmod(a, g)
    den = 1
    for x in q:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in q]
    g2 = 0
    for v in ints:
        g2 = gcd(g2, v)
    return {i: v // g2 for i, v in enumerate(ints) if v}


def hull_valuations(c, p):
    pts = sorted((e, ordp(a, p)) for e, a in c.items())
    vs = set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            (x0, y0), (x1, y1) = pts[i], pts[j]
            if (y0 - y1) % (x1 - x0):
                continue
            v = (y0 - y1) // (x1 - x0)
            m = y0 + x0 * v
            if all(y + x * v >= m for x, y in pts):
                vs.add(v)
    return sorted(vs)


def rescale(c, v, p):
    # p^{-m} c(p^v x) as integers
    vals = {e: Fraction(a) * Fraction(p) ** (e * v) for e, a in c.items()}
    den = 1
    for x in vals.values():
        den = den * x.denominator // gcd(den, x.denominator)
    ints = {e: int(x * den) for e, x in vals.items()}
    m = min(ordp(a, p) for a in ints.values())
    return {e: a // p**m for e, a in ints.items()}


def unit_roots(c, p, depth=60):
    """Unit roots in Z_p of a square-free integer polynomial, as (start, k) Hensel classes."""
    dc = pderiv(c)
    out = []
    work = [(x, 1) for x in range(1, p) if peval(c, x) % p == 0]
    while work:
        x, k = work.pop()
        l = ordp(peval(dc, x), p)
        if l < k:
            if ordp(peval(c, x), p) >= k + l:
                out.append((x, k, l))
            continue
        assert k < depth
        for t in range(p):
            y = x + p**k * t
            if peval(c, y) % p ** (k + 1) == 0:
                work.append((y, k + 1))
    return out


def lift(c, p, x, l, digits):
    dc = pderiv(c)
    mod = p ** (digits + l + 1)
    for _ in range(200):
        G = peval(c, x)
        if G == 0 or ordp(G, p) - l >= digits:
            break
        D = peval(dc, x)
        u = D // p**l
        x = (x - (G // p**l) * pow(u, -1, mod)) % mod
    return x % p**digits


def qp_roots(c, p, digits=12):
    s = sqfree(c)
    out = []
    for v in hull_valuations(s, p):
        g = rescale(s, v, p)
        for x, k, l in unit_roots(g, p):
            out.append((v, lift(g, p, x, l, digits)))
    return sorted(out)


def show(name, val):
    print(f"{name} = {val}")


show("pow_16_85_mod_17_3", pow(16, 85, 17**3))
show("inv_2_mod_25", pow(2, -1, 25))
show("roots_1_x_5x2_p5", qp_roots({0: 1, 1: 1, 2: 5}, 5))
for p in (7, 17):
    g = next(g for g in range(2, p) if len({pow(g, i, p) for i in range(1, p)}) == p - 1)
    show(f"generator_{p}", g)
best = min(max(abs(((a * e + 50) % 100) - 50) for a in (50, 99)) for e in range(1, 100))
show("lattice_50_99_101_best_centered_max", best)
show("count_x10_11x2_m12_p2", len(qp_roots({0: -12, 2: 11, 10: 1}, 2)))
show("count_x20_m10x2_738_p3", len(qp_roots({0: 738, 2: -10, 20: 1}, 3)))
show("count_x10_m10x_738_p3", len(qp_roots({0: 738, 1: -10, 10: 1}, 3)))
show("count_1_x2_p3", len(qp_roots({0: 1, 2: 1}, 3)))
show("roots_8_mx3_p5", qp_roots({0: 8, 3: -1}, 5, 4))
show("count_1_mx340_p17", len(qp_roots({0: 1, 340: -1}, 17, 4)))
show("count_1_mx397_p17", len(qp_roots({0: 1, 397: -1}, 17, 4)))
r = [u for v, u in qp_roots({0: 1, 340: -1}, 17, 8) if u % 17 == 4]
show("lift_4_2_17_mod_17_8", r)
show("cube_roots_1_p7", sorted(u % 7 for v, u in qp_roots({0: -1, 3: 1}, 7)))
# tetranomial 3^6 x^4 - x^2 + 2*3^2 x - 3^4: the two roots of valuation 2
rt = [(v, u) for v, u in qp_roots({0: -81, 1: 18, 2: -1, 4: 729}, 3, 20) if v == 2]
z = [3**v * u for v, u in rt]
show("tetra_3_3_4_roots", rt)
show("tetra_3_3_4_order", ordp(z[0] - z[1], 3))
# Q for (abar2, abar3) = (1, 3): (3 - 1) - 3x + x^3 divided by (x-1)^2
q, rem = poly_divmod(dense({0: 2, 1: -3, 3: 1}), dense({0: 1, 1: -2, 2: 1}))
show("Q_1_3", [int(x) for x in q])
show("mahler_4_16", 0.5 * log(3) - 4.5 * log(5) - 3 * log(16))
show("degenerate_sep_d3_r1_H10_p3_a2_1",
     log(10, 3) + log(30, 3) + log(1 * 27 * 4, 3) + 1 / 2)
# random trinomials: oracle counts frozen for the solver regression test
random.seed(20260101)
rows = []
for _ in range(40):
    p = random.choice([2, 3, 5, 7, 11, 13])
    a3 = random.randint(2, 12)
    a2 = random.randint(1, a3 - 1)
    cs = [random.choice([i for i in range(-50, 51) if i]) for _ in range(3)]
    rows.append((cs[0], cs[1], cs[2], a2, a3, p, len(qp_roots({0: cs[0], a2: cs[1], a3: cs[2]}, p, 4))))
show("trinomial_rows", rows)
