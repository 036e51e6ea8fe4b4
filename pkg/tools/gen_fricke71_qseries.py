#!/usr/bin/env python3
"""Generate the 71A principal-modulus coefficient file (data/fricke_71.qseries).

Construction
------------
X0(71) is hyperelliptic of genus 6 and its hyperelliptic involution is the
Fricke involution, so the degree-2 quotient map is given by the principal
modulus t of the Fricke group of level 71.  Writing the weight-2 cusp forms
on Gamma0(71) in echelon order, the two forms h5 = q^5 + O(q^7) and
h6 = q^6 + O(q^7) are (up to scale) t*dt/y and dt/y, hence

    t = h5/h6 + const.

h6 is the eta product (eta(tau)*eta(71*tau))^2.  h5 is obtained by exact
linear algebra on the span of pairwise products of the four weight-1 theta
series attached to the reduced binary quadratic forms of discriminant -71,
which (together with the weight-2 Eisenstein combination) spans all of
M2(Gamma0(71)).

Certification inside this script:
  * the echelon combination reproducing the eta product is checked
    coefficient-by-coefficient (theta arithmetic vs. pentagonal products),
  * the quotient is checked to be integral with constant term normalized
    to zero,
  * the full coefficient list is checked against the self-replication
    identities coming from the order-2, 3 and 4 modular equations,
  * numerically (60 digits): invariance under tau -> -1/(71*tau), and the
    values at the two order-2 elliptic fixed points are roots of the known
    degree-7 class polynomials for discriminants -284 and -71.

Output: one coefficient per line, q^-1 first, 3600 lines.
"""

from fractions import Fraction
from math import isqrt
from pathlib import Path

import mpmath as mp

N_COEFFS = 3600          # shipped coefficients a(-1)..a(3598)
LEN = N_COEFFS + 12      # working series length (powers of q up to LEN-1)
LEVEL = 71

HERE = Path(__file__).resolve().parent
OUT = HERE.parent / "src" / "cfq" / "data" / "fricke_71.qseries"

# degree-7 class polynomials for discriminants -284 and -71 (lowest degree
# first); used only as a numerical cross-check of the generated series
POLY_284 = [-11, 4, 18, 5, -11, -7, 0, 1]
POLY_71 = [1, 0, -2, -3, 1, 5, 4, 1]


# ----------------------------------------------------------------------
# exact series helpers (dense lists of ints/Fractions, index = q-power)

def pentagonal_unit(length, scale=1):
    """Coefficients of prod_{m>=1} (1 - q^(scale*m)) up to q^(length-1)."""
    out = [0] * length
    out[0] = 1
    k = 1
    while True:
        e1 = scale * k * (3 * k - 1) // 2
        e2 = scale * k * (3 * k + 1) // 2
        if e1 >= length and e2 >= length:
            break
        s = -1 if k % 2 else 1
        if e1 < length:
            out[e1] = s
        if e2 < length:
            out[e2] = s
        k += 1
    return out


def conv(a, b, length):
    """Dense convolution, truncated; skips zero terms of the sparser input."""
    if sum(1 for x in a if x) > sum(1 for x in b if x):
        a, b = b, a
    out = [0] * length
    for i, ai in enumerate(a):
        if not ai or i >= length:
            continue
        top = min(len(b), length - i)
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def eta_product_squared(length):
    """q-coefficients of q^6 * prod (1-q^m)^2 (1-q^(71m))^2."""
    u1 = pentagonal_unit(length, 1)
    u71 = pentagonal_unit(length, 71)
    c1 = conv(u1, u1, length)
    c2 = conv(u71, u71, length)
    unit = conv(c1, c2, length)
    out = [0] * length
    for i, v in enumerate(unit):
        if i + 6 < length and v:
            out[i + 6] = v
    return out


def theta_coeffs(a, b, c, length):
    """Representation numbers of a*x^2 + b*x*y + c*y^2 below `length`."""
    out = [0] * length
    disc = b * b - 4 * a * c
    assert disc < 0 and a > 0
    ymax = isqrt(4 * a * (length - 1) // (-disc)) + 2
    for y in range(-ymax, ymax + 1):
        # a*x^2 + (b*y)*x + (c*y^2 - L) <= 0
        dd = b * b * y * y - 4 * a * (c * y * y - (length - 1))
        if dd < 0:
            continue
        root = isqrt(dd)
        xlo = (-b * y - root) // (2 * a) - 1
        xhi = (-b * y + root) // (2 * a) + 1
        for x in range(xlo, xhi + 1):
            q = a * x * x + b * x * y + c * y * y
            if 0 <= q < length:
                out[q] += 1
    return out


def kronecker_product(a, b, length, slot_bits=64):
    """Convolution of nonnegative series via big-integer multiplication."""
    assert all(v >= 0 for v in a) and all(v >= 0 for v in b)
    za = sum(v << (slot_bits * i) for i, v in enumerate(a))
    zb = sum(v << (slot_bits * i) for i, v in enumerate(b))
    zc = za * zb
    mask = (1 << slot_bits) - 1
    return [(zc >> (slot_bits * i)) & mask for i in range(length)]


def sigma_table(length):
    sig = [0] * length
    for d in range(1, length):
        for m in range(d, length, d):
            sig[m] += d
    return sig


# ----------------------------------------------------------------------
# exact linear algebra over Q

def rref(rows):
    """Reduced row echelon form over Fraction; returns (rref, pivots, ops).

    ops records the row operations as a matrix T with rref = T * rows.
    """
    nrows = len(rows)
    ncols = len(rows[0])
    m = [[Fraction(x) for x in row] for row in rows]
    t = [[Fraction(1 if i == j else 0) for j in range(nrows)] for i in range(nrows)]
    pivots = []
    r = 0
    for col in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][col] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        t[r], t[pr] = t[pr], t[r]
        inv = Fraction(1) / m[r][col]
        m[r] = [x * inv for x in m[r]]
        t[r] = [x * inv for x in t[r]]
        for i in range(nrows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
                t[i] = [x - f * y for x, y in zip(t[i], t[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, pivots, t


def main():
    print("theta series ...")
    forms = [(1, 1, 18), (2, 1, 9), (3, 1, 6), (4, 3, 5)]
    thetas = [theta_coeffs(a, b, c, LEN) for (a, b, c) in forms]

    print("pairwise products (Kronecker) ...")
    prods = []
    prod_index = []
    for i in range(4):
        for j in range(i, 4):
            prods.append(kronecker_product(thetas[i], thetas[j], LEN))
            prod_index.append((i, j))

    print("Eisenstein series ...")
    sig = sigma_table(LEN)
    eis = [0] * LEN
    eis[0] = 70
    for n in range(1, LEN):
        eis[n] = 24 * (sig[n] - (71 * sig[n // 71] if n % 71 == 0 else 0))

    gens = [eis] + prods           # 11 generators of M2(Gamma0(71))
    ncheck = 21
    mat = [g[:ncheck] for g in gens]
    red, pivots, _ = rref(mat)
    print("pivot columns:", pivots)
    assert pivots == [0, 1, 2, 3, 4, 5, 6], pivots

    # Solve for combinations with prescribed leading coefficients. The
    # valuation filtration of M2 at the infinite cusp is exactly {0,...,6},
    # so a combination vanishing through q^6 is the zero form and the two
    # series below are unique.
    def solve_combo(target7):
        # find x with sum x_i gens[i] having first 7 coefficients = target7
        cols = 7
        aug = [[Fraction(gens[i][c]) for i in range(len(gens))] + [Fraction(target7[c])]
               for c in range(cols)]
        r, piv, _ = rref(aug)
        # back-substitute: treat as linear system in len(gens) unknowns
        x = [Fraction(0)] * len(gens)
        for row in r:
            lead = None
            for k in range(len(gens)):
                if row[k] != 0:
                    lead = k
                    break
            if lead is None:
                assert row[-1] == 0, "inconsistent system"
                continue
            x[lead] = row[-1] - sum(row[k] * x[k] for k in range(lead + 1, len(gens)))
        # verify on all check columns
        for c in range(cols):
            assert sum(x[i] * gens[i][c] for i in range(len(gens))) == target7[c]
        return x

    x5 = solve_combo([0, 0, 0, 0, 0, 1, 0])
    x6 = solve_combo([0, 0, 0, 0, 0, 0, 1])

    print("assembling full series ...")

    def full_series(x):
        out = [Fraction(0)] * LEN
        for xi, g in zip(x, gens):
            if xi == 0:
                continue
            for k, v in enumerate(g):
                if v:
                    out[k] += xi * v
        return out

    e5 = full_series(x5)
    e6 = full_series(x6)

    print("checking e6 against the eta product ...")
    etap = eta_product_squared(LEN)
    for k in range(LEN):
        assert e6[k] == etap[k], (k, e6[k], etap[k])
    print("  e6 == (eta(tau) eta(71 tau))^2 exactly")

    # clear denominators of e5 and divide: t * e6 = e5.  Write
    # e5 = q^5 * V, e6 = q^6 * U, t = q^-1 * W with V, U, W power series
    # having constant term 1; then W = V / U.
    den = 1
    for v in e5:
        den = den * v.denominator // __import__("math").gcd(den, v.denominator)
    assert e5[:5] == [0] * 5 and e5[5] == 1
    assert etap[:6] == [0] * 6 and etap[6] == 1
    vser = [int(v * den) for v in e5[5:]]          # den * V
    user = etap[6:]                                # U, integer, u_0 = 1

    print(f"dividing series (common denominator {den}) ...")
    tlen = LEN - 7
    w = [0] * tlen                                 # den * W
    for m in range(tlen):
        acc = vser[m]
        for k in range(m):
            wk = w[k]
            if wk:
                acc -= wk * user[m - k]
        w[m] = acc
    coeffs = []
    for k, v in enumerate(w):
        q, r = divmod(v, den)
        assert r == 0, f"non-integral coefficient at index {k - 1}"
        coeffs.append(q)
    # coeffs[k] = a(k-1); normalize constant term to 0
    c0 = coeffs[1]
    print(f"  leading {coeffs[0]}, constant before normalization {c0}")
    assert coeffs[0] == 1
    coeffs[1] = 0
    a = {k - 1: v for k, v in enumerate(coeffs)}
    nmax = len(coeffs) - 2     # largest index with a known coefficient

    print("first coefficients:", [a[k] for k in range(1, 11)])
    print("growth samples a(20), a(50), a(100), a(500), a(3000):",
          [a[k] for k in (20, 50, 100, 500, 3000)])

    # ------------------------------------------------------------------
    # replication identities (order 2, 3, 4 modular equations with all
    # replicates equal to the function itself)
    print("replication checks ...")

    def gpow_coeffs(power, upto):
        g = [0] + [a[k] for k in range(1, upto + 1)]     # g[k] = a(k), a(0)=0
        cur = g[: upto + 1]
        for _ in range(power - 1):
            cur = conv(cur, g[: upto + 1], upto + 1)
        return cur

    half = nmax // 2
    g2 = gpow_coeffs(2, half + 4)
    g3 = gpow_coeffs(3, nmax // 3 + 4)
    g4 = gpow_coeffs(4, nmax // 4 + 4)

    n2 = n3 = n4 = 0
    for m in range(1, half + 1):
        lhs = 2 * a[m + 1] + g2[m]
        rhs = 2 * a[2 * m] + (a[m // 2] if m % 2 == 0 else 0)
        assert lhs == rhs, f"order-2 identity fails at m={m}"
        n2 += 1
    for m in range(1, nmax // 3 + 1):
        lhs = 3 * a[m + 2] + 3 * g2[m + 1] + g3[m] - 3 * a[1] * a[m]
        rhs = 3 * a[3 * m] + (a[m // 3] if m % 3 == 0 else 0)
        assert lhs == rhs, f"order-3 identity fails at m={m}"
        n3 += 1
    for m in range(1, nmax // 4 + 1):
        lhs = (4 * a[m + 3] + 6 * g2[m + 2] + 4 * g3[m + 1] + g4[m]
               - 8 * a[1] * a[m + 1] - 4 * a[1] * g2[m] - 4 * a[2] * a[m])
        rhs = (4 * a[4 * m] + 2 * (a[m] if m % 2 == 0 else 0)
               + (a[m // 4] if m % 4 == 0 else 0))
        assert lhs == rhs, f"order-4 identity fails at m={m}"
        n4 += 1
    print(f"  order-2/3/4 identities hold at {n2}/{n3}/{n4} indices")

    # ------------------------------------------------------------------
    # numerical checks at 60 digits
    print("numerical checks ...")
    mp.mp.dps = 60

    def evaluate(tau):
        q = mp.e ** (2j * mp.pi * tau)
        s = 1 / q
        qk = mp.mpc(1)
        for k in range(1, nmax + 1):
            qk *= q
            if a[k]:
                s += a[k] * qk
        return s

    tau0 = mp.mpc("0.06", "0.18")
    v1 = evaluate(tau0)
    v2 = evaluate(-1 / (71 * tau0))
    err = abs(v1 - v2)
    print(f"  Fricke invariance at a generic point: |diff| = {mp.nstr(err, 5)}")
    assert err < mp.mpf(10) ** -40

    def polyval(p, x):
        s = mp.mpc(0)
        for c in reversed(p):
            s = s * x + c
        return s

    t284 = evaluate(1j / mp.sqrt(71))
    r284 = abs(polyval(POLY_284, t284))
    print(f"  value at the discriminant -284 fixed point: root residual {mp.nstr(r284, 5)}")
    assert r284 < mp.mpf(10) ** -35

    tau71 = (mp.mpc(-71) + 1j * mp.sqrt(71)) / 2556
    w71 = -1 / (71 * tau71)          # lift to a point where the series converges
    t71 = evaluate(w71)
    r71 = abs(polyval(POLY_71, t71))
    print(f"  value at the discriminant -71 fixed point:  root residual {mp.nstr(r71, 5)}")
    assert r71 < mp.mpf(10) ** -35

    # ------------------------------------------------------------------
    out_lines = ["# label=71A level=71 group=fricke q_min=-1"]
    for k in range(-1, N_COEFFS - 1):
        out_lines.append(str(a[k] if k != 0 else 0))
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(out_lines) + "\n")
    print(f"wrote {OUT} ({N_COEFFS} coefficients)")


if __name__ == "__main__":
    main()
