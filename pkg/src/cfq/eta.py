"""Dedekind eta: exact multiplier system and arbitrary-precision evaluation.

Any upper-half-plane argument is first moved into the standard fundamental
domain (|Re| <= 1/2, |tau| >= 1) by tracked SL2(Z) steps, so the pentagonal
series is only ever summed where |q| <= exp(-pi*sqrt(3)) and a handful of
terms suffice at any precision.  The transformation multiplier is computed
exactly as a root of unity through Dedekind sums.

For gamma = [[a, b], [c, d]] with c > 0:

    eta(gamma tau) = exp(pi*i*((a+d)/(12c) - s(d,c) - 1/4))
                     * (c*tau + d)^(1/2) * eta(tau)

with the principal square root; c = 0 gives the pure translation factor
exp(pi*i*b/12).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath
from mpmath import mp

from .errors import DomainError
from .numerics import BigComplex

__all__ = ["EtaQuotientSpec", "dedekind_sum", "eta", "eta_quotient"]

_GUARD = 32


@dataclass(frozen=True)
class EtaQuotientSpec:
    """Product prod_d eta(d*tau)^r_d, stored as ((d, r), ...)."""

    terms: tuple[tuple[int, int], ...]

    def __init__(self, terms):
        terms = tuple((int(d), int(r)) for d, r in terms)
        if not terms:
            raise DomainError("eta quotient needs at least one factor")
        for d, r in terms:
            if d < 1:
                raise DomainError(f"scale {d} must be positive")
            if r == 0:
                raise DomainError("exponents must be nonzero")
        object.__setattr__(self, "terms", terms)

    @property
    def weight_twice(self) -> int:
        return sum(r for _, r in self.terms)


def dedekind_sum(h: int, k: int) -> Fraction:
    """Exact s(h, k), by the reciprocity-accelerated Euclidean recursion."""
    if k < 1:
        raise DomainError("k must be a positive integer")
    if gcd(h, k) != 1:
        raise DomainError(f"gcd({h}, {k}) != 1")
    h %= k
    total = Fraction(0)
    sign = 1
    while k > 1:
        # s(h, k) = -1/4 + (h^2 + k^2 + 1)/(12hk) - s(k mod h, h)
        total += sign * (Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k))
        sign = -sign
        h, k = k % h, h
    return total


def _reduce_to_fundamental(tau):
    """Move tau into |Re| <= 1/2, |tau| >= 1; returns (tau_f, (a, b, c, d)).

    The integer matrix maps the input to the output point.
    """
    a, b, c, d = 1, 0, 0, 1
    guard = mp.mpf(2) ** (-mp.prec // 2)
    for _ in range(100000):
        k = int(mpmath.nint(tau.real))
        if k:
            tau -= k
            a, b = a - k * c, b - k * d
        if tau.real ** 2 + tau.imag ** 2 < 1 - guard:
            tau = -1 / tau
            a, b, c, d = -c, -d, a, b
        else:
            return tau, (a, b, c, d)
    raise DomainError("fundamental-domain reduction did not terminate")


def _eta_series(tau):
    """Pentagonal series at a point of the fundamental domain."""
    q24 = mp.exp(mp.mpc(0, 1) * mp.pi * tau / 12)
    q = q24 ** 24
    cutoff = mp.mpf(2) ** (-mp.prec - 8)
    total = mp.mpc(1)
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        t1 = q ** e1
        t2 = q ** e2
        term = t1 + t2
        total = total - term if k % 2 else total + term
        if abs(t1) < cutoff:
            break
        k += 1
    return q24 * total


def _multiplier(gamma) -> tuple[Fraction, tuple[int, int]]:
    """exp(pi*i*r) factor data for eta(gamma tau) = eps * (c tau + d)^(1/2) eta(tau).

    Returns (r, (c, d)) with eps = exp(pi*i*r); r is reduced mod 2.
    """
    a, b, c, d = gamma
    if c < 0 or (c == 0 and d < 0):
        a, b, c, d = -a, -b, -c, -d
    if c == 0:
        # a = d = 1: pure translation by b
        r = Fraction(b, 12)
    else:
        r = Fraction(a + d, 12 * c) - dedekind_sum(d, c) - Fraction(1, 4)
    return Fraction(r.numerator % (2 * r.denominator), r.denominator), (c, d)


def _eta_mpc(tau):
    """eta at an arbitrary mpc point, at the current working precision."""
    if tau.imag <= 0:
        raise DomainError("eta requires Im(tau) > 0")
    tau_f, gamma = _reduce_to_fundamental(mp.mpc(tau))
    value_f = _eta_series(tau_f)
    r, (c, d) = _multiplier(gamma)
    eps = mp.exp(mp.mpc(0, 1) * mp.pi * r.numerator / r.denominator)
    if c == 0:
        return value_f / eps
    return value_f / (eps * mp.sqrt(c * tau + d))


def eta(tau: BigComplex, prec: int | None = None) -> BigComplex:
    """Dedekind eta at tau, relative error at most 2^(-prec+8)."""
    prec = prec if prec is not None else tau.prec
    with mp.workprec(prec + _GUARD):
        value = _eta_mpc(tau.to_mpc())
    return BigComplex.from_mpc(value, prec)


def eta_quotient(spec: EtaQuotientSpec, tau: BigComplex, prec: int | None = None) -> BigComplex:
    """prod eta(d*tau)^r_d, each factor through the reduced evaluation path."""
    prec = prec if prec is not None else tau.prec
    with mp.workprec(prec + _GUARD):
        t = tau.to_mpc()
        if t.imag <= 0:
            raise DomainError("eta quotient requires Im(tau) > 0")
        value = mp.mpc(1)
        for d, r in spec.terms:
            value *= _eta_mpc(d * t) ** r
    return BigComplex.from_mpc(value, prec)
