"""Order-2 elliptic elements of the Fricke group outside Gamma0(n).

An element is stored as the integer triple (A, B, C) with n*A^2 + B*C = -1,
B < 0, C > 0; it fixes the CM point (n*A + sqrt(-n))/(n*C), whose
imaginary quadratic order has discriminant -n exactly when B and C are both
even (forcing n = 3 mod 4) and -4n otherwise.  Conjugacy in the Fricke group
is detected through SL2(Z)-equivalence of the associated quadratic forms,
and one representative of minimal C is produced for every ideal class.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError, SearchFailureError
from .quadforms import (
    ClassGroup,
    QuadForm,
    enumerate_class_group,
    equivalent,
    reduce_form,
)

__all__ = [
    "EllipticElement",
    "CMPoint",
    "OrderDesc",
    "from_form",
    "fixed_point",
    "order_of",
    "conjugate_in_fricke",
    "enumerate_representatives",
]


@dataclass(frozen=True)
class EllipticElement:
    """Trace-zero coset element sqrt(n) * [[A, B/n], [C, -A]], det 1."""

    n: int
    A: int
    B: int
    C: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("level must be positive")
        if self.n * self.A**2 + self.B * self.C != -1:
            raise DomainError(
                f"(A,B,C)=({self.A},{self.B},{self.C}) violates n*A^2 + B*C = -1"
            )
        if not (self.B < 0 < self.C):
            raise DomainError("normalization requires B < 0 and C > 0")

    def form(self) -> QuadForm:
        """The homogeneous quadratic form n*C x^2 - 2n*A xy - B y^2."""
        return QuadForm(self.n * self.C, -2 * self.n * self.A, -self.B)

    def primitive_form(self) -> QuadForm:
        """The primitive form attached to the element (half the form if even)."""
        f = self.form()
        if self.B % 2 == 0 and self.C % 2 == 0:
            return QuadForm(f.a // 2, f.b // 2, f.c // 2)
        return f

    def text(self) -> str:
        return f"{self.A},{self.B},{self.C}"

    @classmethod
    def from_text(cls, s: str, n: int | None = None) -> EllipticElement:
        """Parse 'A,B,C' (level given separately) or 'A,B,C@n'."""
        if "@" in s:
            body, _, level_text = s.partition("@")
            level = int(level_text)
            if n is not None and n != level:
                raise DomainError(f"level {level} in {s!r} conflicts with {n}")
            n = level
        else:
            body = s
        if n is None:
            raise DomainError(f"no level in {s!r} and none supplied")
        parts = body.split(",")
        if len(parts) != 3:
            raise DomainError(f"expected 'A,B,C', got {s!r}")
        a, b, c = (int(p) for p in parts)
        return cls(n, a, b, c)

    @classmethod
    def fricke_involution(cls, n: int) -> EllipticElement:
        return cls(n, 0, -1, 1)


@dataclass(frozen=True)
class CMPoint:
    """Exact upper-half-plane point (u + v*sqrt(-n)) / w."""

    u: int
    v: int
    w: int
    n: int

    def __init__(self, u: int, v: int, w: int, n: int):
        if w == 0 or v == 0:
            raise DomainError("CM point requires v != 0 and w != 0")
        if n < 1:
            raise DomainError("level must be positive")
        if (v > 0) != (w > 0):
            raise DomainError("point must lie in the upper half plane")
        if w < 0:
            u, v, w = -u, -v, -w
        g = gcd(gcd(abs(u), v), w)
        object.__setattr__(self, "u", u // g)
        object.__setattr__(self, "v", v // g)
        object.__setattr__(self, "w", w // g)
        object.__setattr__(self, "n", n)

    def minimal_polynomial(self) -> tuple[int, int, int]:
        """(a, b, c), content-reduced, with a*tau^2 + b*tau + c = 0 and a > 0."""
        a = self.w * self.w
        b = -2 * self.u * self.w
        c = self.u * self.u + self.n * self.v * self.v
        g = gcd(gcd(a, abs(b)), c)
        return (a // g, b // g, c // g)


@dataclass(frozen=True)
class OrderDesc:
    """The imaginary quadratic order attached to an elliptic element."""

    n: int
    disc: int

    def __post_init__(self):
        if self.disc not in (-self.n, -4 * self.n):
            raise DomainError(f"disc {self.disc} invalid for level {self.n}")
        if self.disc == -self.n and self.n % 4 != 3:
            raise DomainError("disc -n requires n = 3 mod 4")

    @property
    def generator(self) -> str:
        if self.disc == -self.n:
            return f"Z[(-{self.n}+sqrt(-{self.n}))/2]"
        return f"Z[sqrt(-{self.n})]"


def from_form(f: QuadForm, n: int) -> EllipticElement:
    """Invert the form map: recover (A, B, C) from a form in Fricke shape.

    Accepts the homogeneous form itself (discriminant -4n) or its half
    (discriminant -n), which is doubled before reading off the entries.
    """
    if f.disc == -4 * n:
        a, b, c = f.a, f.b, f.c
    elif f.disc == -n and n % 4 == 3:
        a, b, c = 2 * f.a, 2 * f.b, 2 * f.c
    else:
        raise DomainError(f"form {f} has discriminant {f.disc}, not -4n or -n")
    if a % n or b % (2 * n):
        raise DomainError(f"form {f} is not in Fricke shape for level {n}")
    return EllipticElement(n, -b // (2 * n), -c, a // n)


def fixed_point(alpha: EllipticElement) -> CMPoint:
    """The unique fixed point (n*A + sqrt(-n)) / (n*C) in the upper half plane."""
    tau = CMPoint(alpha.n * alpha.A, 1, alpha.n * alpha.C, alpha.n)
    # exact zero check of n*C X^2 - 2n*A X - B at tau over Q(sqrt(-n))
    a, b, c = alpha.n * alpha.C, -2 * alpha.n * alpha.A, -alpha.B
    u, v, w = tau.u, tau.v, tau.w
    rational = a * (u * u - alpha.n * v * v) + b * u * w + c * w * w
    irrational = 2 * a * u * v + b * v * w
    assert rational == 0 and irrational == 0
    return tau


def order_of(alpha: EllipticElement) -> OrderDesc:
    """Discriminant -n when B and C are both even, otherwise -4n."""
    if alpha.B % 2 == 0 and alpha.C % 2 == 0:
        if alpha.n % 4 != 3:
            raise DomainError("internal invariant violated: even B, C force n = 3 mod 4")
        return OrderDesc(alpha.n, -alpha.n)
    return OrderDesc(alpha.n, -4 * alpha.n)


def conjugate_in_fricke(alpha: EllipticElement, beta: EllipticElement) -> bool:
    """Whether two elements are conjugate in the Fricke group of their level."""
    if alpha.n != beta.n:
        raise DomainError(f"level mismatch: {alpha.n} vs {beta.n}")
    if order_of(alpha).disc != order_of(beta).disc:
        return False
    return equivalent(alpha.primitive_form(), beta.primitive_form()) is not None


def enumerate_representatives(
    n: int, disc: int, group: ClassGroup | None = None
) -> list[EllipticElement]:
    """One elliptic element per ideal class of disc, each with minimal C.

    The list order matches `enumerate_class_group(disc).classes`.  For each
    class, C = 1, 2, ... and A mod C are scanned; the first (A, B, C) whose
    primitive form lies in the class is kept, which maximizes the height of
    the fixed point.
    """
    if disc == -4 * n:
        half = False
    elif disc == -n and n % 4 == 3:
        half = True
    else:
        raise DomainError(f"disc {disc} invalid for level {n}")
    cg = group if group is not None else enumerate_class_group(disc)
    targets = {k: cls.rep for k, cls in enumerate(cg.classes)}
    found: dict[int, EllipticElement] = {}
    bound = 64 * cg.class_number
    for c in range(1, bound + 1):
        if not targets:
            break
        for a0 in range(c):
            if (1 + n * a0 * a0) % c:
                continue
            b = -(1 + n * a0 * a0) // c
            alpha = EllipticElement(n, a0, b, c)
            even = b % 2 == 0 and c % 2 == 0
            if even != half:
                continue
            prim = alpha.primitive_form()
            rep = reduce_form(prim)[0]
            for k, target in list(targets.items()):
                if rep == target:
                    found[k] = alpha
                    del targets[k]
                    break
    if targets:
        raise SearchFailureError(
            f"no representative with C <= {bound} for classes {sorted(targets)}"
        )
    return [found[k] for k in range(cg.class_number)]
