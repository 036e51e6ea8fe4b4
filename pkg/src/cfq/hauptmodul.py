"""Catalog and evaluation of principal moduli for genus-zero levels.

Three kinds of entry, each normalized so the q-expansion is q^-1 + 0 + O(q):

  * eta quotients for the levels where the congruence group itself has genus
    zero (built-in exponent tables, validated by the test suite rather than
    trusted);
  * Fricke symmetrizations t + kappa/t of those quotients, which are
    principal moduli for the corresponding Fricke groups;
  * ingested q-series coefficient files for Fricke-only levels (the package
    ships the level-71 series and the level-1 modular invariant).

Evaluation of a q-series entry first ascends through translations and the
Fricke flip (`fricke_reduce`), then sums the series with an empirical tail
criterion; eta-quotient entries are valid anywhere because eta itself
reduces its argument.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from pathlib import Path

from mpmath import mp

from .elliptic import CMPoint
from .errors import (
    DataFileMissingError,
    DomainError,
    InsufficientDataError,
    NotGenusZeroError,
    QSeriesFormatError,
)
from .eta import EtaQuotientSpec, eta_quotient
from .numerics import BigComplex

__all__ = [
    "EtaQuotientHaupt",
    "FrickeSymHaupt",
    "QSeriesHaupt",
    "GAMMA0_LEVELS",
    "FRICKE_LEVELS",
    "catalog_lookup",
    "catalog_entries",
    "load_qseries",
    "fricke_reduce",
    "evaluate",
]

_GUARD = 48
_PACKAGED_DATA = Path(__file__).resolve().parent / "data"

GAMMA0_LEVELS = frozenset([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25])
FRICKE_LEVELS = frozenset(
    list(range(2, 22)) + list(range(23, 28))
    + [29, 31, 32, 35, 36, 39, 41, 47, 49, 50, 59, 71]
)

# Hauptmodul eta quotients for the genus-zero congruence levels > 1.  Each is
# the unique choice whose exponents satisfy r(N/d) = -r(d), which forces
# t(-1/(N tau)) = kappa / t(tau) with kappa = prod (N/d)^(r_d/2).
_ETA_TABLE: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((1, 24), (2, -24)),
    3: ((1, 12), (3, -12)),
    4: ((1, 8), (4, -8)),
    5: ((1, 6), (5, -6)),
    6: ((1, 5), (2, -1), (3, 1), (6, -5)),
    7: ((1, 4), (7, -4)),
    8: ((1, 4), (2, -2), (4, 2), (8, -4)),
    9: ((1, 3), (9, -3)),
    10: ((1, 3), (2, -1), (5, 1), (10, -3)),
    12: ((1, 3), (2, -2), (3, -1), (4, 1), (6, 2), (12, -3)),
    13: ((1, 2), (13, -2)),
    16: ((1, 2), (2, -1), (8, 1), (16, -2)),
    18: ((1, 2), (2, -1), (3, -1), (6, 1), (9, 1), (18, -2)),
    25: ((1, 1), (25, -1)),
}


@dataclass(frozen=True)
class EtaQuotientHaupt:
    """Principal modulus given by an eta quotient plus a constant shift."""

    level: int
    spec: EtaQuotientSpec
    const_shift: int


@dataclass(frozen=True)
class FrickeSymHaupt:
    """Principal modulus t + kappa/t + shift for a Fricke group."""

    level: int
    base: EtaQuotientSpec
    kappa: int
    const_shift: int

    def __post_init__(self):
        if self.kappa <= 0:
            raise DomainError("kappa must be positive")


@dataclass(frozen=True)
class QSeriesHaupt:
    """Principal modulus known through its q-expansion coefficients."""

    label: str
    n: int
    group: str
    q_min: int
    coeffs: tuple[int, ...]


def _kappa(n: int, terms) -> int:
    val = Fraction(1)
    for d, r in terms:
        val *= Fraction(n // d) ** r
    assert val.denominator == 1
    root = isqrt(val.numerator)
    assert root * root == val.numerator
    return root


def _const_shift(terms) -> int:
    # q-expansion of the quotient is q^-1 - r_1 + O(q)
    for d, r in terms:
        if d == 1:
            return r
    return 0


def _data_dirs(data_dir) -> list[Path]:
    dirs = []
    if data_dir is not None:
        dirs.append(Path(data_dir))
    else:
        env = os.environ.get("CFQ_DATA_DIR")
        if env:
            dirs.append(Path(env))
    dirs.append(_PACKAGED_DATA)
    return dirs


def load_qseries(path) -> QSeriesHaupt:
    """Parse a q-series coefficient file.

    Line 1: "# label=<text> level=<int> group=<gamma0|fricke> q_min=-1".
    Every further non-blank line that does not start with '#' holds one
    decimal integer; the first is the coefficient of q^-1.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#"):
        raise QSeriesFormatError("header", f"{path}: missing header line")
    fields = {}
    for token in lines[0][1:].split():
        if "=" not in token:
            raise QSeriesFormatError("header", f"{path}: bad header token {token!r}")
        key, _, value = token.partition("=")
        fields[key] = value
    for key in ("label", "level", "group", "q_min"):
        if key not in fields:
            raise QSeriesFormatError("header", f"{path}: header lacks {key}=")
    try:
        level = int(fields["level"])
        q_min = int(fields["q_min"])
    except ValueError as exc:
        raise QSeriesFormatError("header", f"{path}: non-integer header field") from exc
    if fields["group"] not in ("gamma0", "fricke"):
        raise QSeriesFormatError("header", f"{path}: group must be gamma0|fricke")
    if q_min != -1:
        raise QSeriesFormatError("q_min", f"{path}: q_min must be -1, got {q_min}")
    coeffs = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            coeffs.append(int(line))
        except ValueError as exc:
            raise QSeriesFormatError(
                "coefficient", f"{path}:{lineno}: not an integer: {line!r}"
            ) from exc
    if len(coeffs) < 64:
        raise QSeriesFormatError(
            "too_few", f"{path}: only {len(coeffs)} coefficients, need at least 64"
        )
    if coeffs[0] == 0:
        raise QSeriesFormatError(
            "coefficient", f"{path}: leading coefficient (of q^-1) must be nonzero"
        )
    return QSeriesHaupt(
        label=fields["label"],
        n=level,
        group=fields["group"],
        q_min=q_min,
        coeffs=tuple(coeffs),
    )


def _qseries_filename(n: int, group: str) -> str:
    return f"{group}_{n}.qseries"


def catalog_lookup(n: int, group: str, data_dir=None):
    """The principal-modulus description for (level, group).

    group is "gamma0" or "fricke".  Levels outside the genus-zero lists raise
    NotGenusZeroError; entries backed by coefficient files raise
    DataFileMissingError when no file is found in the data directories.
    """
    if group == "gamma0":
        if n not in GAMMA0_LEVELS:
            raise NotGenusZeroError(
                f"level {n} is not in the genus-zero list for the congruence group"
            )
        if n == 1:
            return _load_from_dirs(n, group, data_dir)
        terms = _ETA_TABLE[n]
        return EtaQuotientHaupt(n, EtaQuotientSpec(terms), _const_shift(terms))
    if group == "fricke":
        if n not in FRICKE_LEVELS:
            raise NotGenusZeroError(
                f"level {n} is not in the genus-zero list for the Fricke group"
            )
        if n in _ETA_TABLE:
            terms = _ETA_TABLE[n]
            return FrickeSymHaupt(
                n, EtaQuotientSpec(terms), _kappa(n, terms), _const_shift(terms)
            )
        return _load_from_dirs(n, group, data_dir)
    raise DomainError(f"unknown group {group!r}")


def _load_from_dirs(n: int, group: str, data_dir) -> QSeriesHaupt:
    name = _qseries_filename(n, group)
    for d in _data_dirs(data_dir):
        candidate = d / name
        if candidate.is_file():
            series = load_qseries(candidate)
            if series.n != n or series.group != group:
                raise QSeriesFormatError(
                    "header",
                    f"{candidate}: header ({series.n}, {series.group}) does not "
                    f"match catalog entry ({n}, {group})",
                )
            return series
    raise DataFileMissingError(
        f"no q-series file {name!r} in {[str(d) for d in _data_dirs(data_dir)]}"
    )


def catalog_entries(data_dir=None) -> list[dict]:
    """Inventory of all catalog keys with entry kind and data availability."""
    out = []
    for n in sorted(GAMMA0_LEVELS):
        kind = "qseries" if n == 1 else "eta-quotient"
        entry = {"level": n, "group": "gamma0", "kind": kind}
        if kind == "qseries":
            entry["available"] = _available(n, "gamma0", data_dir)
        out.append(entry)
    for n in sorted(FRICKE_LEVELS):
        kind = "fricke-sym" if n in _ETA_TABLE else "qseries"
        entry = {"level": n, "group": "fricke", "kind": kind}
        if kind == "qseries":
            entry["available"] = _available(n, "fricke", data_dir)
        out.append(entry)
    return out


def _available(n: int, group: str, data_dir) -> bool:
    name = _qseries_filename(n, group)
    return any((d / name).is_file() for d in _data_dirs(data_dir))


def fricke_reduce(tau: BigComplex, n: int) -> BigComplex:
    """Ascend under tau -> tau+1 and tau -> -1/(n tau) until stable.

    The output has |Re| <= 1/2 + 2^-20 and n|tau|^2 >= 1 - 2^-20, and its
    imaginary part is never below the input's.
    """
    prec = tau.prec
    with mp.workprec(prec + _GUARD):
        z = tau.to_mpc()
        if z.imag <= 0:
            raise DomainError("point must lie in the upper half plane")
        eps = mp.mpf(2) ** -24
        for _ in range(100000):
            k = int(mp.nint(z.real))
            if k:
                z -= k
            if n * (z.real**2 + z.imag**2) < 1 - eps:
                z = -1 / (n * z)
            else:
                break
        else:
            raise DomainError("Fricke reduction did not terminate")
    return BigComplex.from_mpc(z, prec)


def _coeff_cache(series: QSeriesHaupt, prec: int):
    cache = getattr(series, "_mpf_cache", None)
    if cache is not None and cache[0] == prec:
        return cache[1]
    with mp.workprec(prec):
        values = [mp.mpf(c) for c in series.coeffs]
    object.__setattr__(series, "_mpf_cache", (prec, values))
    return values


def evaluate(spec, tau, prec: int) -> BigComplex:
    """Value of a principal modulus at tau (a CMPoint or BigComplex)."""
    if isinstance(tau, CMPoint):
        with mp.workprec(prec + _GUARD):
            z = BigComplex.from_mpc(
                (tau.u + mp.sqrt(tau.n) * mp.mpc(0, tau.v)) / tau.w, prec + _GUARD
            )
    else:
        z = tau
    if isinstance(spec, EtaQuotientHaupt):
        with mp.workprec(prec + _GUARD):
            t = eta_quotient(spec.spec, z, prec + _GUARD)
            value = t.to_mpc() + spec.const_shift
        return BigComplex.from_mpc(value, prec)
    if isinstance(spec, FrickeSymHaupt):
        with mp.workprec(prec + _GUARD):
            t = eta_quotient(spec.base, z, prec + _GUARD).to_mpc()
            if t == 0:
                raise DomainError("eta quotient vanished at the evaluation point")
            value = t + spec.kappa / t + spec.const_shift
        return BigComplex.from_mpc(value, prec)
    if isinstance(spec, QSeriesHaupt):
        return _evaluate_qseries(spec, z, prec)
    raise DomainError(f"unknown principal-modulus description {spec!r}")


def _evaluate_qseries(series: QSeriesHaupt, z: BigComplex, prec: int) -> BigComplex:
    # a Fricke-group function is invariant under the full ascent; a level-1
    # series is too, because the flip is then an ordinary modular substitution
    if series.group == "fricke" or series.n == 1:
        z = fricke_reduce(z, series.n)
    coeffs = _coeff_cache(series, prec + _GUARD)
    with mp.workprec(prec + _GUARD):
        zc = z.to_mpc()
        if zc.imag <= 0:
            raise DomainError("point must lie in the upper half plane")
        if series.group == "gamma0" and series.n != 1:
            k = int(mp.nint(zc.real))
            if k:
                zc -= k
        q = mp.exp(2j * mp.pi * zc)
        absq = abs(q)
        tail_tol = mp.mpf(2) ** (-prec - 8)
        total = coeffs[0] / q
        qk = mp.mpc(1)
        quiet = 0
        for k in range(1, len(coeffs)):
            # index k holds the coefficient of q^(k-1)
            c = coeffs[k]
            if c:
                term = c * qk
                total += term
                magnitude = abs(term)
            else:
                magnitude = abs(qk)
            qk *= q
            if magnitude < tail_tol:
                quiet += 1
                if quiet >= 32:
                    return BigComplex.from_mpc(total, prec)
            else:
                quiet = 0
        needed = int((prec + 8) * mp.log(2) / -mp.log(absq)) + 64
        raise InsufficientDataError(mp.nstr(absq, 8), len(series.coeffs), needed)
