"""The gap argument showing ``abc+1`` is never a square for integer quadruples.

For a Diophantine quadruple ``{1, a, b, c}`` with ``3 <= a < b < c`` and
``c > 4ab`` write ``ab+1 = rab**2``, ``ac+1 = sac**2``, ``bc+1 = tbc**2``,
``c+1 = z**2`` and ``u = sqrt(abc+1)``. Then
``M = 2*rab*(z*u - sac*tbc)`` lies strictly inside
``((a-1)(b-1), (a-1)(b-1) + 1/2)``, so it cannot be an integer, and so ``u``
cannot be one either.

``u`` is irrational in every real instance, so everything is checked on
rational enclosures built from scaled integer square roots.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import as_rat, int_sqrt
from .search import search_integer_exotic
from .verify import verify_diophantine_with_one

log = logging.getLogger(__name__)

DEFAULT_SCALE = 10 ** 20


class GapPreconditionError(ValueError):
    pass


class NotQuadrupleError(GapPreconditionError):
    def __init__(self, a, b, c):
        super().__init__(f"not a quadruple with 1: {(a, b, c)}")


class LemmaBoundError(GapPreconditionError):
    def __init__(self, a, b, c):
        super().__init__(f"c <= 4ab: {(a, b, c)}")


class RootsNotIntegralError(GapPreconditionError):
    def __init__(self, a, b, c):
        super().__init__(f"roots not integral: {(a, b, c)}")


def identity_check(a, b, c) -> bool:
    """``(c+1)(abc+1) - (ac+1)(bc+1) == c(a-1)(b-1)``, exactly."""
    a, b, c = as_rat(a), as_rat(b), as_rat(c)
    lhs = (c + 1) * (a * b * c + 1) - (a * c + 1) * (b * c + 1)
    return lhs == c * (a - 1) * (b - 1)


def sqrt_enclosure(n: int, scale: int = DEFAULT_SCALE) -> tuple[Fraction, Fraction]:
    """``(lo, hi)`` with ``lo**2 <= n <= hi**2`` and ``hi - lo <= 1/scale``."""
    q, exact = int_sqrt(n * scale * scale)
    if exact:
        return Fraction(q, scale), Fraction(q, scale)
    return Fraction(q, scale), Fraction(q + 1, scale)


@dataclass(frozen=True)
class GapReport:
    a: int
    b: int
    c: int
    z: int
    rab: int
    sac: int
    tbc: int
    u_lo: Fraction
    u_hi: Fraction
    M_lo: Fraction
    M_hi: Fraction
    target: int
    abc1_is_square: bool
    # zu + st against (2c*sqrt(ab), 2*rab*c)
    sum_lo: Fraction = field(repr=False)
    sum_hi: Fraction = field(repr=False)
    lower_bound_hi: Fraction = field(repr=False)
    upper_bound: int = field(repr=False)

    @property
    def gap_holds(self) -> bool:
        return self.target < self.M_lo and self.M_hi < self.target + Fraction(1, 2)

    @property
    def sum_bounds_hold(self) -> bool:
        return self.lower_bound_hi < self.sum_lo and self.sum_hi < self.upper_bound

    @property
    def ok(self) -> bool:
        return self.gap_holds and self.sum_bounds_hold and not self.abc1_is_square

    def to_json(self) -> dict:
        return {
            "a": str(self.a), "b": str(self.b), "c": str(self.c),
            "z": str(self.z), "rab": str(self.rab), "sac": str(self.sac), "tbc": str(self.tbc),
            "u_lo": str(self.u_lo), "u_hi": str(self.u_hi),
            "M_lo": str(self.M_lo), "M_hi": str(self.M_hi),
            "target": str(self.target),
            "abc1_is_square": self.abc1_is_square,
            "gap_holds": self.gap_holds,
        }


def _int_root(n: Fraction) -> int | None:
    if n.denominator != 1 or n < 0:
        return None
    root, exact = int_sqrt(int(n))
    return root if exact else None


def gap_check(a, b, c, scale: int = DEFAULT_SCALE) -> GapReport:
    """Enclose ``M`` for the quadruple ``{1, a, b, c}`` and compare it to ``(a-1)(b-1)``.

    Preconditions are checked in order: quadruple with 1 (NotQuadrupleError),
    integral roots (RootsNotIntegralError), ``3 <= a < b < c`` (ValueError),
    ``c > 4ab`` (LemmaBoundError).
    """
    a, b, c = as_rat(a), as_rat(b), as_rat(c)
    if not verify_diophantine_with_one(a, b, c):
        raise NotQuadrupleError(a, b, c)
    roots = [_int_root(q) for q in (c + 1, a * b + 1, a * c + 1, b * c + 1)]
    if None in roots:
        raise RootsNotIntegralError(a, b, c)
    if not (3 <= a < b < c):
        raise ValueError(f"need 3 <= a < b < c, got {(a, b, c)}")
    a, b, c = int(a), int(b), int(c)
    if c <= 4 * a * b:
        raise LemmaBoundError(a, b, c)
    z, rab, sac, tbc = roots

    abc1 = a * b * c + 1
    u_lo, u_hi = sqrt_enclosure(abc1, scale)
    st = sac * tbc
    # M is increasing in u since rab, z > 0
    M_lo = 2 * rab * (z * u_lo - st)
    M_hi = 2 * rab * (z * u_hi - st)
    _, sqrt_ab_hi = sqrt_enclosure(a * b, scale)

    report = GapReport(
        a=a, b=b, c=c, z=z, rab=rab, sac=sac, tbc=tbc,
        u_lo=u_lo, u_hi=u_hi, M_lo=M_lo, M_hi=M_hi,
        target=(a - 1) * (b - 1),
        abc1_is_square=int_sqrt(abc1)[1],
        sum_lo=z * u_lo + st, sum_hi=z * u_hi + st,
        lower_bound_hi=2 * c * sqrt_ab_hi, upper_bound=2 * rab * c,
    )
    if report.abc1_is_square:
        log.error("abc+1 is a square for %s: contradicts the gap argument", (a, b, c))
    elif not report.gap_holds:
        log.error("M enclosure [%s, %s] escapes the gap above %d", M_lo, M_hi, report.target)
    return report


@dataclass
class GapSweep:
    reports: list[GapReport]
    # quadruples with c <= 4ab, listed without a gap claim
    below_bound: list[tuple[int, int, int]]

    @property
    def all_hold(self) -> bool:
        return all(r.ok for r in self.reports)


def _check_chunk(quads):
    return [gap_check(*q) for q in quads]


def gap_sweep(c_max: int, threads: int = 1) -> GapSweep:
    """Run :func:`gap_check` on every integer quadruple ``{1, a, b, c}`` with ``c <= c_max``."""
    if c_max < 3:
        raise ValueError("c_max must be >= 3")
    quads = search_integer_exotic(c_max, threads=threads).quadruples
    checked = [q for q in quads if q[2] > 4 * q[0] * q[1]]
    below = [q for q in quads if q[2] <= 4 * q[0] * q[1]]
    if threads <= 1 or len(checked) < 2:
        reports = _check_chunk(checked)
    else:
        chunks = [checked[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            done = list(pool.map(_check_chunk, chunks))
        reports = sorted((r for part in done for r in part), key=lambda r: (r.a, r.b, r.c))
    return GapSweep(reports, below)
