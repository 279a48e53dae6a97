"""Elliptic curves ``y**2 = x**3 + A*x + B`` over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .exactnum import as_rat, format_rat, parse_rat


class CurveMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class WeierstrassCurve:
    A: Fraction
    B: Fraction
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "A", as_rat(self.A))
        object.__setattr__(self, "B", as_rat(self.B))
        if self.discriminant == 0:
            raise ValueError(f"singular curve: A={self.A}, B={self.B}")

    @property
    def discriminant(self) -> Fraction:
        return -16 * (4 * self.A ** 3 + 27 * self.B ** 2)

    def rhs(self, x: Fraction) -> Fraction:
        return (x * x + self.A) * x + self.B

    def on_curve(self, x, y) -> bool:
        x, y = as_rat(x), as_rat(y)
        return y * y == self.rhs(x)

    def point(self, x, y) -> "CurvePoint":
        """Affine point; raises ValueError if it is not on the curve."""
        x, y = as_rat(x), as_rat(y)
        if not self.on_curve(x, y):
            raise ValueError(f"({x}, {y}) is not on {self}")
        return CurvePoint(self, x, y)

    @property
    def infinity(self) -> "CurvePoint":
        return CurvePoint(self, None, None)

    def __str__(self):
        return self.name or f"y^2 = x^3 + ({self.A})x + ({self.B})"


@dataclass(frozen=True)
class CurvePoint:
    """A rational point; ``x is None`` encodes the point at infinity.

    Build points through :meth:`WeierstrassCurve.point`, which checks membership.
    """

    curve: WeierstrassCurve
    x: Fraction | None
    y: Fraction | None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self):
        return negate(self)

    def __add__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return add(self, negate(other))

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return scalar_mul(k, self)

    def __str__(self):
        return format_point(self)


E1 = WeierstrassCurve(-7, -6, name="E1")
E2 = WeierstrassCurve(-111, 450, name="E2")

# E2(Q) = <T> x <G>: T has order two, G has infinite order
E2_TORSION = E2.point(6, 0)
E2_GENERATOR = E2.point(3, -12)


def on_curve(curve: WeierstrassCurve, x, y) -> bool:
    return curve.on_curve(x, y)


def negate(P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.curve, P.x, -P.y)


def add(P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-and-tangent addition."""
    if P.curve != Q.curve:
        raise CurveMismatchError(f"cannot add points on {P.curve} and {Q.curve}")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return P.curve.infinity
        slope = (3 * P.x * P.x + P.curve.A) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope * slope - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return CurvePoint(P.curve, x3, y3)


def scalar_mul(k: int, P: CurvePoint) -> CurvePoint:
    """``k*P`` by double-and-add."""
    if k < 0:
        return negate(scalar_mul(-k, P))
    result = P.curve.infinity
    addend = P
    while k:
        if k & 1:
            result = add(result, addend)
        k >>= 1
        if k:
            addend = add(addend, addend)
    return result


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_two_torsion(curve: WeierstrassCurve) -> set[CurvePoint]:
    """All affine points with ``y == 0``.

    With ``x = X/d`` and ``d`` the lcm of the coefficient denominators the
    cubic becomes monic with integer coefficients, so rational roots are
    integer divisors of the constant term.
    """
    d = lcm(curve.A.denominator, curve.B.denominator)
    a1 = curve.A * d * d
    b1 = curve.B * d ** 3
    assert a1.denominator == 1 and b1.denominator == 1
    a1, b1 = int(a1), int(b1)

    roots: set[int] = set()
    if b1 == 0:
        # X * (X**2 + a1)
        roots.add(0)
        if a1 <= 0:
            w = isqrt(-a1)
            if w * w == -a1:
                roots.update((w, -w))
    else:
        for dv in _divisors(b1):
            for X in (dv, -dv):
                if X ** 3 + a1 * X + b1 == 0:
                    roots.add(X)
    return {CurvePoint(curve, Fraction(X, d), Fraction(0)) for X in roots}


def format_point(P: CurvePoint) -> str:
    if P.is_infinity:
        return "inf"
    return f"{format_rat(P.x)},{format_rat(P.y)}"


def parse_point(curve: WeierstrassCurve, text: str) -> CurvePoint:
    if text == "inf":
        return curve.infinity
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"malformed point: {text!r}")
    return curve.point(parse_rat(parts[0]), parse_rat(parts[1]))
