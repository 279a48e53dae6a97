"""Exotic triples from rational points of E2.

A point ``(x, y)`` on ``y**2 = x**3 - 111*x + 450`` gives parameters
``u, s, r`` and ``c = c_star(r, s)``; the triple is ``(r**2 - 1, s**2 - 1, c)``.
``P`` and ``P + [6, 0]`` give the same triple, and so do ``P`` and ``2G - P``
with ``G = [3, -12]``: ``k*G`` and ``(2 - k)*G`` land on the same triple.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .ecq import E2, E2_GENERATOR, E2_TORSION, CurvePoint, add, negate
from .exactnum import format_rat, height, parse_rat
from .regularity import c_star
from .verify import SquareCertificate, verify_exotic

log = logging.getLogger(__name__)


class InvariantError(RuntimeError):
    """An identity that must hold by construction failed."""


@dataclass(frozen=True)
class ParamIntermediates:
    u: Fraction
    s: Fraction
    r: Fraction
    c: Fraction


@dataclass(frozen=True)
class Provenance:
    x: Fraction
    y: Fraction
    k: int
    twist: bool

    def to_json(self) -> dict:
        return {"x": format_rat(self.x), "y": format_rat(self.y), "k": self.k, "twist": self.twist}

    @classmethod
    def from_json(cls, obj: dict) -> "Provenance":
        return cls(parse_rat(obj["x"]), parse_rat(obj["y"]), int(obj["k"]), bool(obj["twist"]))


@dataclass(frozen=True)
class ExoticTriple:
    """A verified exotic triple, entries sorted ascending.

    Equality and hashing use the entries only.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    certificate: SquareCertificate = field(compare=False)
    provenance: Provenance | None = field(default=None, compare=False)

    @classmethod
    def from_values(cls, a, b, c, provenance: Provenance | None = None) -> "ExoticTriple":
        """Sort, verify and wrap; raises ValueError listing failures if not exotic."""
        a, b, c = sorted((Fraction(a), Fraction(b), Fraction(c)))
        v = verify_exotic(a, b, c)
        if not v.ok:
            raise ValueError(f"{(str(a), str(b), str(c))} is not exotic: {', '.join(v.failures)}")
        return cls(a, b, c, v.certificate, provenance)

    @property
    def values(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c

    @property
    def max_height(self) -> int:
        return max(height(q) for q in self.values)

    def sort_key(self):
        return self.max_height, self.values

    def to_json(self) -> dict:
        return {
            "a": format_rat(self.a),
            "b": format_rat(self.b),
            "c": format_rat(self.c),
            "certificate": self.certificate.to_json(),
            "provenance": self.provenance.to_json() if self.provenance else None,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExoticTriple":
        """Parse and re-verify. The stored certificate must match the recomputed one."""
        prov = Provenance.from_json(obj["provenance"]) if obj.get("provenance") else None
        a, b, c = parse_rat(obj["a"]), parse_rat(obj["b"]), parse_rat(obj["c"])
        t = cls.from_values(a, b, c, prov)
        # the stored certificate follows the stored order, which may be unsorted
        if "certificate" in obj and not SquareCertificate.from_json(obj["certificate"]).check(a, b, c):
            raise ValueError("stored certificate does not match the triple")
        return t

    def csv_row(self) -> list[str]:
        return [format_rat(q) for q in self.values + self.certificate.roots()]


CSV_HEADER = ["a", "b", "c", "root_a1", "root_b1", "root_c1",
              "root_ab1", "root_ac1", "root_bc1", "root_abc1"]


def param_map(P: CurvePoint) -> ParamIntermediates:
    if P.curve != E2:
        raise ValueError("param_map is defined on E2 only")
    if P.is_infinity:
        raise ValueError("map undefined at infinity")
    x, y = P.x, P.y
    # x**2 - 6x - 3 and 3u**2 + 6u - 1 have discriminant 48: no rational roots
    d1 = x * x - 6 * x - 3
    if d1 == 0:
        raise InvariantError(f"x^2-6x-3 vanished at x={x}")
    u = (2 * y - 6 * x + 42) / d1
    s = (x * x - 12 * x + 39 + 2 * y) / d1
    d2 = 3 * u * u + 6 * u - 1
    if d2 == 0:
        raise InvariantError(f"3u^2+6u-1 vanished at u={u}")
    r = ((x - 3) * u * u + 7 * u - 1) / d2
    return ParamIntermediates(u, s, r, c_star(r, s))


def raw_triple(P: CurvePoint) -> tuple[Fraction, Fraction, Fraction]:
    """``(r**2 - 1, s**2 - 1, c)`` unsorted and unverified."""
    p = param_map(P)
    return p.r * p.r - 1, p.s * p.s - 1, p.c


def is_nondegenerate(a, b, c) -> bool:
    return 0 not in (a, b, c) and len({a, b, c}) == 3


def to_triple(P: CurvePoint, provenance: Provenance | None = None) -> ExoticTriple | None:
    """The exotic triple attached to ``P``, or ``None`` when degenerate.

    Raises InvariantError if a nondegenerate image fails verification.
    """
    if P.is_infinity:
        return None
    a, b, c = raw_triple(P)
    if not is_nondegenerate(a, b, c):
        return None
    a, b, c = sorted((a, b, c))
    v = verify_exotic(a, b, c)
    if not v.ok:
        raise InvariantError(f"point {P} gave a non-exotic triple: {v.failures}")
    return ExoticTriple(a, b, c, v.certificate, provenance)


def family_points(k_max: int):
    """Yield ``(k, twist, k*G + twist*T)`` for ``0 < |k| <= k_max``.

    Order: ``k = 1, -1, 2, -2, ...``, untwisted before twisted.
    """
    P = E2.infinity
    for k in range(1, k_max + 1):
        P = add(P, E2_GENERATOR)
        for kk, Q in ((k, P), (-k, negate(P))):
            yield kk, False, Q
            yield kk, True, add(Q, E2_TORSION)


def family_fibers(k_max: int) -> dict[ExoticTriple, list[tuple[int, bool]]]:
    """Map each triple reached with ``|k| <= k_max`` to every ``(k, twist)`` reaching it.

    The first point reaching a triple is its provenance.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    fibers: dict[ExoticTriple, list[tuple[int, bool]]] = {}
    for k, twist, Q in family_points(k_max):
        if Q.is_infinity:
            continue
        t = to_triple(Q, Provenance(Q.x, Q.y, k, twist))
        if t is None:
            continue
        fibers.setdefault(t, []).append((k, twist))
    return fibers


def coset_collisions(fibers: dict[ExoticTriple, list[tuple[int, bool]]]) -> list[ExoticTriple]:
    """Triples reached from more than one coset ``{P, P + T}``."""
    return [t for t, hits in fibers.items() if len({k for k, _ in hits}) > 1]


def reflection_class(k: int) -> int:
    """Index shared by ``k*G`` and ``(2 - k)*G``."""
    return min(k, 2 - k)


def unexpected_collisions(fibers: dict[ExoticTriple, list[tuple[int, bool]]]) -> list[ExoticTriple]:
    """Triples reached from points not related by ``P -> P + T`` or ``P -> 2G - P``."""
    return [t for t, hits in fibers.items()
            if len({reflection_class(k) for k, _ in hits}) > 1]


def generate_family(k_max: int) -> list[ExoticTriple]:
    """Distinct triples from ``k*G + e*T``, ``0 < |k| <= k_max``, ``e`` in ``{0, 1}``.

    Sorted by largest entry height, then by entries.
    """
    fibers = family_fibers(k_max)
    for t in unexpected_collisions(fibers):
        log.warning("triple %s reached from unrelated points %s", t.values, fibers[t])
    return sorted(fibers, key=ExoticTriple.sort_key)


def first_n_triples(n: int, k_start: int = 4) -> list[ExoticTriple]:
    """At least ``n`` distinct family triples (the first ``n`` in family order)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    k = k_start
    while True:
        triples = generate_family(k)
        if len(triples) >= n:
            return triples[:n]
        k *= 2
