"""Certify or refute the exotic property of a candidate triple."""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

from .exactnum import as_rat, format_rat, parse_rat, rat_sqrt
from .regularity import r3_eval, r4_eval

# condition names, in certificate order
CONDITIONS = ("a+1", "b+1", "c+1", "ab+1", "ac+1", "bc+1", "abc+1")
ROOT_KEYS = ("root_a1", "root_b1", "root_c1", "root_ab1", "root_ac1", "root_bc1", "root_abc1")

DISTINCT = "distinct"
NONZERO = "nonzero"


def _targets(a: Fraction, b: Fraction, c: Fraction) -> tuple[Fraction, ...]:
    return (a + 1, b + 1, c + 1, a * b + 1, a * c + 1, b * c + 1, a * b * c + 1)


@dataclass(frozen=True)
class SquareCertificate:
    """Nonnegative square roots of the seven quantities for a triple ``(a, b, c)``."""

    root_a1: Fraction
    root_b1: Fraction
    root_c1: Fraction
    root_ab1: Fraction
    root_ac1: Fraction
    root_bc1: Fraction
    root_abc1: Fraction

    def roots(self) -> tuple[Fraction, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    def check(self, a, b, c) -> bool:
        """Re-validate by squaring every root."""
        a, b, c = as_rat(a), as_rat(b), as_rat(c)
        return all(r >= 0 and r * r == t for r, t in zip(self.roots(), _targets(a, b, c)))

    def to_json(self) -> dict[str, str]:
        return {k: format_rat(v) for k, v in zip(ROOT_KEYS, self.roots())}

    @classmethod
    def from_json(cls, obj: dict[str, str]) -> "SquareCertificate":
        return cls(*(parse_rat(obj[k]) for k in ROOT_KEYS))


@dataclass(frozen=True)
class Verification:
    """Outcome of :func:`verify_exotic`.

    ``failures`` lists every failed condition by name: the seven square
    conditions use the names in ``CONDITIONS``, definition failures are
    ``"distinct"`` and ``"nonzero"``. ``certificate`` is set only on success.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    certificate: SquareCertificate | None
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def verify_exotic(a, b, c) -> Verification:
    a, b, c = as_rat(a), as_rat(b), as_rat(c)
    failures = []
    roots = []
    for name, target in zip(CONDITIONS, _targets(a, b, c)):
        root = rat_sqrt(target)
        roots.append(root)
        if root is None:
            failures.append(name)
    if len({a, b, c}) < 3:
        failures.append(DISTINCT)
    if 0 in (a, b, c):
        failures.append(NONZERO)

    cert = None
    if not failures:
        cert = SquareCertificate(*roots)
        if not cert.check(a, b, c):
            raise AssertionError(f"certificate failed to re-validate for {(a, b, c)}")
    return Verification(a, b, c, cert, tuple(failures))


def verify_diophantine_with_one(a, b, c) -> bool:
    """True iff ``{1, a, b, c}`` is a rational Diophantine quadruple."""
    a, b, c = as_rat(a), as_rat(b), as_rat(c)
    entries = {Fraction(1), a, b, c}
    if len(entries) < 4 or 0 in entries:
        return False
    return all(rat_sqrt(t) is not None for t in _targets(a, b, c)[:6])


@dataclass(frozen=True)
class RegularityReport:
    r3_1ab_c: Fraction
    r4_1abc: Fraction
    r3_abc: Fraction

    @property
    def flag_quadruple_regular(self) -> bool:
        return self.r4_1abc == 0

    @property
    def flag_1ab_c_regular(self) -> bool:
        return self.r3_1ab_c == 0


def regularity_report(a, b, c) -> RegularityReport:
    a, b, c = as_rat(a), as_rat(b), as_rat(c)
    return RegularityReport(
        r3_1ab_c=r3_eval(1, a * b, c),
        r4_1abc=r4_eval(1, a, b, c),
        r3_abc=r3_eval(a, b, c),
    )
