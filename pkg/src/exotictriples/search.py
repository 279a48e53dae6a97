"""Exhaustive desk-scale searches.

Work is split into disjoint strided partitions and merged into a sorted,
deduplicated result, so output does not depend on the worker count.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .exactnum import enumerate_rats, int_sqrt, rat_sqrt
from .family import ExoticTriple
from .verify import verify_exotic

log = logging.getLogger(__name__)


def _is_sq(n: int) -> bool:
    return int_sqrt(n)[1]


def _map_partitions(fn, args, threads: int) -> list:
    """Run ``fn(part, threads, *args)`` for every partition index, in order."""
    if threads <= 1:
        return [fn(0, 1, *args)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(fn, part, threads, *args) for part in range(threads)]
        return [f.result() for f in futures]


@dataclass
class SearchOutcome:
    exotic_found: list[ExoticTriple] = field(default_factory=list)
    near_misses: list[tuple[int, int, int]] = field(default_factory=list)
    # near misses with c <= 4ab, which Lemma 14 of Dujella's bound rules out
    lemma_violations: list[tuple[int, int, int]] = field(default_factory=list)
    stats: Counter = field(default_factory=Counter)

    @property
    def quadruples(self) -> list[tuple[int, int, int]]:
        """All ``(a, b, c)`` with ``{1, a, b, c}`` a Diophantine quadruple."""
        return sorted(self.near_misses + [tuple(int(q) for q in t.values) for t in self.exotic_found])


def shifted_squares(c_max: int) -> list[int]:
    """``g**2 - 1 <= c_max`` for ``g >= 2``."""
    return [g * g - 1 for g in range(2, isqrt(c_max + 1) + 1)]


def _integer_partition(part: int, nparts: int, c_max: int):
    vals = shifted_squares(c_max)
    stats = Counter()
    exotic, near = [], []
    for i in range(part, len(vals), nparts):
        a = vals[i]
        for j in range(i + 1, len(vals)):
            b = vals[j]
            stats["pairs"] += 1
            if not _is_sq(a * b + 1):
                stats["pruned_ab"] += 1
                continue
            for c in vals[j + 1:]:
                stats["c_candidates"] += 1
                if not _is_sq(a * c + 1):
                    stats["pruned_ac"] += 1
                    continue
                if not _is_sq(b * c + 1):
                    stats["pruned_bc"] += 1
                    continue
                stats["quadruples"] += 1
                if _is_sq(a * b * c + 1):
                    exotic.append((a, b, c))
                else:
                    near.append((a, b, c))
    return exotic, near, stats


def search_integer_exotic(c_max: int, threads: int = 1) -> SearchOutcome:
    """All positive integer ``3 <= a < b < c <= c_max`` with ``{1, a, b, c}`` a quadruple.

    Each of ``a, b, c`` is ``g**2 - 1`` since ``a+1`` etc. must be square.
    ``exotic_found`` should always be empty; anything there is logged as an error.
    """
    if c_max < 3:
        raise ValueError("c_max must be >= 3")
    out = SearchOutcome()
    exotic = []
    for ex, near, stats in _map_partitions(_integer_partition, (c_max,), threads):
        exotic += ex
        out.near_misses += near
        out.stats.update(stats)
    out.near_misses.sort()
    out.lemma_violations = [(a, b, c) for a, b, c in out.near_misses if c <= 4 * a * b]
    for a, b, c in sorted(exotic):
        t = ExoticTriple.from_values(a, b, c)
        log.error("integer exotic triple %s found: contradicts the nonexistence theorem", t.values)
        out.exotic_found.append(t)
    out.stats["near_misses"] = len(out.near_misses)
    out.stats["exotic"] = len(out.exotic_found)
    return out


def naive_integer_search(c_max: int) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]]:
    """Reference triple loop over every ``1 <= a < b < c <= c_max``.

    Returns ``(exotic, near_misses)``. Cubic; only for cross-checking.
    """
    exotic, near = [], []
    for a in range(1, c_max + 1):
        if not _is_sq(a + 1):
            continue
        for b in range(a + 1, c_max + 1):
            if not (_is_sq(b + 1) and _is_sq(a * b + 1)):
                continue
            for c in range(b + 1, c_max + 1):
                if _is_sq(c + 1) and _is_sq(a * c + 1) and _is_sq(b * c + 1):
                    (exotic if _is_sq(a * b * c + 1) else near).append((a, b, c))
    return exotic, near


def _shifted_rat_squares(h_max: int) -> list[Fraction]:
    # r and -r give the same a = r**2 - 1
    return sorted({r * r - 1 for r in enumerate_rats(h_max)} - {Fraction(0)})


def _rational_partition(part: int, nparts: int, h_max: int) -> list[ExoticTriple]:
    vals = _shifted_rat_squares(h_max)
    found = set()
    for i in range(part, len(vals), nparts):
        a = vals[i]
        for b in vals[i + 1:]:
            ab = a * b
            t = rat_sqrt(ab + 1)
            if t is None:
                continue
            for c in (ab + 1 - 2 * t, ab + 1 + 2 * t):
                v = verify_exotic(a, b, c)
                if v.ok:
                    found.add(ExoticTriple.from_values(a, b, c))
    return sorted(found, key=ExoticTriple.sort_key)


def search_rational_exotic(h_max: int, threads: int = 1) -> list[ExoticTriple]:
    """Exotic triples ``(r**2 - 1, s**2 - 1, c)`` with ``r, s`` of height ``<= h_max``.

    ``c`` ranges over the two values making ``(1, ab, c)`` regular, which
    already forces ``ab+1``, ``c+1`` and ``abc+1`` to be squares.
    """
    if h_max < 1:
        raise ValueError("h_max must be >= 1")
    found = set()
    for part in _map_partitions(_rational_partition, (h_max,), threads):
        found.update(part)
    return sorted(found, key=ExoticTriple.sort_key)


@dataclass(frozen=True)
class Case1Hit:
    s: Fraction
    r: Fraction
    c: Fraction
    reason: str | None  # None means nondegenerate

    @property
    def triple(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.r * self.r - 1, self.s * self.s - 1, self.c


def octic_quadratic(s: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of the rs = 1 octic, read as a quadratic in c."""
    s2 = s * s
    s4 = s2 * s2
    return s4, 2 * s4 * s2 - 6 * s4 + 2 * s2, s4 * s4 - 2 * s4 * s2 - s4 - 2 * s2 + 1


def octic_roots(s: Fraction) -> list[Fraction]:
    """Rational ``c`` on the octic for this ``s``, ascending."""
    qa, qb, qc = octic_quadratic(s)
    root = rat_sqrt(qb * qb - 4 * qa * qc)
    if root is None:
        return []
    return sorted({(-qb - root) / (2 * qa), (-qb + root) / (2 * qa)})


def classify(a: Fraction, b: Fraction, c: Fraction) -> str | None:
    if 0 in (a, b, c):
        return "zero entry"
    if len({a, b, c}) < 3:
        return "repeated entry"
    v = verify_exotic(a, b, c)
    if not v.ok:
        return "square condition failed: " + ", ".join(v.failures)
    return None


def case1_scan(h_max: int) -> list[Case1Hit]:
    """Every rational point of the ``rs = ±1`` branch with ``height(s) <= h_max``."""
    if h_max < 1:
        raise ValueError("h_max must be >= 1")
    hits = []
    for s in enumerate_rats(h_max):
        if s == 0:
            continue
        for c in octic_roots(s):
            for r in (1 / s, -1 / s):
                a, b = r * r - 1, s * s - 1
                hits.append(Case1Hit(s, r, c, classify(a, b, c)))
    nondegenerate = [h for h in hits if h.reason is None]
    if nondegenerate:
        log.error("case-1 scan found nondegenerate triples: %s", [h.triple for h in nondegenerate])
    return hits
