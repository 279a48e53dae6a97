"""Exact integer and rational primitives.

``Rat`` is :class:`fractions.Fraction`: it is always stored in lowest terms
with a positive denominator, so structural equality is value equality.
"""

from __future__ import annotations

import math
import random
import re
from fractions import Fraction
from typing import Iterator

Rat = Fraction

_RAT_RE = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")


def as_rat(value: int | Fraction | str) -> Fraction:
    """Coerce an int, Fraction or rational text to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rat(text: str) -> Fraction:
    """Parse ``p``, ``-p``, ``p/q`` or ``-p/q`` (base 10, no whitespace).

    Non-reduced input such as ``4/6`` is accepted and normalised.
    """
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    sign, num, den = m.groups()
    d = int(den) if den is not None else 1
    if d == 0:
        raise ValueError(f"zero denominator: {text!r}")
    n = int(num)
    return Fraction(-n if sign else n, d)


def format_rat(q: Fraction) -> str:
    return str(q)


def int_sqrt(n: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(n)), n is a perfect square)``."""
    if n < 0:
        raise ValueError(f"int_sqrt of negative number {n}")
    root = math.isqrt(n)
    return root, root * root == n


def rat_sqrt(q: Fraction) -> Fraction | None:
    """Nonnegative rational square root of ``q``, or ``None`` if there is none."""
    if q < 0:
        return None
    # canonical form: q is a square iff numerator and denominator both are
    rn, ok = int_sqrt(q.numerator)
    if not ok:
        return None
    rd, ok = int_sqrt(q.denominator)
    if not ok:
        return None
    return Fraction(rn, rd)


def is_square(q: Fraction | int) -> bool:
    if isinstance(q, int):
        return q >= 0 and int_sqrt(q)[1]
    return rat_sqrt(q) is not None


def height(q: Fraction) -> int:
    """Naive height ``max(|p|, q)`` of ``p/q`` in lowest terms."""
    return max(abs(q.numerator), q.denominator)


def rat_order_key(q: Fraction) -> tuple[int, int, int, int]:
    """Sort key used by :func:`enumerate_rats`.

    Height first, then ``|numerator|``, then denominator, positive before
    negative.
    """
    return height(q), abs(q.numerator), q.denominator, int(q < 0)


def iter_rats(h_max: int) -> Iterator[Fraction]:
    """Yield every reduced rational of height ``<= h_max`` exactly once.

    Within each height the order is ascending ``|p|``, then ascending ``q``,
    then ``p/q`` before ``-p/q``.
    """
    if h_max < 1:
        raise ValueError("h_max must be >= 1")
    yield Fraction(0)
    for h in range(1, h_max + 1):
        # either the denominator is h and |p| < h, or |p| = h and q <= h
        for p in range(1, h):
            if math.gcd(p, h) == 1:
                yield Fraction(p, h)
                yield Fraction(-p, h)
        for q in range(1, h + 1):
            if math.gcd(h, q) == 1:
                yield Fraction(h, q)
                yield Fraction(-h, q)


def enumerate_rats(h_max: int) -> list[Fraction]:
    return list(iter_rats(h_max))


def random_rat(rng: random.Random, bound: int = 10**4) -> Fraction:
    """Pseudorandom rational with ``|num| <= bound`` and ``1 <= den <= bound``."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
