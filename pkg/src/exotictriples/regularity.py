"""The regularity polynomials r3, r4 and the curves they cut out."""

from __future__ import annotations

from fractions import Fraction

from .exactnum import as_rat, rat_sqrt


def r3_eval(a, b, c) -> Fraction:
    """``(a + b - c)**2 - 4*(a*b + 1)``; symmetric in all three arguments."""
    a, b, c = as_rat(a), as_rat(b), as_rat(c)
    return (a + b - c) ** 2 - 4 * (a * b + 1)


def r4_eval(a, b, c, d) -> Fraction:
    """``(a + b - c - d)**2 - 4*(a*b + 1)*(c*d + 1)``; symmetric in all four."""
    a, b, c, d = as_rat(a), as_rat(b), as_rat(c), as_rat(d)
    return (a + b - c - d) ** 2 - 4 * (a * b + 1) * (c * d + 1)


def regular_pair_extensions(a, b) -> tuple[Fraction, Fraction] | None:
    """The two ``c`` with ``r3(a, b, c) == 0``, or ``None`` if ``ab+1`` is no square."""
    a, b = as_rat(a), as_rat(b)
    t = rat_sqrt(a * b + 1)
    if t is None:
        return None
    return a + b - 2 * t, a + b + 2 * t


def derived_roots_from_r3(a, b, c) -> tuple[Fraction, Fraction, Fraction]:
    """Square roots of ``ab+1``, ``abc+1`` and ``c+1`` forced by ``r3(1, ab, c) == 0``.

    Raises ValueError if ``(1, ab, c)`` is not regular.
    """
    a, b, c = as_rat(a), as_rat(b), as_rat(c)
    ab = a * b
    if r3_eval(1, ab, c) != 0:
        raise ValueError("not r3-regular with 1")
    root_ab1 = abs((1 + ab - c) / 2)
    root_abc1 = abs((ab + c - 1) / 2)
    root_c1 = abs((c + 1 - ab) / 2)
    assert root_ab1 ** 2 == ab + 1
    assert root_abc1 ** 2 == ab * c + 1
    assert root_c1 ** 2 == c + 1
    return root_ab1, root_abc1, root_c1


def c_star(r, s) -> Fraction:
    """The ``c`` that kills the last factor of the r3 - r4 difference."""
    r, s = as_rat(r), as_rat(s)
    r2, s2 = r * r, s * s
    return (-r2 * s2 + 2 * s2 + 2 * r2 - 5) / 2


def factorization_check(r, s, c) -> tuple[Fraction, Fraction]:
    """Return ``(r3 - r4, factored form)`` at ``a = r**2 - 1``, ``b = s**2 - 1``.

    The two components are always equal.
    """
    r, s, c = as_rat(r), as_rat(s), as_rat(c)
    a, b = r * r - 1, s * s - 1
    difference = r3_eval(1, a * b, c) - r4_eval(1, a, b, c)
    rs = r * s
    product = (rs - 1) * (rs + 1) * (rs * rs - 2 * s * s - 2 * r * r + 5 + 2 * c)
    return difference, product


def quadric_eval(r, s, sign: int) -> Fraction:
    """``r²s² - 4/3 r² + sign·2/3 rs - 4/3 s² + 7/3`` for ``sign`` in ``{+1, -1}``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    r, s = as_rat(r), as_rat(s)
    return (r * r * s * s - Fraction(4, 3) * r * r + sign * Fraction(2, 3) * r * s
            - Fraction(4, 3) * s * s + Fraction(7, 3))
