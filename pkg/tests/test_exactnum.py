import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from exotictriples.exactnum import (
    enumerate_rats, format_rat, height, int_sqrt, parse_rat, rat_sqrt,
)


def brute_rats(h):
    return {Fraction(p, q) for p in range(-h, h + 1) for q in range(1, h + 1)
            if gcd(p, q) == 1 or p == 0}


@pytest.mark.parametrize("n, expected", [
    (0, (0, True)),
    (2881, (53, False)),
    (1515361, (1231, True)),
])
def test_int_sqrt_examples(n, expected):
    assert int_sqrt(n) == expected


def test_int_sqrt_rejects_negative():
    with pytest.raises(ValueError):
        int_sqrt(-1)


def test_int_sqrt_matches_linear_scan():
    root = 0
    for n in range(10**6 + 1):
        while (root + 1) ** 2 <= n:
            root += 1
        r, exact = int_sqrt(n)
        assert r == root and exact == (root * root == n)


@pytest.mark.parametrize("q, expected", [
    (Fraction(25, 4), Fraction(5, 2)),
    (Fraction(3025, 529), Fraction(55, 23)),
    (Fraction(2881), None),
    (Fraction(-1), None),
    (Fraction(0), Fraction(0)),
])
def test_rat_sqrt_examples(q, expected):
    assert rat_sqrt(q) == expected


def test_rat_sqrt_of_square_seeded():
    rng = random.Random(20240601)
    for _ in range(1000):
        q = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert rat_sqrt(q * q) == abs(q)


@given(st.fractions())
def test_rat_sqrt_roundtrip(q):
    r = rat_sqrt(q)
    if r is not None:
        assert r >= 0 and r * r == q
    assert rat_sqrt(q * q) == abs(q)


@pytest.mark.parametrize("q, h", [(Fraction(312, 529), 529), (Fraction(8), 8), (Fraction(-3, 7), 7)])
def test_height(q, h):
    assert height(q) == h


def test_enumerate_small():
    assert enumerate_rats(1) == [0, 1, -1]
    assert enumerate_rats(2) == [0, 1, -1, Fraction(1, 2), Fraction(-1, 2), 2, -2]


def test_enumerate_membership():
    assert Fraction(29, 23) not in enumerate_rats(28)
    assert Fraction(29, 23) in enumerate_rats(29)


@pytest.mark.parametrize("h", [1, 2, 3, 7, 13, 29, 50])
def test_enumerate_matches_brute(h):
    got = enumerate_rats(h)
    assert len(got) == len(set(got))
    assert set(got) == brute_rats(h)
    assert all(height(q) <= h for q in got)


def test_enumerate_order_is_by_height():
    hs = [height(q) for q in enumerate_rats(20)]
    assert hs == sorted(hs)


@pytest.mark.parametrize("text", ["0", "8", "-3/7", "312/529", "-78374557/87628321"])
def test_format_roundtrip(text):
    assert format_rat(parse_rat(text)) == text


@given(st.fractions())
def test_format_roundtrip_property(q):
    assert parse_rat(format_rat(q)) == q


@pytest.mark.parametrize("bad", ["", "1/0", "1.5", "+3", " 3", "3/-4", "a/b", "1e3", "--1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_parse_normalises():
    assert parse_rat("4/6") == Fraction(2, 3)
