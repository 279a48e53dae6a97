import random
from fractions import Fraction as F

import pytest

from exotictriples.exactnum import enumerate_rats, random_rat, rat_sqrt
from exotictriples.regularity import r3_eval, r4_eval
from exotictriples.search import (
    case1_scan, naive_integer_search, octic_quadratic, octic_roots,
    search_integer_exotic, search_rational_exotic, shifted_squares,
)
from exotictriples.verify import verify_diophantine_with_one, verify_exotic

FIRST = (F(312, 529), F(495, 529), F(8))


def test_integer_search_120():
    out = search_integer_exotic(120)
    assert out.exotic_found == []
    assert (3, 8, 120) in out.near_misses
    assert out.lemma_violations == []


def test_integer_search_10_empty():
    out = search_integer_exotic(10)
    assert out.exotic_found == [] and out.near_misses == []


def test_integer_search_shapes_and_stats():
    out = search_integer_exotic(5000)
    sq = set(shifted_squares(5000))
    for a, b, c in out.near_misses:
        assert {a, b, c} <= sq
        assert verify_diophantine_with_one(a, b, c)
        assert verify_exotic(a, b, c).failures == ("abc+1",)
        assert c > 4 * a * b
    s = out.stats
    assert s["pairs"] == len(sq) * (len(sq) - 1) // 2
    assert s["pruned_ab"] < s["pairs"]
    assert s["quadruples"] == len(out.near_misses)


@pytest.mark.parametrize("c_max", [3, 10, 120, 200])
def test_integer_search_matches_naive(c_max):
    out = search_integer_exotic(c_max)
    exotic, near = naive_integer_search(c_max)
    assert exotic == [] and [t.values for t in out.exotic_found] == exotic
    assert out.near_misses == near


def test_integer_search_thread_invariance():
    one = search_integer_exotic(20000)
    four = search_integer_exotic(20000, threads=4)
    assert one.near_misses == four.near_misses
    assert one.stats == four.stats


def test_rational_search_small():
    assert search_rational_exotic(2) == []


def test_rational_search_matches_unpruned_loop():
    # every signed, ordered (r, s) pair; no dedup of r versus -r
    rats = enumerate_rats(29)
    expected = set()
    for r in rats:
        for s in rats:
            a, b = r * r - 1, s * s - 1
            t = rat_sqrt(a * b + 1)
            if t is None:
                continue
            for c in (a * b + 1 - 2 * t, a * b + 1 + 2 * t):
                if verify_exotic(a, b, c).ok:
                    expected.add(tuple(sorted((a, b, c))))
    got = [t.values for t in search_rational_exotic(29)]
    assert set(got) == expected and len(got) == len(expected) >= 1


def test_rational_search_finds_first_example():
    found = search_rational_exotic(29)
    assert FIRST in {t.values for t in found}
    for t in found:
        a, b, c = t.values
        assert any(r3_eval(1, x * y, z) == 0 for x, y, z in ((a, b, c), (a, c, b), (b, c, a)))


def test_octic_is_r4_on_the_rs1_branch():
    rng = random.Random(5)
    for _ in range(200):
        s, c = random_rat(rng, 100), random_rat(rng, 100)
        if s == 0:
            continue
        qa, qb, qc = octic_quadratic(s)
        assert qa * c * c + qb * c + qc == s ** 4 * r4_eval(1, 1 / s ** 2 - 1, s * s - 1, c)


def test_octic_examples():
    assert octic_roots(F(1)) == [-1, 3]
    assert octic_roots(F(-1)) == [-1, 3]
    assert octic_quadratic(F(2)) == (16, 40, 105)
    assert octic_roots(F(2)) == []


def test_case1_scan():
    hits = case1_scan(50)
    assert hits and all(h.reason is not None for h in hits)
    assert {(h.s, h.c) for h in hits} == {(1, 3), (1, -1), (-1, 3), (-1, -1)}
    assert all(h.reason == "zero entry" for h in hits)
