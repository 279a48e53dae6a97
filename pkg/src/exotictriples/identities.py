"""Fixed-seed pointwise checks of the polynomial identities used throughout."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .exactnum import random_rat
from .regularity import c_star, factorization_check, quadric_eval, r3_eval, r4_eval
from .theorem2 import identity_check


def _r3_symmetric(rng):
    a, b, c = (random_rat(rng) for _ in range(3))
    v = r3_eval(a, b, c)
    expanded = a * a + b * b + c * c - 2 * a * b - 2 * a * c - 2 * b * c - 4
    return v == expanded and all(r3_eval(*p) == v for p in itertools.permutations((a, b, c)))


def _r4_symmetric(rng):
    pt = [random_rat(rng) for _ in range(4)]
    v = r4_eval(*pt)
    return all(r4_eval(*p) == v for p in itertools.permutations(pt))


def _factorization(rng):
    diff, prod = factorization_check(random_rat(rng), random_rat(rng), random_rat(rng))
    return diff == prod


def _gap_identity(rng):
    return identity_check(random_rat(rng), random_rat(rng), random_rat(rng))


def _c_star_zeroes(rng):
    r, s = random_rat(rng), random_rat(rng)
    c = c_star(r, s)
    rs = r * s
    diff, prod = factorization_check(r, s, c)
    return (rs * rs - 2 * s * s - 2 * r * r + 5 + 2 * c == 0
            and diff == 0 and prod == 0 and c == c_star(s, r))


def _quadric_symmetric(rng):
    r, s = random_rat(rng), random_rat(rng)
    return all(quadric_eval(r, s, sg) == quadric_eval(s, r, sg) for sg in (1, -1))


SUITES = {
    "r3_symmetry_and_expansion": _r3_symmetric,
    "r4_symmetry": _r4_symmetric,
    "r3_minus_r4_factorization": _factorization,
    "gap_identity": _gap_identity,
    "c_star_zeroes_factor": _c_star_zeroes,
    "quadric_symmetry": _quadric_symmetric,
}


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    trials: int
    failures: int

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {"suite": self.suite, "trials": self.trials,
                "failures": self.failures, "passed": self.passed}


def run_suite(name: str, trials: int = 1000, seed: int = 0) -> SuiteResult:
    # each suite gets its own stream so suites can run in any order
    rng = random.Random(f"{seed}:{name}")
    check = SUITES[name]
    failures = sum(not check(rng) for _ in range(trials))
    return SuiteResult(name, trials, failures)


def run_all(trials: int = 1000, seed: int = 0) -> list[SuiteResult]:
    return [run_suite(name, trials, seed) for name in SUITES]
