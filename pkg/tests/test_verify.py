import itertools
from fractions import Fraction as F

import pytest

from exotictriples.regularity import derived_roots_from_r3
from exotictriples.verify import (
    SquareCertificate, regularity_report, verify_diophantine_with_one, verify_exotic,
)

FIRST = (8, F(312, 529), F(495, 529))


def test_certificate_of_first_example():
    v = verify_exotic(*FIRST)
    assert v.ok and bool(v)
    assert v.certificate == SquareCertificate(
        3, F(29, 23), F(32, 23), F(55, 23), F(67, 23), F(659, 529), F(1231, 529))
    assert v.certificate.check(*FIRST)


def test_failures_are_all_listed():
    assert set(verify_exotic(1, 2, 3).failures) >= {"b+1", "bc+1"}
    assert verify_exotic(1, 2, 3).failures == ("a+1", "b+1", "ab+1", "bc+1", "abc+1")
    v = verify_exotic(3, 8, 120)
    assert v.failures == ("abc+1",) and v.certificate is None


def test_definition_failures():
    assert verify_exotic(3, 3, 8).failures[-1] == "distinct"
    assert "nonzero" in verify_exotic(0, 3, 8).failures
    # (8, 0, 3) satisfies every square condition but is not a triple
    assert verify_exotic(8, 0, 3).failures == ("nonzero",)


def test_order_insensitive():
    base = verify_exotic(*FIRST)
    keys = ("root_a1", "root_b1", "root_c1")
    for perm in itertools.permutations(range(3)):
        v = verify_exotic(*(FIRST[i] for i in perm))
        assert v.ok
        for k, i in zip(keys, perm):
            assert getattr(v.certificate, k) == getattr(base.certificate, keys[i])


def test_certificate_json_roundtrip():
    cert = verify_exotic(*FIRST).certificate
    assert SquareCertificate.from_json(cert.to_json()) == cert
    assert cert.to_json()["root_abc1"] == "1231/529"


@pytest.mark.parametrize("args, expected", [
    ((3, 8, 120), True),
    (FIRST, True),
    ((2, 3, 5), False),
    ((1, 3, 8), False),  # 1 repeated
])
def test_diophantine_with_one(args, expected):
    assert verify_diophantine_with_one(*args) is expected


def test_regularity_report():
    rep = regularity_report(*FIRST)
    assert rep.r4_1abc == 0 and rep.r3_1ab_c == 0
    assert rep.flag_quadruple_regular and rep.flag_1ab_c_regular
    assert regularity_report(3, 8, 120).flag_quadruple_regular
    rep = regularity_report(1, 2, 3)
    assert rep.r4_1abc == -47
    assert not rep.flag_quadruple_regular and not rep.flag_1ab_c_regular


def test_derived_roots_match_certificate():
    cert = verify_exotic(*FIRST).certificate
    a, b, c = FIRST
    assert derived_roots_from_r3(a, b, c) == (cert.root_ab1, cert.root_abc1, cert.root_c1)
