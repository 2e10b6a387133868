from fractions import Fraction
from math import factorial

import pytest

import msplab


def test_target_config():
    t = msplab.target_config(8)
    assert t["weights"] == [1, 1, 1, 1, 4]
    with pytest.raises(msplab.UnknownTarget):
        msplab.target_config(7)


def test_I0_hypergeometric():
    g = msplab.generators(6, 4)
    for d, c in enumerate(g["I0"]):
        assert c == Fraction(factorial(6 * d), factorial(d) ** 4 * factorial(2 * d))


@pytest.mark.parametrize("k,n1", [(6, 7884), (8, 29504), (10, 231200)])
def test_degree_one_invariant(k, n1):
    inv = msplab.genus0_invariants(k, 1)
    assert inv["yukawa_route"][0] == n1
    assert inv["j2_route"][0] == n1


def test_degree_two_multiple_cover():
    inv = msplab.genus0_invariants(6, 2)
    assert inv["yukawa_route"][1] == 6028452 + Fraction(7884, 8)


def test_checks_pass():
    assert msplab.verify_yukawa_identity(10, 12)["status"] == "PASS"
    assert msplab.pf_check(6, 7, 10)["status"] == "PASS"
    assert msplab.specialized_checks(6, 7, 3)["status"] == "PASS"
    assert msplab.verify_zz(6, 12)["status"] == "PASS"


def test_r_tower_shape():
    tower = msplab.r_tower(6, 7, 3)
    assert tower[0] == [1]
    assert [len(p) for p in tower] == [1, 2, 3, 4]


def test_membership():
    assert "DA" in msplab.named_series()
    cert = msplab.find_polynomial(6, "DA", 2, guard=8, order=30)
    assert cert["status"] == "certified"
    assert all(isinstance(m["coeff"], Fraction) for m in cert["monomials"])
    with pytest.raises(msplab.InsufficientOrder):
        msplab.find_polynomial(6, "DA", 2, guard=8, order=10)


def test_criterion():
    c = msplab.run_criterion(1)
    assert c["status"] == "PASS"
