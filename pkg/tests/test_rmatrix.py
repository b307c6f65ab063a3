from fractions import Fraction

import pytest

from multicomm.rmatrix import (
    Flavor,
    RMatrix,
    apply_r,
    check_equal_argument,
    check_flavor_duality,
    check_unitarity,
    check_yang_baxter,
    r_element,
)
from multicomm.scalars import SamplePlan
from multicomm.states import basis_state

PLAN = SamplePlan(seed=1, count=3)


def test_elements_by_flavor():
    q, u, v = Fraction(2), Fraction(3), Fraction(5)
    a = RMatrix("trigA", q)
    assert a.element(u, v, 1, 1, 1, 1) == q * u - v / q
    assert a.element(u, v, 1, 2, 1, 2) == u - v
    assert a.element(u, v, 1, 2, 2, 1) == (q - 1 / q) * u
    assert a.element(u, v, 2, 1, 1, 2) == (q - 1 / q) * v
    b = RMatrix("trigB", q)
    assert b.element(u, v, 1, 2, 2, 1) == (q - 1 / q) * v
    assert b.element(u, v, 2, 1, 1, 2) == (q - 1 / q) * u
    r = RMatrix("rational", Fraction(7))
    assert r.element(u, v, 2, 2, 2, 2) == u - v + 7
    assert r.element(u, v, 1, 2, 2, 1) == 7
    assert r.element(u, v, 1, 2, 1, 1) == 0
    assert r_element("rational", 3, 7, u, v, 3, 1, 1, 3) == 7


def test_flavor_parsing():
    assert Flavor.parse("TrigA") is Flavor.TRIG_A
    assert Flavor.parse("rational").coupling_name == "h"
    with pytest.raises(ValueError):
        Flavor.parse("elliptic")


def test_degenerate_couplings_rejected():
    with pytest.raises(ValueError):
        RMatrix("trigA", 0)
    with pytest.raises(ValueError):
        RMatrix("rational", 0)


def test_apply_r_on_two_sites():
    rm = RMatrix("rational", 1)
    s = apply_r(rm, Fraction(3), Fraction(1), 0, 1, basis_state((1, 2), 2))
    assert s[(1, 2)] == 2 and s[(2, 1)] == 1


@pytest.mark.parametrize("flavor", ["trigA", "trigB", "rational"])
@pytest.mark.parametrize("N", [2, 3])
def test_yang_baxter_and_unitarity(flavor, N):
    assert check_yang_baxter(flavor, N, PLAN).passed
    assert check_unitarity(flavor, N, PLAN).passed
    assert check_equal_argument(flavor, N, PLAN).passed


def test_flavor_duality():
    for N in (2, 3, 4):
        assert check_flavor_duality(N, PLAN).passed


class _Mutated(RMatrix):
    """Exchange weight off by a factor for one color pair: breaks Yang-Baxter."""

    def exchange(self, i, j, u, v):
        w = super().exchange(i, j, u, v)
        return w * 2 if (i, j) == (1, 2) else w


def test_mutated_r_matrix_fails_yang_baxter():
    rep = check_yang_baxter("trigA", 2, PLAN, factory=lambda fl, c: _Mutated(fl, c))
    assert rep.status == "FAIL"
    assert rep.counterexample is not None
