from fractions import Fraction

import pytest

from multicomm.checks import (
    check_grid_f_factor,
    check_grid_k_factor,
    check_h_equals_k,
    check_psi_equals_w,
    color_tuples,
)
from multicomm.grid import (
    domain_wall,
    domain_wall_colored,
    grid_h,
    grid_k,
    grid_k_colored,
    psi_layered,
)
from multicomm.rmatrix import RMatrix
from multicomm.scalars import SamplePlan, prod
from multicomm.special import ik_determinant, weight_function

Q = Fraction
PLAN = SamplePlan(seed=2, count=2)
TRIG = RMatrix("trigA", Q(5, 3))
RAT = RMatrix("rational", Q(-3))


def test_domain_wall_single_vertex():
    assert domain_wall(TRIG, [Q(4)], [Q(9)]) == (Q(5, 3) - Q(3, 5)) * 4
    assert domain_wall(RAT, [Q(4)], [Q(9)]) == -3
    with pytest.raises(ValueError):
        domain_wall(TRIG, [Q(1)], [])


@pytest.mark.parametrize("rm", [TRIG, RAT])
def test_domain_wall_symmetric_and_equal_to_determinant(rm):
    u, v = [Q(2), Q(7), Q(-4)], [Q(3), Q(-1), Q(10)]
    assert domain_wall(rm, u, v) == domain_wall(rm, u[::-1], v)
    assert domain_wall(rm, u, v) == ik_determinant(rm, u, v)


def test_colored_domain_wall():
    u, v = [Q(2), Q(7)], [Q(3), Q(-1)]
    assert domain_wall_colored(TRIG, 2, 1, u, v) == domain_wall(TRIG, u, v)
    v0 = [Q(3), Q(-1), Q(6)]
    assert domain_wall_colored(TRIG, 3, 2, v0, v0) == prod(TRIG.same(a, b) for a in v0 for b in v0)


def test_grid_h_boundary_cases():
    assert grid_h(TRIG, 3, [[], []], [[], []]) == 1
    u, v = [Q(2), Q(7)], [Q(3), Q(-1)]
    assert grid_h(TRIG, 2, [u], [v]) == domain_wall(TRIG, u, v)
    assert grid_k_colored(TRIG, 3, [[], []], [Q(1), Q(2)], (3, 3)) == 1
    assert grid_k(TRIG, 3, [[], []], [[], [], [Q(4)]]) == 1


def test_psi_layered_examples():
    # single layer, k_1 = 1, L = 2
    u, v = [Q(3)], [Q(5), Q(7)]
    assert psi_layered(TRIG, [u], v, (1, 2)) == weight_function(TRIG, [u], v, (1, 2))
    assert psi_layered(TRIG, [[], []], [Q(1), Q(2)], (3, 3)) == 1
    layers = [[Q(2)], [Q(11), Q(-6)]]
    assert psi_layered(RAT, layers, v, (2, 1)) == weight_function(RAT, layers, v, (2, 1))


def test_psi_layered_symmetric_in_layer():
    v = [Q(5), Q(7), Q(-2)]
    a = psi_layered(TRIG, [[Q(1), Q(4)], [Q(9), Q(-8), Q(12)]], v, (1, 2, 1))
    b = psi_layered(TRIG, [[Q(4), Q(1)], [Q(12), Q(9), Q(-8)]], v, (1, 2, 1))
    assert a == b


def test_color_tuples_respect_caps():
    ts = color_tuples(3, 3, 2)
    assert (1, 1, 1) not in ts and (1, 2, 3) in ts and (3, 3, 3) in ts


@pytest.mark.parametrize("flavor", ["trigA", "rational"])
def test_lattice_identities(flavor):
    assert check_psi_equals_w(flavor, 3, 3, PLAN).passed
    assert check_h_equals_k(flavor, 3, PLAN).passed
    assert check_grid_k_factor(flavor, (2, 1, 1), PLAN).passed
    assert check_grid_f_factor(flavor, (1, 1, 2), PLAN).passed
