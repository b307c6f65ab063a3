from fractions import Fraction

import pytest

from multicomm.commutation import (
    coefficient_grid,
    coefficient_grid_k,
    coefficient_ik,
    coefficient_weight,
    enumerate_partitions,
    lhs_matrix,
    multinomial,
    rhs_matrix,
    verify_coefficient_routes,
    verify_multiple_commutation,
)
from multicomm.rmatrix import RMatrix
from multicomm.scalars import DegenerateParameters, SamplePlan

Q = Fraction
PLAN = SamplePlan(seed=4, count=2)


def test_partition_enumeration_counts():
    fams = [["a", "b"], ["c"], ["d"]]
    parts = list(enumerate_partitions(fams))
    assert len(parts) == multinomial([2, 1, 1]) == 12
    assert all(sorted(x for g in p for x in g) == ["a", "b", "c", "d"] for p in parts)
    assert all([len(g) for g in p] == [2, 1, 1] for p in parts)
    assert len({tuple(map(tuple, p)) for p in parts}) == 12


@pytest.mark.parametrize("flavor", ["trigA", "rational"])
@pytest.mark.parametrize("sizes", [(1, 1), (2, 1), (1, 1, 1)])
def test_multiple_commutation(flavor, sizes):
    assert verify_multiple_commutation(flavor, sizes, PLAN).passed


@pytest.mark.parametrize("flavor", ["trigA", "rational"])
def test_multiple_commutation_other_representations(flavor):
    assert verify_multiple_commutation(flavor, (2, 1), PLAN, n_sites=4).passed
    assert verify_multiple_commutation(flavor, (1, 1, 1), PLAN, xi_mode="union").passed


def test_determinant_route_for_two_families():
    assert verify_multiple_commutation("trigA", (2, 2), SamplePlan(seed=4, count=1), route="ik").passed
    with pytest.raises(ValueError):
        verify_multiple_commutation("trigA", (1, 1, 1), PLAN, route="ik")


@pytest.mark.parametrize("flavor", ["trigA", "rational"])
def test_coefficient_routes_agree(flavor):
    reports = verify_coefficient_routes(flavor, (2, 1, 1), PLAN)
    assert len(reports) == 2 and all(r.passed for r in reports)


def test_routes_agree_pointwise():
    rm = RMatrix("rational", Q(3, 7))
    us = [[Q(1), Q(4)], [Q(-2)], [Q(7)]]
    for vs in enumerate_partitions(us):
        w = coefficient_weight(rm, us, vs)
        assert w == coefficient_grid(rm, us, vs) == coefficient_grid_k(rm, us, vs)
    rm2 = RMatrix("trigA", Q(2))
    us2 = [[Q(1), Q(5)], [Q(3), Q(-2)]]
    for vs in enumerate_partitions(us2):
        assert coefficient_ik(rm2, us2, vs) == coefficient_weight(rm2, us2, vs)


def test_literal_rational_layer_display_is_wrong():
    # the layer product with v in its second slot does not reproduce the lattice coefficient
    rm = RMatrix("rational", Q(3, 7))
    us = [[Q(1), Q(4)], [Q(-2)], [Q(7)]]
    diffs = [coefficient_weight(rm, us, vs, literal_rational_display=True) != coefficient_grid(rm, us, vs)
             for vs in enumerate_partitions(us)]
    assert any(diffs)


def test_matrices_agree_at_a_fixed_point():
    rm = RMatrix("trigA", Q(2))
    us = [[Q(3)], [Q(5)]]
    xi = [Q(1), Q(-1)]
    assert lhs_matrix(rm, us, xi) == rhs_matrix(rm, us, xi)


def test_coincident_parameters_are_rejected():
    rm = RMatrix("trigA", Q(2))
    with pytest.raises(DegenerateParameters):
        lhs_matrix(rm, [[Q(1)], [Q(1)]], [Q(2)])
