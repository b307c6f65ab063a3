from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multicomm.states import (
    SparseState,
    basis_state,
    color_content,
    format_colors,
    pair,
    parse_colors,
    positions_at_most,
    relabel_subset,
    runs,
)


def test_parse_colors_runs():
    assert parse_colors("1^2,3") == (1, 1, 3)
    assert parse_colors("1^2 3 2^0") == (1, 1, 3)
    assert parse_colors("") == ()
    with pytest.raises(ValueError):
        parse_colors("0")
    with pytest.raises(ValueError):
        parse_colors("a^2")


@given(st.lists(st.integers(1, 5), max_size=10))
def test_format_parse_roundtrip(colors):
    assert parse_colors(format_colors(colors)) == tuple(colors)


def test_runs_and_positions():
    assert runs((1, 2), (3, 1)) == (1, 1, 3)
    assert positions_at_most((2, 1, 3, 1), 1) == (2, 4)
    assert positions_at_most((2, 1, 3, 1), 2) == (1, 2, 4)
    assert relabel_subset((2, 4, 7), (4, 7)) == (2, 3)
    with pytest.raises(ValueError):
        relabel_subset((2, 4), (3,))
    assert color_content((3, 1, 3), 3) == (1, 0, 2)


def test_state_arithmetic_cancels_exactly():
    a = basis_state((1, 2), 2, coefficient=Fraction(1, 3))
    b = basis_state((2, 1), 2)
    s = a + b - a
    assert s == b
    assert (s - b).is_zero() and s - b == 0
    assert (a * 3)[(1, 2)] == 1
    assert (a / Fraction(1, 3))[(1, 2)] == 1


def test_bad_keys_and_mismatched_spaces():
    with pytest.raises(ValueError):
        SparseState(2, 2, {(1, 3): 1})
    with pytest.raises(ValueError):
        basis_state((1,), 2) + basis_state((1, 1), 2)


def test_pairing():
    v = SparseState(2, 2, {(1, 2): 2, (2, 2): 5})
    d = SparseState(2, 2, {(1, 2): 3, (2, 1): 7}, dual=True)
    assert pair(d, v) == 6
    with pytest.raises(ValueError):
        pair(v, d)
