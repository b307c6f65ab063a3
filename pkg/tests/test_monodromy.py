import itertools
from fractions import Fraction

import pytest

from multicomm.monodromy import Monodromy
from multicomm.rmatrix import RMatrix, apply_r
from multicomm.states import SparseState, all_keys, basis_state, pair


def _state(N, n, seed):
    return SparseState(N, n, {k: Fraction((seed * 7 + 3 * a) % 11 - 5) for a, k in enumerate(all_keys(N, n))})


def test_rational_golden_coefficients():
    # h=1, z=(0,2,5): T13(z1) T12(z3) e_111 has e_312 = 72 and e_321 = 24
    mono = Monodromy(RMatrix("rational", 1), 3, [Fraction(0), Fraction(2), Fraction(5)])
    s = mono.apply_word([(1, 3, [Fraction(0)]), (1, 2, [Fraction(5)])], basis_state((1, 1, 1), 3))
    assert dict(s.items()) == {(3, 1, 2): 72, (3, 2, 1): 24}


def test_single_site_matches_r_matrix():
    rm = RMatrix("trigA", Fraction(3))
    u, x = Fraction(2), Fraction(7)
    mono = Monodromy(rm, 3, [x])
    for i, j, b in itertools.product(range(1, 4), repeat=3):
        s = mono.apply(i, j, u, basis_state((b,), 3))
        for (d,), c in s.items():
            assert c == rm.element(u, x, j, b, i, d)


def test_normalized_divides_by_site_factor():
    rm = RMatrix("trigB", Fraction(2))
    xi = [Fraction(1), Fraction(4)]
    mono = Monodromy(rm, 2, xi)
    u = Fraction(9)
    e = basis_state((1, 1), 2)
    assert mono.apply(2, 1, u, e, normalized=True) == mono.apply(2, 1, u, e) / ((u - 1) * (u - 4))


@pytest.mark.parametrize("flavor", ["trigA", "rational"])
def test_dual_action_is_adjoint(flavor):
    rm = RMatrix(flavor, Fraction(5, 2))
    mono = Monodromy(rm, 3, [Fraction(1), Fraction(-2)])
    v = _state(3, 2, 1)
    d = SparseState(3, 2, dict(_state(3, 2, 4).items()), dual=True)
    word = [(1, 3, [Fraction(7)]), (2, 1, [Fraction(3), Fraction(11)])]
    assert pair(d, mono.apply_word(word, v)) == pair(mono.apply_word_dual(d, word), v)


def test_monodromy_is_product_of_r_matrices():
    # T_ij(u) on two sites equals <i| R_02 R_01 |j> computed with apply_r on three tensor factors
    rm = RMatrix("rational", Fraction(3))
    xi = [Fraction(2), Fraction(-5)]
    u = Fraction(11)
    mono = Monodromy(rm, 2, xi)
    for key in all_keys(2, 2):
        for j in (1, 2):
            s = SparseState(2, 3, {(j,) + key: 1})
            s = apply_r(rm, u, xi[0], 0, 1, s)
            s = apply_r(rm, u, xi[1], 0, 2, s)
            for i in (1, 2):
                expected = {k[1:]: c for k, c in s.items() if k[0] == i}
                assert dict(mono.apply(i, j, u, basis_state(key, 2)).items()) == expected


@pytest.mark.parametrize("flavor", ["trigA", "trigB", "rational"])
def test_rtt_same_index_elements_commute(flavor):
    rm = RMatrix(flavor, Fraction(3))
    mono = Monodromy(rm, 3, [Fraction(1), Fraction(4), Fraction(-6)])
    v = _state(3, 3, 2)
    a, b = Fraction(5), Fraction(13)
    for i, j in [(1, 2), (3, 1), (2, 2)]:
        assert mono.apply(i, j, a, mono.apply(i, j, b, v)) == mono.apply(i, j, b, mono.apply(i, j, a, v))


def test_bad_indices():
    mono = Monodromy(RMatrix("trigA", 2), 2, [Fraction(1)])
    with pytest.raises(ValueError):
        mono.apply(3, 1, Fraction(1), basis_state((1,), 2))
    with pytest.raises(ValueError):
        mono.apply(1, 1, Fraction(1), basis_state((1, 1), 2))
