from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multicomm.scalars import (
    LaurentJet,
    PrecisionError,
    SamplePlan,
    SamplingExhausted,
    TruncatedSeries,
    as_q,
    fmt_q,
    has_duplicates,
    prod,
    sample_assignment,
    truncated_exp,
    verify_equal_at_samples,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def series(order=3):
    return st.lists(rationals, min_size=order + 1, max_size=order + 1).map(lambda cs: TruncatedSeries(cs, order))


def test_fmt_q_is_num_over_den():
    assert fmt_q(Fraction(9, 2)) == "9/2"
    assert fmt_q(3) == "3/1"
    assert fmt_q(Fraction(-4, 6)) == "-2/3"
    assert as_q("5/10") == Fraction(1, 2)


def test_prod_of_nothing_is_exact_one():
    one = prod([])
    assert one == 1 and isinstance(one, Fraction)
    assert isinstance(1 / prod([]), Fraction)


def test_has_duplicates_on_unhashable_jets():
    a = LaurentJet([1, 2])
    assert has_duplicates([a, LaurentJet([1, 2])])
    assert not has_duplicates([a, LaurentJet([1, 3])])


def test_truncated_exp_coefficients():
    e = truncated_exp(2, 3)
    assert e.coeffs == [1, 2, 2, Fraction(4, 3)]


@given(rationals, rationals)
def test_exp_is_a_homomorphism(a, b):
    assert truncated_exp(a, 4) * truncated_exp(b, 4) == truncated_exp(a + b, 4)


@given(series(), series(), series())
def test_series_ring_laws(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x - x == TruncatedSeries([], 3)


def test_series_orders_do_not_mix():
    with pytest.raises(ValueError):
        TruncatedSeries([1], 2) + TruncatedSeries([1], 3)


def test_jet_inverse_and_limit():
    eps = LaurentJet.eps()
    x = (eps * 3 + eps * eps) / eps  # 3 + eps
    assert x.coefficient(0) == 3 and x.coefficient(1) == 1
    y = 1 / (LaurentJet([2, 1]))  # 1/(2 + eps)
    assert y.coefficient(0) == Fraction(1, 2)
    assert y.coefficient(1) == Fraction(-1, 4)
    assert (y * LaurentJet([2, 1])).limit() == 1


def test_jet_pole_is_reported():
    with pytest.raises(ArithmeticError):
        (1 / LaurentJet.eps()).limit()


def test_jet_precision_runs_out():
    y = 1 / LaurentJet([1, 1], work=2)
    assert y.prec == 2
    with pytest.raises(PrecisionError):
        y.coefficient(2)
    with pytest.raises(PrecisionError):
        (y - y).inverse()


@given(st.lists(rationals, min_size=1, max_size=4).filter(lambda cs: cs[0] != 0))
@settings(max_examples=50)
def test_jet_times_inverse_is_one(cs):
    x = LaurentJet(cs, work=6)
    one = x * x.inverse()
    assert [one.coefficient(k) for k in range(5)] == [1, 0, 0, 0, 0]


def test_sample_assignment_is_deterministic_and_distinct():
    plan = SamplePlan(seed=3)
    slots = ["q", "h", "a", "b", "c"]
    a1 = sample_assignment(plan, slots, 2, 0)
    assert a1 == sample_assignment(plan, slots, 2, 0)
    assert a1 != sample_assignment(plan, slots, 3, 0)
    assert abs(a1["q"]) != 1 and a1["h"] != 0
    others = [a1[s] for s in "abc"]
    assert len(set(others)) == 3 and 0 not in others
    with pytest.raises(ValueError):
        sample_assignment(plan, ["a", "a"])


def test_verify_equal_retries_singular_points():
    calls = []

    def lhs(a):
        calls.append(a["x"])
        if len(calls) == 1:
            raise ZeroDivisionError
        return a["x"] * 2

    rep = verify_equal_at_samples(lhs, lambda a: a["x"] + a["x"], SamplePlan(count=2), ["x"], identity="double")
    assert rep.passed
    assert [s.attempt for s in rep.samples] == [1, 0]


def test_verify_equal_records_counterexample():
    rep = verify_equal_at_samples(lambda a: a["x"], lambda a: a["x"] + 1, SamplePlan(count=2), ["x"], identity="off")
    assert rep.status == "FAIL"
    assert set(rep.counterexample) == {"x"}


def test_verify_equal_gives_up_on_everywhere_singular():
    def bad(a):
        raise ZeroDivisionError

    with pytest.raises(SamplingExhausted):
        verify_equal_at_samples(bad, bad, SamplePlan(count=1, max_attempts=3), ["x"])
