from fractions import Fraction as F

import pytest

from bbpkit.arith import GaussianRational
from bbpkit.exceptions import DomainError, RegroupError
from bbpkit.formulas import (
    binary_family,
    catalog,
    log_three_halves,
    make_series,
    normalize,
    partial_fractions,
    rearrangement_check,
    regroup,
    smallest_period,
)
from bbpkit.models import ConstantTag

HALF_PLUS_HALF_I = GaussianRational.of(F(1, 2), F(1, 2))


def test_partial_fractions():
    assert partial_fractions(1) == [1]
    assert partial_fractions(3) == [3, -6, 3]
    # 1/C(j+3, 3) at j = 0
    assert sum(c / l for l, c in enumerate(partial_fractions(3), start=1)) == 1


def test_series_at_two():
    series = make_series(2, 2)
    assert series.r0 == F(1, 2)
    assert series.r1 == F(1, 2)
    assert series.target == ConstantTag.log_of(2)
    assert not series.conditional
    assert make_series(1, 2).conditional


def test_series_at_three_halves():
    assert log_three_halves(4).r0 == F(65, 162)
    assert binary_family(1, 1).s == F(3, 2)
    assert binary_family(3, -1, n=2).s == F(7, 8)


@pytest.mark.parametrize("s", [F(3), F(0), GaussianRational.of(2, 1)])
def test_series_domain(s):
    with pytest.raises(DomainError):
        make_series(1, s)


def test_series_rejects_bad_order():
    with pytest.raises(DomainError):
        make_series(0, 2)
    with pytest.raises(DomainError):
        binary_family(0, 1)


def test_regroup_order_one_at_half():
    assert regroup(make_series(1, F(1, 2)), 1) == catalog("bernoulli-log2")


def test_regroup_needs_integer_base():
    with pytest.raises(RegroupError) as info:
        regroup(make_series(1, HALF_PLUS_HALF_I), 2)
    assert info.value.suggested_period == 4
    assert "m = 4" in str(info.value)


def test_regroup_requested_base():
    f = regroup(make_series(1, HALF_PLUS_HALF_I), 8, base=16)
    assert f.base == 16
    assert f.period == 8
    with pytest.raises(RegroupError):
        regroup(make_series(1, F(1, 2)), 3, base=16)


def test_smallest_period():
    assert smallest_period(GaussianRational.of(F(1, 2), F(-1, 2))) == 4
    assert smallest_period(GaussianRational.of(F(2, 3))) is None


def test_partial_fraction_form_needs_reciprocal():
    with pytest.raises(RegroupError):
        normalize(make_series(2, F(1, 3)))


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_higher_orders_rearrange_the_first(n, m):
    assert rearrangement_check(F(1, 2), n, m)


def test_rearrangement_over_base_sixteen():
    assert rearrangement_check(F(1, 2), 4, 8, base=16)
