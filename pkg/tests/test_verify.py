import math
from fractions import Fraction as F

import pytest

from bbpkit.arith import GaussianRational
from bbpkit.exceptions import DomainError, NeedsRegroupingError, UnsupportedTagError
from bbpkit.formulas import catalog
from bbpkit.formulas.tags import linear_tag
from bbpkit.models import BBPFormula, ConstantTag, IntervalValue
from bbpkit.verify import (
    egyptian_check,
    egyptian_tail,
    eval_bbp,
    interval_digits,
    pi_interval,
    reference,
    verify_formula,
)
from bbpkit.verify.interval import atan_bounds, to_interval


def test_pi_reference():
    pi = pi_interval(64)
    assert pi.is_certified
    assert float(pi.midpoint) == pytest.approx(math.pi, abs=1e-15)


@pytest.mark.parametrize("tag,value", [
    (ConstantTag.log_of(2), math.log(2)),
    (ConstantTag.log_of(3), math.log(3)),
    (ConstantTag.log_of(F(9, 4)), math.log(2.25)),
    (ConstantTag.arg_of(GaussianRational.of(2, 1)), math.atan(0.5)),
    (ConstantTag.arg_of(GaussianRational.of(3, 2)), math.atan(2 / 3)),
    (linear_tag([(3, ConstantTag.pi()), (-1, ConstantTag.log_of(5))]), 3 * math.pi - math.log(5)),
    (ConstantTag.rational(F(1, 3)), 1 / 3),
])
def test_reference_values(tag, value):
    interval = reference(tag, 64)
    assert interval.is_certified
    assert float(interval.midpoint) == pytest.approx(value, abs=1e-14)


def test_reference_of_zero_is_a_point():
    interval = reference(ConstantTag.zero(), 64)
    assert interval.lower == interval.upper == 0


def test_reference_rejects_complex_logs():
    with pytest.raises(UnsupportedTagError):
        reference(ConstantTag.log_of(GaussianRational.of(1, 1)), 64)


def test_atan_bounds_bracket():
    interval = to_interval(atan_bounds(F(1, 5), 80), 80, 70)
    assert float(interval.lower) <= math.atan(0.2) + 1e-16
    assert float(interval.upper) >= math.atan(0.2) - 1e-16
    with pytest.raises(DomainError):
        atan_bounds(F(3, 4), 10)


def test_eval_bbp():
    interval = eval_bbp(catalog("log2-6"), 64)
    assert interval.is_certified
    assert float(interval.midpoint) == pytest.approx(math.log(2), abs=1e-15)


def test_eval_bbp_rejects_unit_base():
    with pytest.raises(NeedsRegroupingError):
        eval_bbp(catalog("machin"), 32)


def test_wrong_target_is_reported():
    plouffe = catalog("plouffe")
    mislabelled = BBPFormula(
        target=ConstantTag.log_of(2), base=16, period=8, coeffs=plouffe.coeffs
    )
    report = verify_formula(mislabelled, 64)
    assert not report.verified
    assert not report.formula_interval.overlaps(report.reference_interval)


def test_report_fields(plouffe):
    report = verify_formula(plouffe, 80, name="plouffe")
    assert report.verified
    assert report.bits == 80
    assert report.name == "plouffe"
    assert report.target == ConstantTag.pi()


def test_interval_digits():
    assert interval_digits(pi_interval(128), 0, 10) == "243F6A8885"
    assert interval_digits(reference(ConstantTag.log_of(2), 64), 0, 8, base=2) == "10110001"
    wide = IntervalValue(lower=0, upper=F(1, 2), precision_bits=1)
    with pytest.raises(DomainError):
        interval_digits(wide, 0, 1)


def test_egyptian_small_case():
    report = egyptian_check(2, 1)
    assert report.partial_sum == F(1, 4)
    assert report.tail == F(1, 4)
    assert report.interval.lower == report.interval.upper == F(1, 2)


@pytest.mark.parametrize("n", range(2, 12))
@pytest.mark.parametrize("terms", [1, 5, 40])
def test_egyptian_identity(n, terms):
    report = egyptian_check(n, terms)
    assert report.partial_sum + report.tail == F(1, n)
    assert report.tail == egyptian_tail(n, terms)


def test_egyptian_domain():
    with pytest.raises(DomainError):
        egyptian_check(1, 5)
    with pytest.raises(DomainError):
        egyptian_check(3, 0)


@pytest.mark.parametrize("n", range(2, 11))
def test_egyptian_thousand_terms(n):
    report = egyptian_check(n, 1000)
    assert report.interval.contains(F(1, n))
    assert report.interval.width < F(1, 10 ** 6)
    truncation = report.truncation_interval
    assert truncation.lower == report.partial_sum
    assert truncation.contains(F(1, n))
    assert truncation.width == report.tail


def test_egyptian_tail_size():
    report = egyptian_check(2, 1000)
    assert report.tail == F(1, 335002)
    assert 2.98e-6 < float(report.truncation_interval.width) < 3.0e-6
