import random

import pytest

from bbpkit.exceptions import DomainError, IndeterminateDigitError, NeedsRegroupingError
from bbpkit.formulas import catalog
from bbpkit.models import ConstantTag
from bbpkit.verify import digit_extract, interval_digits, pi_interval, reference


def test_first_hex_digits_of_pi(plouffe):
    run = digit_extract(plouffe, 0, 10)
    assert run.digits == "243F6A8885"
    assert run.integer_part == "3"
    assert run.base == 16


def test_later_start(plouffe):
    assert digit_extract(plouffe, 5, 5).digits == "A8885"


@pytest.mark.parametrize("position", [20, 64, 100])
def test_agrees_with_direct_evaluation(plouffe, position):
    direct = interval_digits(pi_interval(4 * (position + 8) + 48), position, 8)
    assert digit_extract(plouffe, position, 8).digits == direct


@pytest.mark.parametrize("name", ["pi-16", "bellard"])
def test_other_pi_formulas_give_the_same_digits(plouffe, name):
    expected = digit_extract(plouffe, 30, 8).digits
    assert digit_extract(catalog(name), 30, 8).digits == expected


@pytest.mark.parametrize("name", ["log2-6", "log2-bbp16", "log2-16"])
def test_binary_digits_of_log2(name):
    run = digit_extract(catalog(name), 0, 8, digit_base=2)
    assert run.digits == "10110001"
    assert run.integer_part is None


def test_binary_digits_match_reference():
    expected = interval_digits(reference(ConstantTag.log_of(2), 128), 40, 16, base=2)
    assert digit_extract(catalog("log2-bbp16"), 40, 16, digit_base=2).digits == expected


def test_empty_run(plouffe):
    run = digit_extract(plouffe, 7, 0)
    assert run.digits == ""
    assert run.position == 7


def test_null_formula_digits_are_indeterminate():
    with pytest.raises(IndeterminateDigitError):
        digit_extract(catalog("bbp-null-16"), 3, 4, retries=1)


def test_argument_errors(plouffe):
    with pytest.raises(DomainError):
        digit_extract(plouffe, -1, 4)
    with pytest.raises(DomainError):
        digit_extract(plouffe, 0, 4, digit_base=10)
    with pytest.raises(NeedsRegroupingError):
        digit_extract(catalog("machin"), 0, 4)


@pytest.mark.slow
@pytest.mark.parametrize("position", range(0, 65, 4))
def test_position_sweep(plouffe, position):
    direct = interval_digits(pi_interval(4 * (position + 6) + 48), position, 6)
    assert digit_extract(plouffe, position, 6).digits == direct


@pytest.mark.parametrize("position", range(0, 65, 8))
def test_log2_hex_digits_match_reference(position):
    direct = interval_digits(reference(ConstantTag.log_of(2), 4 * (position + 8) + 48), position, 8)
    assert digit_extract(catalog("log2-bbp16"), position, 8).digits == direct


@pytest.mark.parametrize("name", ["plouffe", "log2-bbp16"])
@pytest.mark.parametrize("seed", range(8))
def test_shifted_runs_agree(name, seed):
    rng = random.Random(seed)
    position, count = rng.randint(0, 1000), rng.randint(2, 16)
    formula = catalog(name)
    run = digit_extract(formula, position, count)
    shifted = digit_extract(formula, position + 1, count - 1)
    assert run.digits[1:] == shifted.digits
