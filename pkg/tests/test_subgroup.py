from fractions import Fraction as F

import pytest

from bbpkit.exceptions import DomainError
from bbpkit.formulas import subgroup_decompose, subgroup_formula
from bbpkit.formulas.subgroup import generators
from bbpkit.models import ConstantTag
from bbpkit.verify import verify_formula


def test_generators():
    labels = [label for _, label, _, _ in generators(3)]
    assert labels == ["2", "2^1+1", "2^2+1", "2^3-1", "2^3+1"]


def test_three_is_a_generator():
    result = subgroup_decompose(3, 2)
    assert result.success and result.integral
    assert [(g.generator, g.label, g.exponent) for g in result.factors] == [(3, "2^1+1", 1)]


def test_nine_uses_the_first_spanning_generator():
    result = subgroup_decompose(9, 4)
    assert result.success
    assert [(g.generator, g.exponent) for g in result.factors] == [(3, 2)]


def test_products_of_generators():
    result = subgroup_decompose(15, 4)
    assert result.success
    assert [(g.generator, g.exponent) for g in result.factors] == [(3, 1), (5, 1)]
    assert result.tag == ConstantTag.linear([(1, ConstantTag.log_of(3)), (1, ConstantTag.log_of(5))])


def test_prime_outside_every_generator():
    result = subgroup_decompose(7, 2)
    assert not result.success
    assert result.obstructions[0].prime == 7
    assert result.obstructions[0].generators == []


def test_tied_primes_obstruct():
    result = subgroup_decompose(23, 22)
    assert not result.success
    (obstruction,) = [o for o in result.obstructions if o.prime == 23]
    assert obstruction.companions == [89]
    assert obstruction.generators == ["2^11-1", "2^22-1"]


def test_domain():
    with pytest.raises(DomainError):
        subgroup_decompose(1, 4)
    with pytest.raises(DomainError):
        subgroup_decompose(3, 65)


@pytest.mark.parametrize("k,n_max", [(3, 2), (5, 2), (9, 4), (7, 3)])
def test_formula_for_log_k(k, n_max):
    formula = subgroup_formula(subgroup_decompose(k, n_max))
    assert formula.target == ConstantTag.log_of(k)
    assert formula.base > 1
    assert verify_formula(formula, 64).verified


def test_formula_needs_success():
    with pytest.raises(DomainError):
        subgroup_formula(subgroup_decompose(7, 2))


def test_exponents_are_fractions():
    result = subgroup_decompose(3, 2)
    assert isinstance(result.factors[0].exponent, F)
