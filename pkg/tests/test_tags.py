from fractions import Fraction as F

import pytest
from pydantic import ValidationError

from bbpkit.arith import GaussianRational
from bbpkit.formulas.tags import (
    canonical,
    imaginary_part_tag,
    linear_tag,
    orientation,
    real_part_tag,
    same_constant,
)
from bbpkit.models import ConstantTag, TagKind

LOG2 = ConstantTag.log_of(2)
PI = ConstantTag.pi()


def test_log_of_powers():
    assert same_constant(ConstantTag.log_of(4), linear_tag([(2, LOG2)]))
    assert same_constant(
        ConstantTag.log_of(F(9, 4)),
        linear_tag([(2, ConstantTag.log_of(3)), (-2, LOG2)]),
    )


def test_cancellation_gives_zero():
    assert linear_tag([(1, LOG2), (-1, ConstantTag.log_of(F(2)))]) == ConstantTag.zero()


def test_single_atom_is_returned_bare():
    assert linear_tag([(F(1, 2), ConstantTag.log_of(4))]) == LOG2
    assert canonical(ConstantTag.log_of(F(3, 1))) == ConstantTag.log_of(3)


def test_arctangent_identities():
    two_plus_i = ConstantTag.arg_of(GaussianRational.of(2, 1))
    seven_plus_i = ConstantTag.arg_of(GaussianRational.of(7, 1))
    assert same_constant(seven_plus_i, linear_tag([(2, two_plus_i), (F(-1, 4), PI)]))
    assert same_constant(ConstantTag.arg_of(GaussianRational.of(1, 1)), linear_tag([(F(1, 4), PI)]))
    assert same_constant(ConstantTag.arg_of(GaussianRational.of(-1, 0)), PI)


def test_orientation():
    assert orientation(ConstantTag.log_of(4)) == (2, LOG2)
    assert orientation(linear_tag([(-4, PI)])) == (-4, PI)
    assert orientation(PI) is None
    assert orientation(ConstantTag.log_of(6)) is None


def test_parts_of_complex_log():
    s = GaussianRational.of(1, 1)
    assert same_constant(real_part_tag(s), linear_tag([(F(1, 2), LOG2)]))
    assert same_constant(imaginary_part_tag(s), linear_tag([(F(1, 4), PI)]))
    assert imaginary_part_tag(GaussianRational.of(3, 0)) == ConstantTag.zero()


def test_tag_validation():
    with pytest.raises(ValidationError):
        ConstantTag.log_of(-2)
    with pytest.raises(ValidationError):
        ConstantTag(kind=TagKind.LOG_OF)
    with pytest.raises(ValidationError):
        ConstantTag(kind=TagKind.RATIONAL)
