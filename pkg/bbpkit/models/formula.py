from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from bbpkit.arith import GaussianRational, Rational, Scalar
from bbpkit.models.tags import ConstantTag


class SeriesForm(BaseModel):
    """log s = r0 + r1 * sum_{j>=0} (1-s)^(j+n) / (n! C(j+n, n))."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    s: GaussianRational
    r0: GaussianRational
    r1: GaussianRational
    target: ConstantTag
    conditional: bool = False

    @model_validator(mode="after")
    def check_point(self) -> "SeriesForm":
        if self.n < 1:
            raise ValueError("order must be positive")
        if self.s.is_zero:
            raise ValueError("s must be nonzero")
        return self


class BBPFormula(BaseModel):
    """r0 + r1 * sum_{k>=start} base^-k * sum_i coeffs[i] / (k*period + offset + i).

    With offset 1 and as many coefficients as the period this is the classical
    degree-1 form; a longer coefficient list is a partial-fraction form.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    target: ConstantTag
    r0: Scalar = Fraction(0)
    r1: Scalar = Fraction(1)
    degree: int = 1
    base: int
    period: int
    start: int = 0
    offset: int = 1
    coeffs: Tuple[Scalar, ...]

    @model_validator(mode="after")
    def check_shape(self) -> "BBPFormula":
        if self.degree != 1:
            raise ValueError("only degree-1 formulas are supported")
        if self.base == 0:
            raise ValueError("base must be nonzero")
        if self.period < 1:
            raise ValueError("period must be positive")
        if len(self.coeffs) < self.period:
            raise ValueError("need at least one coefficient per residue class")
        if self.start < 0 or self.offset < 0:
            raise ValueError("start and offset must be nonnegative")
        if self.start * self.period + self.offset < 1:
            raise ValueError("first denominator must be positive")
        return self

    @property
    def width(self) -> int:
        return len(self.coeffs)

    @property
    def is_real(self) -> bool:
        return all(
            not isinstance(v, GaussianRational)
            for v in (self.r0, self.r1, *self.coeffs)
        )

    @property
    def is_canonical_shape(self) -> bool:
        return self.offset == 1 and self.start == 0 and self.width == self.period

    @property
    def is_unit_base(self) -> bool:
        return abs(self.base) == 1

    @property
    def nonzero_count(self) -> int:
        return sum(1 for a in self.coeffs if a != 0)


class ProductForm(BaseModel):
    """r0 + factor * sum_{j>=1} [(-1)^(j+1)] ratio^j / (j (j+1) ... (j+order-1))."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    r0: Rational
    factor: Rational
    ratio: Rational
    alternating: bool
    order: int


class SplitResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    real: BBPFormula
    imaginary: BBPFormula


class EfficiencyScore(BaseModel):
    """Nonzero coefficients per bit of base."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    nonzero: int
    base: int
    exact: Optional[Rational] = None
    value: float = Field(description="real presentation of the score")
