from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from bbpkit.arith import Rational
from bbpkit.models.tags import ConstantTag

DIGIT_ALPHABET = "0123456789ABCDEF"


class IntervalValue(BaseModel):
    """A closed interval with exact rational endpoints."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lower: Rational
    upper: Rational
    precision_bits: int

    @model_validator(mode="after")
    def ordered(self) -> "IntervalValue":
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.precision_bits < 1:
            raise ValueError("precision_bits must be positive")
        return self

    @classmethod
    def point(cls, value: Fraction, precision_bits: int) -> "IntervalValue":
        return cls(lower=value, upper=value, precision_bits=precision_bits)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def is_certified(self) -> bool:
        """Width within 2^(2 - precision_bits)."""
        return self.width <= Fraction(4, 2 ** self.precision_bits)

    def contains(self, x: Fraction) -> bool:
        return self.lower <= x <= self.upper

    def overlaps(self, other: "IntervalValue") -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def intersect(self, other: "IntervalValue") -> "IntervalValue":
        if not self.overlaps(other):
            raise ValueError("intervals are disjoint")
        return IntervalValue(
            lower=max(self.lower, other.lower),
            upper=min(self.upper, other.upper),
            precision_bits=max(self.precision_bits, other.precision_bits),
        )

    def __add__(self, other: "IntervalValue") -> "IntervalValue":
        return IntervalValue(
            lower=self.lower + other.lower,
            upper=self.upper + other.upper,
            precision_bits=min(self.precision_bits, other.precision_bits),
        )

    def __neg__(self) -> "IntervalValue":
        return IntervalValue(lower=-self.upper, upper=-self.lower, precision_bits=self.precision_bits)

    def __sub__(self, other: "IntervalValue") -> "IntervalValue":
        return self + (-other)

    def scale(self, c: Fraction) -> "IntervalValue":
        lo, hi = c * self.lower, c * self.upper
        if c < 0:
            lo, hi = hi, lo
        return IntervalValue(lower=lo, upper=hi, precision_bits=self.precision_bits)

    def with_precision(self, precision_bits: int) -> "IntervalValue":
        return IntervalValue(lower=self.lower, upper=self.upper, precision_bits=precision_bits)


class DigitRun(BaseModel):
    """Digits of a constant starting at a fractional position (0 = first)."""
    model_config = ConfigDict(frozen=True)

    base: int
    position: int
    digits: str
    integer_part: Optional[str] = None

    @field_validator("base")
    @classmethod
    def supported_base(cls, v: int) -> int:
        if v not in (2, 16):
            raise ValueError("digit base must be 2 or 16")
        return v

    @model_validator(mode="after")
    def valid_digits(self) -> "DigitRun":
        alphabet = DIGIT_ALPHABET[: self.base]
        bad = [c for c in self.digits if c not in alphabet]
        if bad:
            raise ValueError(f"invalid base-{self.base} digits: {''.join(bad)}")
        if self.position < 0:
            raise ValueError("position must be nonnegative")
        return self


class VerificationReport(BaseModel):
    """Outcome of comparing a formula's interval with its reference constant."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    verified: bool
    bits: int
    target: ConstantTag
    formula_interval: IntervalValue
    reference_interval: IntervalValue
    name: Optional[str] = None


class EgyptianReport(BaseModel):
    """Partial sum and exact tail of sum_{j>=1} 1/C(j+n+1, n+1) = 1/n.

    `interval` is the exact value partial + tail; `truncation_interval` is
    [partial, partial + tail], what the partial sum alone certifies.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    terms: int
    partial_sum: Rational
    tail: Rational
    interval: IntervalValue
    truncation_interval: IntervalValue
