from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from bbpkit.arith import GaussianRational, Rational, Scalar


class TagKind(str, Enum):
    """Kinds of constants a formula can evaluate to."""
    LOG_OF = "log_of"
    ARG_OF = "arg_of"
    PI = "pi"
    ZERO = "zero"
    RATIONAL = "rational"
    LINEAR = "linear"


class TagTerm(BaseModel):
    """One coefficient * constant summand of a linear tag."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coefficient: Rational
    tag: "ConstantTag"


class ConstantTag(BaseModel):
    """Names the left-hand side of a formula (log s, pi, 0, ...)."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: TagKind
    argument: Optional[Scalar] = None
    value: Optional[Rational] = None
    terms: Tuple[TagTerm, ...] = ()

    @model_validator(mode="after")
    def check_payload(self) -> "ConstantTag":
        if self.kind in (TagKind.LOG_OF, TagKind.ARG_OF):
            if self.argument is None:
                raise ValueError(f"{self.kind.value} needs an argument")
            z = GaussianRational.coerce(self.argument)
            if z.is_zero:
                raise ValueError(f"{self.kind.value} of zero")
            if self.kind == TagKind.LOG_OF and z.is_real and z.re < 0:
                raise ValueError("log_of needs a positive rational argument")
        if self.kind == TagKind.RATIONAL and self.value is None:
            raise ValueError("rational tag needs a value")
        if self.kind != TagKind.LINEAR and self.terms:
            raise ValueError("only linear tags carry terms")
        return self

    @classmethod
    def log_of(cls, argument) -> "ConstantTag":
        if isinstance(argument, GaussianRational) and argument.is_real:
            argument = argument.re
        return cls(kind=TagKind.LOG_OF, argument=argument)

    @classmethod
    def arg_of(cls, argument: GaussianRational) -> "ConstantTag":
        return cls(kind=TagKind.ARG_OF, argument=argument)

    @classmethod
    def pi(cls) -> "ConstantTag":
        return cls(kind=TagKind.PI)

    @classmethod
    def zero(cls) -> "ConstantTag":
        return cls(kind=TagKind.ZERO)

    @classmethod
    def rational(cls, value) -> "ConstantTag":
        return cls(kind=TagKind.RATIONAL, value=value)

    @classmethod
    def linear(cls, terms: Iterable[Tuple[Fraction, "ConstantTag"]]) -> "ConstantTag":
        return cls(
            kind=TagKind.LINEAR,
            terms=tuple(TagTerm(coefficient=c, tag=t) for c, t in terms),
        )


TagTerm.model_rebuild()
