"""Gaussian rationals and the bits of Z[i] number theory the tag algebra needs."""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Annotated, Any, Dict, Tuple, Union

import mpmath
from pydantic import BaseModel, ConfigDict, PlainSerializer, PlainValidator, WithJsonSchema
from sympy.ntheory import factorint, sqrt_mod

from bbpkit.arith.rational import (
    RATIONAL_PATTERN,
    Rational,
    format_rational,
    parse_rational,
    to_fraction,
)
from bbpkit.exceptions import DomainError


class GaussianRational(BaseModel):
    """A complex number with exact rational parts."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    re: Rational = Fraction(0)
    im: Rational = Fraction(0)

    @classmethod
    def of(cls, re: Any = 0, im: Any = 0) -> "GaussianRational":
        """Build without validation overhead from exact inputs."""
        return cls.model_construct(re=Fraction(re), im=Fraction(im))

    @classmethod
    def coerce(cls, value: Any) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, dict):
            return cls.model_validate(value)
        if isinstance(value, str):
            return parse_gaussian(value)
        return cls.of(to_fraction(value), 0)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational.of(self.re, -self.im)

    def norm(self) -> Fraction:
        """|z|^2, always rational."""
        return self.re * self.re + self.im * self.im

    def real_or_self(self) -> Union[Fraction, "GaussianRational"]:
        return self.re if self.im == 0 else self

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(
            mpmath.mpf(self.re.numerator) / self.re.denominator,
            mpmath.mpf(self.im.numerator) / self.im.denominator,
        )

    def __str__(self) -> str:
        return format_gaussian(self)

    def __repr__(self) -> str:
        return f"GaussianRational({format_gaussian(self)})"

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussianRational":
        return GaussianRational.of(-self.re, -self.im)

    def __add__(self, other: Any) -> "GaussianRational":
        other = _operand(other)
        if other is None:
            return NotImplemented
        return GaussianRational.of(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "GaussianRational":
        other = _operand(other)
        if other is None:
            return NotImplemented
        return GaussianRational.of(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Any) -> "GaussianRational":
        other = _operand(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "GaussianRational":
        other = _operand(other)
        if other is None:
            return NotImplemented
        return GaussianRational.of(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "GaussianRational":
        other = _operand(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise DomainError("division by the zero Gaussian rational")
        n = other.norm()
        num = self * other.conjugate()
        return GaussianRational.of(num.re / n, num.im / n)

    def __rtruediv__(self, other: Any) -> "GaussianRational":
        other = _operand(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int) -> "GaussianRational":
        return gauss_pow(self, k)


def _operand(value: Any):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, Fraction)):
        return GaussianRational.of(value, 0)
    return None


ONE = GaussianRational.of(1, 0)
IMAG_UNIT = GaussianRational.of(0, 1)


def gauss_pow(z: GaussianRational, k: int) -> GaussianRational:
    """Exact z**k by repeated squaring."""
    z = GaussianRational.coerce(z)
    if k < 0:
        if z.is_zero:
            raise DomainError("zero raised to a negative power")
        return gauss_pow(ONE / z, -k)
    result = ONE
    square = z
    while k:
        if k & 1:
            result = result * square
        k >>= 1
        if k:
            square = square * square
    return result


def parse_gaussian(text: str) -> GaussianRational:
    """Parse "re", "re+im*i", "im*i", "i" or "-i" with exact rational parts."""
    compact = text.replace(" ", "")
    if not compact.endswith("i"):
        return GaussianRational.of(parse_rational(compact), 0)
    body = compact[:-1]
    starred = body.endswith("*")
    if starred:
        body = body[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut > 0:
        re_text, im_text = body[:cut], body[cut:]
    else:
        re_text, im_text = "0", body
    if im_text in ("", "+", "-"):
        if starred:
            raise DomainError(f"invalid Gaussian rational literal: {text!r}")
        im_text += "1"
    return GaussianRational.of(parse_rational(re_text), parse_rational(im_text))


def format_gaussian(z: GaussianRational) -> str:
    """Inverse of parse_gaussian."""
    if z.im == 0:
        return format_rational(z.re)
    im = format_rational(abs(z.im))
    im_text = "i" if abs(z.im) == 1 else f"{im}*i"
    if z.re == 0:
        return ("-" if z.im < 0 else "") + im_text
    return f"{format_rational(z.re)}{'-' if z.im < 0 else '+'}{im_text}"


# Scalars: a rational, or a Gaussian rational for complex intermediates.

def to_scalar(value: Any) -> Union[Fraction, GaussianRational]:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, dict):
        return GaussianRational.model_validate(value)
    return to_fraction(value)


def dump_scalar(value: Union[Fraction, GaussianRational]) -> Any:
    if isinstance(value, GaussianRational):
        return {"re": format_rational(value.re), "im": format_rational(value.im)}
    return format_rational(value)


Scalar = Annotated[
    Union[Fraction, GaussianRational],
    PlainValidator(to_scalar),
    PlainSerializer(dump_scalar),
    WithJsonSchema({
        "anyOf": [
            {"type": "string", "pattern": RATIONAL_PATTERN},
            {
                "type": "object",
                "properties": {
                    "re": {"type": "string", "pattern": RATIONAL_PATTERN},
                    "im": {"type": "string", "pattern": RATIONAL_PATTERN},
                },
                "required": ["re", "im"],
            },
        ]
    }),
]


def realify(value: Union[Fraction, int, GaussianRational]) -> Union[Fraction, GaussianRational]:
    """Collapse a Gaussian with zero imaginary part to a Fraction."""
    if isinstance(value, GaussianRational):
        return value.real_or_self()
    return Fraction(value)


def gaussian_parts(value: Union[Fraction, int, GaussianRational]) -> Tuple[Fraction, Fraction]:
    if isinstance(value, GaussianRational):
        return value.re, value.im
    return Fraction(value), Fraction(0)


# Z[i] factorization

@lru_cache(maxsize=None)
def gaussian_prime(p: int) -> Tuple[int, int]:
    """The split Gaussian prime a+bi over a rational prime p = 1 mod 4, with a > b > 0."""
    if p % 4 != 1:
        raise DomainError(f"{p} does not split in Z[i]")
    r = sqrt_mod(p - 1, p)
    if r is None:
        raise DomainError(f"{p} has no square root of -1")
    if r > p // 2:
        r = p - r
    a, b = p, r
    limit = math.isqrt(p)
    while b > limit:
        a, b = b, a % b
    x = b
    y = math.isqrt(p - x * x)
    if x * x + y * y != p:
        raise DomainError(f"{p} is not a sum of two squares")
    return max(x, y), min(x, y)


def _divides(a: int, b: int, c: int, d: int) -> Tuple[bool, int, int]:
    """Whether c+di divides a+bi in Z[i], and the quotient."""
    n = c * c + d * d
    re = a * c + b * d
    im = b * c - a * d
    if re % n or im % n:
        return False, 0, 0
    return True, re // n, im // n


def factor_gaussian_integer(a: int, b: int) -> Tuple[int, int, Dict[int, Tuple[int, int]]]:
    """Factor a+bi = i^u (1+i)^t prod pi_p^e_p conj(pi_p)^f_p times rational primes 3 mod 4.

    Returns (u, t, {p: (e_p, f_p)}); inert primes carry no argument and are dropped.
    """
    if a == 0 and b == 0:
        raise DomainError("cannot factor zero")
    split: Dict[int, Tuple[int, int]] = {}
    two_power = 0
    for p, e in sorted(factorint(a * a + b * b).items()):
        if p == 2:
            for _ in range(e):
                ok, a, b = _divides(a, b, 1, 1)
                if not ok:
                    raise DomainError("inconsistent Gaussian factorization at 2")
            two_power = e
        elif p % 4 == 1:
            x, y = gaussian_prime(p)
            e_p = f_p = 0
            for _ in range(e):
                ok, qa, qb = _divides(a, b, x, y)
                if ok:
                    a, b = qa, qb
                    e_p += 1
                    continue
                ok, qa, qb = _divides(a, b, x, -y)
                if not ok:
                    raise DomainError(f"inconsistent Gaussian factorization at {p}")
                a, b = qa, qb
                f_p += 1
            split[p] = (e_p, f_p)
        else:
            for _ in range(e // 2):
                a, b = a // p, b // p
    units = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}
    if (a, b) not in units:
        raise DomainError("Gaussian factorization left a non-unit cofactor")
    return units[(a, b)], two_power, split
