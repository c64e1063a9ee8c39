"""Exact rationals: parsing, the "p/q" text format, and combinatorial helpers."""

import math
import re
from fractions import Fraction
from typing import Annotated, Any, Iterable, List, Union

from pydantic import PlainSerializer, PlainValidator, WithJsonSchema

from bbpkit.exceptions import DomainError

RationalLike = Union[Fraction, int, str]

_RATIONAL_FORMAT = re.compile(r"""
    \A\s*
    (?P<num>[-+]?\d+)         # signed integer numerator
    (?:\s*/\s*(?P<den>\d+))?  # optional positive denominator
    \s*\Z
""", re.VERBOSE)

RATIONAL_PATTERN = r"^[-+]?\d+(/\d+)?$"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" exactly. Decimal and float notation is rejected."""
    m = _RATIONAL_FORMAT.match(text)
    if m is None:
        raise DomainError(f"invalid rational literal: {text!r}")
    den = int(m.group("den") or 1)
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(int(m.group("num")), den)


def format_rational(value: Fraction) -> str:
    """Render as "p/q", omitting q when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_fraction(value: Any) -> Fraction:
    """Coerce exact inputs to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"cannot read {type(value).__name__} as an exact rational")


Rational = Annotated[
    Fraction,
    PlainValidator(to_fraction),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "pattern": RATIONAL_PATTERN}),
]


_HARMONIC: List[Fraction] = [Fraction(0)]


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise DomainError("harmonic numbers need n >= 0")
    while len(_HARMONIC) <= n:
        _HARMONIC.append(_HARMONIC[-1] + Fraction(1, len(_HARMONIC)))
    return _HARMONIC[n]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise DomainError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rational_content(values: Iterable[Fraction]) -> Fraction:
    """Positive rational g with every value/g an integer and the quotients coprime.

    Returns 1 for an all-zero input.
    """
    nums = 0
    dens = 1
    for v in values:
        v = Fraction(v)
        if v == 0:
            continue
        nums = math.gcd(nums, v.numerator)
        dens = dens * v.denominator // math.gcd(dens, v.denominator)
    if nums == 0:
        return Fraction(1)
    return Fraction(nums, dens)


def ilog2_exact(n: int) -> int:
    """Exponent w with 2**w == n, or -1 when n is not a power of two."""
    if n < 1 or n & (n - 1):
        return -1
    return n.bit_length() - 1
