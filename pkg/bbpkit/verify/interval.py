"""Fixed-point interval helpers.

A fixed-point bound is an integer n standing for n / 2^P. Series are summed
with each term rounded down into the lower sum and up into the upper sum, so
the resulting interval always contains the exact value.
"""

from fractions import Fraction
from typing import Tuple

from bbpkit.exceptions import DomainError
from bbpkit.models import IntervalValue
from bbpkit.models.verify import DIGIT_ALPHABET

FixedBounds = Tuple[int, int]


def ceil_div(n: int, d: int) -> int:
    return -((-n) // d)


def guard_bits(precision: int) -> int:
    """Extra bits that absorb one rounding per series term."""
    return precision.bit_length() + 4


def to_interval(bounds: FixedBounds, precision: int, bits: int) -> IntervalValue:
    lo, hi = bounds
    scale = 1 << precision
    return IntervalValue(lower=Fraction(lo, scale), upper=Fraction(hi, scale), precision_bits=bits)


def fraction_bounds(x: Fraction, precision: int) -> FixedBounds:
    """floor and ceil of x * 2^P."""
    n, d = x.numerator << precision, x.denominator
    return n // d, ceil_div(n, d)


def atan_bounds(t: Fraction, precision: int) -> FixedBounds:
    """atan(t) for |t| <= 1/2 as fixed-point bounds."""
    if abs(t) > Fraction(1, 2):
        raise DomainError("atan series needs |t| <= 1/2")
    p, q = t.numerator, t.denominator
    lo = hi = 0
    k = 0
    power_p, power_q = p, q
    while True:
        n, d = power_p << precision, power_q * (2 * k + 1)
        if abs(n) < d:
            break
        if k % 2:
            n = -n
        lo += n // d
        hi += ceil_div(n, d)
        k += 1
        power_p *= p * p
        power_q *= q * q
    # remaining alternating terms are below one unit in total
    return lo - 1, hi + 1


def atanh_bounds(t: Fraction, precision: int) -> FixedBounds:
    """atanh(t) for 0 <= t <= 1/2 as fixed-point bounds."""
    if not 0 <= t <= Fraction(1, 2):
        raise DomainError("atanh series needs 0 <= t <= 1/2")
    p, q = t.numerator, t.denominator
    lo = hi = 0
    k = 0
    power_p, power_q = p, q
    while p:
        n, d = power_p << precision, power_q * (2 * k + 1)
        if n < d:
            break
        lo += n // d
        hi += ceil_div(n, d)
        k += 1
        power_p *= p * p
        power_q *= q * q
    # positive tail below one unit times 1/(1 - t^2) <= 4/3
    return lo, hi + 2


def interval_digits(interval: IntervalValue, position: int, count: int, base: int = 16) -> str:
    """Fractional digits of an interval's contents, or raise when the interval straddles a digit change."""
    if base not in (2, 16):
        raise DomainError("digit base must be 2 or 16")
    bits_per_digit = base.bit_length() - 1
    shift = bits_per_digit * (position + count)
    lo = (interval.lower.numerator << shift) // interval.lower.denominator
    hi = (interval.upper.numerator << shift) // interval.upper.denominator
    if lo != hi:
        raise DomainError(f"interval is too wide for {count} digits at position {position}")
    window = lo % (1 << (bits_per_digit * count)) if count else 0
    return format_digits(window, count, base)


def format_digits(value: int, count: int, base: int) -> str:
    out = []
    for _ in range(count):
        value, d = divmod(value, base)
        out.append(DIGIT_ALPHABET[d])
    return "".join(reversed(out))
