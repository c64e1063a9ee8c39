"""Digit extraction for formulas over a power-of-two base.

The digits at a position are the leading bits of frac(2^E x). The head terms
of the series are reduced modulo their denominators with modular powers, so no
earlier digits are computed; the few remaining terms are summed in mpmath.
Every contribution is carried as a lower and an upper fixed-point bound, and
a run whose bounds disagree on any requested digit is retried with a wider
guard.
"""

import logging
import math
from fractions import Fraction
from typing import Optional, Tuple

import mpmath
from tenacity import (
    Retrying,
    before_sleep_log,
    retry_if_exception_type,
    stop_after_attempt,
)

from bbpkit.arith.rational import ilog2_exact
from bbpkit.config import get_settings
from bbpkit.exceptions import DomainError, IndeterminateDigitError
from bbpkit.models import BBPFormula, DigitRun
from bbpkit.verify.evaluate import eval_bbp, prepared, tail_bound
from bbpkit.verify.interval import ceil_div, format_digits

logger = logging.getLogger(__name__)


class _CarryAmbiguity(Exception):
    """Lower and upper bounds straddle a digit boundary."""


def _bits_per_digit(digit_base: int) -> int:
    if digit_base not in (2, 16):
        raise DomainError("digit base must be 2 or 16")
    return ilog2_exact(digit_base)


def _head(g: BBPFormula, shift: int, precision: int, w: int) -> Tuple[int, int]:
    """Bounds on frac of the terms with w*k <= shift, in units of 2^-precision."""
    lo = hi = 0
    m = g.period
    scale = 1 << precision
    for k in range(shift // w + 1):
        sign = -1 if g.base < 0 and k % 2 else 1
        for l, a in enumerate(g.coeffs, start=1):
            if a == 0:
                continue
            d = a.denominator * (k * m + l)
            n = sign * a.numerator * pow(2, shift - w * k, d) % d
            lo += (n * scale) // d
            hi += ceil_div(n * scale, d)
    return lo, hi


def _tail(g: BBPFormula, shift: int, precision: int, w: int) -> Tuple[int, int]:
    """Bounds on the terms with w*k > shift, summed in binary floating point."""
    m = g.period
    first = shift // w + 1
    weight = sum((abs(a) for a in g.coeffs), Fraction(0))
    goal = Fraction(1, 1 << (precision + 2))
    last = first
    while weight * Fraction(2) ** shift * tail_bound(Fraction(1), g.base, m, last) > goal:
        last += 1
    count = (last - first) * m
    extra = 32 + math.ceil(weight).bit_length() + count.bit_length()
    with mpmath.workprec(precision + extra):
        total = mpmath.mpf(0)
        for k in range(first, last):
            sign = -1 if g.base < 0 and k % 2 else 1
            power = mpmath.ldexp(1, shift - w * k)
            for l, a in enumerate(g.coeffs, start=1):
                if a:
                    total += sign * power * mpmath.mpf(a.numerator) / (a.denominator * (k * m + l))
        scaled = mpmath.ldexp(total, precision)
        lo = int(mpmath.floor(scaled)) - 2
        hi = int(mpmath.ceil(scaled)) + 2
    return lo, hi


def _extract_once(
    g: BBPFormula, position: int, count: int, bits_per_digit: int, guard: int, w: int
) -> str:
    shift = bits_per_digit * position
    precision = bits_per_digit * count + guard
    scale = 1 << precision

    r0 = g.r0
    r0_num = r0.numerator * pow(2, shift, r0.denominator) % r0.denominator
    lo = (r0_num * scale) // r0.denominator
    hi = ceil_div(r0_num * scale, r0.denominator)

    head_lo, head_hi = _head(g, shift, precision, w)
    tail_lo, tail_hi = _tail(g, shift, precision, w)
    lo, hi = lo + head_lo + tail_lo, hi + head_hi + tail_hi

    low_window = (lo % scale) >> guard if lo // scale == hi // scale else None
    high_window = (hi % scale) >> guard
    if low_window is None or low_window != high_window:
        raise _CarryAmbiguity(f"bounds disagree at guard width {guard}")
    return format_digits(low_window, count, 1 << bits_per_digit)


def _integer_part(g: BBPFormula, digit_base: int) -> Optional[str]:
    interval = eval_bbp(g, 64)
    whole = math.floor(interval.lower)
    if whole != math.floor(interval.upper) or whole == 0:
        return None
    magnitude = format(abs(whole), "X" if digit_base == 16 else "b")
    return ("-" if whole < 0 else "") + magnitude


def digit_extract(
    f: BBPFormula,
    position: int,
    count: int,
    digit_base: int = 16,
    guard_bits: Optional[int] = None,
    retries: Optional[int] = None,
) -> DigitRun:
    """`count` digits of frac(x) in base 2 or 16, starting at fractional position `position` (0-based)."""
    if position < 0 or count < 0:
        raise DomainError("position and count must be nonnegative")
    bits_per_digit = _bits_per_digit(digit_base)
    g = prepared(f)
    w = ilog2_exact(abs(g.base))
    if w < 1:
        raise DomainError(f"digit extraction needs a base of the form +-2^w, got {g.base}")
    settings = get_settings()
    guard = settings.BBP_DIGIT_GUARD_BITS if guard_bits is None else guard_bits
    retries = settings.BBP_DIGIT_RETRIES if retries is None else retries
    integer_part = _integer_part(g, digit_base)
    if count == 0:
        return DigitRun(base=digit_base, position=position, digits="", integer_part=integer_part)

    retrying = Retrying(
        stop=stop_after_attempt(retries + 1),
        retry=retry_if_exception_type(_CarryAmbiguity),
        before_sleep=before_sleep_log(logger, logging.INFO),
        reraise=True,
    )
    try:
        for attempt in retrying:
            with attempt:
                width = guard << (attempt.retry_state.attempt_number - 1)
                digits = _extract_once(g, position, count, bits_per_digit, width, w)
    except _CarryAmbiguity as exc:
        raise IndeterminateDigitError(
            f"digits at position {position} stay ambiguous after {retries} guard doublings"
        ) from exc
    return DigitRun(base=digit_base, position=position, digits=digits, integer_part=integer_part)
