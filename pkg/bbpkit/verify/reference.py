"""Reference values of tagged constants, computed without any BBP formula.

pi comes from two arctangent relations that must agree; log p from the atanh
series after reduction by the nearest lower power of two; arguments of
Gaussian primes from the atan series.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from bbpkit.arith.gaussian import gaussian_prime
from bbpkit.config import get_settings
from bbpkit.exceptions import ConsistencyError, UnsupportedTagError
from bbpkit.formulas.tags import ONE_ATOM, PI_ATOM, AtomKey, atoms
from bbpkit.models import ConstantTag, IntervalValue
from bbpkit.verify.interval import atan_bounds, atanh_bounds, guard_bits, to_interval

logger = logging.getLogger(__name__)


def _atan(t: Fraction, bits: int) -> IntervalValue:
    precision = bits + guard_bits(bits)
    return to_interval(atan_bounds(t, precision), precision, bits)


def _atanh(t: Fraction, bits: int) -> IntervalValue:
    precision = bits + guard_bits(bits)
    return to_interval(atanh_bounds(t, precision), precision, bits)


@lru_cache(maxsize=32)
def pi_interval(bits: int) -> IntervalValue:
    """pi from 16 atan(1/5) - 4 atan(1/239) intersected with 8 atan(1/3) + 4 atan(1/7)."""
    work = bits + 8
    machin = _atan(Fraction(1, 5), work).scale(16) - _atan(Fraction(1, 239), work).scale(4)
    hutton = _atan(Fraction(1, 3), work).scale(8) + _atan(Fraction(1, 7), work).scale(4)
    if not machin.overlaps(hutton):
        raise ConsistencyError("arctangent relations for pi disagree")
    return machin.intersect(hutton).with_precision(bits)


@lru_cache(maxsize=256)
def log_prime_interval(p: int, bits: int) -> IntervalValue:
    """log p = e log 2 + 2 atanh((p - 2^e) / (p + 2^e)) with 2^e <= p."""
    work = bits + 8
    log2 = _atanh(Fraction(1, 3), work).scale(2)
    if p == 2:
        return log2.with_precision(bits)
    e = p.bit_length() - 1
    reduced = _atanh(Fraction(p - (1 << e), p + (1 << e)), work).scale(2)
    return (log2.scale(e) + reduced).with_precision(bits)


@lru_cache(maxsize=256)
def arg_prime_interval(p: int, bits: int) -> IntervalValue:
    """arg(a + bi) for the Gaussian prime over p with a > b > 0."""
    a, b = gaussian_prime(p)
    work = bits + 8
    ratio = Fraction(b, a)
    if ratio <= Fraction(1, 2):
        return _atan(ratio, work).with_precision(bits)
    # atan(r) = pi/4 - atan((1 - r)/(1 + r))
    quarter_pi = pi_interval(work).scale(Fraction(1, 4))
    return (quarter_pi - _atan(Fraction(a - b, a + b), work)).with_precision(bits)


def _atom_interval(key: AtomKey, bits: int) -> IntervalValue:
    if key == PI_ATOM:
        return pi_interval(bits)
    if key[0] == "log_of" and key[1] == 0:
        return log_prime_interval(key[2], bits)
    if key[0] == "arg_of":
        return arg_prime_interval(key[2], bits)
    raise UnsupportedTagError(f"no reference value for atom {key}")


def reference(tag: ConstantTag, bits: Optional[int] = None) -> IntervalValue:
    """An interval of width at most 2^(2 - bits) containing the tagged constant."""
    if bits is None:
        bits = get_settings().BBP_PRECISION_BITS
    expansion = atoms(tag)
    total = IntervalValue.point(Fraction(0), bits)
    weight = sum(abs(c) for key, c in expansion.items() if key != ONE_ATOM)
    work = bits + 4 + math.ceil(math.log2(weight + 1))
    for key, c in sorted(expansion.items()):
        if key == ONE_ATOM:
            total = total + IntervalValue.point(c, bits)
        else:
            total = total + _atom_interval(key, work).scale(c)
    logger.debug("reference for %s at %d bits has width %s", tag.kind.value, bits, float(total.width))
    return total.with_precision(bits)
