"""Interval evaluation of BBP-type formulas and comparison with reference values."""

import logging
from fractions import Fraction
from typing import Optional, Tuple

from bbpkit.config import get_settings
from bbpkit.exceptions import DomainError, NeedsRegroupingError
from bbpkit.formulas.transforms import canonicalize, distribute
from bbpkit.models import BBPFormula, IntervalValue, VerificationReport
from bbpkit.verify.interval import ceil_div
from bbpkit.verify.reference import reference

logger = logging.getLogger(__name__)


def prepared(f: BBPFormula) -> BBPFormula:
    """Canonical shape with r1 folded in; real and absolutely convergent."""
    if abs(f.base) < 2:
        raise NeedsRegroupingError(
            f"base {f.base} converges at best conditionally; regroup to |base| >= 2 first"
        )
    g = distribute(canonicalize(f))
    if not g.is_real:
        raise DomainError("only real formulas can be evaluated; split the real and imaginary parts first")
    return g


def tail_bound(weight: Fraction, base: int, period: int, cutoff: int) -> Fraction:
    """Bound on |sum over k >= cutoff| for coefficient mass `weight`."""
    b = abs(base)
    return weight / (Fraction(b) ** cutoff * (1 - Fraction(1, b)) * cutoff * period)


def truncation_point(g: BBPFormula, bits: int) -> Tuple[int, Fraction]:
    """Smallest K >= 1 whose tail bound is at most 2^-(bits+1)."""
    weight = sum((abs(a) for a in g.coeffs), Fraction(0))
    goal = Fraction(1, 1 << (bits + 1))
    cutoff = 1
    tail = tail_bound(weight, g.base, g.period, cutoff)
    while tail > goal:
        cutoff += 1
        tail = tail_bound(weight, g.base, g.period, cutoff)
    return cutoff, tail


def eval_bbp(f: BBPFormula, bits: Optional[int] = None) -> IntervalValue:
    """An interval of width at most 2^(2 - bits) containing the value of f."""
    if bits is None:
        bits = get_settings().BBP_PRECISION_BITS
    g = prepared(f)
    cutoff, tail = truncation_point(g, bits)
    m = g.period
    precision = bits + 3 + (cutoff * m + 1).bit_length()
    logger.debug("summing %d blocks of period %d at %d bits", cutoff, m, precision)

    lo = hi = 0
    b = abs(g.base)
    power = 1
    for k in range(cutoff):
        sign = -1 if g.base < 0 and k % 2 else 1
        for l, a in enumerate(g.coeffs, start=1):
            if a == 0:
                continue
            n = sign * a.numerator << precision
            d = a.denominator * power * (k * m + l)
            lo += n // d
            hi += ceil_div(n, d)
        power *= b

    scale = Fraction(1, 1 << precision)
    tail_up = ceil_div(tail.numerator << precision, tail.denominator) * scale
    return IntervalValue(
        lower=g.r0 + lo * scale - tail_up,
        upper=g.r0 + hi * scale + tail_up,
        precision_bits=bits,
    )


def verify_formula(
    f: BBPFormula, bits: Optional[int] = None, name: Optional[str] = None
) -> VerificationReport:
    """Compare the interval value of f with an independent reference for its target."""
    if bits is None:
        bits = get_settings().BBP_PRECISION_BITS
    value = eval_bbp(f, bits)
    expected = reference(f.target, bits)
    verified = value.overlaps(expected)
    if verified:
        logger.debug("formula %s verified at %d bits", name or "<unnamed>", bits)
    else:
        logger.warning("formula %s does not match its target at %d bits", name or "<unnamed>", bits)
    return VerificationReport(
        verified=verified,
        bits=bits,
        target=f.target,
        formula_interval=value,
        reference_interval=expected,
        name=name,
    )
