"""The infinite Egyptian fraction 1/n = sum_{j>=1} 1/C(j+n+1, n+1)."""

import logging
from fractions import Fraction
from typing import Optional

from bbpkit.arith import binomial
from bbpkit.config import get_settings
from bbpkit.exceptions import ConsistencyError, DomainError
from bbpkit.models import EgyptianReport, IntervalValue

logger = logging.getLogger(__name__)


def egyptian_tail(n: int, terms: int) -> Fraction:
    """sum_{j>terms} 1/C(j+n+1, n+1) = (n+1) / (n C(terms+n+1, n)), by telescoping."""
    return Fraction(n + 1, n * binomial(terms + n + 1, n))


def egyptian_check(n: int, terms: int, bits: Optional[int] = None) -> EgyptianReport:
    """Exact partial sum over j = 1..terms plus the telescoped tail.

    The enclosing interval is the exact value partial + tail; it must equal 1/n.
    The truncation interval has width equal to the tail.
    """
    if n < 2:
        raise DomainError("the Egyptian decomposition needs n >= 2")
    if terms < 1:
        raise DomainError("terms must be positive")
    if bits is None:
        bits = get_settings().BBP_PRECISION_BITS
    partial = sum((Fraction(1, binomial(j + n + 1, n + 1)) for j in range(1, terms + 1)), Fraction(0))
    tail = egyptian_tail(n, terms)
    total = partial + tail
    if total != Fraction(1, n):
        raise ConsistencyError(f"partial sum plus tail is {total}, expected 1/{n}")
    logger.debug("Egyptian check n=%d over %d terms leaves tail %s (~%.3g)", n, terms, tail, float(tail))
    return EgyptianReport(
        n=n,
        terms=terms,
        partial_sum=partial,
        tail=tail,
        interval=IntervalValue.point(total, bits),
        truncation_interval=IntervalValue(lower=partial, upper=total, precision_bits=bits),
    )
