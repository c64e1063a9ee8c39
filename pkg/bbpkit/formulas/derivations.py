"""Step-by-step derivations of the named formulas from the log series."""

import logging
from fractions import Fraction
from functools import lru_cache

from bbpkit.arith import GaussianRational
from bbpkit.exceptions import DerivationError
from bbpkit.formulas.series import make_series, regroup
from bbpkit.formulas.transforms import (
    combine,
    fold_leading,
    normalize,
    split_re_im,
    to_positive_base,
)
from bbpkit.models import BBPFormula, ConstantTag

logger = logging.getLogger(__name__)

HALF_PLUS_HALF_I = GaussianRational.of(Fraction(1, 2), Fraction(1, 2))
ONE_PLUS_I = GaussianRational.of(1, 1)
ONE_PLUS_HALF_I = GaussianRational.of(1, Fraction(1, 2))
SEVEN_EIGHTHS_PLUS = GaussianRational.of(Fraction(7, 8), Fraction(1, 8))


def derive_log2(n: int, s) -> BBPFormula:
    """Partial-fraction formula for log 2 from the order-n series at s = 2 or s = 1/2."""
    return normalize(make_series(n, s))


def derive_bernoulli_log2() -> BBPFormula:
    return regroup(make_series(1, Fraction(1, 2)), 1)


@lru_cache(maxsize=None)
def derive_log2_bbp16() -> BBPFormula:
    """Order 4 at s = 1/2, grouped mod 8 over base 16."""
    return regroup(make_series(4, Fraction(1, 2)), 8, base=16)


@lru_cache(maxsize=None)
def _split_half_plus_half_i():
    return split_re_im(regroup(make_series(1, HALF_PLUS_HALF_I), 8))


def derive_pi16() -> BBPFormula:
    """Imaginary part at s = (1+i)/2: a base-16 formula for pi."""
    return _split_half_plus_half_i()[1]


def derive_log2_16() -> BBPFormula:
    """Real part at s = (1+i)/2: a base-16 formula for log 2."""
    return _split_half_plus_half_i()[0]


def derive_bbp_zero() -> BBPFormula:
    """Two base-16 formulas for log 2 differ by a null formula."""
    return combine([(1, derive_log2_16()), (-1, derive_log2_bbp16())])


def derive_bbp_null16() -> BBPFormula:
    """The null formula scaled to integer coefficients (-8, 8, 4, 8, 2, 2, -1, 0)."""
    return combine([(-8, derive_log2_16()), (8, derive_log2_bbp16())])


def derive_plouffe() -> BBPFormula:
    """pi-16 plus twice the null formula."""
    return combine([(1, derive_pi16()), (2, derive_bbp_zero())])


def derive_null64() -> BBPFormula:
    """log(3/2) + log(3/4) - log(9/8) = 0, all regrouped over base 2^6."""
    parts = [
        regroup(make_series(1, Fraction(3, 2)), 6, base=64),
        regroup(make_series(1, Fraction(3, 4)), 6, base=64),
        regroup(make_series(1, Fraction(9, 8)), 6, base=64),
    ]
    return combine([(32, parts[0]), (32, parts[1]), (-32, parts[2])])


def derive_machin() -> BBPFormula:
    """pi = 4 sum (-1)^k/(2k+1) from the order-1 series at s = 1+i."""
    return normalize(split_re_im(regroup(make_series(1, ONE_PLUS_I), 2))[1])


def derive_leibniz() -> BBPFormula:
    """The order-2 series at s = 1+i, exported with positive base and the k = 0 block folded."""
    imaginary = split_re_im(regroup(make_series(2, ONE_PLUS_I), 2, base=-1))[1]
    return fold_leading(to_positive_base(normalize(imaginary)), 1)


def derive_bellard_half() -> BBPFormula:
    """Im log(1 + i/2) over base -2^10, period 10."""
    return split_re_im(regroup(make_series(1, ONE_PLUS_HALF_I), 10))[1]


def derive_bellard_seven_eighths() -> BBPFormula:
    """Im log((7+i)/8) over base -2^10, period 4."""
    return split_re_im(regroup(make_series(1, SEVEN_EIGHTHS_PLUS), 4))[1]


def derive_bellard() -> BBPFormula:
    """pi/4 = 2 arg(1 + i/2) - arg((7+i)/8), combined over period 20."""
    formula = normalize(
        combine([(8, derive_bellard_half()), (-4, derive_bellard_seven_eighths())])
    )
    if formula.target != ConstantTag.pi():
        raise DerivationError(f"Bellard combination is tagged {formula.target}, not pi")
    if (formula.base, formula.period, formula.nonzero_count) != (-1024, 20, 7):
        raise DerivationError(
            f"Bellard combination has base {formula.base}, period {formula.period}, "
            f"{formula.nonzero_count} nonzero coefficients"
        )
    logger.debug("derived Bellard formula with r1 = %s", formula.r1)
    return formula
