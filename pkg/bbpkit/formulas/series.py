"""Instantiating the log series at a point and regrouping it into BBP form."""

import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from bbpkit.arith import GaussianRational, binomial, gauss_pow, realify
from bbpkit.config import get_settings
from bbpkit.exceptions import ConsistencyError, DomainError, RegroupError
from bbpkit.formulas.transforms import (
    canonicalize,
    distribute,
    integer_scale,
    normalize,
    orient,
    realified,
)
from bbpkit.logpoly import poly_B
from bbpkit.models import BBPFormula, ConstantTag, SeriesForm

logger = logging.getLogger(__name__)


def make_series(n: int, s) -> SeriesForm:
    """log s = r0 + r1 * sum_{j>=0} (1-s)^(j+n) / (n! C(j+n, n)).

    r0 = -(n-1)! B_n(s) / s^(n-1) and r1 = (-1)^n (n-1)! / s^(n-1).
    """
    if n < 1:
        raise DomainError("order n must be positive")
    s = GaussianRational.coerce(s)
    if s.is_zero:
        raise DomainError("s = 0 is outside the domain of log")
    distance = (1 - s).norm()
    if distance > 1:
        raise DomainError(f"|1 - s| > 1 for s = {s}; the series diverges")
    conditional = distance == 1 and n == 1
    if conditional:
        logger.info("s = %s with n = 1 converges only conditionally", s)
    fact = math.factorial(n - 1)
    s_power = gauss_pow(s, n - 1)
    r0 = -(poly_B(n)(s) * fact) / s_power
    r1 = GaussianRational.of((-1) ** n * fact, 0) / s_power
    return SeriesForm(
        n=n,
        s=s,
        r0=GaussianRational.coerce(r0),
        r1=r1,
        target=ConstantTag.log_of(s),
        conditional=conditional,
    )


def partial_fractions(n: int) -> List[Fraction]:
    """c_1..c_n with 1/C(j+n, n) = sum_l c_l / (j + l)."""
    if n < 1:
        raise DomainError("n must be positive")
    return [Fraction((-1) ** (l - 1) * n * binomial(n - 1, l - 1)) for l in range(1, n + 1)]


def _regular_factor(n: int, x: GaussianRational) -> GaussianRational:
    """(1/n!) sum_l c_l x^(n-l): the common factor of every term with d >= n."""
    c = partial_fractions(n)
    total = sum((c[l - 1] * gauss_pow(x, n - l) for l in range(1, n + 1)), GaussianRational.of(0))
    return total / math.factorial(n)


def _flattened_term(series: SeriesForm, x: GaussianRational, d: int) -> GaussianRational:
    """Coefficient of 1/d after expanding every 1/C(j+n, n) into partial fractions."""
    n = series.n
    c = partial_fractions(n)
    g = sum(
        (c[l - 1] * gauss_pow(x, d + n - l) for l in range(1, min(n, d) + 1)),
        GaussianRational.of(0),
    )
    return series.r1 * g / (math.factorial(n) * d)


def _reciprocal_integer(z: GaussianRational) -> Optional[int]:
    """B when z = 1/B for a nonzero integer B."""
    if not z.is_real or z.re == 0 or abs(z.re.numerator) != 1:
        return None
    return z.re.numerator * z.re.denominator


def smallest_period(x: GaussianRational, bound: Optional[int] = None) -> Optional[int]:
    """Smallest m <= bound with x^m the reciprocal of an integer."""
    if bound is None:
        bound = get_settings().BBP_REGROUP_SEARCH_BOUND
    power = GaussianRational.of(1)
    for m in range(1, bound + 1):
        power = power * x
        if _reciprocal_integer(power) is not None:
            return m
    return None


def grouping_period(x: GaussianRational, m: int, base: Optional[int] = None) -> Tuple[int, int]:
    """(p, B) with p | m and x^p = 1/B; p = m unless a base is requested."""
    if x.is_zero:
        raise RegroupError("s = 1 gives the empty series")
    candidates = [m] if base is None else [p for p in range(1, m + 1) if m % p == 0]
    for p in candidates:
        b = _reciprocal_integer(gauss_pow(x, p))
        if b is None or (base is not None and b != base):
            continue
        return p, b
    wanted = f"(1 - s)^p = 1/{base} for p | {m}" if base is not None else f"(1 - s)^{m} = 1/B for an integer B"
    raise RegroupError(f"cannot regroup: no {wanted}", suggested_period=smallest_period(x))


def regroup(series: SeriesForm, m: int, base: Optional[int] = None) -> BBPFormula:
    """Group the flattened series by residue classes modulo m.

    The terms d < n are folded into r0; every later term equals -x^d/d with
    x = 1 - s, which regroups with period p and base 1/x^p and is then
    dilated by m/p.
    """
    if m < 1:
        raise DomainError("period must be positive")
    n = series.n
    x = 1 - series.s
    p, b = grouping_period(x, m, base)
    q = m // p
    logger.debug("regrouping n=%d s=%s with period %d (p=%d, base %d)", n, series.s, m, p, b)

    if series.r1 * _regular_factor(n, x) != -1:
        raise ConsistencyError("regular terms do not reduce to -x^d/d")
    r0 = series.r0
    for d in range(1, n):
        r0 = r0 + _flattened_term(series, x, d)
    taylor = -sum((gauss_pow(x, d) / d for d in range(1, n)), GaussianRational.of(0))
    if r0 != taylor:
        raise ConsistencyError(f"leading terms fold to {r0}, expected {taylor}")

    residue, start = n % p, n // p
    coeffs: List = [Fraction(0)] * m
    for t in range(p):
        coeffs[q * t] = realify(-q * gauss_pow(x, residue + t))
    formula = BBPFormula(
        target=series.target,
        r0=realify(r0),
        r1=Fraction(1),
        base=b,
        period=m,
        start=start,
        offset=q * residue,
        coeffs=tuple(coeffs),
    )
    return _finish(formula)


def _finish(f: BBPFormula) -> BBPFormula:
    """Real results get integer coefficients; every result gets an oriented target."""
    f = orient(realified(f))
    if f.is_real:
        return integer_scale(f)
    return f


@normalize.register
def _(series: SeriesForm) -> BBPFormula:
    """Partial-fraction form: period 1, one coefficient per simple fraction, offset 0, start 1."""
    x = 1 - series.s
    b = _reciprocal_integer(x)
    if b is None:
        raise RegroupError(
            "partial-fraction form needs 1 - s = 1/B for an integer B",
            suggested_period=smallest_period(x),
        )
    n = series.n
    scale = series.r1 * gauss_pow(x, n - 1) / math.factorial(n)
    formula = BBPFormula(
        target=series.target,
        r0=realify(series.r0),
        r1=Fraction(1),
        base=b,
        period=1,
        start=1,
        offset=0,
        coeffs=tuple(realify(scale * c) for c in partial_fractions(n)),
    )
    return _finish(formula)


def log_three_halves(n: int) -> SeriesForm:
    """The s = 3/2 family: an alternating base-2 series for log 3 - log 2."""
    return make_series(n, Fraction(3, 2))


def binary_family(big_n: int, sign: int, n: int = 1) -> SeriesForm:
    """The s = 1 + sign/2^N family."""
    if big_n < 1 or sign not in (1, -1):
        raise DomainError("need N >= 1 and sign in {+1, -1}")
    return make_series(n, 1 + Fraction(sign, 2 ** big_n))


def rearrangement_check(s, n: int, m: int, base: Optional[int] = None) -> bool:
    """The order-n regrouping is a rearrangement of the order-1 one: equal canonical forms."""
    high = distribute(canonicalize(regroup(make_series(n, s), m, base)))
    low = distribute(canonicalize(regroup(make_series(1, s), m, base)))
    return high == low
