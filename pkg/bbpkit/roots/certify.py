"""Certified inclusion disks for all roots of a rational polynomial.

Estimates come from numpy's companion-matrix eigenvalues and are polished by
Newton's method in mpmath. Each polished estimate z is then turned into an
exact Gaussian-rational centre c, and the radius d |p(c)| / |p'(c)| (d the
degree) is computed exactly: that disk always contains a root. When the d
disks are pairwise disjoint each contains exactly one root.
"""

import logging
import math
from fractions import Fraction
from typing import List, Optional

import mpmath
import numpy as np
from pydantic import BaseModel, ConfigDict

from bbpkit.arith import GaussianRational, Poly, Rational
from bbpkit.config import get_settings
from bbpkit.exceptions import DomainError, InconclusiveRootError

logger = logging.getLogger(__name__)


class RootDisk(BaseModel):
    """Closed disk |x - centre| <= radius holding exactly one root."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    centre: GaussianRational
    radius: Rational

    def meets_real_axis(self) -> bool:
        return abs(self.centre.im) <= self.radius

    def lies_left_of(self, line: Fraction) -> bool:
        return self.centre.re + self.radius < line

    def lies_right_of(self, line: Fraction) -> bool:
        return self.centre.re - self.radius > line

    def outside_circle(self, r: Fraction) -> bool:
        """Every point has modulus > r."""
        # |c| > r + radius, compared on squares
        return self.centre.norm() > (r + self.radius) ** 2

    def disjoint_from(self, other: "RootDisk") -> bool:
        return (self.centre - other.centre).norm() > (self.radius + other.radius) ** 2


def _upper_sqrt(q: Fraction) -> Fraction:
    """A rational at least sqrt(q)."""
    n, d = q.numerator, q.denominator
    if n == 0:
        return Fraction(0)
    return Fraction(math.isqrt(n * d) + 1, d)


def _to_gaussian(z, digits: int) -> GaussianRational:
    z = mpmath.mpc(z)
    return GaussianRational.of(
        Fraction(mpmath.nstr(z.real, digits, strip_zeros=False)),
        Fraction(mpmath.nstr(z.imag, digits, strip_zeros=False)),
    )


def initial_estimates(p: Poly) -> List[complex]:
    return [complex(z) for z in np.roots([float(c) for c in reversed(p.coeffs)])]


def polish(p: Poly, estimates: List[complex], bits: int, steps: int = 200) -> List[mpmath.mpc]:
    """Newton iteration at `bits` of working precision from each estimate."""
    dp = p.derivative()
    polished = []
    with mpmath.workprec(bits):
        eps = mpmath.ldexp(1, -bits + 8)
        for z0 in estimates:
            z = mpmath.mpc(z0)
            for _ in range(steps):
                d = dp.evaluate_mp(z)
                if d == 0:
                    break
                step = p.evaluate_mp(z) / d
                z -= step
                if abs(step) <= eps * max(1, abs(z)):
                    break
            polished.append(z)
    return polished


def inclusion_disk(p: Poly, centre: GaussianRational) -> Optional[RootDisk]:
    """Disk around centre that contains a root of p, or None when p' vanishes there."""
    value = GaussianRational.coerce(p(centre))
    slope = GaussianRational.coerce(p.derivative()(centre))
    if slope.is_zero:
        return None
    squared = Fraction(p.degree ** 2) * value.norm() / slope.norm()
    return RootDisk(centre=centre, radius=_upper_sqrt(squared))


def certify_roots(
    p: Poly,
    tol: Optional[float] = None,
    bits: Optional[int] = None,
    escalations: Optional[int] = None,
) -> List[RootDisk]:
    """Pairwise disjoint disks of radius <= tol, one per root of a squarefree p."""
    settings = get_settings()
    tol = settings.BBP_ROOT_TOL if tol is None else tol
    bits = settings.BBP_ROOT_PRECISION_BITS if bits is None else bits
    escalations = settings.BBP_ROOT_ESCALATIONS if escalations is None else escalations
    if p.degree < 1:
        return []
    if p.gcd(p.derivative()).degree > 0:
        raise DomainError("root certification needs a squarefree polynomial")
    limit = Fraction(tol)
    estimates = initial_estimates(p)

    for attempt in range(escalations + 1):
        work = bits << attempt
        polished = polish(p, estimates, work)
        digits = int(work * math.log10(2)) + 5
        disks = [inclusion_disk(p, _to_gaussian(z, digits)) for z in polished]
        if all(d is not None and d.radius <= limit for d in disks) and all(
            a.disjoint_from(b) for i, a in enumerate(disks) for b in disks[i + 1:]
        ):
            logger.debug("certified %d roots at %d bits", len(disks), work)
            return disks
        logger.info("root disks inconclusive at %d bits, escalating", work)
        estimates = [complex(z) for z in polished]
    raise InconclusiveRootError(
        f"could not certify the roots of a degree-{p.degree} polynomial within {escalations} escalations"
    )


def format_decimal(value: Fraction, digits: int = 20) -> str:
    with mpmath.workdps(digits + 5):
        return mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, digits)
