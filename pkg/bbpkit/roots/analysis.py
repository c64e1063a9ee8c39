"""Where the roots of C_n lie.

C_n has no real roots for even n and exactly one, inside (-1, 0), for odd n.
Every complex root satisfies Re x < -1/2; under w = x / (1 + x) this says
f_n(w) = w + w^2/2 + ... + w^(n-1)/(n-1) has no roots in |w| <= 1 besides 0.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import mpmath

from bbpkit.arith import Poly
from bbpkit.config import get_settings
from bbpkit.exceptions import ConsistencyError, DomainError, TheoremViolationError
from bbpkit.logpoly import poly_C
from bbpkit.models import CertifiedRoot, RationalInterval, RootReport
from bbpkit.roots.certify import RootDisk, certify_roots, format_decimal
from bbpkit.roots.sturm import count_real_roots, isolate_real_roots

logger = logging.getLogger(__name__)

HALF_PLANE = Fraction(-1, 2)


def real_root_count(n: int) -> Tuple[int, List[RationalInterval]]:
    """Sturm count of the real roots of C_n with isolating intervals of width < 1e-6."""
    if n < 3:
        raise DomainError("C_n has real-root content only for n >= 3")
    c = poly_C(n)
    intervals = isolate_real_roots(c)
    count = count_real_roots(c)
    if count != len(intervals):
        raise ConsistencyError(f"Sturm count {count} disagrees with {len(intervals)} isolated roots")
    return count, intervals


def w_transform(n: int) -> Poly:
    """f_n(w) = sum_{k=1}^{n-1} w^k / k."""
    if n < 2:
        raise DomainError("f_n needs n >= 2")
    return Poly([0] + [Fraction(1, k) for k in range(1, n)])


def w_correspondence_defect(n: int) -> Poly:
    """C_n(x) - sum_{k=1}^{n-1} x^(k-1) (1+x)^(n-1-k) / k; identically zero."""
    x, one_plus_x = Poly.x(), Poly([1, 1])
    total = Poly()
    for k in range(1, n):
        total = total + (x ** (k - 1) * one_plus_x ** (n - 1 - k)).scale(Fraction(1, k))
    return poly_C(n) - total


def deflated_q(n: int) -> Poly:
    """Q(w) = f_n(w)(1 - w)/w, checked to vanish at w = 1 and to deflate exactly."""
    g = w_transform(n) // Poly.x()
    q = g * Poly([1, -1])
    quotient, remainder = divmod(q, Poly([-1, 1]))
    if q(Fraction(1)) != 0 or not remainder.is_zero() or quotient != -g:
        raise ConsistencyError("Q(w) does not deflate by (w - 1)")
    return q


def q_tail_weight(n: int) -> Fraction:
    """sum_{k=1}^{n-2} 1/(k(k+1)) + 1/(n-1): the bound on |1 - Q(w)| for |w| <= 1."""
    return sum((Fraction(1, k * (k + 1)) for k in range(1, n - 1)), Fraction(0)) + Fraction(1, n - 1)


def unit_disk_check(n: int, tol: Optional[float] = None) -> bool:
    """Every root of f_n(w)/w has modulus > 1.

    The inequality route: Q = 1 - sum_{k<=n-2} w^k/(k(k+1)) - w^(n-1)/(n-1), and
    the weights sum to exactly 1, so |Q(w)| = 0 in the closed disk forces w = 1,
    which is the deflated factor. The numeric route certifies every root disk
    outside the unit circle.
    """
    if n < 2:
        raise DomainError("f_n needs n >= 2")
    q = deflated_q(n)
    expected = Poly(
        [1]
        + [Fraction(-1, k * (k + 1)) for k in range(1, n - 1)]
        + [Fraction(-1, n - 1)]
    )
    if q != expected or q_tail_weight(n) != 1:
        raise ConsistencyError(f"Q(w) for n = {n} does not have the expected weights")
    g = w_transform(n) // Poly.x()
    disks = certify_roots(g, tol=tol)
    ok = all(d.outside_circle(Fraction(1)) for d in disks)
    logger.debug("unit disk check n=%d over %d roots: %s", n, len(disks), ok)
    return ok


def _certified_root(disk: RootDisk, digits: int) -> CertifiedRoot:
    return CertifiedRoot(
        real=format_decimal(disk.centre.re, digits),
        imag=format_decimal(disk.centre.im, digits),
        radius=format_decimal(disk.radius, 6),
    )


def _maps_outside_unit_circle(disk: RootDisk) -> bool:
    """|x / (1 + x)| > 1 at the centre, evaluated in mpmath."""
    with mpmath.workdps(50):
        x = disk.centre.to_mpc()
        return abs(x / (1 + x)) > 1


def half_plane_check(n: int, tol: Optional[float] = None) -> RootReport:
    """Certify that every root of C_n lies in Re x < -1/2."""
    if n < 3:
        raise DomainError("half-plane check needs n >= 3")
    settings = get_settings()
    tol = settings.BBP_ROOT_TOL if tol is None else tol
    count, intervals = real_root_count(n)

    c = poly_C(n)
    for interval in intervals:
        if c.sign_at(HALF_PLANE) == 0 or interval.upper >= HALF_PLANE:
            raise TheoremViolationError(f"a real root of C_{n} lies at or right of -1/2")

    margin = Fraction(10) * Fraction(tol)
    bits = settings.BBP_ROOT_PRECISION_BITS
    for attempt in range(settings.BBP_ROOT_ESCALATIONS + 1):
        disks = certify_roots(c, tol=tol, bits=bits << attempt)
        crossing = [d for d in disks if not d.lies_left_of(HALF_PLANE - margin)]
        if not crossing:
            break
        if any(d.lies_right_of(HALF_PLANE) for d in crossing):
            raise TheoremViolationError(f"a root of C_{n} lies right of Re x = -1/2")
        logger.info("root disks of C_%d near Re x = -1/2, escalating", n)
        margin /= 2
    else:
        raise TheoremViolationError(f"a root disk of C_{n} still crosses Re x = -1/2")

    complex_disks = [d for d in disks if not d.meets_real_axis()]
    if len(disks) - len(complex_disks) != count:
        raise ConsistencyError(
            f"{len(disks) - len(complex_disks)} disks meet the real axis, Sturm counts {count}"
        )
    if not all(_maps_outside_unit_circle(d) for d in complex_disks):
        raise ConsistencyError(f"w-map check failed for a root of C_{n}")
    complex_disks.sort(key=lambda d: (d.centre.re, d.centre.im))
    digits = max(10, len(str(int(1 / Fraction(tol)))) + 2)
    return RootReport(
        n=n,
        real_root_count=count,
        real_roots=intervals,
        complex_roots=[_certified_root(d, digits) for d in complex_disks],
        half_plane_ok=True,
        unit_disk_ok=unit_disk_check(n, tol=tol),
        tolerance=tol,
        precision_bits=bits,
    )
