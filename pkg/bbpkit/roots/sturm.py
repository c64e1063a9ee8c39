"""Exact real-root counting and isolation with Sturm sequences."""

import logging
from fractions import Fraction
from typing import List, Optional

from bbpkit.arith import Poly
from bbpkit.arith.rational import rational_content
from bbpkit.exceptions import DomainError
from bbpkit.models import RationalInterval

logger = logging.getLogger(__name__)

DEFAULT_WIDTH = Fraction(1, 10 ** 6)


def _shrink(p: Poly) -> Poly:
    """Divide by the positive content; signs are preserved."""
    if p.is_zero():
        return p
    return p.scale(1 / rational_content(p.coeffs))


def squarefree_part(p: Poly) -> Poly:
    if p.degree < 1:
        return p
    return p // p.gcd(p.derivative())


def sturm_sequence(p: Poly) -> List[Poly]:
    """p, p', -rem(p, p'), ... down to a nonzero constant."""
    seq = [_shrink(p), _shrink(p.derivative())]
    while not seq[-1].is_zero():
        seq.append(_shrink(-(seq[-2] % seq[-1])))
    seq.pop()
    return seq


def _variations(signs: List[int]) -> int:
    nonzero = [s for s in signs if s]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def variations_at(seq: List[Poly], x: Optional[Fraction], direction: int = 1) -> int:
    """Sign changes at x, or at +-infinity when x is None."""
    if x is None:
        signs = [
            (1 if q.leading > 0 else -1) * (direction ** q.degree if q.degree > 0 else 1)
            for q in seq
        ]
        return _variations(signs)
    return _variations([q.sign_at(x) for q in seq])


def count_real_roots(p: Poly, lower: Optional[Fraction] = None, upper: Optional[Fraction] = None) -> int:
    """Distinct real roots in (lower, upper]; None stands for an infinite end."""
    if p.is_zero():
        raise DomainError("the zero polynomial has infinitely many roots")
    seq = sturm_sequence(squarefree_part(p))
    return variations_at(seq, lower, -1) - variations_at(seq, upper, 1)


def cauchy_bound(p: Poly) -> Fraction:
    """Every root satisfies |x| < 1 + max |a_i / a_n|."""
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_real_roots(p: Poly, width: Fraction = DEFAULT_WIDTH) -> List[RationalInterval]:
    """Disjoint intervals of length below `width`, one around each distinct real root, in increasing order."""
    if p.degree < 1:
        return []
    q = squarefree_part(p)
    seq = sturm_sequence(q)

    def count(a: Fraction, b: Fraction) -> int:
        return variations_at(seq, a) - variations_at(seq, b)

    bound = cauchy_bound(q)
    found: List[RationalInterval] = []
    pending = [(-bound, bound)]
    while pending:
        a, b = pending.pop()
        k = count(a, b)
        if k == 0:
            continue
        if k > 1:
            mid = (a + b) / 2
            pending.extend([(mid, b), (a, mid)])
            continue
        while b - a >= width:
            mid = (a + b) / 2
            if q.sign_at(mid) == 0:
                a = b = mid
                break
            if count(a, mid):
                b = mid
            else:
                a = mid
        found.append(RationalInterval(lower=a, upper=b))
    found.sort(key=lambda r: r.lower)
    logger.debug("isolated %d real roots of a degree-%d polynomial", len(found), p.degree)
    return found
