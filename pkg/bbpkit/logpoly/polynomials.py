"""The polynomial families behind I_n(s) = A_n(s) log s + B_n(s).

Every family is built from its closed form and cached per order.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache

from bbpkit.arith import Poly, binomial, harmonic
from bbpkit.exceptions import ConsistencyError, DomainError
from bbpkit.models.logpoly import LogPolyPair

logger = logging.getLogger(__name__)

_S_MINUS_ONE = Poly([-1, 1])


def _require(n: int, least: int, name: str) -> None:
    if n < least:
        raise DomainError(f"{name} needs n >= {least}, got {n}")


@lru_cache(maxsize=None)
def poly_A(n: int) -> Poly:
    """s^(n-1)/(n-1)!"""
    _require(n, 1, "poly_A")
    return Poly.monomial(Fraction(1, math.factorial(n - 1)), n - 1)


@lru_cache(maxsize=None)
def poly_B(n: int) -> Poly:
    """B_n = -(1/(n-1)!) sum_k C(n-1,k) (H_{n-1} - H_{n-1-k}) (s-1)^k."""
    _require(n, 1, "poly_B")
    logger.debug("building B_%d", n)
    m = n - 1
    total = Poly()
    power = Poly.constant(1)
    for k in range(1, m + 1):
        power = power * _S_MINUS_ONE
        total = total + power.scale(binomial(m, k) * (harmonic(m) - harmonic(m - k)))
    return total.scale(Fraction(-1, math.factorial(m)))


@lru_cache(maxsize=None)
def poly_C(n: int) -> Poly:
    """C_n(x) = sum_{k=0}^{n-2} C(n-1,k+1) (H_{n-1} - H_{n-k-2}) x^k."""
    _require(n, 2, "poly_C")
    h = harmonic(n - 1)
    return Poly(
        binomial(n - 1, k + 1) * (h - harmonic(n - k - 2)) for k in range(n - 1)
    )


@lru_cache(maxsize=None)
def poly_D(n: int) -> Poly:
    """x * C_n(x)"""
    _require(n, 2, "poly_D")
    return poly_C(n) * Poly.x()


def b_at_zero(n: int) -> Fraction:
    """B_n(0) by the closed form, cross-checked against the polynomial."""
    _require(n, 2, "b_at_zero")
    closed = Fraction((-1) ** n, (n - 1) * math.factorial(n - 1))
    evaluated = poly_B(n)(Fraction(0))
    if closed != evaluated:
        raise ConsistencyError(
            f"B_{n}(0): closed form {closed} disagrees with polynomial value {evaluated}"
        )
    return closed


def log_poly_pair(n: int) -> LogPolyPair:
    """The symbolic pair (A_n, B_n) of I_n."""
    return LogPolyPair(n=n, a_part=poly_A(n), b_part=poly_B(n))
