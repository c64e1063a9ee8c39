"""Exact checks of the harmonic-number and polynomial identities the construction rests on."""

import math
from fractions import Fraction

from bbpkit.arith import Poly, binomial, harmonic
from bbpkit.exceptions import DomainError
from bbpkit.logpoly.polynomials import poly_A, poly_B, poly_C, poly_D


def alternating_harmonic_sum(n: int) -> Fraction:
    """sum_k C(n,k) (-1)^k H_{n-k}, which equals (-1)^(n+1)/n."""
    if n < 1:
        raise DomainError("n >= 1")
    return sum(
        (binomial(n, k) * (-1) ** k * harmonic(n - k) for k in range(n + 1)),
        Fraction(0),
    )


def weighted_harmonic_sum(n: int) -> Fraction:
    """sum_k k C(n,k) (-1)^k H_{n-k}, which equals (-1)^(n-1) n/(n-1)."""
    if n < 2:
        raise DomainError("n >= 2")
    return sum(
        (k * binomial(n, k) * (-1) ** k * harmonic(n - k) for k in range(n + 1)),
        Fraction(0),
    )


def harmonic_integral(n: int) -> Fraction:
    """Integral over [0, 1] of (1 - (1-t)^n)/t, exactly; equals H_n."""
    if n < 0:
        raise DomainError("n >= 0")
    numerator = Poly.constant(1) - Poly([1, -1]) ** n
    integrand, rem = divmod(numerator, Poly.x())
    if not rem.is_zero():
        raise DomainError("integrand is not polynomial")
    return integrand.integral()(Fraction(1))


def recurrence_defect(n: int) -> Poly:
    """B_{n+1}' - (B_n - s^(n-1)/n!); zero when the recurrence holds."""
    return poly_B(n + 1).derivative() - (poly_B(n) - poly_A(n).scale(Fraction(1, n)))


def factorization_defect(n: int) -> Poly:
    """B_n(s) + (1/(n-1)!) (s-1) C_n(s-1); zero when B_n factors through C_n."""
    shifted = poly_C(n).shift(-1) * Poly([-1, 1])
    return poly_B(n) + shifted.scale(Fraction(1, math.factorial(n - 1)))


def derivative_identity_defect(n: int) -> Poly:
    """D_n' - (n-1) D_{n-1} - (1+x)^(n-2)."""
    if n < 3:
        raise DomainError("n >= 3")
    return poly_D(n).derivative() - poly_D(n - 1).scale(n - 1) - Poly([1, 1]) ** (n - 2)


def ode_identity_defect(n: int) -> Poly:
    """(1+x) D_n' - (n-1) D_n - ((1+x)^(n-1) - x^(n-1))."""
    d = poly_D(n)
    q = Poly([1, 1]) ** (n - 1) - Poly.monomial(1, n - 1)
    return Poly([1, 1]) * d.derivative() - d.scale(n - 1) - q


def b_prime_at_zero(n: int) -> Fraction:
    """B_{n+1}'(0), whose closed form is (-1)^n/((n-1)(n-1)!)."""
    return poly_B(n + 1).derivative()(Fraction(0))
