import math
from fractions import Fraction as F

import pytest

from bbpkit.arith import Poly, harmonic
from bbpkit.exceptions import DomainError
from bbpkit.logpoly import b_at_zero, log_poly_pair, poly_A, poly_B, poly_C, poly_D
from bbpkit.logpoly.identities import (
    alternating_harmonic_sum,
    b_prime_at_zero,
    derivative_identity_defect,
    factorization_defect,
    harmonic_integral,
    ode_identity_defect,
    recurrence_defect,
    weighted_harmonic_sum,
)


def test_small_orders():
    assert poly_A(3) == Poly([0, 0, F(1, 2)])
    assert poly_B(1).is_zero()
    assert poly_B(2) == Poly([1, -1])
    assert poly_C(3) == Poly([1, F(3, 2)])
    assert poly_C(4) == Poly([1, F(5, 2), F(11, 6)])
    assert poly_D(3) == Poly([0, 1, F(3, 2)])


@pytest.mark.parametrize("n,value", [(3, F(-5, 4)), (5, F(-131, 288)), (6, F(-661, 3600))])
def test_b_at_two(n, value):
    assert poly_B(n)(F(2)) == value


@pytest.mark.parametrize("n", range(2, 12))
def test_b_at_zero(n):
    assert b_at_zero(n) == F((-1) ** n, (n - 1) * math.factorial(n - 1))


@pytest.mark.parametrize("n", range(1, 10))
def test_b_vanishes_at_one(n):
    assert poly_B(n)(F(1)) == 0


def test_log_poly_pair():
    pair = log_poly_pair(4)
    assert pair.n == 4
    assert pair.a_part == poly_A(4)
    assert pair.b_part == poly_B(4)


def test_domain():
    with pytest.raises(DomainError):
        poly_A(0)
    with pytest.raises(DomainError):
        poly_C(1)
    with pytest.raises(DomainError):
        b_at_zero(1)


@pytest.mark.parametrize("n", range(1, 14))
def test_alternating_harmonic_sum(n):
    assert alternating_harmonic_sum(n) == F((-1) ** (n + 1), n)


@pytest.mark.parametrize("n", range(2, 14))
def test_weighted_harmonic_sum(n):
    assert weighted_harmonic_sum(n) == F((-1) ** (n - 1) * n, n - 1)


@pytest.mark.parametrize("n", range(0, 12))
def test_harmonic_integral(n):
    assert harmonic_integral(n) == harmonic(n)


@pytest.mark.parametrize("n", range(1, 12))
def test_recurrence(n):
    assert recurrence_defect(n).is_zero()


@pytest.mark.parametrize("n", range(2, 12))
def test_factorization_through_c(n):
    assert factorization_defect(n).is_zero()


@pytest.mark.parametrize("n", range(3, 12))
def test_derivative_identity(n):
    assert derivative_identity_defect(n).is_zero()


@pytest.mark.parametrize("n", range(2, 12))
def test_ode_identity(n):
    assert ode_identity_defect(n).is_zero()


@pytest.mark.parametrize("n", range(2, 10))
def test_b_prime_at_zero(n):
    assert b_prime_at_zero(n) == F((-1) ** n, (n - 1) * math.factorial(n - 1))


@pytest.mark.parametrize("n", range(2, 41))
def test_c_boundary_values(n):
    c = poly_C(n)
    assert c(F(0)) == 1
    assert c(F(-1)) == F((-1) ** n, n - 1)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(12, 41))
def test_identities_for_large_orders(n):
    assert recurrence_defect(n).is_zero()
    assert factorization_defect(n).is_zero()
    assert ode_identity_defect(n).is_zero()
    b_at_zero(n)
