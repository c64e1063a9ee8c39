import math
from fractions import Fraction as F

import pytest

from bbpkit.arith import Poly
from bbpkit.exceptions import DomainError
from bbpkit.logpoly import poly_C
from bbpkit.roots import (
    certify_roots,
    count_real_roots,
    half_plane_check,
    isolate_real_roots,
    real_root_count,
    sturm_sequence,
    unit_disk_check,
    w_correspondence_defect,
    w_transform,
)
from bbpkit.roots.analysis import deflated_q, q_tail_weight


def test_sturm_counts():
    p = Poly([-1, 0, 1])
    assert len(sturm_sequence(p)) == 3
    assert count_real_roots(p) == 2
    assert count_real_roots(p, F(0), F(2)) == 1
    assert count_real_roots(Poly([1, 0, 1])) == 0
    assert count_real_roots(Poly([1, 2, 1])) == 1


def test_isolation():
    intervals = isolate_real_roots(Poly([-2, 0, 1]))
    assert len(intervals) == 2
    low, high = intervals
    assert low.lower <= -math.sqrt(2) <= low.upper
    assert high.lower <= math.sqrt(2) <= high.upper
    assert all(r.width < F(1, 10 ** 6) for r in intervals)


def test_isolation_of_a_rational_root():
    (interval,) = isolate_real_roots(poly_C(3))
    assert interval.lower <= F(-2, 3) <= interval.upper


@pytest.mark.parametrize("n", range(3, 16))
def test_real_root_count_by_parity(n):
    count, intervals = real_root_count(n)
    assert count == n % 2
    for interval in intervals:
        assert -1 < interval.lower and interval.upper < 0


def test_real_root_count_domain():
    with pytest.raises(DomainError):
        real_root_count(2)


def test_certified_disks_for_c4():
    disks = certify_roots(poly_C(4))
    assert len(disks) == 2
    imag = math.sqrt(13 / 12) * 3 / 11
    for disk in disks:
        assert float(disk.radius) <= 1e-9
        assert float(disk.centre.re) == pytest.approx(-15 / 22, abs=1e-9)
        assert abs(float(disk.centre.im)) == pytest.approx(imag, abs=1e-9)
    assert disks[0].disjoint_from(disks[1])


def test_certify_exact_roots():
    disks = certify_roots(Poly([1, 0, 1]))
    assert sorted(float(d.centre.im) for d in disks) == pytest.approx([-1.0, 1.0])


def test_certify_needs_squarefree():
    with pytest.raises(DomainError):
        certify_roots(Poly([1, 2, 1]))


@pytest.mark.parametrize("n", range(2, 14))
def test_w_correspondence(n):
    assert w_correspondence_defect(n).is_zero()


def test_w_transform():
    assert w_transform(3) == Poly([0, 1, F(1, 2)])
    assert w_transform(4) // Poly.x() == Poly([1, F(1, 2), F(1, 3)])


@pytest.mark.parametrize("n", range(2, 12))
def test_q_weights_sum_to_one(n):
    assert q_tail_weight(n) == 1
    assert deflated_q(n)(F(1)) == 0


@pytest.mark.parametrize("n", range(3, 12))
def test_unit_disk(n):
    assert unit_disk_check(n)


@pytest.mark.parametrize("n", range(3, 10))
def test_half_plane(n):
    report = half_plane_check(n)
    assert report.half_plane_ok
    assert report.unit_disk_ok
    assert report.real_root_count == n % 2
    assert len(report.complex_roots) == n - 2 - n % 2
    for root in report.complex_roots:
        assert float(root.real) < -0.5


def test_half_plane_c4_values():
    report = half_plane_check(4)
    assert [float(r.real) for r in report.complex_roots] == pytest.approx([-15 / 22] * 2, abs=1e-9)
    assert [float(r.real) for r in report.b_roots()] == pytest.approx([7 / 22] * 2, abs=1e-9)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(10, 31))
def test_half_plane_sweep(n):
    report = half_plane_check(n)
    assert report.half_plane_ok and report.unit_disk_ok


@pytest.mark.slow
@pytest.mark.parametrize("n", range(16, 31))
def test_real_root_parity_sweep(n):
    count, intervals = real_root_count(n)
    assert count == n % 2
    assert len(intervals) == count


@pytest.mark.slow
@pytest.mark.parametrize("n", range(12, 31))
def test_unit_disk_sweep(n):
    assert unit_disk_check(n)
