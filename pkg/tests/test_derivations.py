from fractions import Fraction as F

from bbpkit.formulas import catalog, make_series, normalize, regroup, split_re_im
from bbpkit.formulas.derivations import (
    HALF_PLUS_HALF_I,
    derive_bbp_null16,
    derive_bbp_zero,
    derive_bellard,
    derive_log2_16,
    derive_log2_bbp16,
    derive_pi16,
    derive_plouffe,
)
from bbpkit.formulas.transforms import canonicalize, distribute
from bbpkit.models import ConstantTag
from bbpkit.verify import verify_formula


def test_log2_bbp16_from_order_four():
    f = derive_log2_bbp16()
    assert f.target == ConstantTag.log_of(2)
    assert (f.base, f.period) == (16, 8)
    g = distribute(canonicalize(f))
    assert g.r0 == 0
    assert g.coeffs == (0, 1, 0, F(1, 2), 0, F(1, 4), 0, F(1, 8))


def test_complex_point_splits_into_pi_and_log2():
    real, imaginary = split_re_im(regroup(make_series(1, HALF_PLUS_HALF_I), 8))
    assert real.target == ConstantTag.log_of(2)
    assert imaginary.target == ConstantTag.pi()
    assert normalize(derive_pi16()) == normalize(catalog("pi-16"))
    assert normalize(derive_log2_16()) == normalize(catalog("log2-16"))


def test_null_formulas():
    zero = derive_bbp_zero()
    assert zero.target == ConstantTag.zero()
    assert distribute(zero).coeffs == (1, -1, F(-1, 2), -1, F(-1, 4), F(-1, 4), F(1, 8), 0)
    assert derive_bbp_null16().coeffs == (-8, 8, 4, 8, 2, 2, -1, 0)


def test_plouffe_from_pi16_and_null():
    f = derive_plouffe()
    assert f.target == ConstantTag.pi()
    assert f.coeffs == (4, 0, 0, -2, -1, -1, 0, 0)


def test_bellard():
    f = derive_bellard()
    assert (f.base, f.period, f.nonzero_count) == (-1024, 20, 7)
    assert f.target == ConstantTag.pi()
    assert verify_formula(f, 96).verified
