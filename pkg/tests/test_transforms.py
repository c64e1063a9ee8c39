from fractions import Fraction as F

import pytest

from bbpkit.exceptions import CombineError, DomainError
from bbpkit.formulas import (
    block,
    canonicalize,
    catalog,
    combine,
    dilate,
    distribute,
    efficiency,
    fold_leading,
    normalize,
    product_form,
    render_product_form,
    split_re_im,
    to_positive_base,
)
from bbpkit.formulas.transforms import common_base
from bbpkit.models import ConstantTag
from bbpkit.verify import verify_formula


def test_canonical_distributed_bbp16():
    g = distribute(canonicalize(catalog("log2-bbp16")))
    assert (g.offset, g.start, g.period, g.r1) == (1, 0, 8, 1)
    assert g.r0 == 0
    assert g.coeffs == (0, 1, 0, F(1, 2), 0, F(1, 4), 0, F(1, 8))


def test_canonicalize_keeps_canonical_formulas():
    f = catalog("pi-16")
    assert canonicalize(f) is f


def test_fold_leading():
    f = catalog("pi-16")
    folded = fold_leading(f, 1)
    assert folded.start == 1
    assert folded.r0 == F(109, 35)
    assert canonicalize(fold_leading(f, 3)) == f
    with pytest.raises(DomainError):
        fold_leading(f, -1)


def test_block_and_dilate_preserve_value():
    f = catalog("pi-16")
    blocked = block(f, 2)
    assert (blocked.base, blocked.period) == (256, 16)
    assert blocked.coeffs[8] == F(2, 16)
    dilated = dilate(f, 2)
    assert dilated.period == 16
    assert dilated.coeffs[:4] == (0, 4, 0, 4)
    assert verify_formula(blocked, 64).verified
    assert verify_formula(dilated, 64).verified


def test_to_positive_base():
    f = to_positive_base(catalog("bellard"))
    assert (f.base, f.period) == (1024 ** 2, 40)
    assert verify_formula(f, 64).verified
    assert to_positive_base(catalog("plouffe")) == catalog("plouffe")


@pytest.mark.parametrize("bases,expected", [
    ([16, 64], (4096, [3, 2])),
    ([-2, 4], (4, [2, 1])),
    ([-8, 4], (64, [2, 3])),
    ([-2, -8], (-8, [3, 1])),
    ([-1, -1], (-1, [1, 1])),
    ([-1, 1], (1, [2, 1])),
])
def test_common_base(bases, expected):
    assert common_base(bases) == expected


@pytest.mark.parametrize("bases", [[3, 4], [2, -1], [6, 36, 4]])
def test_common_base_rejects(bases):
    with pytest.raises(CombineError):
        common_base(bases)


def test_combine_null_formula():
    f = combine([(-8, catalog("log2-16")), (8, catalog("log2-bbp16"))])
    assert f.target == ConstantTag.zero()
    assert f.r0 == 0
    assert f.coeffs == (-8, 8, 4, 8, 2, 2, -1, 0)


def test_combine_respects_period_limit():
    with pytest.raises(CombineError):
        combine([(1, catalog("pi-16")), (1, catalog("null-64"))], max_period=8)
    with pytest.raises(CombineError):
        combine([])


def test_combine_over_mixed_bases():
    f = combine([(1, catalog("pi-16")), (1, catalog("null-64"))])
    assert (f.base, f.period) == (2 ** 12, 24)
    assert f.target == ConstantTag.pi()
    assert verify_formula(f, 64).verified


def test_normalize_orients_and_scales():
    f = normalize(catalog("log2-bbp16"))
    assert f.target == ConstantTag.log_of(2)
    assert f.r1 == F(1, 8)
    assert f.coeffs == (0, 8, 0, 4, 0, 2, 0, 1)


def test_split_requires_log_target():
    with pytest.raises(DomainError):
        split_re_im(catalog("pi-16"))


@pytest.mark.parametrize("name,factor,ratio,alternating,order", [
    ("log2-1", F(1, 2), F(1), True, 2),
    ("log2-2", F(1, 2), F(1), True, 3),
    ("log2-3", F(3, 4), F(1), True, 4),
    ("log2-4", F(3, 2), F(1), True, 5),
    ("log2-5", F(15, 4), F(1), True, 6),
    ("log2-7", F(-1), F(1, 2), False, 2),
    ("log2-8", F(2), F(1, 2), False, 3),
    ("log2-9", F(-6), F(1, 2), False, 4),
    ("log2-10", F(24), F(1, 2), False, 5),
    ("log2-11", F(-120), F(1, 2), False, 6),
])
def test_product_forms(name, factor, ratio, alternating, order):
    p = product_form(catalog(name))
    assert p.factor == factor
    assert p.ratio == ratio
    assert p.alternating is alternating
    assert p.order == order
    assert p.r0 == catalog(name).r0


def test_render_product_form():
    text = render_product_form(product_form(catalog("log2-3")))
    assert text == "2/3 + 3/4 · Σ_{j≥1} (-1)^(j+1) / (j(j+1)(j+2)(j+3))"


def test_product_form_rejects_grouped_formulas():
    with pytest.raises(DomainError):
        product_form(catalog("pi-16"))


@pytest.mark.parametrize("name,score", [
    ("plouffe", F(1)),
    ("bellard", F(7, 10)),
    ("bbp-null-16", F(7, 4)),
    ("pi-16", F(3, 2)),
])
def test_efficiency(name, score):
    result = efficiency(catalog(name))
    assert result.exact == score
    assert result.value == pytest.approx(float(score))


def test_efficiency_rejects_unit_base():
    with pytest.raises(DomainError):
        efficiency(catalog("leibniz"))
