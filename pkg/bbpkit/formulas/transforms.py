"""Value-preserving rewrites of BBP-type formulas."""

import logging
import math
from fractions import Fraction
from functools import singledispatch
from typing import List, Optional, Sequence, Tuple, Union

from sympy.ntheory import perfect_power

from bbpkit.arith import GaussianRational, rational_content, realify
from bbpkit.arith.gaussian import gaussian_parts
from bbpkit.config import get_settings
from bbpkit.exceptions import CombineError, DomainError, UnsupportedPointError
from bbpkit.formulas.tags import (
    imaginary_part_tag,
    linear_tag,
    orientation,
    real_part_tag,
)
from bbpkit.models import BBPFormula, EfficiencyScore, ProductForm, SplitResult, TagKind

logger = logging.getLogger(__name__)

ScalarValue = Union[Fraction, GaussianRational]


def rebuild(f: BBPFormula, **changes) -> BBPFormula:
    """Validated copy of f with some fields replaced."""
    fields = dict(f)
    fields.update(changes)
    if "coeffs" in changes:
        fields["coeffs"] = tuple(fields["coeffs"])
    return BBPFormula(**fields)


def realified(f: BBPFormula) -> BBPFormula:
    """Collapse Gaussian scalars with zero imaginary part to Fractions."""
    return rebuild(
        f,
        r0=realify(f.r0),
        r1=realify(f.r1),
        coeffs=[realify(a) for a in f.coeffs],
    )


def distribute(f: BBPFormula) -> BBPFormula:
    """Fold r1 into the coefficients."""
    if f.r1 == 1:
        return f
    return rebuild(f, r1=Fraction(1), coeffs=[realify(f.r1 * a) for a in f.coeffs])


def integer_scale(f: BBPFormula) -> BBPFormula:
    """Integer coefficients with gcd 1; the positive rational content moves into r1."""
    if not f.is_real:
        return f
    values = [f.r1 * a for a in f.coeffs]
    if not any(values):
        return rebuild(f, r1=Fraction(1), coeffs=values)
    g = rational_content(values)
    return rebuild(f, r1=g, coeffs=[v / g for v in values])


def orient(f: BBPFormula) -> BBPFormula:
    """Divide through when the target is c * (single atom) with c != 1."""
    found = orientation(f.target)
    if found is None:
        return f
    c, atom = found
    logger.debug("orienting formula for %s by 1/%s", atom.kind.value, c)
    return rebuild(f, target=atom, r0=realify(f.r0 / c), r1=realify(f.r1 / c))


def _block_value(f: BBPFormula, coefficient: ScalarValue, k: int, denominator: int) -> ScalarValue:
    return coefficient * (Fraction(f.base) ** -k) / denominator


def canonical_terms(f: BBPFormula) -> Tuple[ScalarValue, List[ScalarValue]]:
    """(r0, a_1..a_m) of the equal-valued form with offset 1, start 0, width m and the same r1."""
    m, b = f.period, Fraction(f.base)
    a: List[ScalarValue] = [Fraction(0)] * m
    r0 = f.r0
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        e = f.offset + i
        slot = (e - 1) % m + 1
        shift = (e - slot) // m
        moved = c * b ** shift
        a[slot - 1] = a[slot - 1] + moved
        # blocks before start + shift were never part of the sum
        missing = sum(
            (_block_value(f, moved, k, k * m + slot) for k in range(f.start + shift)),
            Fraction(0),
        )
        r0 = r0 - f.r1 * missing
    return realify(r0), [realify(v) for v in a]


def canonicalize(f: BBPFormula) -> BBPFormula:
    """Same value, same r1, offset 1, start 0 and one coefficient per residue class."""
    if f.is_canonical_shape:
        return f
    r0, a = canonical_terms(f)
    return rebuild(f, r0=r0, start=0, offset=1, coeffs=a)


@singledispatch
def normalize(f) -> BBPFormula:
    raise DomainError(f"cannot normalize {type(f).__name__}")


@normalize.register
def _(f: BBPFormula) -> BBPFormula:
    """Canonical shape, oriented target, integer coefficients (real formulas) or r1 = 1 (complex)."""
    g = realified(canonicalize(f))
    g = orient(g)
    if g.is_real:
        return integer_scale(g)
    return distribute(g)


def fold_leading(f: BBPFormula, count: int) -> BBPFormula:
    """Move the first `count` blocks into r0 exactly."""
    if count < 0:
        raise DomainError("count must be nonnegative")
    r0 = f.r0
    for k in range(f.start, f.start + count):
        block = sum(
            (_block_value(f, a, k, k * f.period + f.offset + i) for i, a in enumerate(f.coeffs) if a != 0),
            Fraction(0),
        )
        r0 = r0 + f.r1 * block
    return rebuild(f, r0=realify(r0), start=f.start + count)


def block(f: BBPFormula, t: int) -> BBPFormula:
    """Group t consecutive blocks: base b^t, period t*m."""
    if t < 1:
        raise DomainError("block size must be positive")
    g = canonicalize(f)
    if t == 1:
        return g
    b = Fraction(g.base)
    coeffs: List[ScalarValue] = []
    for u in range(t):
        coeffs.extend(realify(a * b ** -u) for a in g.coeffs)
    return rebuild(g, base=g.base ** t, period=g.period * t, coeffs=coeffs)


def dilate(f: BBPFormula, q: int) -> BBPFormula:
    """Rewrite a/(km + l) as q*a/(k*qm + q*l)."""
    if q < 1:
        raise DomainError("dilation factor must be positive")
    g = canonicalize(f)
    if q == 1:
        return g
    coeffs: List[ScalarValue] = [Fraction(0)] * (g.period * q)
    for l, a in enumerate(g.coeffs, start=1):
        coeffs[q * l - 1] = realify(a * q)
    return rebuild(g, period=g.period * q, coeffs=coeffs)


def to_positive_base(f: BBPFormula) -> BBPFormula:
    """Export with base > 0, doubling the period when the base is negative."""
    g = canonicalize(f)
    if g.base > 0:
        return g
    return block(g, 2)


def split_re_im(f: BBPFormula) -> Tuple[BBPFormula, BBPFormula]:
    """Real and imaginary parts of a formula for log s, each tagged and oriented."""
    if f.target.kind != TagKind.LOG_OF:
        raise UnsupportedPointError("split needs a formula whose target is log_of(s)")
    s = GaussianRational.coerce(f.target.argument)
    g = distribute(f)
    parts = []
    for index, tag in ((0, real_part_tag(s)), (1, imaginary_part_tag(s))):
        part = rebuild(
            g,
            target=tag,
            r0=gaussian_parts(g.r0)[index],
            r1=Fraction(1),
            coeffs=[gaussian_parts(a)[index] for a in g.coeffs],
        )
        parts.append(orient(part))
    return parts[0], parts[1]


def split_result(f: BBPFormula) -> SplitResult:
    real, imaginary = split_re_im(f)
    return SplitResult(real=real, imaginary=imaginary)


def _root_and_exponent(b: int) -> Tuple[int, int]:
    found = perfect_power(abs(b))
    if found:
        return int(found[0]), int(found[1])
    return abs(b), 1


def common_base(bases: Sequence[int]) -> Tuple[int, List[int]]:
    """Common base B and block sizes t_i with bases[i]^t_i = B."""
    if all(abs(b) == 1 for b in bases):
        if len(set(bases)) == 1:
            return bases[0], [1] * len(bases)
        return 1, [1 if b == 1 else 2 for b in bases]
    if any(abs(b) == 1 for b in bases):
        raise CombineError("unit-modulus bases cannot be combined with growing bases")
    decomposed = [_root_and_exponent(b) for b in bases]
    roots = {root for root, _ in decomposed}
    if len(roots) != 1:
        raise CombineError(f"bases {list(bases)} are not powers of a common integer")
    root = roots.pop()
    exponent = 1
    for _, e in decomposed:
        exponent = exponent * e // math.gcd(exponent, e)
    sizes = [exponent // e for _, e in decomposed]
    signs = {1 if b > 0 or t % 2 == 0 else -1 for b, t in zip(bases, sizes)}
    if len(signs) > 1:
        exponent *= 2
        sizes = [exponent // e for _, e in decomposed]
        signs = {1}
    return signs.pop() * root ** exponent, sizes


def combine(
    terms: Sequence[Tuple[Union[Fraction, int], BBPFormula]],
    max_period: Optional[int] = None,
) -> BBPFormula:
    """Exact linear combination over a common base and the lcm period."""
    if not terms:
        raise CombineError("nothing to combine")
    if max_period is None:
        max_period = get_settings().BBP_MAX_PERIOD
    operands = [distribute(canonicalize(f)) for _, f in terms]
    base, sizes = common_base([f.base for f in operands])
    period = 1
    for f, t in zip(operands, sizes):
        p = f.period * t
        period = period * p // math.gcd(period, p)
    if period > max_period:
        raise CombineError(f"combined period {period} exceeds the limit {max_period}")
    logger.debug("combining %d formulas over base %d, period %d", len(terms), base, period)
    r0: ScalarValue = Fraction(0)
    coeffs: List[ScalarValue] = [Fraction(0)] * period
    for (c, _), f, t in zip(terms, operands, sizes):
        g = dilate(block(f, t), period // (f.period * t))
        c = Fraction(c)
        r0 = r0 + c * g.r0
        coeffs = [acc + c * a for acc, a in zip(coeffs, g.coeffs)]
    target = linear_tag((Fraction(c), f.target) for c, f in terms)
    return BBPFormula(
        target=target,
        r0=realify(r0),
        r1=Fraction(1),
        base=base,
        period=period,
        start=0,
        offset=1,
        coeffs=tuple(realify(a) for a in coeffs),
    )


def product_form(f: BBPFormula) -> ProductForm:
    """Read a partial-fraction formula as r0 + factor * sum ratio^j / (j (j+1) ... (j+n-1))."""
    from bbpkit.formulas.series import partial_fractions

    if not f.is_real or f.period != 1 or f.offset != 0 or f.start != 1:
        raise DomainError("product form needs a real partial-fraction formula (period 1, offset 0, start 1)")
    n = f.width
    c = partial_fractions(n)
    scale = f.coeffs[0] / c[0]
    if any(a != scale * cl for a, cl in zip(f.coeffs, c)):
        raise DomainError("coefficients are not proportional to the partial fractions of 1/C(j+n, n)")
    factor = f.r1 * scale * math.factorial(n)
    alternating = f.base < 0
    if alternating:
        factor = -factor
    return ProductForm(
        r0=f.r0,
        factor=factor,
        ratio=Fraction(1, abs(f.base)),
        alternating=alternating,
        order=n,
    )


def efficiency(f: BBPFormula) -> EfficiencyScore:
    """Nonzero coefficients divided by log2 |base|."""
    b = abs(f.base)
    if b < 2:
        raise DomainError("efficiency needs |base| >= 2")
    nonzero = canonicalize(f).nonzero_count
    w = b.bit_length() - 1
    if 1 << w == b:
        exact = Fraction(nonzero, w)
        return EfficiencyScore(nonzero=nonzero, base=b, exact=exact, value=float(exact))
    return EfficiencyScore(nonzero=nonzero, base=b, value=nonzero / math.log2(b))
