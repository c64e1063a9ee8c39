"""Human-readable rendering in summation notation."""

from fractions import Fraction
from typing import List, Union

from bbpkit.arith import GaussianRational, format_gaussian, format_rational
from bbpkit.models import BBPFormula, ConstantTag, ProductForm, TagKind


def _scalar(value: Union[Fraction, GaussianRational]) -> str:
    if isinstance(value, GaussianRational):
        if value.is_real:
            return format_rational(value.re)
        return f"({format_gaussian(value)})"
    return format_rational(Fraction(value))


def _argument(value) -> str:
    text = _scalar(value)
    if text.isdigit():
        return f" {text}"
    return text if text.startswith("(") else f"({text})"


def render_tag(tag: ConstantTag) -> str:
    kind = tag.kind
    if kind == TagKind.ZERO:
        return "0"
    if kind == TagKind.PI:
        return "π"
    if kind == TagKind.RATIONAL:
        return format_rational(tag.value)
    if kind == TagKind.LOG_OF:
        return f"log{_argument(tag.argument)}"
    if kind == TagKind.ARG_OF:
        return f"arg({format_gaussian(GaussianRational.coerce(tag.argument))})"
    pieces: List[str] = []
    for term in tag.terms:
        inner = render_tag(term.tag)
        c = term.coefficient
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        body = inner if magnitude == 1 else f"{format_rational(magnitude)}·{inner}"
        pieces.append(f"{sign} {body}")
    text = " ".join(pieces)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _denominator(period: int, e: int) -> str:
    k = "k" if period == 1 else f"{period}k"
    return k if e == 0 else f"{k}+{e}"


def _base_factor(base: int) -> str:
    if base == 1:
        return ""
    if base == -1:
        return "(-1)^k "
    text = str(base) if base > 0 else f"({base})"
    return f"{text}^(-k) "


def render_formula(f: BBPFormula) -> str:
    """target = r0 + r1 · Σ_{k≥start} b^(-k) [a/(mk+l) + ...], terms in residue order."""
    terms: List[str] = []
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        text = _scalar(a)
        negative = text.startswith("-")
        magnitude = text[1:] if negative else text
        fraction = f"{magnitude}/({_denominator(f.period, f.offset + i)})"
        if not terms:
            terms.append(f"-{fraction}" if negative else fraction)
        else:
            terms.append(f"{'-' if negative else '+'} {fraction}")
    body = " ".join(terms) if terms else "0"
    series = f"Σ_{{k≥{f.start}}} {_base_factor(f.base)}[{body}]"
    if f.r1 != 1:
        series = f"{_scalar(f.r1)} · {series}"
    if f.r0 != 0:
        series = f"{_scalar(f.r0)} + {series}"
    return f"{render_tag(f.target)} = {series}"


def render_product_form(p: ProductForm) -> str:
    """r0 + factor · Σ_{j≥1} [(-1)^(j+1)] ratio^j / (j(j+1)...(j+n-1))."""
    product = "".join(["j"] + [f"(j+{t})" for t in range(1, p.order)])
    sign = "(-1)^(j+1) " if p.alternating else ""
    ratio = "" if p.ratio == 1 else f"({format_rational(p.ratio)})^j "
    head = "" if p.r0 == 0 else f"{format_rational(p.r0)} + "
    return f"{head}{format_rational(p.factor)} · Σ_{{j≥1}} {sign}{ratio}/ ({product})"
