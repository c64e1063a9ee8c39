"""Canonical forms for constant tags.

A tag is expanded into a rational combination of atoms: 1, pi, log p for
primes p, and arg(a+bi) for the split Gaussian prime over p = 1 mod 4 with
a > b > 0. Logs of non-real points stay opaque. Two tags name the same
constant exactly when their atom maps agree, so null formulas and
factorization identities such as 2 arg(2+i) - arg(7+i) = pi/4 become
structural.
"""

import logging
import math
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple, Union

from sympy.ntheory import factorint

from bbpkit.arith import GaussianRational
from bbpkit.arith.gaussian import factor_gaussian_integer, gaussian_prime
from bbpkit.exceptions import UnsupportedPointError, UnsupportedTagError
from bbpkit.models import ConstantTag, TagKind

logger = logging.getLogger(__name__)

AtomKey = Tuple
Atoms = Dict[AtomKey, Fraction]

ONE_ATOM: AtomKey = ("rational",)
PI_ATOM: AtomKey = ("pi",)


def log_atom(p: int) -> AtomKey:
    return ("log_of", 0, p)


def arg_atom(p: int) -> AtomKey:
    return ("arg_of", 0, p)


def _opaque_log_atom(z: GaussianRational) -> AtomKey:
    return ("log_of", 1, z.re, z.im)


def _accumulate(into: Atoms, key: AtomKey, c: Fraction) -> None:
    total = into.get(key, Fraction(0)) + c
    if total:
        into[key] = total
    else:
        into.pop(key, None)


def _log_atoms(q: Fraction) -> Atoms:
    out: Atoms = {}
    for p, e in factorint(q.numerator).items():
        _accumulate(out, log_atom(p), Fraction(e))
    for p, e in factorint(q.denominator).items():
        _accumulate(out, log_atom(p), Fraction(-e))
    return out


def arg_atoms(z: GaussianRational) -> Atoms:
    """Principal argument of z as pi/4 multiples plus Gaussian-prime arguments."""
    if z.is_zero:
        raise UnsupportedPointError("arg(0) is undefined")
    scale = z.re.denominator * z.im.denominator // math.gcd(z.re.denominator, z.im.denominator)
    a, b = int(z.re * scale), int(z.im * scale)
    unit, two_power, split = factor_gaussian_integer(a, b)
    out: Atoms = {}
    pi_coeff = Fraction(unit, 2) + Fraction(two_power, 4)
    approx = float(pi_coeff) * math.pi
    for p, (e, f) in split.items():
        if e != f:
            x, y = gaussian_prime(p)
            _accumulate(out, arg_atom(p), Fraction(e - f))
            approx += (e - f) * math.atan2(y, x)
    # shift onto the principal branch (-pi, pi]
    turns = round((math.atan2(b, a) - approx) / (2 * math.pi))
    pi_coeff += 2 * turns
    _accumulate(out, PI_ATOM, pi_coeff)
    logger.debug("arg(%s) -> %s", z, out)
    return out


def atoms(tag: ConstantTag) -> Atoms:
    """Expand a tag into its atom coefficients."""
    kind = tag.kind
    if kind == TagKind.ZERO:
        return {}
    if kind == TagKind.RATIONAL:
        return {ONE_ATOM: Fraction(tag.value)} if tag.value else {}
    if kind == TagKind.PI:
        return {PI_ATOM: Fraction(1)}
    if kind == TagKind.LOG_OF:
        z = GaussianRational.coerce(tag.argument)
        if z.is_real:
            return _log_atoms(z.re)
        return {_opaque_log_atom(z): Fraction(1)}
    if kind == TagKind.ARG_OF:
        return arg_atoms(GaussianRational.coerce(tag.argument))
    if kind == TagKind.LINEAR:
        out: Atoms = {}
        for term in tag.terms:
            for key, c in atoms(term.tag).items():
                _accumulate(out, key, term.coefficient * c)
        return out
    raise UnsupportedTagError(f"unknown tag kind {kind}")


def atom_tag(key: AtomKey) -> ConstantTag:
    if key == ONE_ATOM:
        return ConstantTag.rational(1)
    if key == PI_ATOM:
        return ConstantTag.pi()
    if key[0] == "log_of" and key[1] == 0:
        return ConstantTag.log_of(Fraction(key[2]))
    if key[0] == "log_of":
        return ConstantTag.log_of(GaussianRational.of(key[2], key[3]))
    if key[0] == "arg_of":
        a, b = gaussian_prime(key[2])
        return ConstantTag.arg_of(GaussianRational.of(a, b))
    raise UnsupportedTagError(f"unknown atom {key}")


def from_atoms(expansion: Atoms) -> ConstantTag:
    """Canonical tag for an atom map."""
    items = sorted((k, c) for k, c in expansion.items() if c)
    if not items:
        return ConstantTag.zero()
    if len(items) == 1:
        key, c = items[0]
        if key == ONE_ATOM:
            return ConstantTag.rational(c)
        if c == 1:
            return atom_tag(key)
    return ConstantTag.linear((c, atom_tag(k)) for k, c in items)


def canonical(tag: ConstantTag) -> ConstantTag:
    return from_atoms(atoms(tag))


def same_constant(a: ConstantTag, b: ConstantTag) -> bool:
    return atoms(a) == atoms(b)


def linear_tag(terms: Iterable[Tuple[Union[Fraction, int], ConstantTag]]) -> ConstantTag:
    """Canonical tag of sum c_i * tag_i."""
    out: Atoms = {}
    for c, tag in terms:
        for key, v in atoms(tag).items():
            _accumulate(out, key, Fraction(c) * v)
    return from_atoms(out)


def scale_tag(tag: ConstantTag, c: Fraction) -> ConstantTag:
    return linear_tag([(c, tag)])


def orientation(tag: ConstantTag) -> Optional[Tuple[Fraction, ConstantTag]]:
    """(c, T) when tag is c*T for a single transcendental atom T and c != 1."""
    expansion = atoms(tag)
    if len(expansion) != 1:
        return None
    (key, c), = expansion.items()
    if key == ONE_ATOM or c == 1:
        return None
    return c, atom_tag(key)


def real_part_tag(s: GaussianRational) -> ConstantTag:
    """Re log s = (1/2) log |s|^2."""
    return linear_tag([(Fraction(1, 2), ConstantTag.log_of(s.norm()))])


def imaginary_part_tag(s: GaussianRational) -> ConstantTag:
    """Im log s = arg s on the principal branch."""
    if s.is_real:
        if s.re > 0:
            return ConstantTag.zero()
        return ConstantTag.pi()
    return from_atoms(arg_atoms(s))
