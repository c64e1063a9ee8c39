"""Dense polynomials over the rationals.

Coefficients are stored lowest degree first with trailing zeros stripped, so the
zero polynomial is the empty tuple and equality is structural.
"""

from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple, Union

import mpmath

from bbpkit.arith.rational import format_rational, rational_content

Coefficient = Union[Fraction, int]


def _normalize(coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Immutable polynomial with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        self._coeffs = _normalize([Fraction(c) for c in coeffs])

    @classmethod
    def constant(cls, c: Coefficient) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, c: Coefficient, k: int) -> "Poly":
        """c * x**k"""
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if power and abs(c) == 1:
                body = power
            else:
                body = format_rational(abs(c)) + (f"*{power}" if power else "")
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # Ring operations

    def _lift(self, other: Any) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other)
        return None

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self._coeffs])

    def __add__(self, other: Any) -> "Poly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Poly(res)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Poly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "Poly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "Poly":
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly()
        res = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                res[i + j] += x * y
        return Poly(res)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(1)
        square = self
        while k:
            if k & 1:
                result = result * square
            k >>= 1
            if k:
                square = square * square
        return result

    def scale(self, c: Coefficient) -> "Poly":
        c = Fraction(c)
        return Poly([c * a for a in self._coeffs])

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        """Exact long division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            q = rem[k + dq] / lead
            quot[k] = q
            if q:
                for j, c in enumerate(other._coeffs):
                    rem[k + j] -= q * c
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def primitive(self) -> "Poly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        g = rational_content(self._coeffs)
        if self.leading < 0:
            g = -g
        return self.scale(1 / g)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self._coeffs)][1:])

    def integral(self) -> "Poly":
        """Antiderivative vanishing at 0."""
        return Poly([0] + [c / (k + 1) for k, c in enumerate(self._coeffs)])

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)) by Horner's rule."""
        result = Poly()
        for c in reversed(self._coeffs):
            result = result * inner + c
        return result

    def shift(self, c: Coefficient) -> "Poly":
        """p(x + c)."""
        return self.compose(Poly([c, 1]))

    def reflect(self) -> "Poly":
        """p(-x)."""
        return Poly([c if k % 2 == 0 else -c for k, c in enumerate(self._coeffs)])

    def __call__(self, x: Any) -> Any:
        """Horner evaluation; x may be a Fraction, GaussianRational, complex or mpmath number."""
        acc: Any = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def to_mpmath(self) -> List[mpmath.mpf]:
        """Coefficients as mpf at the current working precision, lowest degree first."""
        return [mpmath.mpf(c.numerator) / c.denominator for c in self._coeffs]

    def evaluate_mp(self, x: Any) -> Any:
        """Horner evaluation in mpmath arithmetic."""
        acc = mpmath.mpf(0)
        for c in reversed(self.to_mpmath()):
            acc = acc * x + c
        return acc

    def to_strings(self) -> List[str]:
        return [format_rational(c) for c in self._coeffs]
