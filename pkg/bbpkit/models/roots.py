from typing import List

import mpmath
from pydantic import BaseModel, ConfigDict, model_validator

from bbpkit.arith import Rational


class RationalInterval(BaseModel):
    """Isolating interval of a real root."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lower: Rational
    upper: Rational

    @property
    def width(self):
        return self.upper - self.lower


class CertifiedRoot(BaseModel):
    """Decimal approximation of a root with a disk radius that is guaranteed to contain it."""
    model_config = ConfigDict(frozen=True)

    real: str
    imag: str
    radius: str

    def shifted(self, delta: int) -> "CertifiedRoot":
        with mpmath.workdps(len(self.real) + 5):
            real = mpmath.nstr(mpmath.mpf(self.real) + delta, len(self.real))
        return CertifiedRoot(real=real, imag=self.imag, radius=self.radius)


class RootReport(BaseModel):
    """Location of the roots of C_n."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    real_root_count: int
    real_roots: List[RationalInterval]
    complex_roots: List[CertifiedRoot]
    half_plane_ok: bool
    unit_disk_ok: bool
    tolerance: float
    precision_bits: int

    @model_validator(mode="after")
    def count_matches(self) -> "RootReport":
        if self.real_root_count != len(self.real_roots):
            raise ValueError("real_root_count must equal the number of isolating intervals")
        return self

    def b_roots(self) -> List[CertifiedRoot]:
        """Non-real roots of B_n, via s = x + 1; B_n also vanishes at s = 1."""
        return [root.shifted(1) for root in self.complex_roots]
