"""Read-only registry of named formulas.

Each entry stores its coefficients literally and carries the derivation that
regenerates it from the log series.
"""

from fractions import Fraction as F
from functools import partial
from typing import Callable, Dict, List

from pydantic import BaseModel, ConfigDict

from bbpkit.exceptions import DerivationError, UnknownFormulaError
from bbpkit.formulas import derivations as d
from bbpkit.formulas.transforms import normalize
from bbpkit.models import BBPFormula, ConstantTag

LOG2 = ConstantTag.log_of(2)
PI = ConstantTag.pi()
ZERO = ConstantTag.zero()


class CatalogEntry(BaseModel):
    """A stored formula and the derivation that must reproduce it."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    description: str
    formula: BBPFormula
    derive: Callable[[], BBPFormula]


def _partial_fraction_log2(r0, r1, base, coeffs) -> BBPFormula:
    return BBPFormula(
        target=LOG2, r0=r0, r1=r1, base=base, period=1, start=1, offset=0, coeffs=coeffs
    )


def _base16(target, coeffs, r1=1) -> BBPFormula:
    return BBPFormula(target=target, r1=r1, base=16, period=8, coeffs=coeffs)


_ENTRIES: List[CatalogEntry] = [
    CatalogEntry(
        name="bernoulli-log2",
        description="log 2 = sum_{k>=1} 1/(2^k k)",
        formula=_partial_fraction_log2(0, 1, 2, (1,)),
        derive=d.derive_bernoulli_log2,
    ),
    CatalogEntry(
        name="log2-1",
        description="log 2 = 1/2 + 1/2 sum (-1)^(j+1)/(j(j+1))",
        formula=_partial_fraction_log2(F(1, 2), F(1, 2), -1, (-1, 1)),
        derive=partial(d.derive_log2, 2, 2),
    ),
    CatalogEntry(
        name="log2-2",
        description="log 2 = 5/8 + 1/2 sum (-1)^(j+1)/(j(j+1)(j+2))",
        formula=_partial_fraction_log2(F(5, 8), F(1, 4), -1, (-1, 2, -1)),
        derive=partial(d.derive_log2, 3, 2),
    ),
    CatalogEntry(
        name="log2-3",
        description="log 2 = 2/3 + 3/4 sum (-1)^(j+1)/(j...(j+3))",
        formula=_partial_fraction_log2(F(2, 3), F(1, 8), -1, (-1, 3, -3, 1)),
        derive=partial(d.derive_log2, 4, 2),
    ),
    CatalogEntry(
        name="log2-4",
        description="log 2 = 131/192 + 3/2 sum (-1)^(j+1)/(j...(j+4))",
        formula=_partial_fraction_log2(F(131, 192), F(1, 16), -1, (-1, 4, -6, 4, -1)),
        derive=partial(d.derive_log2, 5, 2),
    ),
    CatalogEntry(
        name="log2-5",
        description="log 2 = 661/960 + 15/4 sum (-1)^(j+1)/(j...(j+5))",
        formula=_partial_fraction_log2(F(661, 960), F(1, 32), -1, (-1, 5, -10, 10, -5, 1)),
        derive=partial(d.derive_log2, 6, 2),
    ),
    CatalogEntry(
        name="log2-6",
        description="log 2 = sum 1/(2^j j)",
        formula=_partial_fraction_log2(0, 1, 2, (1,)),
        derive=partial(d.derive_log2, 1, F(1, 2)),
    ),
    CatalogEntry(
        name="log2-7",
        description="log 2 = 1 - sum 1/(2^j j(j+1))",
        formula=_partial_fraction_log2(1, 1, 2, (-1, 1)),
        derive=partial(d.derive_log2, 2, F(1, 2)),
    ),
    CatalogEntry(
        name="log2-8",
        description="log 2 = 1/2 + 2 sum 1/(2^j j(j+1)(j+2))",
        formula=_partial_fraction_log2(F(1, 2), 1, 2, (1, -2, 1)),
        derive=partial(d.derive_log2, 3, F(1, 2)),
    ),
    CatalogEntry(
        name="log2-9",
        description="log 2 = 5/6 - 6 sum 1/(2^j j...(j+3))",
        formula=_partial_fraction_log2(F(5, 6), 1, 2, (-1, 3, -3, 1)),
        derive=partial(d.derive_log2, 4, F(1, 2)),
    ),
    CatalogEntry(
        name="log2-10",
        description="log 2 = 7/12 + 24 sum 1/(2^j j...(j+4))",
        formula=_partial_fraction_log2(F(7, 12), 1, 2, (1, -4, 6, -4, 1)),
        derive=partial(d.derive_log2, 5, F(1, 2)),
    ),
    CatalogEntry(
        name="log2-11",
        description="log 2 = 47/60 - 120 sum 1/(2^j j...(j+5))",
        formula=_partial_fraction_log2(F(47, 60), 1, 2, (-1, 5, -10, 10, -5, 1)),
        derive=partial(d.derive_log2, 6, F(1, 2)),
    ),
    CatalogEntry(
        name="log2-bbp16",
        description="log 2 = 2/3 + 1/4 sum_{k>=1} 16^-k (8/(8k) + 4/(8k+2) + 2/(8k+4) + 1/(8k+6))",
        formula=BBPFormula(
            target=LOG2, r0=F(2, 3), r1=F(1, 4), base=16, period=8, start=1, offset=0,
            coeffs=(8, 0, 4, 0, 2, 0, 1, 0),
        ),
        derive=d.derive_log2_bbp16,
    ),
    CatalogEntry(
        name="machin",
        description="pi = 4 sum (-1)^k/(2k+1)",
        formula=BBPFormula(target=PI, r1=4, base=-1, period=2, coeffs=(1, 0)),
        derive=d.derive_machin,
    ),
    CatalogEntry(
        name="leibniz",
        description="pi = 8/3 + 4 sum_{k>=1} (1/(4k+1) - 1/(4k+3))",
        formula=BBPFormula(
            target=PI, r0=F(8, 3), r1=4, base=1, period=4, start=1, coeffs=(1, 0, -1, 0)
        ),
        derive=d.derive_leibniz,
    ),
    CatalogEntry(
        name="plouffe",
        description="pi = sum 16^-k (4/(8k+1) - 2/(8k+4) - 1/(8k+5) - 1/(8k+6))",
        formula=_base16(PI, (4, 0, 0, -2, -1, -1, 0, 0)),
        derive=d.derive_plouffe,
    ),
    CatalogEntry(
        name="bbp-null-16",
        description="0 = sum 16^-k (-8/(8k+1) + 8/(8k+2) + 4/(8k+3) + 8/(8k+4) + 2/(8k+5) + 2/(8k+6) - 1/(8k+7))",
        formula=_base16(ZERO, (-8, 8, 4, 8, 2, 2, -1, 0)),
        derive=d.derive_bbp_null16,
    ),
    CatalogEntry(
        name="null-64",
        description="0 = sum 2^-6k (16/(6k+1) - 24/(6k+2) - 8/(6k+3) - 6/(6k+4) + 1/(6k+5))",
        formula=BBPFormula(target=ZERO, base=64, period=6, coeffs=(16, -24, -8, -6, 1, 0)),
        derive=d.derive_null64,
    ),
    CatalogEntry(
        name="bellard",
        description="pi = 2^-6 sum (-1)^k 2^-10k (-2^5/(4k+1) - 1/(4k+3) + 2^8/(10k+1) - ...)",
        formula=BBPFormula(
            target=PI, r1=F(1, 64), base=-1024, period=20,
            coeffs=(0, 512, 0, 0, -160, -128, 0, 0, 0, -8, 0, 0, 0, -8, -5, 0, 0, 2, 0, 0),
        ),
        derive=d.derive_bellard,
    ),
    CatalogEntry(
        name="pi-16",
        description="pi = sum 16^-k (2/(8k+1) + 2/(8k+2) + 1/(8k+3) - 1/2/(8k+5) - 1/2/(8k+6) - 1/4/(8k+7))",
        formula=_base16(PI, (2, 2, 1, 0, F(-1, 2), F(-1, 2), F(-1, 4), 0)),
        derive=d.derive_pi16,
    ),
    CatalogEntry(
        name="log2-16",
        description="log 2 = sum 16^-k (1/(8k+1) - 1/2/(8k+3) - 1/2/(8k+4) - 1/4/(8k+5) + 1/8/(8k+7) + 1/8/(8k+8))",
        formula=_base16(LOG2, (1, 0, F(-1, 2), F(-1, 2), F(-1, 4), 0, F(1, 8), F(1, 8))),
        derive=d.derive_log2_16,
    ),
]

CATALOG: Dict[str, CatalogEntry] = {entry.name: entry for entry in _ENTRIES}


def catalog_names() -> List[str]:
    return list(CATALOG)


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownFormulaError(name, CATALOG) from None


def catalog(name: str) -> BBPFormula:
    """The stored formula registered under name."""
    return catalog_entry(name).formula


def regenerate(name: str) -> BBPFormula:
    """Re-derive an entry and require structural agreement with the stored coefficients."""
    entry = catalog_entry(name)
    derived = entry.derive()
    if derived != entry.formula and normalize(derived) != normalize(entry.formula):
        raise DerivationError(f"derivation of '{name}' does not reproduce the stored formula")
    return derived
