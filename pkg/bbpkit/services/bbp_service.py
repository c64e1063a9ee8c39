import json
import logging
from pathlib import Path
from typing import Union

from bbpkit.config import Settings
from bbpkit.exceptions import (
    DomainError,
    ParseError,
    RegroupError,
    UnknownFormulaError,
    VerificationFailedError,
)
from bbpkit.formulas import (
    catalog,
    catalog_entry,
    catalog_names,
    combine,
    efficiency,
    make_series,
    normalize,
    regroup,
    split_result,
    subgroup_decompose,
    subgroup_formula,
)
from bbpkit.formulas.catalog import CATALOG
from bbpkit.formulas.derivations import derive_bbp_null16, derive_null64
from bbpkit.models import (
    BBPFormula,
    CatalogListing,
    CatalogSummary,
    DigitRun,
    EfficiencyScore,
    RootReport,
    SeriesForm,
    SplitResult,
    SubgroupDecomposition,
    VerificationReport,
    VerifiedFormula,
)
from bbpkit.models.command import (
    CatalogParams,
    CombineParams,
    DigitsParams,
    EfficiencyParams,
    GenParams,
    NullParams,
    RegroupParams,
    RootsParams,
    SplitParams,
    SubgroupParams,
    VerifyParams,
)
from bbpkit.roots import half_plane_check
from bbpkit.verify import digit_extract, verify_formula

logger = logging.getLogger(__name__)


class BBPService:
    """Orchestrates the engine operations behind each command."""

    def __init__(self, settings: Settings):
        self.settings = settings

    def _bits(self, bits: Union[int, None]) -> int:
        return self.settings.BBP_PRECISION_BITS if bits is None else bits

    def _load(self, source: str) -> BBPFormula:
        """A catalog name, or a path to a formula JSON file."""
        if source in CATALOG:
            return catalog(source)
        path = Path(source)
        if not path.is_file():
            raise UnknownFormulaError(source, CATALOG)
        try:
            return BBPFormula.model_validate(json.loads(path.read_text()))
        except (ValueError, OSError) as exc:
            raise ParseError(f"cannot read a formula from {source}: {exc}") from exc

    def gen(self, params: GenParams) -> Union[BBPFormula, SeriesForm]:
        """Regrouped formula, else the partial-fraction form, else the raw series."""
        series = make_series(params.n, params.s)
        if params.regroup is not None:
            return regroup(series, params.regroup, base=params.base)
        try:
            return normalize(series)
        except RegroupError as exc:
            logger.info("no partial-fraction form at s = %s: %s", params.s, exc)
            return series

    def _checked(self, report: VerificationReport) -> VerificationReport:
        if not report.verified:
            raise VerificationFailedError(
                f"{report.name or 'formula'} does not match its target at {report.bits} bits",
                details=report.model_dump(mode="json"),
            )
        return report

    def regroup(self, params: RegroupParams) -> BBPFormula:
        return regroup(make_series(params.n, params.s), params.m, base=params.base)

    def split(self, params: SplitParams) -> SplitResult:
        if params.input is not None:
            return split_result(self._load(params.input))
        if params.n is None or params.s is None or params.m is None:
            raise ParseError("split needs --input, or --n, --s and --m")
        return split_result(regroup(make_series(params.n, params.s), params.m, base=params.base))

    def combine(self, params: CombineParams) -> BBPFormula:
        terms = [(c, self._load(name)) for c, name in params.terms]
        return combine(terms, max_period=self.settings.BBP_MAX_PERIOD)

    def catalog(self, params: CatalogParams) -> Union[CatalogListing, BBPFormula, VerifiedFormula]:
        if params.name is None:
            return CatalogListing(
                entries=[
                    CatalogSummary(name=name, description=catalog_entry(name).description)
                    for name in catalog_names()
                ]
            )
        formula = catalog(params.name)
        if not params.verify:
            return formula
        report = self._checked(verify_formula(formula, self._bits(params.bits), name=params.name))
        return VerifiedFormula(**dict(formula), verified=report.verified, verification=report)

    def verify(self, params: VerifyParams) -> VerificationReport:
        report = verify_formula(self._load(params.name), self._bits(params.bits), name=params.name)
        return self._checked(report)

    def digits(self, params: DigitsParams) -> DigitRun:
        return digit_extract(
            self._load(params.name),
            params.pos,
            params.count,
            digit_base=params.base,
            guard_bits=self.settings.BBP_DIGIT_GUARD_BITS,
            retries=self.settings.BBP_DIGIT_RETRIES,
        )

    def null(self, params: NullParams) -> BBPFormula:
        if params.derive == "bbp16":
            return derive_bbp_null16()
        return derive_null64()

    def roots(self, params: RootsParams) -> RootReport:
        tol = self.settings.BBP_ROOT_TOL if params.tol is None else params.tol
        return half_plane_check(params.n, tol)

    def efficiency(self, params: EfficiencyParams) -> EfficiencyScore:
        return efficiency(self._load(params.name))

    def subgroup(self, params: SubgroupParams) -> SubgroupDecomposition:
        decomposition = subgroup_decompose(params.k, params.nmax)
        if not params.formula:
            return decomposition
        if not decomposition.success:
            raise DomainError(f"{params.k} is outside the subgroup for N <= {params.nmax}")
        formula = subgroup_formula(decomposition, max_period=self.settings.BBP_MAX_PERIOD)
        logger.debug("built a base-%d formula for log %d", formula.base, params.k)
        return decomposition.model_copy(update={"formula": formula})
