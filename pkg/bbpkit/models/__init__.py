from .logpoly import LogPolyPair
from .tags import TagKind, TagTerm, ConstantTag
from .formula import SeriesForm, BBPFormula, ProductForm, SplitResult, EfficiencyScore
from .verify import DIGIT_ALPHABET, IntervalValue, DigitRun, VerificationReport, EgyptianReport
from .roots import RationalInterval, CertifiedRoot, RootReport
from .subgroup import GeneratorPower, Obstruction, SubgroupDecomposition
from .command import (
    Subcommand,
    CommandRequest,
    CommandOutcome,
    CatalogSummary,
    CatalogListing,
    ErrorBody,
    ErrorResponse,
    VerifiedFormula,
)

__all__ = [
    "LogPolyPair",
    "TagKind",
    "TagTerm",
    "ConstantTag",
    "SeriesForm",
    "BBPFormula",
    "ProductForm",
    "SplitResult",
    "EfficiencyScore",
    "DIGIT_ALPHABET",
    "IntervalValue",
    "DigitRun",
    "VerificationReport",
    "EgyptianReport",
    "RationalInterval",
    "CertifiedRoot",
    "RootReport",
    "GeneratorPower",
    "Obstruction",
    "SubgroupDecomposition",
    "Subcommand",
    "CommandRequest",
    "CommandOutcome",
    "CatalogSummary",
    "CatalogListing",
    "ErrorBody",
    "ErrorResponse",
    "VerifiedFormula",
]
