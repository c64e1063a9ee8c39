from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, field_validator

from bbpkit.arith import GaussianRational, parse_rational
from bbpkit.models.formula import BBPFormula
from bbpkit.models.verify import VerificationReport

GaussianParam = Annotated[GaussianRational, BeforeValidator(GaussianRational.coerce)]


class Subcommand(str, Enum):
    """Command-line verbs."""
    GEN = "gen"
    REGROUP = "regroup"
    SPLIT = "split"
    COMBINE = "combine"
    CATALOG = "catalog"
    VERIFY = "verify"
    DIGITS = "digits"
    NULL = "null"
    ROOTS = "roots"
    EFFICIENCY = "efficiency"
    SUBGROUP = "subgroup"


class CommandRequest(BaseModel):
    """A parsed invocation: the verb plus its raw string parameters."""
    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    parameters: Dict[str, Union[str, List[str]]] = {}
    json_output: bool = False


class CommandOutcome(BaseModel):
    """What a command prints and the status it exits with."""
    exit_code: int
    output: str
    failed: bool = False


class _Params(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class GenParams(_Params):
    n: int = Field(ge=1)
    s: GaussianParam
    regroup: Optional[int] = Field(default=None, ge=1)
    base: Optional[int] = None


class RegroupParams(_Params):
    n: int = Field(ge=1)
    s: GaussianParam
    m: int = Field(ge=1)
    base: Optional[int] = None


class SplitParams(_Params):
    input: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=1)
    s: Optional[GaussianParam] = None
    m: Optional[int] = Field(default=None, ge=1)
    base: Optional[int] = None


class CombineParams(_Params):
    terms: List[Tuple[Fraction, str]]

    model_config = ConfigDict(extra="forbid", frozen=True, arbitrary_types_allowed=True)

    @field_validator("terms", mode="before")
    @classmethod
    def split_terms(cls, v):
        """Read coeff:name items, as a list or one space-separated string, into pairs."""
        if isinstance(v, str):
            v = v.split()
        if not all(isinstance(item, str) for item in v):
            return v
        pairs = []
        for item in v:
            coeff, sep, name = item.partition(":")
            if not sep or not name:
                raise ValueError(f"term {item!r} is not of the form coeff:name")
            pairs.append((parse_rational(coeff), name))
        if not pairs:
            raise ValueError("combine needs at least one term")
        return pairs


class CatalogParams(_Params):
    name: Optional[str] = None
    verify: bool = False
    bits: Optional[int] = Field(default=None, ge=1)


class VerifyParams(_Params):
    name: str
    bits: Optional[int] = Field(default=None, ge=1)


class DigitsParams(_Params):
    name: str
    pos: int = Field(ge=0)
    count: int = Field(ge=0)
    base: int = 16

    @field_validator("base")
    @classmethod
    def supported_base(cls, v: int) -> int:
        if v not in (2, 16):
            raise ValueError("digit base must be 2 or 16")
        return v


class NullParams(_Params):
    derive: Literal["bbp16", "base64"]


class RootsParams(_Params):
    n: int = Field(ge=3)
    tol: Optional[float] = Field(default=None, gt=0, lt=1)


class EfficiencyParams(_Params):
    name: str


class SubgroupParams(_Params):
    k: int = Field(ge=2)
    nmax: int = Field(ge=1, le=64)
    formula: bool = False


PARAMS_BY_SUBCOMMAND = {
    Subcommand.GEN: GenParams,
    Subcommand.REGROUP: RegroupParams,
    Subcommand.SPLIT: SplitParams,
    Subcommand.COMBINE: CombineParams,
    Subcommand.CATALOG: CatalogParams,
    Subcommand.VERIFY: VerifyParams,
    Subcommand.DIGITS: DigitsParams,
    Subcommand.NULL: NullParams,
    Subcommand.ROOTS: RootsParams,
    Subcommand.EFFICIENCY: EfficiencyParams,
    Subcommand.SUBGROUP: SubgroupParams,
}


class CatalogSummary(BaseModel):
    name: str
    description: str


class CatalogListing(BaseModel):
    entries: List[CatalogSummary]


class ErrorBody(BaseModel):
    code: str
    message: str
    exit_code: int
    details: Optional[Dict[str, Any]] = None


class ErrorResponse(BaseModel):
    error: ErrorBody


class VerifiedFormula(BBPFormula):
    """A catalog formula together with its verification outcome."""

    verified: bool
    verification: VerificationReport
