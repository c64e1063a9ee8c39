from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from bbpkit.arith import Rational
from bbpkit.models.formula import BBPFormula
from bbpkit.models.tags import ConstantTag


class GeneratorPower(BaseModel):
    """exponent * log(generator) in a decomposition."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    generator: int
    label: str
    exponent: Rational


class Obstruction(BaseModel):
    """A prime of k outside the span, with the generators it appears in."""
    model_config = ConfigDict(frozen=True)

    prime: int
    generators: List[str]
    companions: List[int]


class SubgroupDecomposition(BaseModel):
    """Result of writing k through 2 and 2^N +- 1."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int
    n_max: int
    success: bool
    integral: bool = False
    factors: List[GeneratorPower] = []
    tag: Optional[ConstantTag] = None
    obstructions: List[Obstruction] = []
    formula: Optional[BBPFormula] = None
