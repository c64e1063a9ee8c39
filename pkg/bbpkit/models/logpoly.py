from pydantic import BaseModel, ConfigDict, PlainSerializer, field_validator
from typing import Annotated, List

from bbpkit.arith import Poly

SerializedPoly = Annotated[Poly, PlainSerializer(lambda p: p.to_strings(), return_type=List[str])]


class LogPolyPair(BaseModel):
    """I_n(s) = A_n(s) log s + B_n(s), kept as the coefficient pair."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    a_part: SerializedPoly
    b_part: SerializedPoly

    @field_validator("n")
    @classmethod
    def positive_order(cls, v: int) -> int:
        if v < 1:
            raise ValueError("order must be positive")
        return v
