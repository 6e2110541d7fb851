"""
Schema definitions for the Newton-Maclaurin lab.

Pydantic models that validate the JSON input documents of every command.
Rationals travel as text tokens ("-10/9", "3") or plain integers; floats
are refused so every verdict stays exact.
"""

from enum import Enum
from fractions import Fraction
from typing import Annotated, List, Optional

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    field_validator,
    model_validator,
)

from .arith import as_rational, format_rational
from .rng import MASK64


def _coerce_rational(value: object) -> Fraction:
    """Accept a Fraction, an int or a rational token; anything else is an error naming the value."""
    if isinstance(value, (Fraction, int, str)) and not isinstance(value, bool):
        return as_rational(value)
    raise ValueError(f"not a rational: {value!r}")


RationalField = Annotated[
    Fraction,
    BeforeValidator(_coerce_rational),
    PlainSerializer(format_rational, return_type=str),
]


class GapForm(str, Enum):
    """Which Newton-type gap a search or sweep evaluates."""
    S = "S"
    Q = "Q"


class LabModel(BaseModel):
    """Base for input documents: unknown keys are ignored."""
    model_config = ConfigDict(arbitrary_types_allowed=True, extra="ignore")


class VectorQuery(LabModel):
    x: List[RationalField] = Field(min_length=1)
    k: Optional[int] = None


class CombinationQuery(LabModel):
    x: List[RationalField] = Field(min_length=1)
    alpha: List[RationalField] = Field(min_length=1)
    k: int


class ChainQuery(LabModel):
    x: List[RationalField] = Field(min_length=1)
    alpha: List[RationalField] = Field(min_length=1)
    l: int
    k: int


class AlphaQuery(LabModel):
    alpha: List[RationalField] = Field(min_length=1)
    width: Optional[RationalField] = None


class MeansQuery(LabModel):
    """Symmetric means E_1..E_n of a hypothetical real vector."""
    E: List[RationalField] = Field(min_length=1)
    alpha: List[RationalField] = Field(min_length=1)
    k: int


class ConstructQuery(LabModel):
    x: List[RationalField] = Field(min_length=1)
    b: RationalField = Fraction(0)
    width: Optional[RationalField] = None


class AugmentQuery(LabModel):
    x: List[RationalField] = Field(default_factory=list)
    beta: List[RationalField] = Field(default_factory=list)


class LagrangianQuery(LabModel):
    n: int


class ThetaQuery(LabModel):
    n: int
    s: int = 0
    k: int


class SweepQuery(LabModel):
    alpha: List[RationalField] = Field(min_length=1)
    k: int
    grid: List[List[RationalField]] = Field(default_factory=list)
    form: GapForm = GapForm.Q


class SearchConfig(LabModel):
    """Instance space and budget of a randomized counterexample search."""
    alpha: List[RationalField] = Field(min_length=1)
    k: int = Field(ge=1)
    n: int = Field(ge=2)
    samples: int = Field(default=10000, ge=1)
    numerator_bound: int = Field(default=12, ge=1)
    denominator_bound: int = Field(default=12, ge=1)
    seed: int = Field(ge=-(1 << 63), le=MASK64)
    target: GapForm = GapForm.Q

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v: int) -> int:
        """Read negative seeds as signed 64-bit values: -1 is 2^64 - 1."""
        return v & MASK64

    @model_validator(mode="after")
    def validate_index_range(self) -> "SearchConfig":
        """Validate that k leaves room for S_{k+1} or Q_{k+1}."""
        if self.target == GapForm.S and self.n < self.k + 1:
            raise ValueError(f"the S-form needs n >= k + 1, got n = {self.n}, k = {self.k}")
        if self.target == GapForm.Q and self.k > self.n + len(self.alpha) - 1:
            raise ValueError(f"the Q-form needs k <= n + s - 1, got k = {self.k}")
        return self
