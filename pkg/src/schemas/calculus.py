"""
Goal Seek, extremum, tabulation and Riemann-sum schemas
"""
from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional, Tuple
from enum import Enum


class ExtremumKind(str, Enum):
    """Classification of a stationary point"""
    MINIMUM = "minimum"
    MAXIMUM = "maximum"
    INCONCLUSIVE = "inconclusive"


class RiemannRule(str, Enum):
    """Where each subinterval is sampled"""
    LEFT = "left"
    RIGHT = "right"
    MIDPOINT = "midpoint"


class GoalSeekResult(BaseModel):
    """Outcome of a Goal Seek run"""
    model_config = ConfigDict(frozen=True)

    x: float = Field(..., description="Solution estimate (last iterate)")
    residual: float = Field(..., description="f(x) - target")
    iterations: int = Field(..., ge=0, description="Steps taken")
    converged: bool = Field(..., description="|residual| <= tolerance")
    tolerance: float = Field(..., gt=0, description="Tolerance used")
    target: float = Field(0.0, description="Value sought")
    history: List[Tuple[float, float]] = Field(
        default_factory=list,
        description="(x, f(x)) for the start value and every iterate"
    )


class ExtremumReport(BaseModel):
    """Stationary point of f and its classification"""
    model_config = ConfigDict(frozen=True)

    x: float = Field(..., description="Stationary point")
    fx: float = Field(..., description="f(x)")
    kind: ExtremumKind = Field(..., description="minimum, maximum or inconclusive")
    second_derivative: float = Field(..., description="f''(x)")
    converged: bool = Field(True, description="Whether the Goal Seek on f' converged")
    iterations: int = Field(0, ge=0, description="Goal Seek iterations on f'")


class RiemannRow(BaseModel):
    """One subinterval of a Riemann sum"""
    model_config = ConfigDict(frozen=True)

    x_i: float
    delta_x: float
    fx_i: float
    product: float


class RiemannResult(BaseModel):
    """Riemann sum laid out row by row"""
    model_config = ConfigDict(frozen=True)

    rows: List[RiemannRow]
    total: float
    rule: RiemannRule
    n: int = Field(..., ge=1)
    a: float
    b: float


class TableRow(BaseModel):
    """One tabulated point; y is None where f is undefined"""
    model_config = ConfigDict(frozen=True)

    x: float
    y: Optional[float] = None
    error: Optional[str] = Field(None, description="Domain error message when y is undefined")

    @property
    def defined(self) -> bool:
        return self.y is not None


class FunctionTable(BaseModel):
    """Function values on an evenly spaced grid"""
    model_config = ConfigDict(frozen=True)

    rows: List[TableRow]
    step: float = Field(..., gt=0)
