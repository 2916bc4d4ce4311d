"""
Descriptive statistics and hypothesis-test schemas
"""
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import List


class Sample(BaseModel):
    """Labelled observations of one group"""
    model_config = ConfigDict(frozen=True)

    values: List[float] = Field(..., description="Observations in input order")
    label: str = Field("", description="Group label")

    @property
    def count(self) -> int:
        return len(self.values)


class SummaryStats(BaseModel):
    """Mean, sample variance and count of a group"""
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"label": "Engineering", "mean": 82.7333, "variance": 238.49, "count": 15}
        },
    )

    mean: float = Field(..., description="Arithmetic mean")
    variance: float = Field(..., ge=0, description="Sample variance, n-1 denominator")
    count: int = Field(..., ge=1, description="Observations")
    label: str = Field("", description="Group label")

    @property
    def sum(self) -> float:
        return self.mean * self.count


class WelchTTestResult(BaseModel):
    """t-Test: Two-Sample Assuming Unequal Variances"""
    model_config = ConfigDict(frozen=True)

    group1: SummaryStats
    group2: SummaryStats
    hypothesized_difference: float = Field(0.0, description="Fixed at 0")
    mean_difference: float
    standard_error: float = Field(..., gt=0)
    df_exact: float = Field(..., gt=0, description="Welch-Satterthwaite degrees of freedom")
    df_displayed: int = Field(..., ge=1, description="Truncated df used for p-values")
    t_stat: float
    p_one_tail: float = Field(..., ge=0, le=1)
    p_two_tail: float = Field(..., ge=0, le=1)
    t_crit_one_tail: float
    t_crit_two_tail: float
    alpha: float = Field(..., gt=0, lt=1)


class AnovaResult(BaseModel):
    """Single factor ANOVA"""
    model_config = ConfigDict(frozen=True)

    groups: List[SummaryStats]
    ss_between: float = Field(..., ge=0)
    ss_within: float = Field(..., ge=0)
    ss_total: float = Field(..., ge=0)
    df_between: int = Field(..., ge=1)
    df_within: int = Field(..., ge=1)
    df_total: int = Field(..., ge=2)
    ms_between: float
    ms_within: float
    f_stat: float = Field(..., ge=0)
    p_value: float = Field(..., ge=0, le=1)
    f_crit: float
    alpha: float = Field(..., gt=0, lt=1)

    @model_validator(mode="after")
    def _check_df(self) -> "AnovaResult":
        if self.df_total != self.df_between + self.df_within:
            raise ValueError("df_total must equal df_between + df_within")
        return self


class FiveNumberSummary(BaseModel):
    """min, q1, median, q3, max under the inclusive quartile method"""
    model_config = ConfigDict(frozen=True)

    min: float
    q1: float
    median: float
    q3: float
    max: float
    label: str = ""

    @model_validator(mode="after")
    def _check_order(self) -> "FiveNumberSummary":
        if not (self.min <= self.q1 <= self.median <= self.q3 <= self.max):
            raise ValueError("five-number summary must be non-decreasing")
        return self

    def table_row(self) -> List[float]:
        """Values in the order q1, min, median, max, q3"""
        return [self.q1, self.min, self.median, self.max, self.q3]
