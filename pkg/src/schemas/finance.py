"""
Compound-interest schedule schemas
"""
from pydantic import BaseModel, ConfigDict, Field
from typing import List


class ScheduleRow(BaseModel):
    """One compounding period"""
    model_config = ConfigDict(frozen=True)

    period: int = Field(..., ge=0, description="Period index, 0 for the opening deposit")
    label: str = Field(..., description="ISO date or P<k>")
    deposit: float = Field(0.0, description="Amount deposited this period")
    interest: float = Field(0.0, description="Interest credited this period")
    balance: float = Field(..., description="Balance after interest and deposit")


class InterestSchedule(BaseModel):
    """Balances of a savings account compounded per period"""
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "rows": [
                    {"period": 0, "label": "1994-01-01", "deposit": 100.0, "interest": 0.0, "balance": 100.0},
                    {"period": 1, "label": "1994-04-01", "deposit": 0.0, "interest": 1.0, "balance": 101.0},
                ],
                "period_rate": 0.01,
            }
        },
    )

    rows: List[ScheduleRow]
    period_rate: float = Field(..., description="Fractional interest rate per period")

    @property
    def final_balance(self) -> float:
        return self.rows[-1].balance

    @property
    def total_interest(self) -> float:
        return sum(row.interest for row in self.rows)

    @property
    def total_deposits(self) -> float:
        return sum(row.deposit for row in self.rows)

