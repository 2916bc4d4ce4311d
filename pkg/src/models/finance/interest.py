"""
Compound-interest schedules

Balances are carried at full precision; rounding to cents is a display
concern handled by the formatters.
"""
import logging
from datetime import date
from typing import Dict, List, Optional, Union

import pandas as pd

from ...core.errors import UsageError
from ...schemas.finance import InterestSchedule, ScheduleRow

logger = logging.getLogger(__name__)

DateLike = Union[date, str, pd.Timestamp]


def period_rate(annual_rate: float, periods_per_year: int) -> float:
    """Fractional rate per compounding period, e.g. 4% / 4 = 1%"""
    if int(periods_per_year) != periods_per_year or periods_per_year < 1:
        raise UsageError(f"periods per year must be a positive integer, got {periods_per_year!r}")
    return annual_rate / periods_per_year


def future_value(principal: float, rate: float, num_periods: int) -> float:
    """Closed form principal * (1 + rate)^n"""
    if num_periods < 0:
        raise UsageError(f"number of periods must be non-negative, got {num_periods!r}")
    return principal * (1 + rate) ** num_periods


def period_labels(start: Optional[DateLike], periods_per_year: int, num_periods: int) -> List[str]:
    """
    Labels for periods 0..num_periods

    With a start date, period k is start + k*(12/periods_per_year) calendar
    months, day-of-month clamped to the target month. Frequencies that do not
    divide a year into whole months step by round(365/periods_per_year) days.
    Without a start date labels are P0, P1, ...
    """
    if start is None:
        return [f"P{k}" for k in range(num_periods + 1)]
    try:
        origin = pd.Timestamp(start)
    except (ValueError, TypeError):
        raise UsageError(f"start date must be ISO YYYY-MM-DD, got {start!r}") from None
    if pd.isna(origin):
        raise UsageError(f"start date must be ISO YYYY-MM-DD, got {start!r}")

    labels = []
    for k in range(num_periods + 1):
        if 12 % periods_per_year == 0:
            stamp = origin + pd.DateOffset(months=k * (12 // periods_per_year))
        else:
            stamp = origin + pd.Timedelta(days=k * round(365 / periods_per_year))
        labels.append(stamp.strftime("%Y-%m-%d"))
    return labels


def compound_schedule(principal: float,
                      annual_rate: float,
                      periods_per_year: int,
                      num_periods: int,
                      start_label: Optional[DateLike] = None,
                      extra_deposits: Optional[Dict[int, float]] = None) -> InterestSchedule:
    """
    Build the deposit / interest / balance table of a savings account

    Args:
        principal: Opening deposit, >= 0
        annual_rate: Fractional annual rate (0.04 for 4%)
        periods_per_year: Compounding periods per year
        num_periods: Periods after the opening row, >= 0
        start_label: Date of the opening row; later rows advance by one period each
        extra_deposits: Additional deposit per period index (1..num_periods)

    Returns:
        InterestSchedule with num_periods + 1 rows
    """
    if principal < 0:
        raise UsageError(f"principal must be non-negative, got {principal!r}")
    if int(num_periods) != num_periods or num_periods < 0:
        raise UsageError(f"number of periods must be a non-negative integer, got {num_periods!r}")
    num_periods = int(num_periods)
    rate = period_rate(annual_rate, periods_per_year)
    extra_deposits = dict(extra_deposits or {})
    unknown = sorted(k for k in extra_deposits if not 1 <= k <= num_periods)
    if unknown:
        raise UsageError(f"extra deposits reference unknown periods {unknown}; valid periods are 1..{num_periods}")

    labels = period_labels(start_label, int(periods_per_year), num_periods)
    rows = [ScheduleRow(period=0, label=labels[0], deposit=principal, interest=0.0, balance=principal)]
    balance = principal
    for k in range(1, num_periods + 1):
        interest = balance * rate
        deposit = float(extra_deposits.get(k, 0.0))
        balance = balance + interest + deposit
        rows.append(ScheduleRow(period=k, label=labels[k], deposit=deposit, interest=interest, balance=balance))

    logger.info(f"Compounded {principal} at {rate!r} per period for {num_periods} periods: {balance!r}")
    return InterestSchedule(rows=rows, period_rate=rate)
