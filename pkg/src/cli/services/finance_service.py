"""
Compound-interest schedule command
"""
import logging
from typing import Dict, Optional

from ...core.config import OutputFormat
from ...models.finance import compound_schedule
from .. import formatting
from .output import CommandOutput

logger = logging.getLogger(__name__)


class FinanceService:
    """Savings-account schedules"""

    def interest(self, principal: float, annual_rate: float, periods_per_year: int, num_periods: int,
                 start: Optional[str] = None,
                 deposits: Optional[Dict[int, float]] = None,
                 output_format: OutputFormat = OutputFormat.TABLE) -> CommandOutput:
        schedule = compound_schedule(principal, annual_rate, periods_per_year, num_periods, start, deposits)
        if output_format == OutputFormat.CSV:
            return CommandOutput(formatting.interest_csv(schedule))
        return CommandOutput(formatting.interest_table(schedule))
