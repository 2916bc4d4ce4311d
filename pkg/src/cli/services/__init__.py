"""
Command services for the deskcalc command line
"""
from .calculus_service import CalculusService
from .finance_service import FinanceService
from .output import CommandOutput
from .stats_service import StatisticsService

__all__ = ["CalculusService", "FinanceService", "CommandOutput", "StatisticsService"]
