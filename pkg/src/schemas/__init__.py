"""
Structured result types returned by the models
"""
from .calculus import (
    ExtremumKind,
    ExtremumReport,
    FunctionTable,
    GoalSeekResult,
    RiemannResult,
    RiemannRow,
    RiemannRule,
    TableRow,
)
from .finance import InterestSchedule, ScheduleRow
from .stats import AnovaResult, FiveNumberSummary, Sample, SummaryStats, WelchTTestResult
from .charts import BoxPlotSpec, CommandSpec

__all__ = [
    "ExtremumKind",
    "ExtremumReport",
    "FunctionTable",
    "GoalSeekResult",
    "RiemannResult",
    "RiemannRow",
    "RiemannRule",
    "TableRow",
    "InterestSchedule",
    "ScheduleRow",
    "AnovaResult",
    "FiveNumberSummary",
    "Sample",
    "SummaryStats",
    "WelchTTestResult",
    "BoxPlotSpec",
    "CommandSpec",
]
