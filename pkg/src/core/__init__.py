"""
Core module for deskcalc
Contains configuration and the shared error hierarchy
"""

from .config import settings, Settings, OutputFormat, get_settings
from .errors import (
    DeskCalcError,
    UsageError,
    ExpressionSyntaxError,
    UnknownIdentifierError,
    UnknownFunctionError,
    InputDataError,
    DomainError,
    NumericalError,
    EXIT_SUCCESS,
    EXIT_NOT_CONVERGED,
)

__all__ = [
    "settings",
    "Settings",
    "OutputFormat",
    "get_settings",
    "DeskCalcError",
    "UsageError",
    "ExpressionSyntaxError",
    "UnknownIdentifierError",
    "UnknownFunctionError",
    "InputDataError",
    "DomainError",
    "NumericalError",
    "EXIT_SUCCESS",
    "EXIT_NOT_CONVERGED",
]
