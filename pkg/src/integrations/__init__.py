"""
Input sources for deskcalc
"""

from .csv_source import GroupedCsvSource, read_samples

__all__ = ["GroupedCsvSource", "read_samples"]
