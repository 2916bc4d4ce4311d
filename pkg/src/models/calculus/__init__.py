"""
Calculus models: Goal Seek, extremum search, tabulation, Riemann sums
"""
from .goal_seek import GoalSeeker, find_extremum, goal_seek, numeric_derivative, scan_extrema
from .riemann import riemann_sum, sample_points
from .tabulation import grid, tabulate

__all__ = [
    "GoalSeeker",
    "find_extremum",
    "goal_seek",
    "numeric_derivative",
    "scan_extrema",
    "riemann_sum",
    "sample_points",
    "grid",
    "tabulate",
]
