"""
Function tabulation on an evenly spaced grid
"""
import logging
import math
from typing import Optional

import numpy as np

from ...core.config import get_settings
from ...core.errors import DomainError, UsageError
from ...schemas.calculus import FunctionTable, TableRow
from ..expr import Expr, evaluate

logger = logging.getLogger(__name__)


def grid(x_start: float, x_end: float, step: float, tolerance: Optional[float] = None) -> np.ndarray:
    """
    x_start, x_start + step, ... not beyond x_end

    x_end itself is included when (x_end - x_start) / step is integral
    within the tolerance.
    """
    if not step > 0:
        raise UsageError(f"step must be positive, got {step!r}")
    if not x_start < x_end:
        raise UsageError(f"empty range: {x_start!r} to {x_end!r}")
    if tolerance is None:
        tolerance = get_settings().tabulate_integral_tolerance
    ratio = (x_end - x_start) / step
    count = int(math.floor(ratio + tolerance))
    xs = x_start + step * np.arange(count + 1, dtype=float)
    if abs(ratio - round(ratio)) <= tolerance:
        xs[-1] = x_end
    return xs


def tabulate(f: Expr, x_start: float, x_end: float, step: float) -> FunctionTable:
    """
    Tabulate f; points where f is undefined are recorded, not raised

    Args:
        f: Expression to tabulate
        x_start: First x
        x_end: Last x (inclusive when reached exactly)
        step: Spacing, > 0

    Returns:
        FunctionTable with one row per grid point
    """
    rows = []
    for x in grid(x_start, x_end, step):
        x = float(x)
        try:
            rows.append(TableRow(x=x, y=evaluate(f, x)))
        except DomainError as e:
            logger.debug(f"Undefined at x={x!r}: {e}")
            rows.append(TableRow(x=x, y=None, error=e.message))
    logger.info(f"Tabulated {f.render()} at {len(rows)} points")
    return FunctionTable(rows=rows, step=step)
