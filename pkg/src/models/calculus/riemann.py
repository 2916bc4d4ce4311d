"""
Riemann sums over equal-width subintervals
"""
import logging
import math
from typing import Union

import numpy as np

from ...core.errors import UsageError
from ...schemas.calculus import RiemannResult, RiemannRow, RiemannRule
from ..expr import Expr, evaluate

logger = logging.getLogger(__name__)


def sample_points(a: float, b: float, n: int, rule: RiemannRule) -> np.ndarray:
    """Sample x for each of the n subintervals of [a, b]"""
    delta_x = (b - a) / n
    if rule == RiemannRule.LEFT:
        return np.linspace(a, b, n + 1)[:-1]
    if rule == RiemannRule.RIGHT:
        return np.linspace(a, b, n + 1)[1:]
    return a + (np.arange(1, n + 1, dtype=float) - 0.5) * delta_x


def riemann_sum(f: Expr, a: float, b: float, n: int,
                rule: Union[RiemannRule, str] = RiemannRule.RIGHT) -> RiemannResult:
    """
    Approximate the integral of f over [a, b] by a Riemann sum

    Raises:
        UsageError: a >= b, n < 1 or an unknown rule
        DomainError: f undefined at a sample point
    """
    if not a < b:
        raise UsageError(f"interval must satisfy a < b, got [{a!r}, {b!r}]")
    if int(n) != n or n < 1:
        raise UsageError(f"number of subintervals must be a positive integer, got {n!r}")
    try:
        rule = RiemannRule(rule)
    except ValueError:
        raise UsageError(f"unknown rule {rule!r}; expected left, right or midpoint") from None
    n = int(n)

    delta_x = (b - a) / n
    rows = []
    for x in sample_points(a, b, n, rule):
        x = float(x)
        fx = evaluate(f, x)
        rows.append(RiemannRow(x_i=x, delta_x=delta_x, fx_i=fx, product=fx * delta_x))

    total = math.fsum(row.product for row in rows)
    logger.info(f"{rule.value} Riemann sum of {f.render()} over [{a}, {b}] with n={n}: {total!r}")
    return RiemannResult(rows=rows, total=total, rule=rule, n=n, a=a, b=b)
