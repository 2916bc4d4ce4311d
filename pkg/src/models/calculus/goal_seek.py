"""
Goal Seek: one-dimensional root finding started from a user value

Newton steps on the symbolic derivative, secant steps where the
derivative vanishes or is undefined. A step is taken in full when it
at least halves the residual; otherwise it is limited to 0.5*(1+|x|)
and halved until the residual shrinks. Iteration starts at x0, so the
root found is the one whose basin contains the start value.
"""
import logging
import math
from typing import List, Optional, Tuple

from ...core.config import get_settings
from ...core.errors import DomainError, UsageError
from ...schemas.calculus import ExtremumKind, ExtremumReport, GoalSeekResult
from ..expr import Expr, derivative, evaluate
from .tabulation import tabulate

logger = logging.getLogger(__name__)


class GoalSeeker:
    """
    Solves f(x) = target for x starting from x0
    """

    def __init__(self, f: Expr, target: float = 0.0,
                 tolerance: Optional[float] = None,
                 max_iterations: Optional[int] = None):
        settings = get_settings()
        self.f = f
        self.target = float(target)
        self.tolerance = tolerance if tolerance is not None else settings.goal_seek_tolerance
        self.max_iterations = max_iterations if max_iterations is not None else settings.goal_seek_max_iterations
        self.perturbation = settings.goal_seek_start_perturbation
        self.max_backtracks = settings.goal_seek_max_backtracks
        if self.tolerance <= 0:
            raise UsageError("tolerance must be positive")
        if self.max_iterations < 1:
            raise UsageError("max_iterations must be at least 1")
        self.df = derivative(f)

    def _residual(self, x: float) -> Optional[float]:
        """f(x) - target, or None where f is undefined"""
        if not math.isfinite(x):
            return None
        try:
            value = evaluate(self.f, x) - self.target
        except DomainError:
            return None
        return value if math.isfinite(value) else None

    def _start(self, x0: float) -> Tuple[float, float]:
        for x in (x0, x0 + self.perturbation, x0 - self.perturbation):
            r = self._residual(x)
            if r is not None:
                if x != x0:
                    logger.info(f"f undefined at x0={x0!r}; starting from {x!r}")
                return x, r
        raise DomainError(
            f"cannot start: f is undefined at x0 and at x0 +/- {self.perturbation}",
            self.f.render(),
            x0,
        )

    def _slope(self, x: float, r: float, previous: Optional[Tuple[float, float]]) -> Optional[float]:
        try:
            slope = evaluate(self.df, x)
            if math.isfinite(slope) and slope != 0:
                return slope
        except DomainError:
            pass
        # secant fallback
        if previous is not None:
            px, pr = previous
            if px != x and pr != r:
                logger.debug(f"Secant step from ({px!r}, {x!r})")
                return (r - pr) / (x - px)
        h = self.perturbation * (1 + abs(x))
        for probe in (x + h, x - h):
            rp = self._residual(probe)
            if rp is not None and rp != r:
                logger.debug(f"Secant step through perturbation {probe!r}")
                return (rp - r) / (probe - x)
        return None

    def _step(self, x: float, r: float, step: float) -> Optional[Tuple[float, float]]:
        full = x + step
        r_full = self._residual(full)
        if r_full is not None and abs(r_full) <= 0.5 * abs(r):
            return full, r_full

        cap = 0.5 * (1 + abs(x))
        trial = math.copysign(min(abs(step), cap), step)
        for _ in range(self.max_backtracks):
            candidate = x + trial
            if candidate == x:
                break
            rc = self._residual(candidate)
            if rc is not None and abs(rc) < abs(r):
                return candidate, rc
            trial /= 2
        if r_full is not None:
            return full, r_full
        return None

    def seek(self, x0: float) -> GoalSeekResult:
        x, r = self._start(float(x0))
        history: List[Tuple[float, float]] = [(x, r + self.target)]
        previous: Optional[Tuple[float, float]] = None
        iterations = 0

        while abs(r) > self.tolerance and iterations < self.max_iterations:
            slope = self._slope(x, r, previous)
            if slope is None or not math.isfinite(slope) or slope == 0:
                logger.warning(f"Goal Seek stalled at x={x!r}: no usable slope")
                break
            moved = self._step(x, r, -r / slope)
            if moved is None:
                logger.warning(f"Goal Seek stalled at x={x!r}: f undefined along the step")
                break
            previous = (x, r)
            x, r = moved
            iterations += 1
            history.append((x, r + self.target))
            logger.debug(f"iteration {iterations}: x={x!r} residual={r!r}")

        converged = abs(r) <= self.tolerance
        if not converged:
            logger.warning(f"Goal Seek did not converge after {iterations} iterations (x={x!r}, residual={r!r})")
        return GoalSeekResult(
            x=x,
            residual=r,
            iterations=iterations,
            converged=converged,
            tolerance=self.tolerance,
            target=self.target,
            history=history,
        )


def goal_seek(f: Expr, target: float = 0.0, x0: float = 0.0,
              tolerance: Optional[float] = None,
              max_iterations: Optional[int] = None) -> GoalSeekResult:
    """
    Find x with f(x) = target, starting from x0

    Non-convergence is reported through GoalSeekResult.converged, not raised.

    Raises:
        DomainError: f is undefined at x0 and at x0 +/- the start perturbation
    """
    return GoalSeeker(f, target, tolerance, max_iterations).seek(x0)


def _classify(second: float, fx: float, converged: bool) -> ExtremumKind:
    eps = get_settings().classification_epsilon * (1 + abs(fx))
    if not converged or not math.isfinite(second):
        return ExtremumKind.INCONCLUSIVE
    if second > eps:
        return ExtremumKind.MINIMUM
    if second < -eps:
        return ExtremumKind.MAXIMUM
    return ExtremumKind.INCONCLUSIVE


def find_extremum(f: Expr, x0: float,
                  tolerance: Optional[float] = None,
                  max_iterations: Optional[int] = None) -> ExtremumReport:
    """
    Locate a stationary point of f near x0 and classify it

    Runs Goal Seek on f' = 0 and reads the sign of f'' at the result.
    """
    first = derivative(f)
    second = derivative(first)
    seek = goal_seek(first, 0.0, x0, tolerance, max_iterations)
    x = seek.x
    fx = evaluate(f, x)
    try:
        f2 = evaluate(second, x)
    except DomainError:
        f2 = float("nan")
    kind = _classify(f2, fx, seek.converged)
    logger.info(f"Stationary point search from x0={x0!r}: x={x!r}, kind={kind.value}")
    return ExtremumReport(
        x=x,
        fx=fx,
        kind=kind,
        second_derivative=f2,
        converged=seek.converged,
        iterations=seek.iterations,
    )


def scan_extrema(f: Expr, x_start: float, x_end: float, step: float,
                 tolerance: Optional[float] = None) -> List[ExtremumReport]:
    """
    Sketch f' on a grid, then seek every stationary point it brackets

    Each sign change of f' between neighbouring defined grid points (or an
    exact zero on the grid) seeds find_extremum at the bracket midpoint.
    Results that converge outside their bracket are dropped.
    """
    first = derivative(f)
    table = tabulate(first, x_start, x_end, step)
    seeds: List[Tuple[float, float, float]] = []
    for row in table.rows:
        if row.y == 0:
            seeds.append((row.x, row.x, row.x))
    for left, right in zip(table.rows, table.rows[1:]):
        if left.defined and right.defined and left.y * right.y < 0:
            seeds.append(((left.x + right.x) / 2, left.x, right.x))

    reports: List[ExtremumReport] = []
    slack = 1e-9 * (1 + abs(step))
    for seed, low, high in sorted(seeds):
        report = find_extremum(f, seed, tolerance)
        if not report.converged or not (low - slack <= report.x <= high + slack):
            logger.info(f"Discarding bracket [{low!r}, {high!r}]: search left it")
            continue
        if any(abs(report.x - known.x) <= 1e-6 for known in reports):
            continue
        reports.append(report)
    return reports


def numeric_derivative(f: Expr, x: float, h: Optional[float] = None) -> float:
    """Central difference (f(x+h) - f(x-h)) / 2h"""
    if h is None:
        h = get_settings().numeric_derivative_step
    if h <= 0:
        raise UsageError("step h must be positive")
    return (evaluate(f, x + h) - evaluate(f, x - h)) / (2 * h)
