"""
Goal Seek, extremum, Riemann-sum and tabulation commands
"""
import logging
from typing import Optional, Tuple

from ...core.config import OutputFormat
from ...core.errors import EXIT_NOT_CONVERGED, EXIT_SUCCESS
from ...models.calculus import find_extremum, goal_seek, riemann_sum, scan_extrema, tabulate
from ...models.expr import Expr, parse
from .. import charts, formatting
from .output import CommandOutput

logger = logging.getLogger(__name__)


class CalculusService:
    """
    Runs the single-variable calculus commands on an expression in x
    """

    def _parse(self, fn_text: str) -> Expr:
        expression = parse(fn_text)
        logger.debug(f"Parsed {fn_text!r} as {expression.render()}")
        return expression

    def goal_seek(self, fn_text: str, target: float, x0: float,
                  tolerance: Optional[float] = None,
                  max_iterations: Optional[int] = None,
                  trace: bool = False,
                  output_format: OutputFormat = OutputFormat.TABLE) -> CommandOutput:
        """Solve f(x) = target from x0; non-convergence reports exit code 3"""
        result = goal_seek(self._parse(fn_text), target, x0, tolerance, max_iterations)
        if output_format == OutputFormat.CSV:
            text = formatting.goal_seek_csv(result, trace)
        else:
            text = formatting.goal_seek_table(fn_text, result, trace)
        return CommandOutput(text, EXIT_SUCCESS if result.converged else EXIT_NOT_CONVERGED)

    def minimize(self, fn_text: str, x0: float,
                 scan: Optional[Tuple[float, float, float]] = None,
                 output_format: OutputFormat = OutputFormat.TABLE) -> CommandOutput:
        """
        Stationary point nearest x0, or every one found on a scan grid

        A single search that fails to converge reports exit code 3; a scan
        that finds nothing is an empty table.
        """
        f = self._parse(fn_text)
        if scan is not None:
            reports = scan_extrema(f, *scan)
            exit_code = EXIT_SUCCESS
        else:
            report = find_extremum(f, x0)
            reports = [report]
            exit_code = EXIT_SUCCESS if report.converged else EXIT_NOT_CONVERGED
        if output_format == OutputFormat.CSV:
            return CommandOutput(formatting.extrema_csv(reports), exit_code)
        return CommandOutput(formatting.extrema_table(fn_text, reports), exit_code)

    def riemann(self, fn_text: str, a: float, b: float, n: int, rule: str,
                output_format: OutputFormat = OutputFormat.TABLE) -> CommandOutput:
        result = riemann_sum(self._parse(fn_text), a, b, n, rule)
        if output_format == OutputFormat.CSV:
            return CommandOutput(formatting.riemann_csv(result))
        return CommandOutput(formatting.riemann_table(fn_text, result))

    def tabulate(self, fn_text: str, x_start: float, x_end: float, step: float,
                 output_format: OutputFormat = OutputFormat.CSV) -> CommandOutput:
        table = tabulate(self._parse(fn_text), x_start, x_end, step)
        if output_format == OutputFormat.TABLE:
            return CommandOutput(formatting.function_table(table))
        return CommandOutput(formatting.function_csv(table))

    def plot(self, fn_text: str, x_start: float, x_end: float, step: float,
             output_format: OutputFormat = OutputFormat.SVG) -> CommandOutput:
        """Line chart of f over the grid; table and csv formats give the tabulation"""
        if output_format != OutputFormat.SVG:
            return self.tabulate(fn_text, x_start, x_end, step, output_format)
        table = tabulate(self._parse(fn_text), x_start, x_end, step)
        return CommandOutput(charts.line_chart(table, title=f"y = {fn_text}"))
