"""
deskcalc command line

Subcommands: goalseek, minimize, riemann, tabulate, plot, interest, ttest,
anova, summary, boxplot. Exit codes: 0 success, 1 usage or parse error,
2 domain or numerical error, 3 non-convergence.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from pydantic import ValidationError

from ..core.config import OutputFormat, get_settings
from ..core.errors import DeskCalcError, ExpressionSyntaxError, UsageError
from ..schemas.charts import CommandSpec
from ..schemas.calculus import RiemannRule
from ..schemas.stats import SummaryStats
from .services import CalculusService, CommandOutput, FinanceService, StatisticsService

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

DEFAULT_FORMATS: Dict[str, OutputFormat] = {
    "tabulate": OutputFormat.CSV,
    "plot": OutputFormat.SVG,
    "boxplot": OutputFormat.SVG,
}

TTEST_SUMMARY_FLAGS = ("mean1", "var1", "n1", "mean2", "var2", "n2")

calculus_service = CalculusService()
finance_service = FinanceService()
stats_service = StatisticsService()


class DeskCalcArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose errors surface as UsageError (exit code 1)"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


# Argument converters

def _count(text: str, what: str) -> int:
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None
    if not value.is_integer():
        raise UsageError(f"{what} must be an integer, got {text!r}")
    return int(value)


def _number(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"{what} must be a number, got {text!r}") from None


def _deposits(pairs: Optional[List[List[str]]]) -> Dict[int, float]:
    deposits: Dict[int, float] = {}
    for period_text, amount_text in pairs or []:
        period = _count(period_text, "deposit period")
        deposits[period] = deposits.get(period, 0.0) + _number(amount_text, "deposit amount")
    return deposits


def _anova_groups(groups: Optional[List[List[str]]]) -> List[SummaryStats]:
    summaries = []
    for label, mean_text, var_text, count_text in groups or []:
        summaries.append(SummaryStats(
            label=label,
            mean=_number(mean_text, f"mean of {label}"),
            variance=_number(var_text, f"variance of {label}"),
            count=_count(count_text, f"count of {label}"),
        ))
    return summaries


# Command handlers

def cmd_goalseek(args: argparse.Namespace, spec: CommandSpec) -> CommandOutput:
    return calculus_service.goal_seek(
        args.fn, args.target, args.x0, args.tol, args.max_iter, args.trace, spec.output_format
    )


def cmd_minimize(args: argparse.Namespace, spec: CommandSpec) -> CommandOutput:
    scan = tuple(args.scan) if args.scan else None
    return calculus_service.minimize(args.fn, args.x0, scan, spec.output_format)


def cmd_riemann(args: argparse.Namespace, spec: CommandSpec) -> CommandOutput:
    return calculus_service.riemann(args.fn, args.a, args.b, args.n, args.rule, spec.output_format)


def cmd_tabulate(args: argparse.Namespace, spec: CommandSpec) -> CommandOutput:
    return calculus_service.tabulate(args.fn, args.x_start, args.x_end, args.step, spec.output_format)


def cmd_plot(args: argparse.Namespace, spec: CommandSpec) -> CommandOutput:
    return calculus_service.plot(args.fn, args.x_start, args.x_end, args.step, spec.output_format)


def cmd_interest(args: argparse.Namespace, spec: CommandSpec) -> CommandOutput:
    return finance_service.interest(
        args.principal, args.rate, args.periods_per_year, args.n,
        start=args.start, deposits=_deposits(args.deposit), output_format=spec.output_format,
    )


def cmd_ttest(args: argparse.Namespace, spec: CommandSpec) -> CommandOutput:
    summaries = None
    if spec.inline:
        missing = [f"--{name}" for name in TTEST_SUMMARY_FLAGS if getattr(args, name) is None]
        if missing:
            raise UsageError(f"summary input needs all six flags; missing {', '.join(missing)}")
        summaries = [
            SummaryStats(mean=args.mean1, variance=args.var1, count=args.n1, label="Variable 1"),
            SummaryStats(mean=args.mean2, variance=args.var2, count=args.n2, label="Variable 2"),
        ]
    return stats_service.ttest(spec.csv_path, args.groups, summaries, args.alpha, spec.output_format)


def cmd_anova(args: argparse.Namespace, spec: CommandSpec) -> CommandOutput:
    summaries = None if spec.csv_path is not None else _anova_groups(args.group)
    return stats_service.anova(spec.csv_path, summaries, args.alpha, spec.output_format)


def cmd_summary(args: argparse.Namespace, spec: CommandSpec) -> CommandOutput:
    return stats_service.summary(spec.csv_path, spec.output_format)


def cmd_boxplot(args: argparse.Namespace, spec: CommandSpec) -> CommandOutput:
    return stats_service.boxplot(spec.csv_path, spec.output_format)


# Parser

def build_parser() -> DeskCalcArgumentParser:
    settings = get_settings()
    common = DeskCalcArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=None,
                        help="table (default), csv, or svg for plot and boxplot")
    common.add_argument("--output", default=None, help="write to this file instead of standard output")
    common.add_argument("--log-level", choices=LOG_LEVELS, default=settings.log_level,
                        help="diagnostics on standard error")

    parser = DeskCalcArgumentParser(
        prog=settings.app_name,
        description="Spreadsheet-style numerical toolkit: Goal Seek, Riemann sums, "
                    "compound interest, t-tests, ANOVA and box plots",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    subparsers = parser.add_subparsers(dest="subcommand", metavar="<subcommand>")
    subparsers.required = True

    def add(name: str, handler, help_text: str) -> DeskCalcArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text, description=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = add("goalseek", cmd_goalseek, "solve f(x) = target starting from x0")
    sub.add_argument("--fn", required=True, help="expression in x, e.g. \"42 - 16800/x^2\"")
    sub.add_argument("--target", type=float, default=0.0)
    sub.add_argument("--x0", type=float, default=0.0, help="start value")
    sub.add_argument("--tol", type=float, default=None, help="bound on |f(x) - target|")
    sub.add_argument("--max-iter", type=int, default=None)
    sub.add_argument("--trace", action="store_true", help="show every iterate")

    sub = add("minimize", cmd_minimize, "find and classify a stationary point of f")
    sub.add_argument("--fn", required=True)
    sub.add_argument("--x0", type=float, default=0.0)
    sub.add_argument("--scan", type=float, nargs=3, metavar=("FROM", "TO", "STEP"),
                     help="seek every stationary point bracketed on this grid instead")

    sub = add("riemann", cmd_riemann, "Riemann sum of f over [a, b]")
    sub.add_argument("--fn", required=True)
    sub.add_argument("--a", type=float, required=True)
    sub.add_argument("--b", type=float, required=True)
    sub.add_argument("--n", type=int, required=True, help="number of subintervals")
    sub.add_argument("--rule", choices=[r.value for r in RiemannRule], default=RiemannRule.RIGHT.value)

    for name, handler, help_text in (
        ("tabulate", cmd_tabulate, "tabulate f on an evenly spaced grid (CSV x,y)"),
        ("plot", cmd_plot, "SVG line chart of f"),
    ):
        sub = add(name, handler, help_text)
        sub.add_argument("--fn", required=True)
        sub.add_argument("--from", dest="x_start", type=float, required=True)
        sub.add_argument("--to", dest="x_end", type=float, required=True)
        sub.add_argument("--step", type=float, required=True)

    sub = add("interest", cmd_interest, "compound-interest schedule")
    sub.add_argument("--principal", type=float, required=True)
    sub.add_argument("--rate", type=float, required=True, help="annual rate as a fraction, 0.04 for 4%%")
    sub.add_argument("--periods-per-year", type=int, default=1)
    sub.add_argument("--n", type=int, required=True, help="number of periods")
    sub.add_argument("--start", default=None, help="date of the opening row, YYYY-MM-DD")
    sub.add_argument("--deposit", nargs=2, action="append", metavar=("PERIOD", "AMOUNT"),
                     help="extra deposit credited at the end of PERIOD (repeatable)")

    sub = add("ttest", cmd_ttest, "t-Test: Two-Sample Assuming Unequal Variances")
    sub.add_argument("--csv", default=None, help="long-format group,value CSV; - for standard input")
    sub.add_argument("--groups", nargs=2, metavar=("A", "B"), default=None,
                     help="labels of the two groups to compare")
    for name, kind in zip(TTEST_SUMMARY_FLAGS, (float, float, int) * 2):
        sub.add_argument(f"--{name}", type=kind, default=None)
    sub.add_argument("--alpha", type=float, default=None)

    sub = add("anova", cmd_anova, "Anova: Single Factor")
    sub.add_argument("--csv", default=None)
    sub.add_argument("--group", nargs=4, action="append", metavar=("LABEL", "MEAN", "VAR", "N"),
                     help="summary statistics of one group (repeatable)")
    sub.add_argument("--alpha", type=float, default=None)

    for name, handler, help_text in (
        ("summary", cmd_summary, "five-number summary per group"),
        ("boxplot", cmd_boxplot, "SVG box plot per group"),
    ):
        sub = add(name, handler, help_text)
        sub.add_argument("--csv", required=True)

    return parser


def command_spec(args: argparse.Namespace) -> CommandSpec:
    """Describe the invocation; rejects conflicting input sources and svg misuse"""
    csv_path = getattr(args, "csv", None)
    if args.subcommand == "ttest":
        inline = any(getattr(args, name) is not None for name in TTEST_SUMMARY_FLAGS)
    elif args.subcommand == "anova":
        inline = bool(args.group)
    else:
        inline = csv_path is None
    output_format = OutputFormat(args.format) if args.format else DEFAULT_FORMATS.get(args.subcommand, OutputFormat.TABLE)
    return CommandSpec(
        subcommand=args.subcommand,
        output_format=output_format,
        csv_path=csv_path,
        inline=inline,
        output_path=args.output,
    )


def configure_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT, stream=sys.stderr, force=True)


def _emit(output: CommandOutput, spec: CommandSpec) -> None:
    if spec.output_path:
        try:
            Path(spec.output_path).write_text(output.text, encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot write {spec.output_path}: {e.strerror or e}") from e
        logger.info(f"Wrote {spec.subcommand} output to {spec.output_path}")
    else:
        sys.stdout.write(output.text)


def _report(error: DeskCalcError) -> int:
    print(f"error: {error.message}", file=sys.stderr)
    if isinstance(error, ExpressionSyntaxError) and error.text:
        print(error.caret(), file=sys.stderr)
    return error.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the process exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        return _report(e)
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)

    configure_logging(args.log_level)
    try:
        spec = command_spec(args)
        output = args.handler(args, spec)
        _emit(output, spec)
    except DeskCalcError as e:
        return _report(e)
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return UsageError.exit_code

    return output.exit_code


if __name__ == "__main__":
    sys.exit(main())
