"""
Text renderers for command results

Human tables show 6 significant digits; CSV carries the shortest text that
reads back as the same float. Money is printed to the cent in both.
"""
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from ..core.config import get_settings
from ..models.expr import format_number
from ..schemas.calculus import ExtremumReport, FunctionTable, GoalSeekResult, RiemannResult
from ..schemas.finance import InterestSchedule
from ..schemas.stats import AnovaResult, FiveNumberSummary, WelchTTestResult

Cell = Optional[str]

UNDEFINED = "undefined"


def display(value: Optional[float]) -> str:
    """Human-readable number"""
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return f"{value:.{get_settings().display_significant_digits}g}"


def money(value: float) -> str:
    return f"{value:.{get_settings().money_decimals}f}"


def exact(value: Optional[float]) -> str:
    """CSV number"""
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return format_number(value)


def render_table(columns: Sequence[str], rows: Sequence[Sequence[Cell]], left: int = 0) -> str:
    """
    Fixed-width text table

    The first `left` columns are left-aligned (row labels), the rest right-aligned.
    """
    cells = [[c or "" for c in row] for row in rows]
    widths = [len(c) for c in columns]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def line(values: Sequence[str]) -> str:
        parts = [
            v.ljust(widths[i]) if i < left else v.rjust(widths[i])
            for i, v in enumerate(values)
        ]
        return "  ".join(parts).rstrip()

    out = [line(list(columns)), line(["-" * w for w in widths])]
    out.extend(line(row) for row in cells)
    return "\n".join(out) + "\n"


def render_pairs(pairs: Sequence[Tuple[str, str]]) -> str:
    """Label / value lines"""
    width = max(len(label) for label, _ in pairs)
    return "".join(f"{label.ljust(width)}  {value}\n" for label, value in pairs)


def render_csv(columns: Sequence[str], rows: Sequence[Sequence[Cell]]) -> str:
    frame = pd.DataFrame([[c or "" for c in row] for row in rows], columns=list(columns), dtype=object)
    return frame.to_csv(index=False, lineterminator="\n")


# Goal Seek and extrema

def goal_seek_table(fn_text: str, result: GoalSeekResult, trace: bool = False) -> str:
    out = f"Goal Seek: {fn_text} = {display(result.target)}\n\n"
    if trace:
        out += render_table(
            ["iteration", "x", "f(x)"],
            [[str(i), display(x), display(fx)] for i, (x, fx) in enumerate(result.history)],
        ) + "\n"
    out += render_pairs([
        ("x", display(result.x)),
        ("f(x)", display(result.residual + result.target)),
        ("residual", display(result.residual)),
        ("iterations", str(result.iterations)),
        ("status", "converged" if result.converged else f"not converged (tolerance {display(result.tolerance)})"),
    ])
    return out


def goal_seek_csv(result: GoalSeekResult, trace: bool = False) -> str:
    if trace:
        return render_csv(
            ["iteration", "x", "f_x"],
            [[str(i), exact(x), exact(fx)] for i, (x, fx) in enumerate(result.history)],
        )
    return render_csv(
        ["x", "residual", "iterations", "converged"],
        [[exact(result.x), exact(result.residual), str(result.iterations), str(result.converged).lower()]],
    )


def extrema_table(fn_text: str, reports: List[ExtremumReport]) -> str:
    out = f"Stationary points of {fn_text}\n\n"
    if not reports:
        return out + "none found\n"
    return out + render_table(
        ["x", "f(x)", "f''(x)", "kind"],
        [[display(r.x), display(r.fx), display(r.second_derivative), r.kind.value] for r in reports],
    )


def extrema_csv(reports: List[ExtremumReport]) -> str:
    return render_csv(
        ["x", "f_x", "second_derivative", "kind"],
        [[exact(r.x), exact(r.fx), exact(r.second_derivative), r.kind.value] for r in reports],
    )


# Riemann sums and tabulation

def riemann_table(fn_text: str, result: RiemannResult) -> str:
    rows: List[List[Cell]] = [
        [display(r.x_i), display(r.delta_x), display(r.fx_i), display(r.product)] for r in result.rows
    ]
    rows.append(["", "", "Total", display(result.total)])
    header = f"{result.rule.value.capitalize()} Riemann sum of {fn_text} on [{display(result.a)}, {display(result.b)}], n = {result.n}\n\n"
    return header + render_table(["x_i", "delta_x", "f(x_i)", "f(x_i)*delta_x"], rows)


def riemann_csv(result: RiemannResult) -> str:
    rows: List[List[Cell]] = [
        [exact(r.x_i), exact(r.delta_x), exact(r.fx_i), exact(r.product)] for r in result.rows
    ]
    rows.append(["", "", "Total", exact(result.total)])
    return render_csv(["x_i", "delta_x", "f_x_i", "product"], rows)


def function_table(table: FunctionTable) -> str:
    return render_table(
        ["x", "y"],
        [[display(r.x), display(r.y) if r.defined else UNDEFINED] for r in table.rows],
    )


def function_csv(table: FunctionTable) -> str:
    return render_csv(["x", "y"], [[exact(r.x), exact(r.y)] for r in table.rows])


# Compound interest

def interest_table(schedule: InterestSchedule) -> str:
    rows = [
        [
            row.label,
            money(row.deposit) if row.period == 0 or row.deposit else "",
            money(row.interest) if row.period > 0 else "",
            money(row.balance),
        ]
        for row in schedule.rows
    ]
    out = render_table(["Date", "Deposits", "Interest", "Balance"], rows, left=1)
    out += "\n" + render_pairs([
        ("Rate per period", display(schedule.period_rate)),
        ("Total interest", money(schedule.total_interest)),
        ("Final balance", money(schedule.final_balance)),
    ])
    return out


def interest_csv(schedule: InterestSchedule) -> str:
    """Money columns rounded to cents, like the printed schedule"""
    rows = [
        [
            str(row.period),
            row.label,
            money(row.deposit) if row.period == 0 or row.deposit else "",
            money(row.interest) if row.period > 0 else "",
            money(row.balance),
        ]
        for row in schedule.rows
    ]
    return render_csv(["period", "label", "deposit", "interest", "balance"], rows)


# Welch t-test

def _ttest_rows(result: WelchTTestResult, fmt) -> List[Tuple[str, str, str]]:
    g1, g2 = result.group1, result.group2
    return [
        ("Mean", fmt(g1.mean), fmt(g2.mean)),
        ("Variance", fmt(g1.variance), fmt(g2.variance)),
        ("Observations", str(g1.count), str(g2.count)),
        ("Hypothesized Mean Difference", fmt(result.hypothesized_difference), ""),
        ("df", str(result.df_displayed), ""),
        ("t Stat", fmt(result.t_stat), ""),
        ("P(T<=t) one-tail", fmt(result.p_one_tail), ""),
        ("t Critical one-tail", fmt(result.t_crit_one_tail), ""),
        ("P(T<=t) two-tail", fmt(result.p_two_tail), ""),
        ("t Critical two-tail", fmt(result.t_crit_two_tail), ""),
    ]


def ttest_table(result: WelchTTestResult) -> str:
    columns = ["", result.group1.label or "Variable 1", result.group2.label or "Variable 2"]
    out = "t-Test: Two-Sample Assuming Unequal Variances\n\n"
    out += render_table(columns, [list(r) for r in _ttest_rows(result, display)], left=1)
    out += f"\nWelch df (exact): {display(result.df_exact)}; alpha = {display(result.alpha)}\n"
    return out


CSV_STATISTIC_NAMES = {
    "Mean": "mean",
    "Variance": "variance",
    "Observations": "observations",
    "Hypothesized Mean Difference": "hypothesized_mean_difference",
    "df": "df",
    "t Stat": "t_stat",
    "P(T<=t) one-tail": "p_one_tail",
    "t Critical one-tail": "t_critical_one_tail",
    "P(T<=t) two-tail": "p_two_tail",
    "t Critical two-tail": "t_critical_two_tail",
}


def ttest_csv(result: WelchTTestResult) -> str:
    rows = [[CSV_STATISTIC_NAMES[name], v1, v2] for name, v1, v2 in _ttest_rows(result, exact)]
    rows.insert(5, ["df_exact", exact(result.df_exact), ""])
    return render_csv(["statistic", "variable_1", "variable_2"], rows)


# ANOVA

def anova_table(result: AnovaResult) -> str:
    out = "Anova: Single Factor\n\nSUMMARY\n"
    out += render_table(
        ["Groups", "Count", "Sum", "Average", "Variance"],
        [
            [g.label or f"Group {i}", str(g.count), display(g.sum), display(g.mean), display(g.variance)]
            for i, g in enumerate(result.groups, start=1)
        ],
        left=1,
    )
    out += "\nANOVA\n"
    out += render_table(
        ["Source of Variation", "SS", "df", "MS", "F", "P-value", "F crit"],
        [
            ["Between Groups", display(result.ss_between), str(result.df_between), display(result.ms_between),
             display(result.f_stat), display(result.p_value), display(result.f_crit)],
            ["Within Groups", display(result.ss_within), str(result.df_within), display(result.ms_within),
             "", "", ""],
            ["Total", display(result.ss_total), str(result.df_total), "", "", "", ""],
        ],
        left=1,
    )
    return out


def anova_csv(result: AnovaResult) -> str:
    return render_csv(
        ["source", "ss", "df", "ms", "f", "p_value", "f_crit"],
        [
            ["between", exact(result.ss_between), str(result.df_between), exact(result.ms_between),
             exact(result.f_stat), exact(result.p_value), exact(result.f_crit)],
            ["within", exact(result.ss_within), str(result.df_within), exact(result.ms_within), "", "", ""],
            ["total", exact(result.ss_total), str(result.df_total), "", "", "", ""],
        ],
    )


# Five-number summaries

SUMMARY_ROWS = ("q1", "min", "median", "max", "q3")


def summary_table(summaries: List[FiveNumberSummary]) -> str:
    columns = [""] + [s.label for s in summaries]
    rows = [
        [name] + [display(s.table_row()[i]) for s in summaries]
        for i, name in enumerate(SUMMARY_ROWS)
    ]
    return render_table(columns, rows, left=1)


def summary_csv(summaries: List[FiveNumberSummary]) -> str:
    return render_csv(
        ["group", *SUMMARY_ROWS],
        [[s.label, *(exact(v) for v in s.table_row())] for s in summaries],
    )
