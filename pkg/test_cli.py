#!/usr/bin/env python3
"""
Tests for the deskcalc command line: output formats and exit codes
"""
import csv
import io
import logging
import xml.etree.ElementTree as ET

import pytest

from src.cli.main import main

SVG = "{http://www.w3.org/2000/svg}"

COST = "42*x + 16800/x"

FACULTY_CSV = (
    "group,value\n"
    "Engineering,46\nEngineering,75\nEngineering,89\nEngineering,95\nEngineering,98\n"
    "Science,50\nScience,60\nScience,70\nScience,80\nScience,90\n"
)


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.fixture
def faculty_csv(tmp_path):
    path = tmp_path / "faculty.csv"
    path.write_text(FACULTY_CSV)
    return str(path)


# Goal Seek and extrema

def test_goalseek_table(capsys):
    code, out, _ = run(capsys, "goalseek", "--fn", "42 - 16800/x^2", "--target", "0", "--x0", "3")
    assert code == 0
    assert out.startswith("Goal Seek: 42 - 16800/x^2 = 0\n")
    assert "converged" in out


def test_goalseek_csv(capsys):
    code, out, _ = run(capsys, "goalseek", "--fn", "x", "--target", "5", "--x0", "0", "--format", "csv")
    assert code == 0
    row = csv_rows(out)[0]
    assert float(row["x"]) == 5
    assert row["converged"] == "true"


def test_goalseek_trace_lists_every_iterate(capsys):
    code, out, _ = run(capsys, "goalseek", "--fn", "42 - 16800/x^2", "--x0", "3", "--trace", "--format", "csv")
    assert code == 0
    rows = csv_rows(out)
    assert float(rows[0]["x"]) == 3
    assert float(rows[-1]["x"]) == pytest.approx(20, abs=1e-6)
    assert [int(r["iteration"]) for r in rows] == list(range(len(rows)))


def test_goalseek_without_convergence_exits_3(capsys):
    code, out, _ = run(capsys, "goalseek", "--fn", "x^2 + 1", "--x0", "1")
    assert code == 3
    assert "not converged" in out


def test_goalseek_syntax_error_shows_position(capsys):
    code, out, err = run(capsys, "goalseek", "--fn", "2 +", "--x0", "1")
    assert code == 1
    assert out == ""
    assert "position 3" in err
    assert "2 +\n   ^" in err


def test_goalseek_undefined_start_exits_2(capsys):
    code, _, err = run(capsys, "goalseek", "--fn", "1/(x - x)", "--x0", "1")
    assert code == 2
    assert "error:" in err


def test_minimize_cost(capsys):
    code, out, _ = run(capsys, "minimize", "--fn", COST, "--x0", "3", "--format", "csv")
    assert code == 0
    row = csv_rows(out)[0]
    assert float(row["x"]) == pytest.approx(20, abs=1e-6)
    assert float(row["f_x"]) == pytest.approx(1680, abs=1e-6)
    assert row["kind"] == "minimum"


def test_minimize_inconclusive_exits_3(capsys):
    code, out, _ = run(capsys, "minimize", "--fn", "x", "--x0", "0")
    assert code == 3
    assert "inconclusive" in out


def test_minimize_scan(capsys):
    code, out, _ = run(capsys, "minimize", "--fn", "x^3 - 3*x", "--scan", "-3", "3", "0.7", "--format", "csv")
    assert code == 0
    assert [r["kind"] for r in csv_rows(out)] == ["maximum", "minimum"]


def test_minimize_scan_without_result(capsys):
    code, out, _ = run(capsys, "minimize", "--fn", "exp(x)", "--scan", "0", "2", "0.5")
    assert code == 0
    assert "none found" in out


# Riemann sums and tabulation

def test_riemann_csv(capsys):
    code, out, _ = run(capsys, "riemann", "--fn", "x+2", "--a", "1", "--b", "3", "--n", "10", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x_i,delta_x,f_x_i,product"
    assert lines[1] == "1.2,0.2,3.2,0.6400000000000001"
    assert len(lines) == 12
    assert lines[10] == "3,0.2,5,1"
    assert lines[11].startswith(",,Total,")
    assert float(lines[11].split(",")[3]) == pytest.approx(8.2, abs=1e-12)


def test_riemann_table_rules(capsys):
    code, out, _ = run(capsys, "riemann", "--fn", "x+2", "--a", "1", "--b", "3", "--n", "10", "--rule", "midpoint")
    assert code == 0
    assert out.startswith("Midpoint Riemann sum of x+2 on [1, 3], n = 10")
    assert out.splitlines()[-1].split() == ["Total", "8"]


def test_tabulate_defaults_to_csv(capsys):
    code, out, _ = run(capsys, "tabulate", "--fn", COST, "--from", "10", "--to", "30", "--step", "10")
    assert code == 0
    assert out == "x,y\n10,2100\n20,1680\n30,1820\n"


def test_tabulate_leaves_undefined_points_blank(capsys):
    code, out, _ = run(capsys, "tabulate", "--fn", "1/x", "--from", "-1", "--to", "1", "--step", "1")
    assert code == 0
    assert out == "x,y\n-1,-1\n0,\n1,1\n"


def test_tabulate_table_marks_undefined_points(capsys):
    code, out, _ = run(capsys, "tabulate", "--fn", "1/x", "--from", "-1", "--to", "1", "--step", "1",
                       "--format", "table")
    assert code == 0
    assert out.splitlines()[3].split() == ["0", "undefined"]


def test_csv_output_is_byte_identical_across_runs(capsys):
    argv = ("riemann", "--fn", "exp(x)", "--a", "0", "--b", "1", "--n", "25", "--format", "csv")
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second


# SVG charts

def test_plot_is_well_formed_svg(capsys):
    code, out, _ = run(capsys, "plot", "--fn", COST, "--from", "1", "--to", "100", "--step", "1")
    assert code == 0
    root = ET.fromstring(out.encode("utf-8"))
    assert root.tag == f"{SVG}svg"
    assert (root.get("width"), root.get("height"), root.get("viewBox")) == ("640", "400", "0 0 640 400")
    assert len(list(root.iter(f"{SVG}polyline"))) == 1
    labels = [t.text for t in root.iter(f"{SVG}text") if t.get("class") == "axis-label"]
    assert labels == ["x", "y"]


def test_plot_breaks_line_where_undefined(capsys):
    code, out, _ = run(capsys, "plot", "--fn", "1/x", "--from", "-1", "--to", "1", "--step", "0.5")
    assert code == 0
    root = ET.fromstring(out.encode("utf-8"))
    assert len(list(root.iter(f"{SVG}polyline"))) == 2


def test_plot_with_nothing_defined_is_a_domain_error(capsys):
    code, out, err = run(capsys, "plot", "--fn", "sqrt(0 - 1 - x^2)", "--from", "0", "--to", "1", "--step", "0.5")
    assert code == 2
    assert out == ""
    assert "nothing to plot" in err


def test_plot_csv_format_gives_tabulation(capsys):
    code, out, _ = run(capsys, "plot", "--fn", "x+2", "--from", "1", "--to", "3", "--step", "1", "--format", "csv")
    assert code == 0
    assert out == "x,y\n1,3\n2,4\n3,5\n"


def test_boxplot_structure(capsys, faculty_csv):
    code, out, _ = run(capsys, "boxplot", "--csv", faculty_csv)
    assert code == 0
    root = ET.fromstring(out.encode("utf-8"))
    boxes = [g for g in root.iter(f"{SVG}g") if g.get("class") == "box"]
    assert [g.get("data-label") for g in boxes] == ["Engineering", "Science"]
    for box in boxes:
        classes = [child.get("class") for child in box]
        assert classes.count("whisker") == 2
        assert "iqr" in classes
        assert "median" in classes
    group_labels = [t.text for t in root.iter(f"{SVG}text") if t.get("class") == "group-label"]
    assert group_labels == ["Engineering", "Science"]


def test_svg_only_for_charts(capsys):
    code, _, err = run(capsys, "riemann", "--fn", "x", "--a", "0", "--b", "1", "--n", "2", "--format", "svg")
    assert code == 1
    assert "svg" in err


# Compound interest

def test_interest_table(capsys):
    code, out, _ = run(capsys, "interest", "--principal", "100", "--rate", "0.04", "--periods-per-year", "4",
                       "--n", "4", "--start", "1994-01-01")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["Date", "Deposits", "Interest", "Balance"]
    assert lines[2].split() == ["1994-01-01", "100.00", "100.00"]
    assert lines[3].split() == ["1994-04-01", "1.00", "101.00"]
    assert "Final balance    104.06" in out


def test_interest_csv(capsys):
    code, out, _ = run(capsys, "interest", "--principal", "100", "--rate", "0.04", "--periods-per-year", "4",
                       "--n", "2", "--start", "1994-01-01", "--deposit", "2", "50", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "period,label,deposit,interest,balance",
        "0,1994-01-01,100.00,,100.00",
        "1,1994-04-01,,1.00,101.00",
        "2,1994-07-01,50.00,1.01,152.01",
    ]


def test_interest_unknown_deposit_period(capsys):
    code, _, _ = run(capsys, "interest", "--principal", "100", "--rate", "0.04", "--n", "2", "--deposit", "9", "5")
    assert code == 1


# t-test and ANOVA

SURVEY_FLAGS = (
    "--mean1", "65.93478261", "--var1", "260.5956522", "--n1", "46",
    "--mean2", "80.45652174", "--var2", "304.2980676", "--n2", "46",
)


def test_ttest_from_summaries(capsys):
    code, out, _ = run(capsys, "ttest", *SURVEY_FLAGS)
    assert code == 0
    assert out.startswith("t-Test: Two-Sample Assuming Unequal Variances")
    rows = {line.split("  ")[0]: line.split() for line in out.splitlines() if line}
    assert rows["t Stat"][-1] == "-4.14395"
    assert rows["df"][-1] == "89"
    assert rows["P(T<=t) one-tail"][-1] == "3.88116e-05"


def test_ttest_csv_statistics(capsys):
    code, out, _ = run(capsys, "ttest", *SURVEY_FLAGS, "--format", "csv")
    assert code == 0
    stats = {r["statistic"]: r for r in csv_rows(out)}
    assert float(stats["t_stat"]["variable_1"]) == pytest.approx(-4.14394682, abs=1e-6)
    assert stats["df"]["variable_1"] == "89"
    assert float(stats["df_exact"]["variable_1"]) == pytest.approx(89.47, abs=0.01)
    assert float(stats["t_critical_two_tail"]["variable_1"]) == pytest.approx(1.986978657, abs=1e-6)


def test_ttest_from_csv_groups(capsys, faculty_csv):
    code, out, _ = run(capsys, "ttest", "--csv", faculty_csv, "--format", "csv")
    assert code == 0
    stats = {r["statistic"]: r for r in csv_rows(out)}
    assert stats["observations"]["variable_1"] == "5"


def test_ttest_from_standard_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("group,value\na,0\na,1\na,2\nb,0\nb,1\nb,2\n"))
    code, out, _ = run(capsys, "ttest", "--csv", "-", "--format", "csv")
    assert code == 0
    stats = {r["statistic"]: r for r in csv_rows(out)}
    assert float(stats["t_stat"]["variable_1"]) == 0
    assert float(stats["p_two_tail"]["variable_1"]) == pytest.approx(1)


@pytest.mark.parametrize("argv", [
    ("ttest",),
    ("ttest", "--mean1", "1", "--var1", "1"),
    ("ttest", "--csv", "data.csv", *SURVEY_FLAGS),
])
def test_ttest_needs_exactly_one_complete_source(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_ttest_csv_with_one_group(capsys, tmp_path):
    path = tmp_path / "one.csv"
    path.write_text("group,value\na,1\na,2\na,3\n")
    code, _, err = run(capsys, "ttest", "--csv", str(path))
    assert code == 1
    assert "expected 2 groups" in err


def test_anova_from_group_summaries(capsys):
    code, out, _ = run(
        capsys, "anova",
        "--group", "Engineering", str(1241 / 15), "238.49", "15",
        "--group", "Science", str(1185 / 15), "304.42", "15",
        "--group", "Business", str(1180 / 15), "408.80", "15",
        "--format", "csv",
    )
    assert code == 0
    rows = {r["source"]: r for r in csv_rows(out)}
    assert float(rows["between"]["f"]) == pytest.approx(0.241033903, rel=1e-4)
    assert float(rows["between"]["p_value"]) == pytest.approx(0.786894473, rel=1e-4)
    assert float(rows["between"]["f_crit"]) == pytest.approx(3.219942293, abs=1e-6)
    assert (rows["between"]["df"], rows["within"]["df"], rows["total"]["df"]) == ("2", "42", "44")


def test_anova_csv_with_one_group(capsys, tmp_path):
    path = tmp_path / "one.csv"
    path.write_text("group,value\na,1\na,2\na,3\n")
    code, _, err = run(capsys, "anova", "--csv", str(path))
    assert code == 1
    assert "at least 2 groups" in err


def test_anova_table_layout(capsys, faculty_csv):
    code, out, _ = run(capsys, "anova", "--csv", faculty_csv)
    assert code == 0
    assert out.startswith("Anova: Single Factor\n\nSUMMARY\n")
    assert "Between Groups" in out
    assert "Within Groups" in out


def test_anova_zero_within_variance_exits_2(capsys, tmp_path):
    path = tmp_path / "flat.csv"
    path.write_text("group,value\na,1\na,1\nb,2\nb,2\n")
    code, _, err = run(capsys, "anova", "--csv", str(path))
    assert code == 2
    assert "variance" in err


# Five-number summaries

def test_summary_csv(capsys, faculty_csv):
    code, out, _ = run(capsys, "summary", "--csv", faculty_csv, "--format", "csv")
    assert code == 0
    assert out == "group,q1,min,median,max,q3\nEngineering,75,46,89,98,95\nScience,60,50,70,90,80\n"


def test_summary_table_rows_in_display_order(capsys, faculty_csv):
    code, out, _ = run(capsys, "summary", "--csv", faculty_csv)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["Engineering", "Science"]
    assert [line.split()[0] for line in lines[2:]] == ["q1", "min", "median", "max", "q3"]
    assert lines[2].split() == ["q1", "75", "60"]


@pytest.mark.parametrize("subcommand", ["summary", "boxplot"])
def test_malformed_csv(capsys, tmp_path, subcommand):
    path = tmp_path / "bad.csv"
    path.write_text("group,value\na,1\na,x\n")
    code, _, err = run(capsys, subcommand, "--csv", str(path))
    assert code == 1
    assert "line 3" in err


# Surface

def test_output_file(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, "tabulate", "--fn", "x+2", "--from", "1", "--to", "3", "--step", "1",
                       "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "x,y\n1,3\n2,4\n3,5\n"


def test_unwritable_output_file(capsys, tmp_path):
    target = tmp_path / "missing-dir" / "table.csv"
    code, out, err = run(capsys, "tabulate", "--fn", "x+2", "--from", "1", "--to", "3", "--step", "1",
                         "--output", str(target))
    assert code == 1
    assert out == ""
    assert err.startswith("error: cannot write")


def test_diagnostics_stay_off_standard_output(capsys):
    argv = ("tabulate", "--fn", "x+2", "--from", "1", "--to", "3", "--step", "1")
    quiet = run(capsys, *argv)
    verbose = run(capsys, *argv, "--log-level", "DEBUG")
    assert quiet[1] == verbose[1]
    assert "DEBUG" in verbose[2]


@pytest.mark.parametrize("argv, expected", [
    (("frobnicate",), 1),
    (("goalseek", "--x0", "1"), 1),
    (("riemann", "--fn", "x+2", "--a", "1", "--b", "3", "--n", "0"), 1),
    (("riemann", "--fn", "1/x", "--a", "-1", "--b", "1", "--n", "2", "--rule", "left"), 2),
    (("tabulate", "--fn", "x", "--from", "0", "--to", "1", "--step", "0"), 1),
    (("tabulate", "--fn", "y", "--from", "0", "--to", "1", "--step", "1"), 1),
    (("interest", "--principal", "100", "--rate", "0.04", "--n", "1", "--start", "1994-13-01"), 1),
    (("minimize", "--fn", "x +", "--x0", "1"), 1),
    (("minimize", "--fn", "sqrt(x)", "--x0", "-5"), 2),
    (("plot", "--fn", "x", "--from", "0", "--to", "1", "--step", "0"), 1),
    (("interest", "--principal", "100", "--rate", "0.04", "--periods-per-year", "0", "--n", "1"), 1),
    (("ttest", "--mean1", "1", "--var1", "0", "--n1", "3", "--mean2", "2", "--var2", "0", "--n2", "3"), 2),
    (("anova", "--group", "a", "1", "1", "3"), 1),
    (("summary", "--csv", "does-not-exist.csv"), 1),
    (("boxplot", "--csv", "does-not-exist.csv"), 1),
    (("--help",), 0),
    (("--version",), 0),
])
def test_exit_codes(capsys, argv, expected):
    assert run(capsys, *argv)[0] == expected
