#!/usr/bin/env python3
"""
Tests for descriptive statistics, special functions, distributions,
the Welch t-test, single-factor ANOVA and grouped CSV input
"""
import io
import math

import numpy as np
import pytest

from src.core.errors import InputDataError, NumericalError, UsageError
from src.integrations import GroupedCsvSource, read_samples
from src.models.stats import (
    f_cdf,
    f_inverse,
    f_sf,
    five_number_summary,
    ln_beta,
    ln_gamma,
    mean,
    one_way_anova,
    quartile_inclusive,
    reg_inc_beta,
    sample_variance,
    summarize,
    t_cdf,
    t_inverse,
    welch_satterthwaite_df,
    welch_t_test,
)
from src.schemas.stats import Sample, SummaryStats

# Faculty survey summaries: 46 respondents per group
SCIENCE = SummaryStats(label="Variable 1", mean=65.93478261, variance=260.5956522, count=46)
ENGINEERING = SummaryStats(label="Variable 2", mean=80.45652174, variance=304.2980676, count=46)

# Salary survey summaries per faculty, 15 respondents each
FACULTY_GROUPS = [
    SummaryStats(label="Engineering", mean=1241 / 15, variance=238.49, count=15),
    SummaryStats(label="Science", mean=1185 / 15, variance=304.42, count=15),
    SummaryStats(label="Business", mean=1180 / 15, variance=408.80, count=15),
]


# Descriptive statistics

def test_mean_and_variance():
    assert mean([1, 2, 3, 4]) == 2.5
    assert sample_variance([2, 4, 4, 4, 5, 5, 7, 9]) == pytest.approx(32 / 7)
    assert mean(Sample(values=[1241 / 15] * 15)) == pytest.approx(82.7333, abs=1e-4)


def test_variance_needs_two_values():
    with pytest.raises(UsageError):
        sample_variance([3.0])
    with pytest.raises(UsageError):
        mean([])


def test_summarize_keeps_label():
    stats = summarize(Sample(values=[1, 2, 3], label="A"))
    assert (stats.label, stats.mean, stats.variance, stats.count) == ("A", 2, 1, 3)
    assert stats.sum == 6


@pytest.mark.parametrize("values, q, expected", [
    ([1, 2, 3, 4, 5], 0.25, 2),
    ([0, 1], 0.5, 0.5),
    ([1, 2, 3, 4], 0.25, 1.75),
    ([5, 1, 4, 2, 3], 0.75, 4),
    ([7], 0.25, 7),
])
def test_quartile_inclusive(values, q, expected):
    assert quartile_inclusive(values, q) == pytest.approx(expected)


def test_quartile_point_out_of_range():
    with pytest.raises(UsageError):
        quartile_inclusive([1, 2, 3], 1.5)


def test_five_number_summary():
    s = five_number_summary(Sample(values=[98, 46, 95, 75, 89], label="Engineering"))
    assert (s.min, s.q1, s.median, s.q3, s.max) == (46, 75, 89, 95, 98)
    assert s.table_row() == [75, 46, 89, 98, 95]
    assert s.label == "Engineering"

    one = five_number_summary([7])
    assert (one.min, one.q1, one.median, one.q3, one.max) == (7, 7, 7, 7, 7)


def test_five_number_summary_of_empty_sample():
    with pytest.raises(UsageError):
        five_number_summary([])


def test_five_number_summary_is_ordered_for_random_samples():
    rng = np.random.default_rng(5)
    for _ in range(1000):
        values = rng.normal(0, 10 ** rng.uniform(-3, 6), size=int(rng.integers(1, 40)))
        s = five_number_summary(values)
        assert s.min <= s.q1 <= s.median <= s.q3 <= s.max
        assert s.min == values.min()
        assert s.max == values.max()


# Special functions

@pytest.mark.parametrize("x, expected", [
    (1.0, 0.0),
    (2.0, 0.0),
    (5.0, math.log(24)),
    (0.5, 0.5 * math.log(math.pi)),
])
def test_ln_gamma_identities(x, expected):
    assert ln_gamma(x) == pytest.approx(expected, abs=1e-10)


def test_ln_gamma_against_lgamma():
    for x in [0.1, 0.3, 0.7, 1.5, 3.3, 10.0, 44.5, 171.2, 1e4, 1e6]:
        assert ln_gamma(x) == pytest.approx(math.lgamma(x), rel=1e-10, abs=1e-10)


def test_ln_gamma_requires_positive_argument():
    with pytest.raises(UsageError):
        ln_gamma(0)


def test_ln_beta():
    assert ln_beta(2, 3) == pytest.approx(math.log(1 / 12), abs=1e-12)


def test_ln_beta_matches_lgamma_for_moderate_shapes():
    for a, b in [(8, 9), (0.5, 8), (3, 20), (12.5, 40), (8, 8)]:
        expected = math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
        assert ln_beta(a, b) == pytest.approx(expected, abs=1e-12)
        assert ln_beta(b, a) == ln_beta(a, b)


@pytest.mark.parametrize("a, b", [(2000.0, 3000.0), (0.5, 1e4), (3.0, 250.0), (40.0, 41.5)])
def test_ln_beta_recurrence(a, b):
    # B(a, b + 1) = B(a, b) b / (a + b)
    assert ln_beta(a, b + 1) - ln_beta(a, b) == pytest.approx(math.log(b / (a + b)), abs=1e-11)


def test_reg_inc_beta_boundaries_and_uniform_case():
    assert reg_inc_beta(2.5, 3.5, 0.0) == 0.0
    assert reg_inc_beta(2.5, 3.5, 1.0) == 1.0
    for x in np.linspace(0.01, 0.99, 25):
        assert reg_inc_beta(1, 1, float(x)) == pytest.approx(x, abs=1e-12)


@pytest.mark.parametrize("a", [0.5, 2.0, 10.0])
def test_reg_inc_beta_equal_shapes_at_half(a):
    assert reg_inc_beta(a, a, 0.5) == pytest.approx(0.5, abs=1e-12)


def test_reg_inc_beta_reflection():
    rng = np.random.default_rng(17)
    for _ in range(200):
        a, b = (float(v) for v in rng.uniform(0.5, 10, size=2))
        x = float(rng.uniform(0.05, 0.95))
        assert reg_inc_beta(a, b, x) + reg_inc_beta(b, a, 1 - x) == pytest.approx(1, abs=1e-12)


def test_reg_inc_beta_large_shapes():
    assert reg_inc_beta(2000, 3000, 0.4) == pytest.approx(0.50076778794558949, abs=1e-12)
    assert reg_inc_beta(3000, 2000, 0.6) == pytest.approx(0.49923221205441051, abs=1e-12)


def test_reg_inc_beta_with_explicit_complement():
    assert reg_inc_beta(2.5, 3.5, 0.3, complement=0.7) == pytest.approx(reg_inc_beta(2.5, 3.5, 0.3), abs=1e-15)
    # x rounds to 1 but its complement does not
    assert 0 < reg_inc_beta(0.5, 15, 1e-20) < 1e-9
    assert 1 - 1e-9 < reg_inc_beta(15, 0.5, 1.0, complement=1e-20) < 1
    with pytest.raises(UsageError):
        reg_inc_beta(1, 1, 0.5, complement=1.5)


def test_reg_inc_beta_argument_checks():
    with pytest.raises(UsageError):
        reg_inc_beta(0, 1, 0.5)
    with pytest.raises(UsageError):
        reg_inc_beta(1, 1, 1.5)


def test_reg_inc_beta_reports_non_convergence():
    with pytest.raises(NumericalError):
        reg_inc_beta(50, 50, 0.4, max_iterations=1)


# t distribution

def test_t_cdf_golden_tail():
    assert t_cdf(-4.14394682, 89) == pytest.approx(3.88116e-05, abs=1e-9)


def test_t_cdf_closed_forms():
    for t in np.linspace(-20, 20, 81):
        t = float(t)
        assert t_cdf(t, 1) == pytest.approx(0.5 + math.atan(t) / math.pi, abs=1e-10)
        assert t_cdf(t, 2) == pytest.approx(0.5 + t / (2 * math.sqrt(2 + t * t)), abs=1e-10)


def test_t_cdf_keeps_digits_near_zero():
    assert t_cdf(0.001, 1e5) == pytest.approx(0.50039894121655486, abs=1e-13)
    assert t_cdf(-0.001, 1e5) == pytest.approx(0.49960105878344514, abs=1e-13)
    assert t_cdf(1e-12, 30) > 0.5 > t_cdf(-1e-12, 30)


def test_t_cdf_keeps_relative_precision_in_far_tail():
    # df = 1 is Cauchy: P(T <= -t) = atan(1/t) / pi
    assert t_cdf(-1e8, 1) == pytest.approx(math.atan(1e-8) / math.pi, rel=1e-10)


def test_t_cdf_is_symmetric_and_monotone():
    ts = np.linspace(-8, 8, 161)
    for df in (1, 3, 30, 89):
        values = np.array([t_cdf(float(t), df) for t in ts])
        assert np.all((values >= 0) & (values <= 1))
        assert np.all(np.diff(values) >= -1e-15)
        assert t_cdf(0.0, df) == pytest.approx(0.5, abs=1e-15)
        assert t_cdf(1.7, df) + t_cdf(-1.7, df) == pytest.approx(1, abs=1e-12)
    assert t_cdf(float("-inf"), 5) == 0
    assert t_cdf(float("inf"), 5) == 1


@pytest.mark.parametrize("p, df, expected", [
    (0.95, 89, 1.662155326),
    (0.975, 89, 1.986978657),
    (0.5, 12, 0.0),
])
def test_t_inverse_golden(p, df, expected):
    assert t_inverse(p, df) == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize("df", [1, 5, 89])
@pytest.mark.parametrize("p", [0.01, 0.05, 0.5, 0.95, 0.99])
def test_t_inverse_round_trip(p, df):
    assert t_cdf(t_inverse(p, df), df) == pytest.approx(p, abs=1e-9)


def test_t_inverse_rejects_bad_probability():
    for p in (0.0, 1.0, -0.1):
        with pytest.raises(UsageError):
            t_inverse(p, 10)
    with pytest.raises(UsageError):
        t_cdf(1.0, 0)


# F distribution

def test_f_tail_golden():
    assert 1 - f_cdf(0.241033903, 2, 42) == pytest.approx(0.786894473, abs=1e-6)
    assert f_sf(0.241033903, 2, 42) == pytest.approx(0.786894473, abs=1e-6)


def test_f_inverse_golden():
    assert f_inverse(0.95, 2, 42) == pytest.approx(3.219942293, abs=1e-6)


def test_f_with_two_numerator_df_has_closed_form():
    for d2 in (5, 42, 100):
        for f in (0.1, 1.0, 3.5, 12.0):
            assert f_sf(f, 2, d2) == pytest.approx((1 + 2 * f / d2) ** (-d2 / 2), rel=1e-10)
        assert f_inverse(0.95, 2, d2) == pytest.approx(d2 / 2 * (0.05 ** (-2 / d2) - 1), rel=1e-9)


def test_f_cdf_symmetry_for_equal_df():
    for d in (3, 10):
        for f in (0.2, 0.9, 4.0):
            assert f_cdf(f, d, d) == pytest.approx(1 - f_cdf(1 / f, d, d), abs=1e-12)


def test_f_cdf_is_monotone():
    values = [f_cdf(float(f), 4, 20) for f in np.linspace(0, 10, 101)]
    assert values[0] == 0
    assert all(b >= a - 1e-15 for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("d1, d2", [(2, 42), (5, 10), (1, 1)])
@pytest.mark.parametrize("p", [0.01, 0.05, 0.5, 0.95, 0.99])
def test_f_inverse_round_trip(p, d1, d2):
    assert f_cdf(f_inverse(p, d1, d2), d1, d2) == pytest.approx(p, abs=1e-9)


def test_f_cdf_rejects_negative_f():
    with pytest.raises(UsageError):
        f_cdf(-1, 2, 3)


# Welch t-test

def test_welch_t_test_reproduces_survey_output():
    result = welch_t_test(SCIENCE, ENGINEERING)
    assert result.t_stat == pytest.approx(-4.14394682, abs=1e-6)
    assert result.df_displayed == 89
    assert result.df_exact == pytest.approx(89.47, abs=0.01)
    assert result.p_one_tail == pytest.approx(3.88116e-05, abs=1e-9)
    assert result.p_two_tail == pytest.approx(7.76231e-05, abs=2e-9)
    assert result.t_crit_one_tail == pytest.approx(1.662155326, abs=1e-6)
    assert result.t_crit_two_tail == pytest.approx(1.986978657, abs=1e-6)
    assert result.hypothesized_difference == 0
    assert result.alpha == 0.05


def test_welch_t_test_identical_groups():
    result = welch_t_test(Sample(values=[0, 1, 2]), Sample(values=[0, 1, 2]))
    assert result.t_stat == 0
    assert result.p_two_tail == pytest.approx(1)
    assert result.df_exact == pytest.approx(4)


def test_welch_t_test_on_summary_triples():
    g = SummaryStats(mean=0, variance=1, count=2)
    result = welch_t_test(g, g)
    assert result.df_exact == pytest.approx(2, rel=1e-12)
    assert result.df_displayed == 2
    assert result.t_stat == 0


def test_welch_df_for_equal_variances_and_sizes():
    for n in (2, 5, 46):
        g = SummaryStats(mean=0, variance=3.5, count=n)
        assert welch_satterthwaite_df(g, g) == pytest.approx(2 * n - 2, rel=1e-12)


def test_welch_t_test_samples_match_summaries():
    a = Sample(values=[12.1, 14.3, 11.8, 15.0, 13.2], label="a")
    b = Sample(values=[10.0, 9.4, 11.7, 10.8], label="b")
    from_samples = welch_t_test(a, b)
    from_summaries = welch_t_test(summarize(a), summarize(b))
    assert from_samples.t_stat == pytest.approx(from_summaries.t_stat, rel=1e-12)
    assert from_samples.group1.label == "a"


def test_welch_p_values_are_consistent():
    result = welch_t_test(Sample(values=[1, 2, 3, 4]), Sample(values=[2, 4, 6, 9, 12]), alpha=0.1)
    assert result.p_two_tail == pytest.approx(2 * result.p_one_tail)
    assert 0 <= result.p_one_tail <= 0.5
    assert result.alpha == 0.1


def test_welch_t_test_errors():
    with pytest.raises(NumericalError):
        welch_t_test(Sample(values=[1, 1, 1]), Sample(values=[2, 2]))
    with pytest.raises(UsageError):
        welch_t_test(Sample(values=[1]), Sample(values=[2, 3]))
    with pytest.raises(UsageError):
        welch_t_test(SCIENCE, ENGINEERING, alpha=1.5)


# ANOVA

def test_anova_reproduces_salary_survey():
    result = one_way_anova(FACULTY_GROUPS)
    assert result.ss_between == pytest.approx(152.93, abs=0.01)
    assert result.ms_between == pytest.approx(76.4667, abs=1e-3)
    assert (result.df_between, result.df_within, result.df_total) == (2, 42, 44)
    assert result.f_stat == pytest.approx(0.241033903, rel=1e-4)
    assert result.p_value == pytest.approx(0.786894473, rel=1e-4)
    assert result.f_crit == pytest.approx(3.219942293, abs=1e-6)


def test_anova_small_groups():
    result = one_way_anova([Sample(values=[1, 2, 3]), Sample(values=[4, 5, 6])])
    assert result.ss_between == pytest.approx(13.5)
    assert result.ss_within == pytest.approx(4)
    assert result.ss_total == pytest.approx(17.5)
    assert result.f_stat == pytest.approx(13.5)


def test_anova_identical_groups():
    result = one_way_anova([Sample(values=[1, 2, 3])] * 3)
    assert result.f_stat == 0
    assert result.p_value == 1


def test_anova_sums_of_squares_decompose():
    rng = np.random.default_rng(23)
    for _ in range(50):
        groups = [
            Sample(values=rng.normal(rng.uniform(-5, 5), rng.uniform(0.5, 3), size=int(rng.integers(2, 20))).tolist())
            for _ in range(int(rng.integers(2, 6)))
        ]
        result = one_way_anova(groups)
        assert result.ss_total == pytest.approx(result.ss_between + result.ss_within, rel=1e-9)


def test_two_group_anova_matches_pooled_t():
    rng = np.random.default_rng(29)
    for _ in range(50):
        a = rng.normal(0, 1, size=int(rng.integers(2, 15)))
        b = rng.normal(0.5, 1, size=int(rng.integers(2, 15)))
        n1, n2 = a.size, b.size
        pooled = ((n1 - 1) * a.var(ddof=1) + (n2 - 1) * b.var(ddof=1)) / (n1 + n2 - 2)
        t = (a.mean() - b.mean()) / math.sqrt(pooled * (1 / n1 + 1 / n2))
        result = one_way_anova([Sample(values=a.tolist()), Sample(values=b.tolist())])
        assert result.f_stat == pytest.approx(t * t, rel=1e-9)


def test_anova_errors():
    with pytest.raises(UsageError):
        one_way_anova([Sample(values=[1, 2, 3])])
    with pytest.raises(UsageError):
        one_way_anova([Sample(values=[1, 2]), Sample(values=[5])])
    with pytest.raises(NumericalError):
        one_way_anova([Sample(values=[1, 1]), Sample(values=[2, 2])])


# Grouped CSV input

def _write(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_csv_groups_in_order_of_first_appearance(tmp_path):
    path = _write(tmp_path, "group,value\nB,1\nA,2\nB,3\nA,4\nA,6\n")
    samples = GroupedCsvSource(path).samples()
    assert [s.label for s in samples] == ["B", "A"]
    assert samples[0].values == [1, 3]
    assert samples[1].values == [2, 4, 6]


def test_csv_header_is_case_insensitive_and_extra_columns_ignored(tmp_path):
    path = _write(tmp_path, "Value, Group, note\n1.5, x, first\n2.5, x, second\n")
    samples = read_samples(path)
    assert samples == [Sample(values=[1.5, 2.5], label="x")]


def test_csv_numeric_group_labels_stay_text(tmp_path):
    path = _write(tmp_path, "group,value\n01,1\n01,2\n2,3\n")
    assert [s.label for s in read_samples(path)] == ["01", "2"]


def test_csv_from_standard_input(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("group,value\na,1\na,2\n"))
    assert read_samples("-") == [Sample(values=[1, 2], label="a")]


def test_csv_select_labels(tmp_path):
    path = _write(tmp_path, "group,value\na,1\nb,2\nc,3\n")
    assert [s.label for s in read_samples(path, labels=["c", "a"])] == ["c", "a"]
    with pytest.raises(InputDataError):
        read_samples(path, labels=["a", "z"])


def test_csv_expected_group_count(tmp_path):
    path = _write(tmp_path, "group,value\na,1\na,2\n")
    with pytest.raises(InputDataError):
        read_samples(path, expected_groups=2)


@pytest.mark.parametrize("text, message", [
    ("", "empty"),
    ("group,value\n", "no observations"),
    ("label,value\na,1\n", "group"),
    ("group,value\na,1\na,oops\n", "line 3"),
])
def test_csv_rejects_malformed_input(tmp_path, text, message):
    path = _write(tmp_path, text)
    with pytest.raises(InputDataError) as err:
        read_samples(path)
    assert message in str(err.value)


def test_csv_missing_file(tmp_path):
    with pytest.raises(InputDataError):
        read_samples(tmp_path / "missing.csv")
