"""
Two-sample Welch t-test and single-factor ANOVA

Both accept raw Samples or SummaryStats, so published summary tables can be
fed in directly when the underlying observations are not available.
"""
import logging
import math
from typing import List, Optional, Sequence, Union

import numpy as np

from ...core.config import get_settings
from ...core.errors import NumericalError, UsageError
from ...schemas.stats import AnovaResult, Sample, SummaryStats, WelchTTestResult
from .descriptive import summarize
from .distributions import f_inverse, f_sf, t_cdf, t_inverse

logger = logging.getLogger(__name__)

GroupInput = Union[Sample, SummaryStats]

# absorbs rounding in the Welch df before truncation (3.9999999999999996 -> 4)
DF_TRUNCATION_SLACK = 1e-9


def _resolve_alpha(alpha: Optional[float]) -> float:
    alpha = get_settings().default_alpha if alpha is None else alpha
    if not 0.0 < alpha < 1.0:
        raise UsageError(f"alpha must lie strictly between 0 and 1, got {alpha!r}")
    return alpha


def _as_summary(group: GroupInput) -> SummaryStats:
    if isinstance(group, SummaryStats):
        if group.count < 2:
            raise UsageError(f"group {group.label or '?'} needs at least 2 observations, got {group.count}")
        return group
    if group.count < 2:
        raise UsageError(f"group {group.label or '?'} needs at least 2 observations, got {group.count}")
    return summarize(group)


def welch_satterthwaite_df(g1: SummaryStats, g2: SummaryStats) -> float:
    """Welch-Satterthwaite degrees of freedom"""
    a = g1.variance / g1.count
    b = g2.variance / g2.count
    return (a + b) ** 2 / (a * a / (g1.count - 1) + b * b / (g2.count - 1))


def welch_t_test(g1: GroupInput, g2: GroupInput, alpha: Optional[float] = None) -> WelchTTestResult:
    """
    t-Test: Two-Sample Assuming Unequal Variances

    p-values and critical values use the truncated degrees of freedom;
    the exact value is reported alongside.

    Raises:
        UsageError: a group with fewer than 2 observations, alpha outside (0, 1)
        NumericalError: both variances are zero
    """
    alpha = _resolve_alpha(alpha)
    s1, s2 = _as_summary(g1), _as_summary(g2)
    if s1.variance == 0 and s2.variance == 0:
        raise NumericalError("both groups have zero variance; the t statistic is undefined")

    standard_error = math.sqrt(s1.variance / s1.count + s2.variance / s2.count)
    mean_difference = s1.mean - s2.mean
    t_stat = mean_difference / standard_error
    df_exact = welch_satterthwaite_df(s1, s2)
    df_displayed = max(1, int(df_exact + DF_TRUNCATION_SLACK))

    p_one_tail = t_cdf(-abs(t_stat), df_displayed)
    p_two_tail = min(1.0, 2.0 * p_one_tail)
    logger.debug(f"Welch t={t_stat!r} df={df_exact!r} (displayed {df_displayed}) p={p_two_tail!r}")

    return WelchTTestResult(
        group1=s1,
        group2=s2,
        mean_difference=mean_difference,
        standard_error=standard_error,
        df_exact=df_exact,
        df_displayed=df_displayed,
        t_stat=t_stat,
        p_one_tail=p_one_tail,
        p_two_tail=p_two_tail,
        t_crit_one_tail=t_inverse(1.0 - alpha, df_displayed),
        t_crit_two_tail=t_inverse(1.0 - alpha / 2.0, df_displayed),
        alpha=alpha,
    )


def one_way_anova(groups: Sequence[GroupInput], alpha: Optional[float] = None) -> AnovaResult:
    """
    Single-factor ANOVA

    The total sum of squares comes from the raw observations when every group
    is a Sample; from summaries it is the between + within decomposition.

    Raises:
        UsageError: fewer than 2 groups, a group with fewer than 2 observations
        NumericalError: zero within-group variance
    """
    alpha = _resolve_alpha(alpha)
    if len(groups) < 2:
        raise UsageError(f"ANOVA needs at least 2 groups, got {len(groups)}")
    summaries: List[SummaryStats] = [_as_summary(g) for g in groups]

    counts = np.array([s.count for s in summaries], dtype=float)
    means = np.array([s.mean for s in summaries])
    variances = np.array([s.variance for s in summaries])
    total_count = int(counts.sum())
    grand_mean = float(np.dot(counts, means) / total_count)

    ss_between = float(np.dot(counts, (means - grand_mean) ** 2))
    ss_within = float(np.dot(counts - 1, variances))
    if all(isinstance(g, Sample) for g in groups):
        observations = np.concatenate([np.asarray(g.values, dtype=float) for g in groups])
        ss_total = float(np.sum((observations - grand_mean) ** 2))
    else:
        ss_total = ss_between + ss_within

    df_between = len(summaries) - 1
    df_within = total_count - len(summaries)
    ms_between = ss_between / df_between
    ms_within = ss_within / df_within
    if ms_within == 0:
        raise NumericalError("within-group variance is zero; the F statistic is undefined")
    f_stat = ms_between / ms_within
    p_value = f_sf(f_stat, df_between, df_within)
    logger.debug(f"ANOVA F={f_stat!r} df=({df_between}, {df_within}) p={p_value!r}")

    return AnovaResult(
        groups=summaries,
        ss_between=ss_between,
        ss_within=ss_within,
        ss_total=ss_total,
        df_between=df_between,
        df_within=df_within,
        df_total=df_between + df_within,
        ms_between=ms_between,
        ms_within=ms_within,
        f_stat=f_stat,
        p_value=p_value,
        f_crit=f_inverse(1.0 - alpha, df_between, df_within),
        alpha=alpha,
    )
