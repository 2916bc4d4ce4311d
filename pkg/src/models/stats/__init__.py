"""
Statistics models: descriptive summaries, Welch t-test, ANOVA and the
distribution functions they rest on
"""
from .descriptive import five_number_summary, mean, quartile_inclusive, sample_variance, summarize
from .distributions import f_cdf, f_inverse, f_sf, t_cdf, t_inverse, t_pdf
from .hypothesis import one_way_anova, welch_satterthwaite_df, welch_t_test
from .special import ln_beta, ln_gamma, reg_inc_beta

__all__ = [
    "five_number_summary",
    "mean",
    "quartile_inclusive",
    "sample_variance",
    "summarize",
    "f_cdf",
    "f_inverse",
    "f_sf",
    "t_cdf",
    "t_inverse",
    "t_pdf",
    "one_way_anova",
    "welch_satterthwaite_df",
    "welch_t_test",
    "ln_beta",
    "ln_gamma",
    "reg_inc_beta",
]
