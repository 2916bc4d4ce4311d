"""
Student's t and Fisher's F distributions: CDFs, upper tails and quantiles
"""
import logging
import math
from typing import Callable, Optional, Tuple

from ...core.config import get_settings
from ...core.errors import NumericalError, UsageError
from .special import ln_gamma, reg_inc_beta

logger = logging.getLogger(__name__)

# doubling limit when bracketing a quantile
MAX_BRACKET_DOUBLINGS = 1100


def _check_df(df: float, name: str = "df") -> None:
    if not df > 0:
        raise UsageError(f"{name} must be positive, got {df!r}")


def _check_probability(p: float) -> None:
    if not 0.0 < p < 1.0:
        raise UsageError(f"probability must lie strictly between 0 and 1, got {p!r}")


def _t_tail(t: float, df: float) -> float:
    """P(T > |t|)"""
    t2 = t * t
    total = df + t2
    if math.isinf(total):
        return 0.0
    # df/(df+t^2) nears 1 for small t; its complement is passed exactly
    return 0.5 * reg_inc_beta(df / 2.0, 0.5, df / total, complement=t2 / total)


def t_cdf(t: float, df: float) -> float:
    """P(T <= t) for Student's t with df degrees of freedom"""
    _check_df(df)
    if math.isinf(t):
        return 0.0 if t < 0 else 1.0
    tail = _t_tail(t, df)
    return tail if t <= 0 else 1.0 - tail


def t_pdf(t: float, df: float) -> float:
    """Density of Student's t"""
    _check_df(df)
    log_density = (
        ln_gamma((df + 1.0) / 2.0)
        - ln_gamma(df / 2.0)
        - 0.5 * math.log(df * math.pi)
        - (df + 1.0) / 2.0 * math.log1p(t * t / df)
    )
    return math.exp(log_density)


def _bracket_upper(tail: Callable[[float], float], q: float, start: float) -> Tuple[float, float]:
    """Find lo < hi with tail(lo) > q >= tail(hi) for a decreasing tail"""
    lo, hi = 0.0, start
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if tail(hi) <= q:
            return lo, hi
        lo, hi = hi, hi * 2.0
    raise NumericalError(f"could not bracket the quantile for tail probability {q!r}")


def t_inverse(p: float, df: float,
              tolerance: Optional[float] = None,
              max_iterations: Optional[int] = None) -> float:
    """
    The t with t_cdf(t, df) = p

    Solves on the smaller tail so tiny probabilities keep full precision;
    Newton steps on the density, falling back to bisection whenever a step
    leaves the current bracket.
    """
    _check_probability(p)
    _check_df(df)
    if p == 0.5:
        return 0.0
    settings = get_settings()
    tolerance = tolerance or settings.inverse_tolerance
    max_iterations = max_iterations or settings.inverse_max_iterations

    q = min(p, 1.0 - p)

    def upper_tail(t: float) -> float:
        return _t_tail(t, df)

    lo, hi = _bracket_upper(upper_tail, q, 1.0)
    t = 0.5 * (lo + hi)
    for _ in range(max_iterations):
        g = upper_tail(t) - q
        if g > 0:
            lo = t
        else:
            hi = t
        density = t_pdf(t, df)
        candidate = t + g / density if density > 0 else 0.5 * (lo + hi)
        if not lo < candidate < hi:
            candidate = 0.5 * (lo + hi)
        if abs(candidate - t) <= tolerance * (1.0 + abs(t)) or hi - lo <= tolerance * (1.0 + abs(t)):
            t = candidate
            break
        t = candidate
    else:
        logger.warning(f"t_inverse reached {max_iterations} iterations (p={p!r}, df={df!r})")
    return t if p > 0.5 else -t


def f_cdf(f: float, d1: float, d2: float) -> float:
    """P(X <= f) for the F distribution with (d1, d2) degrees of freedom"""
    _check_df(d1, "d1")
    _check_df(d2, "d2")
    if f < 0:
        raise UsageError(f"F must be non-negative, got {f!r}")
    if f == 0:
        return 0.0
    if math.isinf(f):
        return 1.0
    total = d1 * f + d2
    if math.isinf(total):
        return 1.0
    return reg_inc_beta(d1 / 2.0, d2 / 2.0, d1 * f / total, complement=d2 / total)


def f_sf(f: float, d1: float, d2: float) -> float:
    """P(X > f); equals 1 - f_cdf without the cancellation for small tails"""
    _check_df(d1, "d1")
    _check_df(d2, "d2")
    if f < 0:
        raise UsageError(f"F must be non-negative, got {f!r}")
    if f == 0:
        return 1.0
    if math.isinf(f):
        return 0.0
    total = d2 + d1 * f
    if math.isinf(total):
        return 0.0
    return reg_inc_beta(d2 / 2.0, d1 / 2.0, d2 / total, complement=d1 * f / total)


def f_inverse(p: float, d1: float, d2: float,
              tolerance: Optional[float] = None,
              max_iterations: Optional[int] = None) -> float:
    """The F with f_cdf(F, d1, d2) = p, by bracketing and bisection"""
    _check_probability(p)
    _check_df(d1, "d1")
    _check_df(d2, "d2")
    settings = get_settings()
    tolerance = tolerance or settings.inverse_tolerance
    max_iterations = max_iterations or settings.inverse_max_iterations

    lo, hi = _bracket_upper(lambda f: 1.0 - f_cdf(f, d1, d2), 1.0 - p, 1.0)
    for _ in range(max_iterations):
        mid = 0.5 * (lo + hi)
        if f_cdf(mid, d1, d2) < p:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tolerance * (1.0 + hi):
            break
    else:
        logger.warning(f"f_inverse reached {max_iterations} iterations (p={p!r}, d1={d1!r}, d2={d2!r})")
    return 0.5 * (lo + hi)
