"""
Descriptive statistics over a Sample (or any sequence of numbers)
"""
import logging
from typing import Sequence, Union

import numpy as np

from ...core.errors import UsageError
from ...schemas.stats import FiveNumberSummary, Sample, SummaryStats

logger = logging.getLogger(__name__)

SampleLike = Union[Sample, Sequence[float], np.ndarray]

QUARTILE_POINTS = (0.0, 0.25, 0.5, 0.75, 1.0)


def _values(sample: SampleLike) -> np.ndarray:
    values = sample.values if isinstance(sample, Sample) else sample
    array = np.asarray(values, dtype=float)
    if array.ndim != 1 or array.size == 0:
        raise UsageError("sample must contain at least one value")
    return array


def _label(sample: SampleLike) -> str:
    return sample.label if isinstance(sample, Sample) else ""


def mean(sample: SampleLike) -> float:
    """Arithmetic mean"""
    return float(np.mean(_values(sample)))


def sample_variance(sample: SampleLike) -> float:
    """Sample variance with the n-1 denominator"""
    values = _values(sample)
    if values.size < 2:
        raise UsageError(f"sample variance needs at least 2 values, got {values.size}")
    return float(np.var(values, ddof=1))


def summarize(sample: SampleLike) -> SummaryStats:
    """Mean, sample variance and count of a group with at least two values"""
    values = _values(sample)
    return SummaryStats(
        mean=mean(values),
        variance=sample_variance(values),
        count=int(values.size),
        label=_label(sample),
    )


def quartile_inclusive(sample: SampleLike, q: float) -> float:
    """
    Inclusive quantile: position 1 + (n-1)q on the sorted values,
    interpolated linearly between its neighbours
    """
    if not 0.0 <= q <= 1.0:
        raise UsageError(f"quartile point must lie in [0, 1], got {q!r}")
    return float(np.quantile(_values(sample), q, method="linear"))


def five_number_summary(sample: SampleLike) -> FiveNumberSummary:
    """min, q1, median, q3, max"""
    points = np.quantile(_values(sample), QUARTILE_POINTS, method="linear")
    # keep the record ordered if interpolation rounds across a neighbour
    points = np.maximum.accumulate(points)
    low, q1, median, q3, high = (float(p) for p in points)
    return FiveNumberSummary(min=low, q1=q1, median=median, q3=q3, max=high, label=_label(sample))
