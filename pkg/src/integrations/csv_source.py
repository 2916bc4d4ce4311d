"""
Long-format `group,value` CSV ingestion

The file needs a header row with (at least) the columns `group` and `value`;
one observation per row. `-` reads standard input.
"""
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Union

import pandas as pd

from ..core.errors import InputDataError
from ..schemas.stats import Sample

logger = logging.getLogger(__name__)

REQUIRED_COLUMNS = ("group", "value")

CsvInput = Union[str, Path, TextIO]


class GroupedCsvSource:
    """Reads labelled observations and splits them into Samples"""

    def __init__(self, source: CsvInput):
        self.source = source

    @property
    def name(self) -> str:
        if isinstance(self.source, (str, Path)):
            return "<stdin>" if str(self.source) == "-" else str(self.source)
        return getattr(self.source, "name", "<stream>")

    def load_frame(self) -> pd.DataFrame:
        """Parse and validate the CSV into a two-column frame"""
        handle = sys.stdin if isinstance(self.source, (str, Path)) and str(self.source) == "-" else self.source
        try:
            frame = pd.read_csv(handle, dtype={"group": str}, skipinitialspace=True)
        except FileNotFoundError:
            raise InputDataError(f"CSV file not found: {self.name}") from None
        except pd.errors.EmptyDataError:
            raise InputDataError(f"CSV input {self.name} is empty") from None
        except (pd.errors.ParserError, UnicodeDecodeError) as e:
            raise InputDataError(f"could not parse CSV input {self.name}: {e}") from None

        frame.columns = [str(c).strip().lower() for c in frame.columns]
        missing = [c for c in REQUIRED_COLUMNS if c not in frame.columns]
        if missing:
            raise InputDataError(f"CSV input {self.name} lacks column(s) {', '.join(missing)}; header must be group,value")
        frame = frame[list(REQUIRED_COLUMNS)].copy()
        if frame.empty:
            raise InputDataError(f"CSV input {self.name} has a header but no observations")

        if frame["group"].isna().any():
            line = int(frame.index[frame["group"].isna()][0]) + 2
            raise InputDataError(f"missing group label on line {line} of {self.name}")
        frame["group"] = frame["group"].str.strip()

        numeric = pd.to_numeric(frame["value"], errors="coerce")
        bad = numeric.isna()
        if bad.any():
            line = int(frame.index[bad][0]) + 2
            raise InputDataError(f"non-numeric value {frame['value'][bad].iloc[0]!r} on line {line} of {self.name}")
        frame["value"] = numeric.astype(float)

        logger.debug(f"Loaded {len(frame)} observations in {frame['group'].nunique()} group(s) from {self.name}")
        return frame

    def samples(self) -> List[Sample]:
        """One Sample per group, in order of first appearance"""
        frame = self.load_frame()
        return [
            Sample(values=group["value"].tolist(), label=str(label))
            for label, group in frame.groupby("group", sort=False)
        ]


def read_samples(source: CsvInput,
                 labels: Optional[Sequence[str]] = None,
                 expected_groups: Optional[int] = None) -> List[Sample]:
    """
    Load grouped samples, optionally selecting labels or enforcing a group count

    Raises:
        InputDataError: unreadable input, unknown labels, wrong number of groups
    """
    samples = GroupedCsvSource(source).samples()
    if labels:
        by_label = {s.label: s for s in samples}
        unknown = [label for label in labels if label not in by_label]
        if unknown:
            raise InputDataError(
                f"group(s) {', '.join(unknown)} not found; available: {', '.join(by_label)}"
            )
        samples = [by_label[label] for label in labels]
    if expected_groups is not None and len(samples) != expected_groups:
        raise InputDataError(f"expected {expected_groups} groups, found {len(samples)}")
    return samples
