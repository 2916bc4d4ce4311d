"""
Chart and command description schemas
"""
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import List, Optional, Tuple

from ..core.config import OutputFormat
from .stats import FiveNumberSummary


class BoxPlotSpec(BaseModel):
    """One box-and-whisker glyph per group on a shared value axis"""
    model_config = ConfigDict(frozen=True)

    groups: List[FiveNumberSummary] = Field(..., min_length=1)
    width: int = Field(..., ge=100, description="Canvas width in pixels")
    height: int = Field(..., ge=100, description="Canvas height in pixels")
    axis_range: Tuple[float, float] = Field(..., description="Value axis (low, high)")
    title: str = ""

    @model_validator(mode="after")
    def _check_axis(self) -> "BoxPlotSpec":
        low, high = self.axis_range
        if not low < high:
            raise ValueError("axis range must be increasing")
        for group in self.groups:
            if group.min < low or group.max > high:
                raise ValueError(f"axis range does not contain the whiskers of {group.label!r}")
        return self


class CommandSpec(BaseModel):
    """A parsed command-line invocation"""
    model_config = ConfigDict(frozen=True)

    subcommand: str
    output_format: OutputFormat = OutputFormat.TABLE
    csv_path: Optional[str] = Field(None, description="CSV input path, '-' for standard input")
    inline: bool = Field(True, description="Input given as flags on the command line")
    output_path: Optional[str] = Field(None, description="Write output here instead of standard output")

    @model_validator(mode="after")
    def _check_sources(self) -> "CommandSpec":
        if self.inline == (self.csv_path is not None):
            raise ValueError("exactly one input source is required: inline flags or a CSV path")
        if self.output_format == OutputFormat.SVG and self.subcommand not in ("plot", "boxplot"):
            raise ValueError("svg output is available only for plot and boxplot")
        return self
