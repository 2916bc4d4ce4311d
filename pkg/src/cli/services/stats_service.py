"""
t-test, ANOVA, five-number summary and box-plot commands
"""
import logging
from typing import List, Optional, Sequence, Union

from ...core.config import OutputFormat
from ...core.errors import InputDataError
from ...integrations.csv_source import read_samples
from ...models.stats import five_number_summary, one_way_anova, welch_t_test
from ...schemas.stats import FiveNumberSummary, Sample, SummaryStats
from .. import charts, formatting
from .output import CommandOutput

logger = logging.getLogger(__name__)

GroupInput = Union[Sample, SummaryStats]


class StatisticsService:
    """
    Hypothesis tests and quartile summaries over CSV groups or summary statistics
    """

    def ttest(self, csv_path: Optional[str] = None,
              labels: Optional[Sequence[str]] = None,
              summaries: Optional[Sequence[SummaryStats]] = None,
              alpha: Optional[float] = None,
              output_format: OutputFormat = OutputFormat.TABLE) -> CommandOutput:
        """
        Welch t-test of two groups

        From CSV the file must hold exactly two groups unless `labels` picks two.
        """
        if csv_path is not None:
            groups: List[GroupInput] = list(read_samples(csv_path, labels=labels, expected_groups=2))
        else:
            groups = list(summaries or [])
            if len(groups) != 2:
                raise InputDataError(f"t-test needs exactly 2 groups, got {len(groups)}")
        result = welch_t_test(groups[0], groups[1], alpha)
        if output_format == OutputFormat.CSV:
            return CommandOutput(formatting.ttest_csv(result))
        return CommandOutput(formatting.ttest_table(result))

    def anova(self, csv_path: Optional[str] = None,
              summaries: Optional[Sequence[SummaryStats]] = None,
              alpha: Optional[float] = None,
              output_format: OutputFormat = OutputFormat.TABLE) -> CommandOutput:
        groups: List[GroupInput] = list(read_samples(csv_path)) if csv_path is not None else list(summaries or [])
        result = one_way_anova(groups, alpha)
        if output_format == OutputFormat.CSV:
            return CommandOutput(formatting.anova_csv(result))
        return CommandOutput(formatting.anova_table(result))

    def five_number_summaries(self, csv_path: str) -> List[FiveNumberSummary]:
        return [five_number_summary(sample) for sample in read_samples(csv_path)]

    def summary(self, csv_path: str, output_format: OutputFormat = OutputFormat.TABLE) -> CommandOutput:
        summaries = self.five_number_summaries(csv_path)
        if output_format == OutputFormat.CSV:
            return CommandOutput(formatting.summary_csv(summaries))
        return CommandOutput(formatting.summary_table(summaries))

    def boxplot(self, csv_path: str, output_format: OutputFormat = OutputFormat.SVG) -> CommandOutput:
        """Box plot SVG; table and csv formats give the summary instead"""
        if output_format != OutputFormat.SVG:
            return self.summary(csv_path, output_format)
        spec = charts.box_plot_spec(self.five_number_summaries(csv_path))
        return CommandOutput(charts.box_plot(spec))
