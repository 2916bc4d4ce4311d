# Compound interest models
from .interest import compound_schedule, future_value, period_labels, period_rate

__all__ = ["compound_schedule", "future_value", "period_labels", "period_rate"]
