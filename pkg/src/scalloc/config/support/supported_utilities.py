"""Utility functions supported by scalloc."""

from scalloc.utils.base_enum import BaseEnum


class SupportedUtility(str, BaseEnum):
    """Network utilities driving the per-block weights.

    Attributes
    ----------
    PROPORTIONAL_FAIR : str
        Sum of log-throughputs, weights `1 / R~_l`.
    SUM_RATE : str
        Sum of throughputs, unit weights.
    """

    PROPORTIONAL_FAIR = "proportional_fair"
    SUM_RATE = "sum_rate"
