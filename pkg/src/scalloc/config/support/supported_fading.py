"""Fading models supported by scalloc."""

from scalloc.utils.base_enum import BaseEnum


class SupportedFading(str, BaseEnum):
    """Distributions of the instantaneous SNR.

    Attributes
    ----------
    EXPONENTIAL : str
        Rayleigh fading, exponential SNR with the group mean.
    DETERMINISTIC : str
        No fading, the SNR always equals the mean.
    """

    EXPONENTIAL = "exponential"
    DETERMINISTIC = "deterministic"
