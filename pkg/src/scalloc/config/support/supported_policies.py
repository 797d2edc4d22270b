"""Scheduling policies supported by scalloc."""

from scalloc.utils.base_enum import BaseEnum

from .supported_rate_models import SupportedRateModel


class SupportedPolicy(str, BaseEnum):
    """Scheduling policies.

    Attributes
    ----------
    ROUND_ROBIN : str
        Users served in turn, independently of the channel.
    MAX_RATE : str
        User with the largest instantaneous rate.
    PF_TS : str
        User maximising the weighted rate under time sharing.
    SC : str
        Optimal superposition-coding allocation.
    SC_CAPPED : str
        Superposition coding with at most `k_max` users per block.
    """

    ROUND_ROBIN = "round_robin"
    MAX_RATE = "max_rate"
    PF_TS = "pf_ts"
    SC = "sc"
    SC_CAPPED = "sc_capped"

    @property
    def rate_model(self) -> SupportedRateModel:
        """Rate model the policy's allocations are evaluated with.

        Returns
        -------
        SupportedRateModel
            SC for superposition policies, TS otherwise.
        """
        if self in (SupportedPolicy.SC, SupportedPolicy.SC_CAPPED):
            return SupportedRateModel.SC
        return SupportedRateModel.TS
