"""Channel, weight, power and rate types with the TS and SC rate models."""

__all__ = [
    "COMPARISON_TOL",
    "SIMPLEX_TOL",
    "ChannelState",
    "PowerAllocation",
    "RateVector",
    "WeightVector",
    "rate_region",
    "remaining_power",
    "sc_objective",
    "sc_rates",
    "sc_rates_by_user",
    "ts_rates",
    "weighted_objective",
]

from .rates import (
    rate_region,
    remaining_power,
    sc_objective,
    sc_rates,
    sc_rates_by_user,
    ts_rates,
    weighted_objective,
)
from .tolerances import COMPARISON_TOL, SIMPLEX_TOL
from .types import ChannelState, PowerAllocation, RateVector, WeightVector
