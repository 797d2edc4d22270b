"""Block-fading channel generation."""

__all__ = [
    "ChannelSampler",
    "FadingSpec",
    "build_scenario",
    "db_to_linear",
    "sample_block",
    "sweep_scenarios",
    "user_generators",
]

from .fading import ChannelSampler, FadingSpec, sample_block, user_generators
from .scenario import build_scenario, db_to_linear, sweep_scenarios
