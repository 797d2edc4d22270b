"""Configuration module."""

__all__ = [
    "GroupConfig",
    "PolicyConfig",
    "ScenarioConfig",
    "SweepConfig",
    "create_two_group_configuration",
    "load_scenario",
    "save_scenario",
]

from .configuration_factory import create_two_group_configuration
from .group_model import GroupConfig
from .policy_model import PolicyConfig
from .scenario_model import ScenarioConfig, load_scenario, save_scenario
from .sweep_model import SweepConfig
