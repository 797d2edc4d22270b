"""Superposition-coding power allocation and block-fading scheduling simulator."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("scalloc")
except PackageNotFoundError:
    __version__ = "uninstalled"

__all__ = [
    "ChannelState",
    "PowerAllocation",
    "ScenarioConfig",
    "WeightVector",
    "allocate",
    "load_scenario",
    "run_experiment",
    "save_scenario",
]

from .allocation import allocate
from .config import ScenarioConfig, load_scenario, save_scenario
from .experiment import run_experiment
from .model import ChannelState, PowerAllocation, WeightVector
