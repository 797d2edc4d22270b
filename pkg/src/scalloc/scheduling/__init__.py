"""Throughput tracking and per-block scheduling policies."""

__all__ = [
    "EPSILON",
    "ThroughputTracker",
    "best_vertex",
    "rr_reference_throughput",
    "schedule_block",
    "weights_from_utility",
]

from .policies import best_vertex, schedule_block
from .reference import rr_reference_throughput
from .tracker import EPSILON, ThroughputTracker
from .utility import weights_from_utility
