"""Simulation runs, sweeps, comparisons and self-verification."""

__all__ = [
    "ExperimentReport",
    "PolicyComparison",
    "RuntimeStats",
    "ScheduledCountEntry",
    "SweepSeries",
    "VerificationReport",
    "WorkedExample",
    "canonical_json",
    "compare_policies",
    "run_experiment",
    "run_sweep",
    "run_worked_example",
    "steady_state_throughput",
    "verify",
]

from .report import (
    ExperimentReport,
    PolicyComparison,
    RuntimeStats,
    ScheduledCountEntry,
    SweepSeries,
    canonical_json,
)
from .runner import compare_policies, run_experiment, run_sweep, steady_state_throughput
from .verification import VerificationReport, verify
from .worked_example import WorkedExample, run_worked_example
