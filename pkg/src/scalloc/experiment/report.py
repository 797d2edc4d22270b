"""Experiment reports."""

from __future__ import annotations

import json
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class ScheduledCountEntry(BaseModel):
    """
    Probability of a number of scheduled users per group.

    Attributes
    ----------
    counts : list of int
        Scheduled users of each group, in group order.
    probability : float
        Fraction of measured blocks with these counts.
    """

    model_config = ConfigDict(extra="forbid")

    counts: List[int]
    probability: float = Field(ge=0, le=1)


class RuntimeStats(BaseModel):
    """Wall-clock cost of a run."""

    model_config = ConfigDict(extra="forbid")

    wall_time_s: float
    """Elapsed time in seconds."""

    blocks_per_second: float
    """Simulation speed."""

    memory_mb: float
    """Resident memory of the process at the end of the run, in MB."""


class ExperimentReport(BaseModel):
    """
    Measurements of one simulation run.

    Users are numbered group after group, throughputs are in bits per channel use
    averaged over the blocks following the warm-up.

    Attributes
    ----------
    experiment_name : str
        Name of the experiment.
    policy : str
        Scheduling policy.
    seed : int
        Base seed.
    n_blocks : int
        Simulated blocks.
    warmup : int
        Blocks excluded from the measurements.
    sweep_value : float or None
        Value of the swept parameter, None outside sweeps.
    group_names : list of str
        Groups, in order.
    user_groups : list of str
        Group of each user.
    per_user_throughput : list of float
        Average rate of each user.
    aggregate_throughput : float
        Sum of the per-user throughputs.
    group_throughput : dict of str to float
        Mean per-user throughput of each group.
    sched_count_dist : list of ScheduledCountEntry
        Distribution of the number of scheduled users per group.
    scheduled_count_mean : float
        Mean number of scheduled users per block.
    p2_dist : dict of str to float
        Distribution of the power of the two strongest allocations.
    dominance_violations : int
        Blocks where the SC objective fell below the best time-sharing user.
    runtime_stats : RuntimeStats or None
        Cost of the run, not part of the canonical form.
    """

    model_config = ConfigDict(extra="forbid")

    experiment_name: str
    policy: str
    seed: int
    n_blocks: int
    warmup: int
    sweep_value: Optional[float] = None
    group_names: List[str]
    user_groups: List[str]
    per_user_throughput: List[float]
    aggregate_throughput: float
    group_throughput: Dict[str, float]
    sched_count_dist: List[ScheduledCountEntry]
    scheduled_count_mean: float
    p2_dist: Dict[str, float]
    dominance_violations: int = 0
    runtime_stats: Optional[RuntimeStats] = None


class SweepSeries(BaseModel):
    """
    Reports of a sweep, one per value.

    Attributes
    ----------
    experiment_name : str
        Name of the experiment.
    parameter : str
        Swept parameter.
    group_names : list of str
        Groups of the scenario.
    values : list of float
        Sweep values.
    reports : list of ExperimentReport
        Report of each value, in order.
    """

    model_config = ConfigDict(extra="forbid")

    experiment_name: str
    parameter: str
    group_names: List[str]
    values: List[float]
    reports: List[ExperimentReport]

    def group_series(self, group: str) -> List[float]:
        """
        Group throughput along the sweep.

        Parameters
        ----------
        group : str
            Group name.

        Returns
        -------
        list of float
            Mean per-user throughput of `group` at each value.
        """
        return [report.group_throughput[group] for report in self.reports]


class PolicyComparison(BaseModel):
    """
    Reports of one scenario under several policies, on identical channel draws.

    Attributes
    ----------
    baseline : str
        Policy the others are compared to.
    reports : dict of str to ExperimentReport
        Report of each policy.
    """

    model_config = ConfigDict(extra="forbid")

    baseline: str
    reports: Dict[str, ExperimentReport]

    def throughput_ratio(self, policy: str) -> List[float]:
        """
        Per-user throughput of `policy` divided by the baseline's.

        Parameters
        ----------
        policy : str
            Compared policy.

        Returns
        -------
        list of float
            Ratio of each user.
        """
        base = self.reports[self.baseline].per_user_throughput
        other = self.reports[policy].per_user_throughput
        return [o / b for o, b in zip(other, base)]

    def group_ratio(self, policy: str, group: str) -> float:
        """
        Group throughput of `policy` divided by the baseline's.

        Parameters
        ----------
        policy : str
            Compared policy.
        group : str
            Group name.

        Returns
        -------
        float
            Ratio.
        """
        return (
            self.reports[policy].group_throughput[group]
            / self.reports[self.baseline].group_throughput[group]
        )


def canonical_json(report: Union[ExperimentReport, SweepSeries]) -> str:
    """
    Deterministic JSON form of a report, without run-time statistics.

    Two runs with the same configuration and seed give identical strings.

    Parameters
    ----------
    report : ExperimentReport or SweepSeries
        Report.

    Returns
    -------
    str
        JSON with sorted keys.
    """
    if isinstance(report, SweepSeries):
        exclude: dict = {"reports": {"__all__": {"runtime_stats"}}}
    else:
        exclude = {"runtime_stats": True}
    data = report.model_dump(mode="json", exclude=exclude)
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
