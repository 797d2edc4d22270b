"""
Block-fading simulations.

A run draws the SNRs of every block, lets the policy allocate power given the current
average throughputs, updates the averages with the achieved rates and measures the
blocks after the warm-up.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from ..channel import ChannelSampler, build_scenario, sweep_scenarios
from ..config import PolicyConfig, ScenarioConfig
from ..config.support import SupportedRateModel
from ..errors import ContractViolationError
from ..model import ChannelState, PowerAllocation, WeightVector, sc_objective
from ..model.tolerances import COMPARISON_TOL
from ..scheduling import (
    ThroughputTracker,
    best_vertex,
    schedule_block,
    weights_from_utility,
)
from ..utils import ProgressBar, get_logger, get_process_memory
from ..utils.ram import get_available_memory
from .metrics import MetricsAccumulator
from .report import ExperimentReport, PolicyComparison, RuntimeStats, SweepSeries

logger = get_logger(__name__)

_PROGRESS_EVERY = 1000


def _below_time_sharing(
    state: ChannelState, weights: WeightVector, alloc: PowerAllocation
) -> bool:
    """Whether an SC allocation is worse than the best single user.

    Parameters
    ----------
    state : ChannelState
        SNRs.
    weights : WeightVector
        Weights of the block.
    alloc : PowerAllocation
        SC allocation.

    Returns
    -------
    bool
        True if the weighted SC rate is below the best time-sharing choice.
    """
    user = best_vertex(state, weights)
    vertex = float(weights.beta[user] * np.log2(1.0 + state.snr[user]))
    return sc_objective(state, weights, alloc) < vertex - COMPARISON_TOL * abs(vertex)


def run_experiment(
    config: ScenarioConfig,
    sweep_value: Optional[float] = None,
    show_progress: bool = False,
) -> ExperimentReport:
    """
    Simulate a scenario.

    Parameters
    ----------
    config : ScenarioConfig
        Scenario, its sweep is ignored.
    sweep_value : float or None, optional
        Value recorded in the report when the run is a sweep point, by default None.
    show_progress : bool, optional
        Whether to display a progress bar, by default False.

    Returns
    -------
    ExperimentReport
        Measurements of the run.

    Raises
    ------
    ContractViolationError
        If a block violates a precondition, with the block index in the message.
    """
    policy = config.policy
    specs = build_scenario(config)
    sampler = ChannelSampler(specs, seed=config.seed)
    tracker = ThroughputTracker(n_users=len(specs), window=config.window)
    metrics = MetricsAccumulator(
        config.user_groups(), config.group_names, config.scheduled_threshold
    )
    check_dominance = policy.kind.rate_model == SupportedRateModel.SC
    warmup = config.warmup if config.warmup is not None else config.window
    progress = ProgressBar(config.n_blocks) if show_progress else None

    logger.info(
        f"Running '{config.experiment_name}' with policy {policy.kind.value}, "
        f"{len(specs)} users, {config.n_blocks} blocks."
    )
    violations = 0
    start = time.perf_counter()
    for block in range(config.n_blocks):
        state = sampler.sample_block()
        try:
            alloc, rates = schedule_block(policy, state, tracker, block)
            if check_dominance and _below_time_sharing(
                state, weights_from_utility(policy.utility, tracker), alloc
            ):
                violations += 1
        except ContractViolationError as error:
            raise ContractViolationError(f"Block {block}: {error}") from error

        tracker.update(rates)
        if block >= warmup:
            metrics.update(alloc, rates)
        if progress is not None and (block + 1) % _PROGRESS_EVERY == 0:
            progress.add(_PROGRESS_EVERY)
    elapsed = time.perf_counter() - start

    if progress is not None:
        progress.update(config.n_blocks)
    if violations:
        logger.warning(
            f"SC allocation below the best time-sharing user in {violations} blocks."
        )

    throughput = metrics.per_user_throughput()
    report = ExperimentReport(
        experiment_name=config.experiment_name,
        policy=policy.kind.value,
        seed=config.seed,
        n_blocks=config.n_blocks,
        warmup=warmup,
        sweep_value=sweep_value,
        group_names=config.group_names,
        user_groups=config.user_groups(),
        per_user_throughput=[float(t) for t in throughput],
        aggregate_throughput=float(np.sum(throughput)),
        group_throughput=metrics.group_throughput(),
        sched_count_dist=metrics.sched_count_dist(),
        scheduled_count_mean=metrics.scheduled_count_mean(),
        p2_dist=metrics.p2_dist(),
        dominance_violations=violations,
        runtime_stats=RuntimeStats(
            wall_time_s=elapsed,
            blocks_per_second=config.n_blocks / elapsed if elapsed > 0 else 0.0,
            memory_mb=get_process_memory(),
        ),
    )
    logger.info(
        f"Finished '{config.experiment_name}' in {elapsed:.1f} s, aggregate "
        f"throughput {report.aggregate_throughput:.4f}."
    )
    return report


def steady_state_throughput(
    policy: PolicyConfig, scenario: ScenarioConfig, n_blocks: int
) -> NDArray:
    """
    Per-user throughput of `policy` on `scenario` after the warm-up.

    Parameters
    ----------
    policy : PolicyConfig
        Scheduling policy, replacing the scenario's.
    scenario : ScenarioConfig
        Scenario.
    n_blocks : int
        Number of blocks, at least ten windows.

    Returns
    -------
    NDArray
        Throughput of each user.
    """
    data = scenario.with_policy(policy).model_dump()
    data["n_blocks"] = n_blocks
    data["sweep"] = None
    report = run_experiment(ScenarioConfig.model_validate(data))
    return np.array(report.per_user_throughput)


def _run_point(point: ScenarioConfig, value: float) -> ExperimentReport:
    """Run a sweep point, module level so that worker processes can pickle it.

    Parameters
    ----------
    point : ScenarioConfig
        Scenario of the point.
    value : float
        Sweep value.

    Returns
    -------
    ExperimentReport
        Report of the point.
    """
    logger.info(f"Sweep point {value}.")
    return run_experiment(point, sweep_value=value)


def run_sweep(
    config: ScenarioConfig,
    values: Optional[Sequence[float]] = None,
    n_workers: int = 1,
) -> SweepSeries:
    """
    Simulate every point of the scenario's sweep.

    All points use the base seed. With several workers, points run in separate
    processes; the reports do not depend on the number of workers.

    Parameters
    ----------
    config : ScenarioConfig
        Scenario with a sweep.
    values : sequence of float or None, optional
        Values replacing those of the configured sweep, by default None.
    n_workers : int, optional
        Number of worker processes, by default 1.

    Returns
    -------
    SweepSeries
        One report per value, in order.

    Raises
    ------
    ValueError
        If the scenario has no sweep.
    """
    if config.sweep is None:
        raise ValueError(f"Scenario '{config.experiment_name}' defines no sweep.")
    if values is not None:
        config = config.model_copy(deep=True)
        assert config.sweep is not None
        config.sweep.values = list(values)

    assert config.sweep is not None
    sweep_values = list(config.sweep.values)
    points = sweep_scenarios(config)
    logger.info(
        f"Sweeping {config.sweep.parameter} over {len(points)} points with "
        f"{n_workers} worker(s), {get_available_memory():.0f} MB available."
    )

    if n_workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as executor:
            reports = list(executor.map(_run_point, points, sweep_values))
    else:
        reports = [
            _run_point(point, value) for point, value in zip(points, sweep_values)
        ]

    return SweepSeries(
        experiment_name=config.experiment_name,
        parameter=config.sweep.parameter,
        group_names=config.group_names,
        values=sweep_values,
        reports=reports,
    )


def compare_policies(
    config: ScenarioConfig, policies: Sequence[PolicyConfig]
) -> PolicyComparison:
    """
    Run the scenario under each policy on identical channel draws.

    Parameters
    ----------
    config : ScenarioConfig
        Scenario, its policy and sweep are ignored.
    policies : sequence of PolicyConfig
        Policies, the first one is the baseline. Kinds must be distinct.

    Returns
    -------
    PolicyComparison
        Report of each policy.

    Raises
    ------
    ValueError
        If no policy is given or two policies share a kind.
    """
    kinds = [policy.kind.value for policy in policies]
    if not kinds or len(set(kinds)) != len(kinds):
        raise ValueError(f"Policies must be non-empty and distinct (got {kinds}).")

    reports = {}
    for policy in policies:
        point = config.with_policy(policy)
        point.sweep = None
        reports[policy.kind.value] = run_experiment(point)
    return PolicyComparison(baseline=kinds[0], reports=reports)
