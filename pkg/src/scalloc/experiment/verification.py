"""
Self-check of the SC allocator against independent solvers.

Random instances are solved by the allocator and by the cumulative-power dynamic
program, and the allocator's result is checked for first-order optimality. Failed
checks are collected in the report rather than raised.
"""

from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..allocation import (
    AllocationProblem,
    PurgeDiagnostics,
    allocate,
    allocate_two_user,
    allocate_with_diagnostics,
    exhaustive_allocate,
)
from ..errors import ContractViolationError
from ..model import ChannelState, WeightVector, sc_objective, sc_rates_by_user
from ..model.tolerances import COMPARISON_TOL
from ..oracle import check_separable_identity, cumulative_dp_maximize, kkt_residuals
from ..utils import derive_generator, get_logger
from .worked_example import run_worked_example

logger = get_logger(__name__)

GAP_TOL = 1e-6
"""Largest relative shortfall of the allocator against the dynamic program."""

KKT_TOL = 1e-5
"""Largest relative violation of the first-order conditions."""

EXHAUSTIVE_MAX_USERS = 6
"""Instances up to this size are also compared with the exhaustive subset search."""


class VerificationReport(BaseModel):
    """
    Outcome of a verification run.

    Attributes
    ----------
    n_instances : int
        Number of random instances.
    l_min : int
        Smallest number of users.
    l_max : int
        Largest number of users.
    seed : int
        Seed of the instances.
    max_relative_gap : float
        Largest relative improvement of the dynamic program over the allocator.
    max_kkt_residual : float
        Largest relative violation of the first-order conditions.
    max_two_user_deviation : float
        Largest power difference with the two-user closed form.
    max_separable_deviation : float
        Largest difference between both forms of the objective.
    worked_example_ok : bool
        Whether the seven-user instance gives the expected solution.
    failures : list of str
        Description of every failed check.
    """

    model_config = ConfigDict(extra="forbid")

    n_instances: int
    l_min: int
    l_max: int
    seed: int
    max_relative_gap: float = 0.0
    max_kkt_residual: float = 0.0
    max_two_user_deviation: float = 0.0
    max_separable_deviation: float = 0.0
    worked_example_ok: bool = False
    failures: List[str] = []

    @property
    def passed(self) -> bool:
        """Whether every check passed.

        Returns
        -------
        bool
            True without failures.
        """
        return not self.failures


def random_instance(
    rng: np.random.Generator, n_users: int
) -> Tuple[ChannelState, WeightVector]:
    """
    Random instance with exponential SNRs and uniform weights.

    The mean SNR is uniform in [0.5, 10] and the weights uniform in [0.1, 30].

    Parameters
    ----------
    rng : numpy.random.Generator
        Generator.
    n_users : int
        Number of users.

    Returns
    -------
    (ChannelState, WeightVector)
        Instance.
    """
    mean_snr = rng.uniform(0.5, 10.0)
    return (
        ChannelState(rng.exponential(mean_snr, size=n_users)),
        WeightVector(rng.uniform(0.1, 30.0, size=n_users)),
    )


def _purge_failures(
    problem: AllocationProblem, diagnostics: PurgeDiagnostics
) -> List[str]:
    """Violated invariants of the purging passes.

    The active sets are nested, weights and `tau` strictly decrease along the first
    survivors, `nu` strictly increases along the second and the crossings strictly
    decrease in (0, 1).

    Parameters
    ----------
    problem : AllocationProblem
        Sorted problem.
    diagnostics : PurgeDiagnostics
        Intermediate results of the allocator.

    Returns
    -------
    list of str
        Description of each violated invariant, empty when all hold.
    """
    failures = []
    first = list(diagnostics.after_beta_tau)
    second = list(diagnostics.after_nu)
    third = list(diagnostics.after_crossing)
    if not (set(third) <= set(second) <= set(first)):
        failures.append("purge stages not nested")
    if not (
        np.all(np.diff(problem.beta[first]) < 0)
        and np.all(np.diff(diagnostics.tau[first]) < 0)
    ):
        failures.append("weights and tau not decreasing after the first pass")
    if not np.all(np.diff(diagnostics.nu[second]) > 0):
        failures.append("nu not increasing after the second pass")
    bounds = np.concatenate(([1.0], diagnostics.crossings, [0.0]))
    if np.any(np.diff(bounds) >= 0):
        failures.append("crossings not decreasing in (0, 1)")
    return failures


def _check_instance(
    index: int,
    state: ChannelState,
    weights: WeightVector,
    rng: np.random.Generator,
    report: VerificationReport,
    resolution: float,
) -> None:
    """Run every check on one instance and record the results in `report`.

    Parameters
    ----------
    index : int
        Instance number, used in failure messages.
    state : ChannelState
        SNRs.
    weights : WeightVector
        Weights.
    rng : numpy.random.Generator
        Generator of the separable-identity points.
    report : VerificationReport
        Report to update.
    resolution : float
        Grid step of the dynamic program.
    """
    failures = report.failures
    n_users = len(state)
    alloc, diagnostics = allocate_with_diagnostics(state, weights)
    objective = sc_objective(state, weights, alloc)
    scale = max(abs(objective), 1.0)

    problem = AllocationProblem.from_inputs(state, weights)
    for failure in _purge_failures(problem, diagnostics):
        failures.append(f"instance {index}: {failure}")

    rates = sc_rates_by_user(state, alloc).r
    if np.any(rates > np.log2(1.0 + state.snr) + 1e-12):
        failures.append(f"instance {index}: rate above the single-user capacity")

    vertex = float(np.max(weights.beta * np.log2(1.0 + state.snr)))
    if objective < vertex - COMPARISON_TOL * abs(vertex):
        failures.append(f"instance {index}: objective below the best single user")

    oracle = cumulative_dp_maximize(state, weights, resolution=resolution)
    gap = (oracle.objective - objective) / scale
    report.max_relative_gap = max(report.max_relative_gap, gap)
    if gap > GAP_TOL:
        failures.append(f"instance {index}: dynamic program better by {gap:.2e}")

    residual = kkt_residuals(state, weights, alloc).worst()
    report.max_kkt_residual = max(report.max_kkt_residual, residual)
    if residual > KKT_TOL:
        failures.append(f"instance {index}: KKT residual {residual:.2e}")

    deviation = check_separable_identity(problem, rng, n_points=4) / scale
    report.max_separable_deviation = max(report.max_separable_deviation, deviation)
    if deviation > 1e-10:
        failures.append(f"instance {index}: separable form off by {deviation:.2e}")

    if n_users == 2:
        closed = allocate_two_user(state, weights)
        two_user = float(np.max(np.abs(closed.p - alloc.p)))
        report.max_two_user_deviation = max(report.max_two_user_deviation, two_user)
        if two_user > 1e-12:
            failures.append(f"instance {index}: two-user closed form differs")

    if n_users <= EXHAUSTIVE_MAX_USERS:
        best = exhaustive_allocate(state, weights, n_users).objective
        if abs(best - objective) > COMPARISON_TOL * scale:
            failures.append(f"instance {index}: exhaustive search differs")


def verify(
    n_instances: int = 500,
    l_min: int = 2,
    l_max: int = 8,
    seed: int = 0,
    resolution: float = 1e-3,
) -> VerificationReport:
    """
    Check the allocator on random instances and on the seven-user example.

    Parameters
    ----------
    n_instances : int, optional
        Number of random instances, by default 500.
    l_min : int, optional
        Smallest number of users, by default 2.
    l_max : int, optional
        Largest number of users, by default 8.
    seed : int, optional
        Seed of the instances, by default 0.
    resolution : float, optional
        Grid step of the dynamic program, by default 1e-3.

    Returns
    -------
    VerificationReport
        Outcome, `passed` is False if any check failed.

    Raises
    ------
    ContractViolationError
        If the range of users is invalid.
    """
    if not 1 <= l_min <= l_max:
        raise ContractViolationError(
            f"Expected 1 <= l_min <= l_max (got l_min={l_min}, l_max={l_max})."
        )
    report = VerificationReport(
        n_instances=n_instances, l_min=l_min, l_max=l_max, seed=seed
    )
    instance_rng = derive_generator(seed, 0)
    identity_rng = derive_generator(seed, 1)

    for index in range(n_instances):
        n_users = int(instance_rng.integers(l_min, l_max + 1))
        state, weights = random_instance(instance_rng, n_users)
        _check_instance(index, state, weights, identity_rng, report, resolution)

    report.worked_example_ok = run_worked_example().matches_expected()
    if not report.worked_example_ok:
        report.failures.append("seven-user example does not match its solution")

    # allocation must not depend on the order of the users
    state, weights = random_instance(instance_rng, max(l_max, 2))
    order = instance_rng.permutation(len(state))
    direct = allocate(state, weights).p[order]
    permuted = allocate(
        ChannelState(state.snr[order]), WeightVector(weights.beta[order])
    )
    if not np.allclose(direct, permuted.p, rtol=0, atol=1e-12):
        report.failures.append("allocation depends on the order of the users")

    summary = (
        f"Verified {n_instances} instances: max gap {report.max_relative_gap:.2e}, "
        f"max KKT residual {report.max_kkt_residual:.2e}, "
        f"{len(report.failures)} failures."
    )
    if report.passed:
        logger.info(summary)
    else:
        logger.error(summary)
        for failure in report.failures[:20]:
            logger.error(f"  {failure}")
    return report
