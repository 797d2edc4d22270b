"""
SC allocation with at most `k_max` active users.

Restricting the number of superposed users keeps receivers simple. The greedy search
adds users one at a time while the objective improves; the exhaustive search solves
the unconstrained problem on every subset of at most `k_max` users and serves as its
reference.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import ContractViolationError, EnumerationBudgetError
from ..model import ChannelState, PowerAllocation, WeightVector, sc_objective
from ..model.tolerances import IMPROVEMENT_TOL
from ..utils import get_logger
from .sc_allocator import allocate

logger = get_logger(__name__)

ENUMERATION_BUDGET = 1_000_000
"""Largest number of subsets the exhaustive search enumerates."""


@dataclass(frozen=True, eq=False)
class ConstrainedResult:
    """
    Result of a user-capped allocation.

    Attributes
    ----------
    alloc : PowerAllocation
        Allocation over all users.
    active : tuple of int
        Users with positive power.
    objective : float
        Weighted SC sum rate of `alloc`.
    """

    alloc: PowerAllocation
    active: Tuple[int, ...]
    objective: float


def _check_inputs(state: ChannelState, weights: WeightVector, k_max: int) -> int:
    """Validate the inputs and return the number of users.

    Parameters
    ----------
    state : ChannelState
        SNRs.
    weights : WeightVector
        Weights.
    k_max : int
        User cap.

    Returns
    -------
    int
        Number of users.

    Raises
    ------
    ContractViolationError
        If the lengths differ or `k_max < 1`.
    """
    if len(state) != len(weights):
        raise ContractViolationError(
            f"SNR and weight vectors differ in length ({len(state)} and "
            f"{len(weights)})."
        )
    if k_max < 1:
        raise ContractViolationError(f"k_max must be at least 1 (got {k_max}).")
    return len(state)


def solve_subset(
    state: ChannelState, weights: WeightVector, subset: Sequence[int]
) -> Tuple[PowerAllocation, float]:
    """
    Optimal SC allocation restricted to `subset`, embedded over all users.

    Users outside the subset get no power, which leaves the rates of the others
    unchanged.

    Parameters
    ----------
    state : ChannelState
        SNRs of all users.
    weights : WeightVector
        Weights of all users.
    subset : sequence of int
        Allowed users, increasing.

    Returns
    -------
    (PowerAllocation, float)
        Allocation over all users and its objective.
    """
    index = np.asarray(subset, dtype=np.intp)
    sub_state = ChannelState(state.snr[index])
    sub_weights = WeightVector(weights.beta[index])
    sub_alloc = allocate(sub_state, sub_weights)

    p = np.zeros(len(state))
    p[index] = sub_alloc.p
    return PowerAllocation(p), sc_objective(sub_state, sub_weights, sub_alloc)


def greedy_allocate(
    state: ChannelState, weights: WeightVector, k_max: int
) -> ConstrainedResult:
    """
    Add users one at a time while the weighted SC sum rate improves.

    The first user is the one maximising `beta_l log2(1 + snr_l)`. Each following
    round tries every remaining user, keeps the best subset and stops when the
    objective does not improve by more than a relative 1e-12 or when `k_max` users
    were selected. Ties go to the smallest user index.

    Parameters
    ----------
    state : ChannelState
        SNRs, any order.
    weights : WeightVector
        Weights.
    k_max : int
        Maximum number of active users, at least 1.

    Returns
    -------
    ConstrainedResult
        Allocation with at most `k_max` active users.
    """
    n_users = _check_inputs(state, weights, k_max)
    k_max = min(k_max, n_users)

    first = int(np.argmax(weights.beta * np.log2(1.0 + state.snr)))
    selected = [first]
    alloc, objective = solve_subset(state, weights, selected)

    while len(selected) < k_max:
        best: Optional[Tuple[int, PowerAllocation, float]] = None
        for candidate in range(n_users):
            if candidate in selected:
                continue
            trial_alloc, trial_objective = solve_subset(
                state, weights, sorted([*selected, candidate])
            )
            if best is None or trial_objective > best[2]:
                best = (candidate, trial_alloc, trial_objective)

        if best is None or best[2] <= objective + IMPROVEMENT_TOL * abs(objective):
            break
        selected.append(best[0])
        alloc, objective = best[1], best[2]

    return ConstrainedResult(alloc=alloc, active=alloc.active, objective=objective)


def exhaustive_allocate(
    state: ChannelState, weights: WeightVector, k_max: int
) -> ConstrainedResult:
    """
    Best allocation over all subsets of at most `k_max` users.

    Subsets are visited by increasing size, then in lexicographic order; the first
    subset reaching the best objective wins.

    Parameters
    ----------
    state : ChannelState
        SNRs, any order.
    weights : WeightVector
        Weights.
    k_max : int
        Maximum number of active users, at least 1.

    Returns
    -------
    ConstrainedResult
        Optimal allocation with at most `k_max` active users.

    Raises
    ------
    EnumerationBudgetError
        If more than one million subsets would be enumerated.
    """
    n_users = _check_inputs(state, weights, k_max)
    k_max = min(k_max, n_users)

    n_subsets = sum(comb(n_users, k) for k in range(1, k_max + 1))
    if n_subsets > ENUMERATION_BUDGET:
        raise EnumerationBudgetError(
            f"Exhaustive search over {n_subsets} subsets exceeds the budget of "
            f"{ENUMERATION_BUDGET} (L={n_users}, k_max={k_max})."
        )

    best: Optional[Tuple[PowerAllocation, float]] = None
    for size in range(1, k_max + 1):
        for subset in combinations(range(n_users), size):
            trial_alloc, trial_objective = solve_subset(state, weights, subset)
            if best is None or trial_objective > best[1]:
                best = (trial_alloc, trial_objective)

    assert best is not None
    alloc, objective = best
    return ConstrainedResult(alloc=alloc, active=alloc.active, objective=objective)


def greedy_gap(
    state: ChannelState, weights: WeightVector, k_max: int
) -> float:
    """
    Relative gap between the exhaustive and the greedy objectives.

    The gap is logged at debug level when positive.

    Parameters
    ----------
    state : ChannelState
        SNRs.
    weights : WeightVector
        Weights.
    k_max : int
        User cap.

    Returns
    -------
    float
        `(exhaustive - greedy) / |exhaustive|`, 0 when both objectives vanish.
    """
    greedy = greedy_allocate(state, weights, k_max).objective
    exhaustive = exhaustive_allocate(state, weights, k_max).objective
    if exhaustive == 0:
        return 0.0
    gap = (exhaustive - greedy) / abs(exhaustive)
    if gap > 0:
        logger.debug(f"Greedy allocation {gap:.3e} below exhaustive (k_max={k_max}).")
    return gap
