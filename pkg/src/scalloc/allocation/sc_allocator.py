"""
Optimal power allocation under superposition coding.

The weighted SC sum rate equals the integral over the cumulative power `s` in [0, 1]
of the marginal utility of the user served at `s`. Any two marginal utilities cross
at most once, so the upper envelope of all of them is achievable and optimal: the
active users are those appearing on the envelope, and each receives the length of
its envelope interval. After sorting, the allocation takes linear time.
"""

from typing import List, Tuple

import numpy as np

from ..errors import ContractViolationError
from ..model import ChannelState, PowerAllocation, WeightVector
from .problem import AllocationProblem, PurgeDiagnostics
from .purging import nu_tau, purge_beta_tau, purge_crossing, purge_nu


def _check_crossings(active: List[int], crossings: List[float]) -> None:
    """Validate the active positions and crossings passed to `assign_powers`.

    Parameters
    ----------
    active : list of int
        Active sorted positions.
    crossings : list of float
        Crossing points of consecutive active users.

    Raises
    ------
    ContractViolationError
        If `active` is empty or not increasing, or if the crossings are not
        `len(active) - 1` strictly decreasing points of (0, 1).
    """
    if len(active) == 0 or any(b <= a for a, b in zip(active, active[1:])):
        raise ContractViolationError(
            f"Active positions must be non-empty and increasing (got {active})."
        )
    if len(crossings) != len(active) - 1:
        raise ContractViolationError(
            f"Expected {len(active) - 1} crossings for {len(active)} active users "
            f"(got {len(crossings)})."
        )
    bounds = np.concatenate(([1.0], crossings, [0.0]))
    if np.any(np.diff(bounds) >= 0):
        raise ContractViolationError(
            f"Crossings must be strictly decreasing in (0, 1) (got {crossings})."
        )


def assign_powers(
    problem: AllocationProblem, active: List[int], crossings: List[float]
) -> PowerAllocation:
    """
    Powers of the active users from their consecutive crossing points.

    The strongest active user receives its crossing with the next weaker user, each
    middle user the difference of its two crossings and the weakest user the rest.

    Parameters
    ----------
    problem : AllocationProblem
        Sorted problem.
    active : list of int
        Active sorted positions, increasing.
    crossings : list of float
        `crossings[i]` is the crossing of `active[i + 1]` with `active[i]`, strictly
        decreasing.

    Returns
    -------
    PowerAllocation
        Allocation in the caller's order.

    Raises
    ------
    ContractViolationError
        If the crossings are not strictly decreasing points of (0, 1), one per
        consecutive pair of active users.
    """
    _check_crossings(active, crossings)
    bounds = np.concatenate(([1.0], crossings, [0.0]))
    p_sorted = np.zeros(problem.n_users)
    p_sorted[active] = bounds[:-1] - bounds[1:]
    return problem.to_original(p_sorted)


def _solve(problem: AllocationProblem) -> Tuple[PowerAllocation, PurgeDiagnostics]:
    """Run the three passes and assign the powers.

    Parameters
    ----------
    problem : AllocationProblem
        Sorted problem.

    Returns
    -------
    (PowerAllocation, PurgeDiagnostics)
        Allocation and intermediate results.
    """
    nu, tau = nu_tau(problem)
    after_beta_tau, n_first = purge_beta_tau(problem, tau)
    after_nu, n_second = purge_nu(after_beta_tau, nu)
    active, crossings, n_third = purge_crossing(problem, after_nu, nu)

    alloc = assign_powers(problem, active, crossings)
    diagnostics = PurgeDiagnostics(
        nu=nu,
        tau=tau,
        after_beta_tau=tuple(after_beta_tau),
        after_nu=tuple(after_nu),
        after_crossing=tuple(active),
        crossings=tuple(crossings),
        n_comparisons=n_first + n_second + n_third,
    )
    return alloc, diagnostics


def allocate(state: ChannelState, weights: WeightVector) -> PowerAllocation:
    """
    Power allocation maximising the weighted SC sum rate.

    Parameters
    ----------
    state : ChannelState
        SNR of each user, any order.
    weights : WeightVector
        Positive weights, same order.

    Returns
    -------
    PowerAllocation
        Optimal allocation in the caller's order.

    Raises
    ------
    ContractViolationError
        If the vectors differ in length.

    Examples
    --------
    >>> from scalloc.allocation import allocate
    >>> from scalloc.model import ChannelState, WeightVector
    >>> allocate(ChannelState([1.0, 5.0]), WeightVector([3.0, 1.0])).p.round(6).tolist()
    [0.8, 0.2]
    """
    alloc, _ = _solve(AllocationProblem.from_inputs(state, weights))
    return alloc


def allocate_with_diagnostics(
    state: ChannelState, weights: WeightVector
) -> Tuple[PowerAllocation, PurgeDiagnostics]:
    """
    Optimal allocation together with the intermediate results of the passes.

    Parameters
    ----------
    state : ChannelState
        SNR of each user, any order.
    weights : WeightVector
        Positive weights, same order.

    Returns
    -------
    (PowerAllocation, PurgeDiagnostics)
        Allocation in the caller's order and diagnostics in sorted positions.
    """
    return _solve(AllocationProblem.from_inputs(state, weights))
