"""Closed-form SC allocation for two users."""

from typing import Tuple

import numpy as np

from ..errors import ContractViolationError
from ..model import ChannelState, PowerAllocation, WeightVector
from .problem import AllocationProblem

STRONG_ONLY = "strong_only"
WEAK_ONLY = "weak_only"
SUPERPOSITION = "superposition"


def _strong_power(problem: AllocationProblem) -> Tuple[float, str]:
    """Power of the stronger user and the region it falls in.

    Parameters
    ----------
    problem : AllocationProblem
        Sorted two-user problem.

    Returns
    -------
    (float, str)
        Power of the stronger user and the region name.
    """
    (g1, g2), (b1, b2) = problem.snr, problem.beta
    nu1, nu2 = g1 * b1, g2 * b2
    if b1 <= b2 or nu1 / (1.0 + g1) <= nu2 / (1.0 + g2):
        return 1.0, STRONG_ONLY
    if nu1 >= nu2:
        return 0.0, WEAK_ONLY
    return float((nu2 - nu1) / (g1 * g2 * (b1 - b2))), SUPERPOSITION


def _two_user_problem(state: ChannelState, weights: WeightVector) -> AllocationProblem:
    """Sorted problem, checking that there are two users.

    Parameters
    ----------
    state : ChannelState
        Two SNRs.
    weights : WeightVector
        Two weights.

    Returns
    -------
    AllocationProblem
        Sorted problem.

    Raises
    ------
    ContractViolationError
        If there are not exactly two users.
    """
    if len(state) != 2 or len(weights) != 2:
        raise ContractViolationError(
            f"Two-user allocation needs two users (got {len(state)} SNRs and "
            f"{len(weights)} weights)."
        )
    return AllocationProblem.from_inputs(state, weights)


def allocate_two_user(state: ChannelState, weights: WeightVector) -> PowerAllocation:
    """
    Optimal SC allocation for two users in closed form.

    With the users sorted by SNR, the stronger user takes everything when the weaker
    one has no larger weight or no larger `tau`, nothing when the weaker user has the
    larger `nu`, and otherwise the crossing point of both marginal utilities.

    Parameters
    ----------
    state : ChannelState
        Two SNRs, any order.
    weights : WeightVector
        Two weights.

    Returns
    -------
    PowerAllocation
        Optimal allocation in the caller's order.

    Examples
    --------
    >>> from scalloc.allocation import allocate_two_user
    >>> from scalloc.model import ChannelState, WeightVector
    >>> allocate_two_user(ChannelState([2.0, 4.0]), WeightVector([10.0, 4.0])).p.tolist()
    [1.0, 0.0]
    """
    problem = _two_user_problem(state, weights)
    strong, _ = _strong_power(problem)
    return problem.to_original(np.array([1.0 - strong, strong]))


def two_user_region(state: ChannelState, weights: WeightVector) -> str:
    """
    Region of the two-user closed form an instance falls in.

    Parameters
    ----------
    state : ChannelState
        Two SNRs, any order.
    weights : WeightVector
        Two weights.

    Returns
    -------
    str
        "strong_only", "weak_only" or "superposition".
    """
    _, region = _strong_power(_two_user_problem(state, weights))
    return region
