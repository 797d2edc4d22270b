"""
Removal of users that receive no power in the optimal SC allocation.

Every user `l` contributes a marginal utility `nu_l / (1 + s snr_l)` at cumulative
power `s`. The optimal allocation gives the power interval where a user's marginal
utility is the largest, so users whose curve never reaches the upper envelope are
removed in three linear passes:

1. Right to left, a weaker user survives only if both its weight and its `tau` exceed
   those of the last surviving stronger user.
2. Left to right, a stronger user survives only if its `nu` exceeds that of the last
   surviving weaker user.
3. A stack keeps users whose envelope interval, bounded by the crossing points with
   their neighbours, is not empty.

All functions work on sorted positions of an `AllocationProblem`.
"""

from typing import List, Tuple

import numpy as np
from numpy.typing import NDArray

from ..errors import ContractViolationError, NoCrossingError
from .problem import AllocationProblem


def nu_tau(problem: AllocationProblem) -> Tuple[NDArray, NDArray]:
    """
    Marginal utilities at zero and at full cumulative power.

    Parameters
    ----------
    problem : AllocationProblem
        Sorted problem.

    Returns
    -------
    (NDArray, NDArray)
        `nu = snr * beta` and `tau = nu / (1 + snr)`.
    """
    nu = problem.snr * problem.beta
    tau = nu / (1.0 + problem.snr)
    return nu, tau


def _crossing(snr: NDArray, nu: NDArray, j: int, k: int) -> float:
    """Crossing point of users `j > k` without checks.

    Parameters
    ----------
    snr : NDArray
        Sorted SNRs.
    nu : NDArray
        Values of `nu`.
    j : int
        Stronger user.
    k : int
        Weaker user.

    Returns
    -------
    float
        Cumulative power where both marginal utilities are equal.

    Raises
    ------
    NoCrossingError
        If the denominator vanishes.
    """
    denominator = snr[j] * nu[k] - snr[k] * nu[j]
    if denominator == 0:
        raise NoCrossingError(
            f"Users at sorted positions {j} and {k} have no crossing point."
        )
    return float((nu[j] - nu[k]) / denominator)


def crossing_point(problem: AllocationProblem, j: int, k: int) -> float:
    """
    Cumulative power at which the marginal utilities of `j` and `k` are equal.

    Solves `(1 + p snr_j) / (1 + p snr_k) = nu_j / nu_k`, i.e.
    `p = (nu_j - nu_k) / (snr_j nu_k - snr_k nu_j)`.

    Parameters
    ----------
    problem : AllocationProblem
        Sorted problem.
    j : int
        Sorted position of the stronger user.
    k : int
        Sorted position of the weaker user, `k < j`.

    Returns
    -------
    float
        Crossing point, may lie outside [0, 1].

    Raises
    ------
    ContractViolationError
        If the positions are out of range or not ordered.
    NoCrossingError
        If `snr_j snr_k (beta_k - beta_j) = 0`.
    """
    if not 0 <= k < j < problem.n_users:
        raise ContractViolationError(
            f"Expected 0 <= k < j < {problem.n_users} (got j={j}, k={k})."
        )
    nu, _ = nu_tau(problem)
    return _crossing(problem.snr, nu, j, k)


def purge_beta_tau(
    problem: AllocationProblem, tau: NDArray
) -> Tuple[List[int], int]:
    """
    Right-to-left pass on weights and `tau`.

    Parameters
    ----------
    problem : AllocationProblem
        Sorted problem.
    tau : NDArray
        Values of `tau`.

    Returns
    -------
    (list of int, int)
        Surviving positions in increasing order and the number of comparisons.
    """
    beta = problem.beta
    last = problem.n_users - 1
    kept = [last]
    n_comparisons = 0
    for k in range(last - 1, -1, -1):
        j = kept[-1]
        n_comparisons += 1
        if beta[k] > beta[j] and tau[k] > tau[j]:
            kept.append(k)
    kept.reverse()
    return kept, n_comparisons


def purge_nu(candidates: List[int], nu: NDArray) -> Tuple[List[int], int]:
    """
    Left-to-right pass on `nu`.

    Parameters
    ----------
    candidates : list of int
        Positions left by the previous pass, increasing.
    nu : NDArray
        Values of `nu`.

    Returns
    -------
    (list of int, int)
        Surviving positions and the number of comparisons.
    """
    kept = [candidates[0]]
    n_comparisons = 0
    for j in candidates[1:]:
        n_comparisons += 1
        if nu[kept[-1]] < nu[j]:
            kept.append(j)
    return kept, n_comparisons


def purge_crossing(
    problem: AllocationProblem, candidates: List[int], nu: NDArray
) -> Tuple[List[int], List[float], int]:
    """
    Stack pass keeping users with a non-empty envelope interval.

    User `top` owns the cumulative powers between its crossing with the next stronger
    user and its crossing with the previous weaker user. It is dropped when that
    interval is empty.

    Parameters
    ----------
    problem : AllocationProblem
        Sorted problem.
    candidates : list of int
        Positions left by the previous passes, increasing.
    nu : NDArray
        Values of `nu`.

    Returns
    -------
    (list of int, list of float, int)
        Active positions, crossing points of consecutive active users (strictly
        decreasing) and the number of comparisons.
    """
    snr = problem.snr
    stack = [candidates[0]]
    # crossings[i] is the crossing of stack[i + 1] with stack[i]
    crossings: List[float] = []
    n_comparisons = 0
    for j in candidates[1:]:
        point = _crossing(snr, nu, j, stack[-1])
        n_comparisons += 1
        if point <= 0.0:
            # j never rises above the current strongest user
            continue
        while stack:
            upper = crossings[-1] if crossings else 1.0
            n_comparisons += 1
            if point < upper:
                break
            stack.pop()
            if crossings:
                crossings.pop()
            if stack:
                point = _crossing(snr, nu, j, stack[-1])
        stack.append(j)
        if len(stack) > 1:
            crossings.append(point)
    return stack, crossings, n_comparisons
