"""
Grid dynamic program over cumulative powers.

With users sorted by SNR, write `q_m = sum_{j >= m} p_j`, so that `1 = q_0 >= q_1 >= ...
>= q_{L-1} >= q_L = 0`. The weighted SC sum rate then separates into one term per
cumulative power:

    y = beta_0 log2(1 + snr_0) + sum_{m=1}^{L-1} g_m(q_m),
    g_m(q) = beta_m log2(1 + q snr_m) - beta_{m-1} log2(1 + q snr_{m-1}),

which a dynamic program maximises exactly over a grid of `q` values under the
ordering constraint. The grid optimum is then refined by coordinate ascent over runs
of equal cumulative powers.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import minimize_scalar

from ..allocation.problem import AllocationProblem
from ..errors import OracleGuardError
from ..model import ChannelState, PowerAllocation, WeightVector, sc_objective
from ..model.rates import sc_objective_values

MAX_SWEEPS = 200
"""Maximum number of refinement sweeps."""

_IMPROVEMENT = 1e-15


@dataclass(frozen=True, eq=False)
class OracleSolution:
    """
    Allocation found by a reference solver.

    Attributes
    ----------
    alloc : PowerAllocation
        Allocation in the caller's order.
    objective : float
        Weighted SC sum rate of `alloc`.
    resolution : float
        Grid step used by the solver.
    """

    alloc: PowerAllocation
    objective: float
    resolution: float


def _grid_size(resolution: float) -> int:
    """Number of grid intervals for `resolution`.

    Parameters
    ----------
    resolution : float
        Grid step in (0, 0.1].

    Returns
    -------
    int
        Number of intervals.

    Raises
    ------
    OracleGuardError
        If the resolution is out of range.
    """
    if not 0 < resolution <= 0.1:
        raise OracleGuardError(
            f"Invalid resolution, must lie in (0, 0.1] (got {resolution})."
        )
    return int(round(1.0 / resolution))


def _window_gain(snr: NDArray, beta: NDArray, first: int, last: int, q: float) -> float:
    """Objective terms of the cumulative powers `first..last` set to a common `q`.

    The sum of `g_m(q)` over the window telescopes to two logarithms.

    Parameters
    ----------
    snr : NDArray
        Sorted SNRs.
    beta : NDArray
        Sorted weights.
    first : int
        First cumulative index, at least 1.
    last : int
        Last cumulative index, at most L - 1.
    q : float
        Common cumulative power.

    Returns
    -------
    float
        Sum of the window's terms.
    """
    return float(
        beta[last] * np.log2(1.0 + q * snr[last])
        - beta[first - 1] * np.log2(1.0 + q * snr[first - 1])
    )


def separable_objective(snr: NDArray, beta: NDArray, q: NDArray) -> float:
    """
    Weighted SC sum rate from cumulative powers.

    Parameters
    ----------
    snr : NDArray
        Sorted SNRs.
    beta : NDArray
        Sorted weights.
    q : NDArray
        Cumulative powers `q_0 = 1, ..., q_L = 0`, shape (L + 1,).

    Returns
    -------
    float
        Objective.
    """
    inner = q[1:-1]
    terms = beta[1:] * np.log2(1.0 + inner * snr[1:]) - beta[:-1] * np.log2(
        1.0 + inner * snr[:-1]
    )
    return float(beta[0] * np.log2(1.0 + snr[0]) + np.sum(terms))


def check_separable_identity(
    problem: AllocationProblem, rng: np.random.Generator, n_points: int = 32
) -> float:
    """
    Largest deviation between the separable form and the SC rates.

    Parameters
    ----------
    problem : AllocationProblem
        Sorted problem.
    rng : numpy.random.Generator
        Source of the random allocations.
    n_points : int, optional
        Number of random allocations, by default 32.

    Returns
    -------
    float
        Maximum absolute difference of both objective forms.
    """
    deviation = 0.0
    for p in rng.dirichlet(np.ones(problem.n_users), size=n_points):
        q = np.append(np.cumsum(p[::-1])[::-1], 0.0)
        q[0] = 1.0
        direct = float(sc_objective_values(problem.snr, problem.beta, p))
        deviation = max(
            deviation, abs(direct - separable_objective(problem.snr, problem.beta, q))
        )
    return deviation


def _prefix_argmax(values: NDArray) -> Tuple[NDArray, NDArray]:
    """Running maximum of `values` and the index where it is reached.

    Parameters
    ----------
    values : NDArray
        1D values.

    Returns
    -------
    (NDArray, NDArray)
        Running maximum and running argmax.
    """
    running = np.maximum.accumulate(values)
    index = np.arange(values.size)
    running_arg = np.maximum.accumulate(np.where(values == running, index, 0))
    return running, running_arg


def _grid_optimum(snr: NDArray, beta: NDArray, n_intervals: int) -> NDArray:
    """Cumulative powers maximising the separable objective on the grid.

    Parameters
    ----------
    snr : NDArray
        Sorted SNRs.
    beta : NDArray
        Sorted weights.
    n_intervals : int
        Number of grid intervals.

    Returns
    -------
    NDArray
        Cumulative powers, shape (L + 1,).
    """
    n_users = snr.size
    grid = np.linspace(0.0, 1.0, n_intervals + 1)
    q = np.zeros(n_users + 1)
    q[0] = 1.0
    if n_users == 1:
        return q

    def gain(m: int) -> NDArray:
        return beta[m] * np.log2(1.0 + grid * snr[m]) - beta[m - 1] * np.log2(
            1.0 + grid * snr[m - 1]
        )

    # value[i]: best total of the terms m..L-1 with q_m = grid[i]
    value = gain(n_users - 1)
    back: Dict[int, NDArray] = {}
    for m in range(n_users - 2, 0, -1):
        running, running_arg = _prefix_argmax(value)
        back[m] = running_arg
        value = gain(m) + running

    i = int(np.argmax(value))
    q[1] = grid[i]
    for m in range(1, n_users - 1):
        i = int(back[m][i])
        q[m + 1] = grid[i]
    return q


def _runs(q: NDArray) -> Tuple[Tuple[int, int], ...]:
    """Maximal runs of equal inner cumulative powers.

    Parameters
    ----------
    q : NDArray
        Cumulative powers, shape (L + 1,).

    Returns
    -------
    tuple of (int, int)
        First and last index of every run among `q_1..q_{L-1}`.
    """
    runs = []
    start = 1
    for m in range(2, q.size):
        if m == q.size - 1 or q[m] != q[start]:
            runs.append((start, m - 1))
            start = m
    return tuple(runs)


def _best_on_interval(
    snr: NDArray, beta: NDArray, first: int, last: int, low: float, high: float
) -> Tuple[float, float]:
    """Maximise a window's gain over `[low, high]`.

    Parameters
    ----------
    snr : NDArray
        Sorted SNRs.
    beta : NDArray
        Sorted weights.
    first : int
        First cumulative index of the window.
    last : int
        Last cumulative index of the window.
    low : float
        Lower bound.
    high : float
        Upper bound.

    Returns
    -------
    (float, float)
        Best value of `q` and the window's gain there.
    """
    candidates = [low, high]
    if high > low:
        result = minimize_scalar(
            lambda x: -_window_gain(snr, beta, first, last, x),
            bounds=(low, high),
            method="bounded",
            options={"xatol": 1e-12},
        )
        candidates.append(float(result.x))
    gains = [_window_gain(snr, beta, first, last, x) for x in candidates]
    best = int(np.argmax(gains))
    return candidates[best], gains[best]


def _refine(snr: NDArray, beta: NDArray, q: NDArray) -> NDArray:
    """Coordinate ascent moving prefixes of runs up and suffixes of runs down.

    Parameters
    ----------
    snr : NDArray
        Sorted SNRs.
    beta : NDArray
        Sorted weights.
    q : NDArray
        Starting cumulative powers, shape (L + 1,).

    Returns
    -------
    NDArray
        Refined cumulative powers.
    """
    q = q.copy()
    for _ in range(MAX_SWEEPS):
        moved = False
        for start, end in _runs(q):
            current = q[start]
            # windows sharing `current`: prefixes may rise, suffixes may fall
            windows = [
                (start, last, current, q[start - 1]) for last in range(start, end + 1)
            ]
            windows += [
                (first, end, q[end + 1], current) for first in range(start, end + 1)
            ]
            for first, last, low, high in windows:
                if q[first] != current or q[last] != current:
                    continue
                before = _window_gain(snr, beta, first, last, current)
                x, after = _best_on_interval(snr, beta, first, last, low, high)
                if after > before + _IMPROVEMENT * max(1.0, abs(before)):
                    q[first : last + 1] = x
                    moved = True
        if not moved:
            break
    return q


def cumulative_dp_maximize(
    state: ChannelState, weights: WeightVector, resolution: float = 1e-3
) -> OracleSolution:
    """
    Maximise the weighted SC sum rate by a grid dynamic program with refinement.

    Parameters
    ----------
    state : ChannelState
        SNRs, any order.
    weights : WeightVector
        Weights.
    resolution : float, optional
        Grid step of the cumulative powers, by default 1e-3.

    Returns
    -------
    OracleSolution
        Best allocation found.

    Raises
    ------
    OracleGuardError
        If the resolution is not in (0, 0.1].
    """
    n_intervals = _grid_size(resolution)
    problem = AllocationProblem.from_inputs(state, weights)
    snr, beta = problem.snr, problem.beta

    q = _grid_optimum(snr, beta, n_intervals)
    if problem.n_users > 1:
        q = _refine(snr, beta, q)

    alloc = problem.to_original(q[:-1] - q[1:])
    return OracleSolution(
        alloc=alloc,
        objective=sc_objective(state, weights, alloc),
        resolution=resolution,
    )
