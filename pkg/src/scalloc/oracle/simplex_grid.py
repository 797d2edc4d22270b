"""Brute-force maximisation over a grid of the power simplex, for up to three users."""

import numpy as np

from ..allocation.problem import AllocationProblem
from ..errors import OracleGuardError
from ..model import ChannelState, WeightVector, sc_objective
from ..model.rates import sc_objective_values
from .cumulative_dp import OracleSolution, _grid_size

MAX_USERS = 3
"""Largest number of users the grid search accepts."""


def simplex_grid_maximize(
    state: ChannelState, weights: WeightVector, resolution: float = 1e-3
) -> OracleSolution:
    """
    Evaluate the weighted SC sum rate on every grid point of the simplex.

    The grid contains the vertices, so vertex optima are found exactly.

    Parameters
    ----------
    state : ChannelState
        At most three SNRs, any order.
    weights : WeightVector
        Weights.
    resolution : float, optional
        Grid step, by default 1e-3.

    Returns
    -------
    OracleSolution
        Best grid point, ties going to the first one visited.

    Raises
    ------
    OracleGuardError
        If there are more than three users or the resolution is invalid.
    """
    if len(state) > MAX_USERS:
        raise OracleGuardError(
            f"Simplex grid search supports at most {MAX_USERS} users (got "
            f"{len(state)})."
        )
    n_intervals = _grid_size(resolution)
    problem = AllocationProblem.from_inputs(state, weights)

    steps = np.arange(n_intervals + 1)
    if problem.n_users == 1:
        points = np.ones((1, 1))
    elif problem.n_users == 2:
        strong = steps / n_intervals
        points = np.stack([1.0 - strong, strong], axis=-1)
    else:
        middle, strong = (
            axis.ravel() for axis in np.meshgrid(steps, steps, indexing="ij")
        )
        feasible = middle + strong <= n_intervals
        middle = middle[feasible] / n_intervals
        strong = strong[feasible] / n_intervals
        weak = np.maximum(1.0 - middle - strong, 0.0)
        points = np.stack([weak, middle, strong], axis=-1)

    values = sc_objective_values(problem.snr, problem.beta, points)
    best = points[int(np.argmax(values))]
    # clipping may leave the total a rounding error away from 1
    alloc = problem.to_original(best / best.sum())
    return OracleSolution(
        alloc=alloc,
        objective=sc_objective(state, weights, alloc),
        resolution=resolution,
    )
