"""First-order optimality check of an SC allocation on the power simplex."""

from dataclasses import dataclass

import numpy as np

from ..allocation.problem import AllocationProblem
from ..model import ChannelState, PowerAllocation, WeightVector
from ..model.rates import sc_objective_values


@dataclass(frozen=True)
class KKTResiduals:
    """
    Violations of the simplex optimality conditions, relative to the multiplier.

    At an optimum, every active user has the same partial derivative (the multiplier)
    and no inactive user has a larger one.

    Attributes
    ----------
    multiplier : float
        Mean partial derivative of the active users.
    active_spread : float
        Largest deviation of an active derivative from the multiplier, relative.
    inactive_excess : float
        Largest excess of an inactive derivative over the multiplier, relative, 0 when
        none exceeds it.
    """

    multiplier: float
    active_spread: float
    inactive_excess: float

    def worst(self) -> float:
        """Largest of both residuals.

        Returns
        -------
        float
            Worst residual.
        """
        return max(self.active_spread, self.inactive_excess)


def kkt_residuals(
    state: ChannelState,
    weights: WeightVector,
    alloc: PowerAllocation,
    step: float = 1e-7,
) -> KKTResiduals:
    """
    Central finite-difference derivatives of the SC objective checked on the simplex.

    Derivatives are taken on the objective extended to unconstrained powers, so
    inactive users are differentiated at zero as well.

    Parameters
    ----------
    state : ChannelState
        SNRs, any order.
    weights : WeightVector
        Weights.
    alloc : PowerAllocation
        Allocation to check.
    step : float, optional
        Finite-difference step, by default 1e-7.

    Returns
    -------
    KKTResiduals
        Relative residuals.
    """
    problem = AllocationProblem.from_inputs(state, weights)
    p = problem.to_sorted(alloc)

    shift = np.eye(problem.n_users) * step
    forward = sc_objective_values(problem.snr, problem.beta, p + shift)
    backward = sc_objective_values(problem.snr, problem.beta, p - shift)
    gradient = (forward - backward) / (2.0 * step)

    active = p > 0
    multiplier = float(np.mean(gradient[active]))
    scale = max(abs(multiplier), np.finfo(float).tiny)
    spread = float(np.max(np.abs(gradient[active] - multiplier))) / scale
    excess = 0.0
    if np.any(~active):
        excess = max(float(np.max(gradient[~active]) - multiplier), 0.0) / scale
    return KKTResiduals(
        multiplier=multiplier, active_spread=spread, inactive_excess=excess
    )
