"""Achievable rates under time sharing (TS) and superposition coding (SC).

Rates are in bits per channel use (base-2 logarithms). Under SC the users must be
sorted by non-decreasing SNR; user `l` decodes and cancels the signals of the weaker
users and sees the power of the stronger users as noise.
"""

from __future__ import annotations

from typing import Tuple, Union

import numpy as np
from numpy.typing import NDArray

from ..config.support import SupportedRateModel
from ..errors import ContractViolationError
from .types import ChannelState, PowerAllocation, RateVector, WeightVector


def _check_lengths(*items: Union[ChannelState, WeightVector, PowerAllocation]) -> int:
    """Common length of `items`.

    Parameters
    ----------
    *items : ChannelState, WeightVector or PowerAllocation
        Vectors describing the same users.

    Returns
    -------
    int
        Number of users.

    Raises
    ------
    ContractViolationError
        If the lengths differ.
    """
    lengths = {len(item) for item in items}
    if len(lengths) != 1:
        raise ContractViolationError(
            f"Inconsistent number of users: {[len(item) for item in items]}."
        )
    return lengths.pop()


def interference(p: NDArray) -> NDArray:
    """Power of the stronger users, `sum_{j>l} p_j`, along the last axis.

    Parameters
    ----------
    p : NDArray
        Powers in SNR order, shape (..., L).

    Returns
    -------
    NDArray
        Remaining power for each user, same shape as `p`.
    """
    tail = np.cumsum(p[..., ::-1], axis=-1)[..., ::-1]
    p_bar = np.zeros_like(p, dtype=np.float64)
    p_bar[..., :-1] = tail[..., 1:]
    return p_bar


def sc_rate_values(snr: NDArray, p: NDArray) -> NDArray:
    """SC rates for sorted SNRs without any validation.

    Works on a single allocation of shape (L,) or a batch of shape (n, L).

    Parameters
    ----------
    snr : NDArray
        Sorted SNRs, shape (L,).
    p : NDArray
        Powers, shape (L,) or (n, L).

    Returns
    -------
    NDArray
        Rates, same shape as `p`.
    """
    p_bar = interference(p)
    return np.log2(1.0 + p * snr / (p_bar * snr + 1.0))


def sc_objective_values(snr: NDArray, beta: NDArray, p: NDArray) -> NDArray:
    """Weighted SC sum rate for sorted users without validation.

    Parameters
    ----------
    snr : NDArray
        Sorted SNRs, shape (L,).
    beta : NDArray
        Weights in the same order, shape (L,).
    p : NDArray
        Powers, shape (L,) or (n, L).

    Returns
    -------
    NDArray
        Objective, a scalar array or shape (n,).
    """
    return np.sum(beta * sc_rate_values(snr, p), axis=-1)


def ts_rates(state: ChannelState, alloc: PowerAllocation) -> RateVector:
    """
    Rates under time sharing, `r_l = p_l log2(1 + snr_l)`.

    Parameters
    ----------
    state : ChannelState
        SNR of each user, any order.
    alloc : PowerAllocation
        Fraction of the block given to each user.

    Returns
    -------
    RateVector
        Rates.

    Examples
    --------
    >>> from scalloc.model import ChannelState, PowerAllocation, ts_rates
    >>> ts_rates(ChannelState([1.0, 3.0]), PowerAllocation([0.5, 0.5])).r.tolist()
    [0.5, 1.0]
    """
    _check_lengths(state, alloc)
    return RateVector(alloc.p * np.log2(1.0 + state.snr))


def sc_rates(state: ChannelState, alloc: PowerAllocation) -> RateVector:
    """
    Rates under superposition coding.

    `r_l = log2(1 + p_l snr_l / (p_bar_l snr_l + 1))` with `p_bar_l` the power of the
    users stronger than `l`.

    Parameters
    ----------
    state : ChannelState
        SNRs sorted in non-decreasing order.
    alloc : PowerAllocation
        Power of each user, in the same order.

    Returns
    -------
    RateVector
        Rates.

    Raises
    ------
    ContractViolationError
        If the SNRs are not sorted or the lengths differ.

    Examples
    --------
    >>> from scalloc.model import ChannelState, PowerAllocation, sc_rates
    >>> sc_rates(ChannelState([1.0, 3.0]), PowerAllocation([0.0, 1.0])).r.tolist()
    [0.0, 2.0]
    """
    _check_lengths(state, alloc)
    if not state.is_sorted():
        raise ContractViolationError(
            f"SC rates need SNRs in non-decreasing order (got {state.snr})."
        )
    return RateVector(sc_rate_values(state.snr, alloc.p))


def sc_rates_by_user(state: ChannelState, alloc: PowerAllocation) -> RateVector:
    """
    SC rates for users given in any order.

    Users are stable-sorted by SNR, so equal SNRs keep their relative order.

    Parameters
    ----------
    state : ChannelState
        SNR of each user.
    alloc : PowerAllocation
        Power of each user, same order as `state`.

    Returns
    -------
    RateVector
        Rates in the order of `state`.
    """
    _check_lengths(state, alloc)
    order = np.argsort(state.snr, kind="stable")
    rates = np.empty(len(state))
    rates[order] = sc_rate_values(state.snr[order], alloc.p[order])
    return RateVector(rates)


def remaining_power(alloc: PowerAllocation, user: int) -> float:
    """
    Power of the users after `user`, `sum_{j>user} p_j`.

    Parameters
    ----------
    alloc : PowerAllocation
        Powers in SNR order.
    user : int
        0-based user index.

    Returns
    -------
    float
        Remaining power, 0 for the last user.

    Raises
    ------
    ContractViolationError
        If `user` is out of range.
    """
    if not 0 <= user < len(alloc):
        raise ContractViolationError(
            f"User index {user} out of range for {len(alloc)} users."
        )
    return float(np.sum(alloc.p[user + 1 :]))


def weighted_objective(
    state: ChannelState,
    weights: WeightVector,
    alloc: PowerAllocation,
    mcs: Union[SupportedRateModel, str],
) -> float:
    """
    Weighted sum rate `sum_l beta_l r_l` under the chosen rate model.

    Parameters
    ----------
    state : ChannelState
        SNRs, sorted when `mcs` is SC.
    weights : WeightVector
        Weights.
    alloc : PowerAllocation
        Powers.
    mcs : SupportedRateModel or str
        Rate model, "ts" or "sc".

    Returns
    -------
    float
        Objective value.
    """
    _check_lengths(state, weights, alloc)
    if SupportedRateModel(mcs) == SupportedRateModel.TS:
        rates = ts_rates(state, alloc)
    else:
        rates = sc_rates(state, alloc)
    return float(np.dot(weights.beta, rates.r))


def sc_objective(
    state: ChannelState, weights: WeightVector, alloc: PowerAllocation
) -> float:
    """
    Weighted SC sum rate for users in any order.

    Parameters
    ----------
    state : ChannelState
        SNRs.
    weights : WeightVector
        Weights.
    alloc : PowerAllocation
        Powers.

    Returns
    -------
    float
        Objective value.
    """
    _check_lengths(state, weights, alloc)
    return float(np.dot(weights.beta, sc_rates_by_user(state, alloc).r))


def rate_region(
    state: ChannelState, n_points: int, mcs: Union[SupportedRateModel, str]
) -> Tuple[NDArray, NDArray]:
    """
    Boundary of the two-user rate region traced by moving power to the strong user.

    Parameters
    ----------
    state : ChannelState
        Two sorted SNRs, weak user first.
    n_points : int
        Number of points, the power of the strong user going from 0 to 1.
    mcs : SupportedRateModel or str
        Rate model.

    Returns
    -------
    (NDArray, NDArray)
        Rates of the weak and of the strong user.

    Raises
    ------
    ContractViolationError
        If `state` does not hold two sorted SNRs or `n_points` is below 2.
    """
    if len(state) != 2 or not state.is_sorted():
        raise ContractViolationError("Rate region needs two sorted SNRs.")
    if n_points < 2:
        raise ContractViolationError(f"Need at least 2 points (got {n_points}).")

    strong = np.linspace(0.0, 1.0, n_points)
    p = np.stack([1.0 - strong, strong], axis=-1)
    if SupportedRateModel(mcs) == SupportedRateModel.TS:
        rates = p * np.log2(1.0 + state.snr)
    else:
        rates = sc_rate_values(state.snr, p)
    return rates[:, 0], rates[:, 1]
