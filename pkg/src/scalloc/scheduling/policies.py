"""Per-block scheduling decisions."""

from typing import Tuple

import numpy as np

from ..allocation import allocate, exhaustive_allocate, greedy_allocate
from ..config import PolicyConfig
from ..config.support import SupportedPolicy
from ..model import (
    ChannelState,
    PowerAllocation,
    RateVector,
    WeightVector,
    sc_rates_by_user,
    ts_rates,
)
from .tracker import ThroughputTracker
from .utility import weights_from_utility


def best_vertex(state: ChannelState, weights: WeightVector) -> int:
    """
    User maximising `beta_l log2(1 + snr_l)`, the best time-sharing choice.

    Parameters
    ----------
    state : ChannelState
        SNRs.
    weights : WeightVector
        Weights.

    Returns
    -------
    int
        Index of the user, the smallest one on ties.
    """
    return int(np.argmax(weights.beta * np.log2(1.0 + state.snr)))


def schedule_block(
    policy: PolicyConfig,
    state: ChannelState,
    tracker: ThroughputTracker,
    block_index: int,
) -> Tuple[PowerAllocation, RateVector]:
    """
    Allocation and rates of one block under `policy`.

    Round robin serves user `block_index mod L`, max rate the user with the largest
    SNR and PF-TS the best weighted user, all under time sharing. The superposition
    policies weight users by the utility gradient and are evaluated with SC rates.

    Parameters
    ----------
    policy : PolicyConfig
        Scheduling policy.
    state : ChannelState
        SNRs of the block.
    tracker : ThroughputTracker
        Average throughputs before the block.
    block_index : int
        0-based block index.

    Returns
    -------
    (PowerAllocation, RateVector)
        Allocation and achieved rates.
    """
    n_users = len(state)

    if policy.kind == SupportedPolicy.ROUND_ROBIN:
        alloc = PowerAllocation.vertex(n_users, block_index % n_users)
        return alloc, ts_rates(state, alloc)

    if policy.kind == SupportedPolicy.MAX_RATE:
        alloc = PowerAllocation.vertex(n_users, int(np.argmax(state.snr)))
        return alloc, ts_rates(state, alloc)

    weights = weights_from_utility(policy.utility, tracker)

    if policy.kind == SupportedPolicy.PF_TS:
        alloc = PowerAllocation.vertex(n_users, best_vertex(state, weights))
        return alloc, ts_rates(state, alloc)

    if policy.kind == SupportedPolicy.SC:
        alloc = allocate(state, weights)
    else:
        assert policy.k_max is not None
        search = greedy_allocate if policy.greedy else exhaustive_allocate
        alloc = search(state, weights, policy.k_max).alloc
    return alloc, sc_rates_by_user(state, alloc)
