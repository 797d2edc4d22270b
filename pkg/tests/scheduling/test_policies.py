import numpy as np
import pytest

from scalloc.allocation import allocate
from scalloc.config import PolicyConfig
from scalloc.model import ChannelState, RateVector, WeightVector
from scalloc.scheduling import (
    ThroughputTracker,
    best_vertex,
    rr_reference_throughput,
    schedule_block,
    weights_from_utility,
)


@pytest.fixture
def tracker() -> ThroughputTracker:
    tracker = ThroughputTracker(n_users=3, window=2)
    tracker.update(RateVector([0.5, 1.0, 2.0]))
    tracker.update(RateVector([0.5, 1.0, 2.0]))
    return tracker


@pytest.fixture
def state() -> ChannelState:
    return ChannelState([1.0, 7.0, 3.0])


def test_proportional_fair_weights(tracker):
    weights = weights_from_utility("proportional_fair", tracker)
    np.testing.assert_allclose(weights.beta, [2.0, 1.0, 0.5])


def test_sum_rate_weights(tracker):
    weights = weights_from_utility("sum_rate", tracker)
    np.testing.assert_array_equal(weights.beta, [1.0, 1.0, 1.0])


def test_best_vertex_ties_to_smallest_index():
    assert best_vertex(ChannelState([3.0, 3.0]), WeightVector([1.0, 1.0])) == 0
    assert best_vertex(ChannelState([1.0, 3.0]), WeightVector([2.0, 1.0])) == 1


@pytest.mark.parametrize("block_index, user", [(0, 0), (1, 1), (5, 2)])
def test_round_robin(state, tracker, block_index, user):
    alloc, rates = schedule_block(
        PolicyConfig(kind="round_robin"), state, tracker, block_index
    )
    assert alloc.active == (user,)
    assert rates.r[user] == pytest.approx(np.log2(1.0 + state.snr[user]))
    assert np.count_nonzero(rates.r) == 1


def test_max_rate(state, tracker):
    alloc, rates = schedule_block(PolicyConfig(kind="max_rate"), state, tracker, 0)
    assert alloc.active == (1,)
    np.testing.assert_allclose(rates.r, [0.0, 3.0, 0.0])


def test_pf_time_sharing(state, tracker):
    # weighted rates are 2, 3 and 1
    alloc, rates = schedule_block(PolicyConfig(kind="pf_ts"), state, tracker, 0)
    assert alloc.active == (1,)
    np.testing.assert_allclose(rates.r, [0.0, 3.0, 0.0])


def test_superposition(state, tracker):
    alloc, rates = schedule_block(PolicyConfig(kind="sc"), state, tracker, 0)
    expected = allocate(state, WeightVector([2.0, 1.0, 0.5]))
    np.testing.assert_allclose(alloc.p, expected.p)
    assert np.all(rates.r[list(alloc.active)] > 0)


@pytest.mark.parametrize("greedy", [True, False])
def test_capped_superposition(state, tracker, greedy):
    policy = PolicyConfig(kind="sc_capped", k_max=1, greedy=greedy)
    alloc, rates = schedule_block(policy, state, tracker, 0)
    assert alloc.active == (1,)
    np.testing.assert_allclose(rates.r, [0.0, 3.0, 0.0])


def test_rr_reference():
    assert rr_reference_throughput(1.0) == pytest.approx(0.8603, abs=1e-4)
    assert rr_reference_throughput(1.0, n_users=4) == pytest.approx(
        rr_reference_throughput(1.0) / 4
    )
    # ergodic rate below the rate at the mean SNR
    assert rr_reference_throughput(10.0) < np.log2(11.0)
