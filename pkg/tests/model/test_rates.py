import numpy as np
import pytest

from scalloc.errors import ContractViolationError
from scalloc.model import (
    ChannelState,
    PowerAllocation,
    WeightVector,
    rate_region,
    remaining_power,
    sc_objective,
    sc_rates,
    sc_rates_by_user,
    ts_rates,
    weighted_objective,
)


def test_ts_rates_reference():
    state = ChannelState([1.0, 3.0, 7.0])
    alloc = PowerAllocation([0.25, 0.25, 0.5])
    np.testing.assert_allclose(ts_rates(state, alloc).r, [0.25, 0.5, 1.5])


def test_sc_rates_reference():
    state = ChannelState([1.0, 3.0])
    alloc = PowerAllocation([0.5, 0.5])
    rates = sc_rates(state, alloc).r
    # weak user sees the strong user's power as noise
    assert rates[0] == pytest.approx(np.log2(1.0 + 0.5 / (0.5 + 1.0)))
    assert rates[1] == pytest.approx(np.log2(1.0 + 1.5))


@pytest.mark.parametrize("n_users", [1, 2, 5])
def test_vertex_rates_equal_under_both_models(rng, n_users):
    state = ChannelState(np.sort(rng.exponential(3.0, size=n_users)))
    for user in range(n_users):
        alloc = PowerAllocation.vertex(n_users, user)
        np.testing.assert_array_equal(
            sc_rates(state, alloc).r, ts_rates(state, alloc).r
        )


def test_sc_rates_unsorted():
    with pytest.raises(ContractViolationError):
        sc_rates(ChannelState([3.0, 1.0]), PowerAllocation([0.5, 0.5]))


def test_length_mismatch():
    with pytest.raises(ContractViolationError):
        ts_rates(ChannelState([1.0, 2.0]), PowerAllocation([1.0]))
    with pytest.raises(ContractViolationError):
        weighted_objective(
            ChannelState([1.0, 2.0]),
            WeightVector([1.0]),
            PowerAllocation([0.5, 0.5]),
            "ts",
        )


def test_sc_rates_capped_by_single_user_capacity(rng):
    for _ in range(50):
        n_users = int(rng.integers(1, 8))
        state = ChannelState(np.sort(rng.exponential(5.0, size=n_users)))
        alloc = PowerAllocation(rng.dirichlet(np.ones(n_users)))
        rates = sc_rates(state, alloc).r
        assert np.all(rates <= np.log2(1.0 + state.snr) + 1e-12)


def test_sc_rate_decreases_with_stronger_users_power():
    state = ChannelState([1.0, 2.0, 4.0])
    low_interference = sc_rates(state, PowerAllocation([0.5, 0.2, 0.3])).r[1]
    high_interference = sc_rates(state, PowerAllocation([0.2, 0.2, 0.6])).r[1]
    assert high_interference < low_interference


def test_remaining_power():
    alloc = PowerAllocation([0.6, 0.31, 0.09])
    assert remaining_power(alloc, 0) == pytest.approx(0.40)
    assert remaining_power(alloc, 1) == pytest.approx(0.09)
    assert remaining_power(alloc, 2) == 0.0

    with pytest.raises(ContractViolationError):
        remaining_power(alloc, 3)


def test_weighted_objective_models():
    state = ChannelState([1.0, 3.0])
    weights = WeightVector([2.0, 1.0])
    alloc = PowerAllocation([0.5, 0.5])
    assert weighted_objective(state, weights, alloc, "ts") == pytest.approx(
        2.0 * 0.5 + 1.0 * 1.0
    )
    assert weighted_objective(state, weights, alloc, "sc") == pytest.approx(
        2.0 * np.log2(1.0 + 0.5 / 1.5) + np.log2(2.5)
    )


def test_sc_rates_by_user_follows_caller_order(rng):
    snr = rng.exponential(2.0, size=5)
    p = rng.dirichlet(np.ones(5))
    order = np.argsort(snr)

    rates = sc_rates_by_user(ChannelState(snr), PowerAllocation(p)).r
    sorted_rates = sc_rates(ChannelState(snr[order]), PowerAllocation(p[order])).r
    np.testing.assert_allclose(rates[order], sorted_rates, rtol=0, atol=1e-15)


def test_sc_objective_any_order(rng):
    snr = rng.exponential(2.0, size=4)
    beta = rng.uniform(0.5, 2.0, size=4)
    p = rng.dirichlet(np.ones(4))
    order = np.argsort(snr)
    expected = weighted_objective(
        ChannelState(snr[order]),
        WeightVector(beta[order]),
        PowerAllocation(p[order]),
        "sc",
    )
    objective = sc_objective(ChannelState(snr), WeightVector(beta), PowerAllocation(p))
    assert objective == pytest.approx(expected, rel=1e-14)


def test_rate_region_sc_contains_ts():
    state = ChannelState([1.0, 6.0])
    weak_ts, strong_ts = rate_region(state, 101, "ts")
    weak_sc, strong_sc = rate_region(state, 101, "sc")

    # end points coincide
    assert weak_sc[0] == weak_ts[0] and strong_sc[-1] == strong_ts[-1]

    # the SC point giving the strong user its TS rate leaves the weak user more
    g1, g2 = state.snr
    strong_power = (2.0**strong_ts - 1.0) / g2
    weak_at_same_strong_rate = np.log2((1.0 + g1) / (1.0 + strong_power * g1))
    assert np.all(weak_at_same_strong_rate >= weak_ts - 1e-12)


def test_rate_region_requires_two_sorted_users():
    with pytest.raises(ContractViolationError):
        rate_region(ChannelState([6.0, 1.0]), 10, "sc")
    with pytest.raises(ContractViolationError):
        rate_region(ChannelState([1.0, 6.0]), 1, "sc")
