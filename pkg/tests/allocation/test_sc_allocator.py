import numpy as np
import pytest

from scalloc.allocation import (
    AllocationProblem,
    allocate,
    allocate_with_diagnostics,
    assign_powers,
)
from scalloc.errors import ContractViolationError
from scalloc.model import (
    ChannelState,
    PowerAllocation,
    WeightVector,
    sc_objective,
)
from scalloc.model.tolerances import SIMPLEX_TOL


def test_worked_example(worked_example, worked_example_inputs):
    alloc, diagnostics = allocate_with_diagnostics(*worked_example_inputs)

    assert diagnostics.after_beta_tau == worked_example["after_beta_tau"]
    assert diagnostics.after_nu == worked_example["after_nu"]
    assert diagnostics.after_crossing == worked_example["active"]
    assert alloc.active == worked_example["active"]
    for user, power in worked_example["powers"].items():
        assert alloc.p[user] == pytest.approx(power, abs=1e-3)


def test_single_user():
    alloc = allocate(ChannelState([0.3]), WeightVector([2.0]))
    np.testing.assert_array_equal(alloc.p, [1.0])


def test_empty_inputs():
    with pytest.raises(ContractViolationError):
        allocate(ChannelState([]), WeightVector([]))


def test_length_mismatch():
    with pytest.raises(ContractViolationError):
        allocate(ChannelState([1.0, 2.0]), WeightVector([1.0]))


def test_equal_weights_serve_strongest_user():
    alloc = allocate(ChannelState([1.0, 4.0, 2.0]), WeightVector([1.0, 1.0, 1.0]))
    np.testing.assert_array_equal(alloc.p, [0.0, 1.0, 0.0])


def test_equal_snr_serves_largest_weight():
    alloc = allocate(ChannelState([2.0, 2.0, 2.0]), WeightVector([1.0, 3.0, 2.0]))
    np.testing.assert_array_equal(alloc.p, [0.0, 1.0, 0.0])


@pytest.mark.parametrize("n_users", [2, 3, 5, 8, 20])
def test_invariants(random_instance, n_users):
    for _ in range(20):
        state, weights = random_instance(n_users)
        alloc, diagnostics = allocate_with_diagnostics(state, weights)

        assert abs(alloc.p.sum() - 1.0) <= SIMPLEX_TOL
        assert np.all(alloc.p >= 0)
        assert alloc.active == tuple(np.flatnonzero(alloc.p > 0))

        crossings = np.array(diagnostics.crossings)
        assert np.all(np.diff(crossings) < 0)
        assert np.all((crossings > 0) & (crossings < 1))

        # never worse than serving the best single user
        vertex = np.max(weights.beta * np.log2(1.0 + state.snr))
        assert sc_objective(state, weights, alloc) >= vertex * (1 - 1e-9)


def test_no_better_random_allocation(random_instance, rng):
    for _ in range(20):
        state, weights = random_instance(4)
        best = sc_objective(state, weights, allocate(state, weights))
        for p in rng.dirichlet(np.ones(4), size=200):
            trial = sc_objective(state, weights, PowerAllocation(p / p.sum()))
            assert trial <= best + 1e-9 * abs(best)


def test_permutation_equivariance(random_instance, rng):
    for _ in range(10):
        state, weights = random_instance(6)
        order = rng.permutation(6)
        alloc = allocate(state, weights)
        permuted = allocate(
            ChannelState(state.snr[order]), WeightVector(weights.beta[order])
        )
        np.testing.assert_allclose(permuted.p, alloc.p[order], rtol=0, atol=1e-12)


@pytest.mark.parametrize("scale", [0.25, 2.0, 1024.0])
def test_power_of_two_weight_scaling_is_exact(random_instance, scale):
    for _ in range(10):
        state, weights = random_instance(6)
        alloc = allocate(state, weights)
        scaled = allocate(state, WeightVector(weights.beta * scale))
        np.testing.assert_array_equal(scaled.p, alloc.p)


def test_weight_scaling_invariance(random_instance):
    for _ in range(10):
        state, weights = random_instance(6)
        alloc = allocate(state, weights)
        scaled = allocate(state, WeightVector(weights.beta * 3.7))
        np.testing.assert_allclose(scaled.p, alloc.p, rtol=0, atol=1e-12)


def test_linear_operation_count():
    counts = []
    for n_users in (250, 500, 1000):
        rng = np.random.default_rng(0)
        state = ChannelState(np.sort(rng.exponential(5.0, size=n_users)))
        weights = WeightVector(rng.uniform(0.1, 30.0, size=n_users))
        _, diagnostics = allocate_with_diagnostics(state, weights)
        counts.append(diagnostics.n_comparisons / n_users)
    assert max(counts) <= 4


def test_assign_powers_from_crossings():
    problem = AllocationProblem.from_inputs(
        ChannelState([1.0, 2.0, 4.0]), WeightVector([3.0, 2.0, 1.0])
    )
    alloc = assign_powers(problem, [0, 1, 2], [0.6, 0.25])
    np.testing.assert_allclose(alloc.p, [0.4, 0.35, 0.25])


@pytest.mark.parametrize(
    "active, crossings",
    [
        ([0, 1, 2], [0.25, 0.6]),
        ([0, 1, 2], [0.4, 0.4]),
        ([0, 1], [1.2]),
        ([0, 1], [0.0]),
        ([0, 1, 2], [0.5]),
        ([1, 0], [0.5]),
        ([], []),
    ],
)
def test_assign_powers_rejects_unordered_crossings(active, crossings):
    problem = AllocationProblem.from_inputs(
        ChannelState([1.0, 2.0, 4.0]), WeightVector([3.0, 2.0, 1.0])
    )
    with pytest.raises(ContractViolationError):
        assign_powers(problem, active, crossings)
