import numpy as np
import pytest
from scipy.optimize import brentq

from scalloc.allocation import (
    AllocationProblem,
    crossing_point,
    nu_tau,
    purge_beta_tau,
    purge_crossing,
    purge_nu,
)
from scalloc.errors import ContractViolationError, NoCrossingError
from scalloc.model import ChannelState, WeightVector


def test_nu_tau_worked_example(worked_example_inputs):
    problem = AllocationProblem.from_inputs(*worked_example_inputs)
    nu, tau = nu_tau(problem)
    np.testing.assert_allclose(
        nu, [10.2, 98.01, 116.6, 103.18, 35.42, 146.08, 104.92], rtol=1e-12
    )
    np.testing.assert_allclose(
        tau, [3.778, 22.793, 21.593, 13.4, 4.071, 15.708, 10.929], atol=1e-3
    )


def test_passes_worked_example(worked_example, worked_example_inputs):
    problem = AllocationProblem.from_inputs(*worked_example_inputs)
    nu, tau = nu_tau(problem)

    first, _ = purge_beta_tau(problem, tau)
    assert tuple(first) == worked_example["after_beta_tau"]

    second, _ = purge_nu(first, nu)
    assert tuple(second) == worked_example["after_nu"]

    active, crossings, _ = purge_crossing(problem, second, nu)
    assert tuple(active) == worked_example["active"]
    np.testing.assert_allclose(crossings, [18.59 / 46.464, 29.48 / 325.028], rtol=1e-9)


def test_crossing_point_formula():
    problem = AllocationProblem.from_inputs(
        ChannelState([1.0, 5.0]), WeightVector([3.0, 1.0])
    )
    assert crossing_point(problem, 1, 0) == pytest.approx(0.2)


def test_crossing_point_equal_nu():
    # equal nu with different SNRs crosses at zero
    problem = AllocationProblem.from_inputs(
        ChannelState([2.0, 4.0]), WeightVector([2.0, 1.0])
    )
    assert crossing_point(problem, 1, 0) == 0.0


def test_crossing_point_equal_weights():
    problem = AllocationProblem.from_inputs(
        ChannelState([2.0, 4.0]), WeightVector([1.0, 1.0])
    )
    with pytest.raises(NoCrossingError):
        crossing_point(problem, 1, 0)


def test_crossing_point_index_order():
    problem = AllocationProblem.from_inputs(
        ChannelState([2.0, 4.0]), WeightVector([2.0, 1.0])
    )
    with pytest.raises(ContractViolationError):
        crossing_point(problem, 0, 1)


def test_crossing_point_matches_root_finding():
    state = ChannelState([1.0, 3.0])
    weights = WeightVector([3.0, 1.5])
    problem = AllocationProblem.from_inputs(state, weights)
    nu, _ = nu_tau(problem)

    def marginal_gap(p):
        return nu[1] / (1.0 + p * 3.0) - nu[0] / (1.0 + p * 1.0)

    root = brentq(marginal_gap, 0.0, 1.0, xtol=1e-15)
    assert crossing_point(problem, 1, 0) == pytest.approx(root, abs=1e-12)


def test_single_user():
    problem = AllocationProblem.from_inputs(ChannelState([2.0]), WeightVector([1.0]))
    nu, tau = nu_tau(problem)
    first, _ = purge_beta_tau(problem, tau)
    second, _ = purge_nu(first, nu)
    active, crossings, _ = purge_crossing(problem, second, nu)
    assert active == [0] and crossings == []


@pytest.mark.parametrize("n_users", [100, 200, 400, 800])
def test_comparisons_linear_in_users(n_users):
    rng = np.random.default_rng(n_users)
    state = ChannelState(np.sort(rng.exponential(5.0, size=n_users)))
    weights = WeightVector(rng.uniform(0.1, 30.0, size=n_users))
    problem = AllocationProblem.from_inputs(state, weights)
    nu, tau = nu_tau(problem)

    first, n_first = purge_beta_tau(problem, tau)
    second, n_second = purge_nu(first, nu)
    _, _, n_third = purge_crossing(problem, second, nu)
    assert n_first + n_second + n_third <= 4 * n_users


@pytest.mark.parametrize("n_users", [2, 3, 5, 8, 30])
def test_pass_invariants(random_instance, n_users):
    for _ in range(50):
        problem = AllocationProblem.from_inputs(*random_instance(n_users))
        nu, tau = nu_tau(problem)
        first, _ = purge_beta_tau(problem, tau)
        second, _ = purge_nu(first, nu)
        third, crossings, _ = purge_crossing(problem, second, nu)

        assert set(third) <= set(second) <= set(first)
        assert np.all(np.diff(problem.beta[first]) < 0)
        assert np.all(np.diff(tau[first]) < 0)
        assert np.all(np.diff(nu[second]) > 0)
        assert len(crossings) == len(third) - 1
        assert np.all(np.diff(np.concatenate(([1.0], crossings, [0.0]))) < 0)
