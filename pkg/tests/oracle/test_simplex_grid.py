import numpy as np
import pytest

from scalloc.allocation import allocate
from scalloc.errors import OracleGuardError
from scalloc.model import ChannelState, WeightVector, sc_objective
from scalloc.oracle import simplex_grid_maximize


def test_too_many_users():
    with pytest.raises(OracleGuardError):
        simplex_grid_maximize(ChannelState(np.ones(4)), WeightVector(np.ones(4)))


def test_equal_snr_picks_largest_weight():
    solution = simplex_grid_maximize(
        ChannelState([2.0, 2.0, 2.0]), WeightVector([1.0, 4.0, 2.0]), resolution=0.01
    )
    np.testing.assert_array_equal(solution.alloc.p, [0.0, 1.0, 0.0])


def test_three_users_match_allocator(random_instance):
    for _ in range(10):
        state, weights = random_instance(3)
        optimum = sc_objective(state, weights, allocate(state, weights))
        solution = simplex_grid_maximize(state, weights, resolution=2e-3)
        assert solution.objective <= optimum * (1 + 1e-12)
        assert optimum - solution.objective <= 1e-3 * optimum
