import numpy as np
import pytest

from scalloc.errors import ContractViolationError
from scalloc.model import ChannelState, PowerAllocation, RateVector, WeightVector


@pytest.mark.parametrize("cls", [ChannelState, WeightVector, RateVector])
@pytest.mark.parametrize(
    "values",
    [
        [],
        [1.0, -0.5],
        [1.0, np.nan],
        [np.inf],
        [[1.0, 2.0]],
    ],
)
def test_vectors_reject_invalid_values(cls, values):
    with pytest.raises(ContractViolationError):
        cls(values)


@pytest.mark.parametrize("values", [[0.0, 1.0], [2.0, 0.0, 3.0]])
def test_weights_must_be_positive(values):
    with pytest.raises(ContractViolationError):
        WeightVector(values)


def test_zero_snr_is_allowed():
    assert ChannelState([0.0, 1.0]).snr[0] == 0.0


def test_vectors_are_read_only():
    state = ChannelState([1.0, 2.0])
    with pytest.raises(ValueError):
        state.snr[0] = 3.0


def test_vectors_copy_input():
    values = np.array([1.0, 2.0])
    weights = WeightVector(values)
    values[0] = 5.0
    assert weights.beta[0] == 1.0


@pytest.mark.parametrize(
    "p, active",
    [
        ([1.0], (0,)),
        ([0.6, 0.0, 0.4], (0, 2)),
        ([0.0, 0.0, 1.0], (2,)),
    ],
)
def test_power_allocation_active(p, active):
    assert PowerAllocation(p).active == active


@pytest.mark.parametrize("p", [[0.5, 0.4], [0.7, 0.4], [1.0 + 1e-9]])
def test_power_allocation_off_simplex(p):
    with pytest.raises(ContractViolationError):
        PowerAllocation(p)


def test_power_allocation_simplex_tolerance():
    PowerAllocation([0.5, 0.5 + 1e-13])


def test_vertex():
    alloc = PowerAllocation.vertex(4, 2)
    np.testing.assert_array_equal(alloc.p, [0.0, 0.0, 1.0, 0.0])
    assert alloc.active == (2,)

    with pytest.raises(ContractViolationError):
        PowerAllocation.vertex(4, 4)


def test_is_sorted():
    assert ChannelState([1.0, 1.0, 2.0]).is_sorted()
    assert ChannelState([3.0]).is_sorted()
    assert not ChannelState([2.0, 1.0]).is_sorted()
