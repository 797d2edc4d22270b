import numpy as np
import pytest

from scalloc.model import ChannelState, WeightVector


@pytest.fixture
def worked_example() -> dict:
    """Seven users already sorted by SNR, with their hand-checked solution.

    Positions are 0-based.
    """
    return {
        "snr": [1.7, 3.3, 4.4, 6.7, 7.7, 8.3, 8.6],
        "beta": [6.0, 29.7, 26.5, 15.4, 4.6, 17.6, 12.2],
        "after_beta_tau": (1, 2, 5, 6),
        "after_nu": (1, 2, 5),
        "active": (1, 2, 5),
        "powers": {1: 0.5999, 2: 0.3094, 5: 0.0907},
    }


@pytest.fixture
def worked_example_inputs(worked_example: dict) -> tuple:
    return (
        ChannelState(worked_example["snr"]),
        WeightVector(worked_example["beta"]),
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(42)


@pytest.fixture
def random_instance(rng: np.random.Generator):
    """Factory of instances with exponential SNRs of random mean and uniform
    weights."""

    def make(n_users: int) -> tuple:
        mean_snr = rng.uniform(0.5, 10.0)
        return (
            ChannelState(rng.exponential(mean_snr, size=n_users)),
            WeightVector(rng.uniform(0.1, 30.0, size=n_users)),
        )

    return make


@pytest.fixture
def minimum_scenario() -> dict:
    """Smallest valid scenario, a single homogeneous group under round robin."""
    return {
        "experiment_name": "minimum",
        "groups": [{"name": "A", "count": 3, "mean_snr_db": 0.0}],
        "n_blocks": 1000,
        "window": 100,
        "policy": {"kind": "round_robin"},
    }


@pytest.fixture
def two_group_scenario() -> dict:
    """Two small groups under SC, with a sweep over group B."""
    return {
        "experiment_name": "two_groups",
        "groups": [
            {"name": "A", "count": 3, "mean_snr_db": 0.0},
            {"name": "B", "count": 3, "mean_snr_db": 10.0},
        ],
        "n_blocks": 600,
        "window": 50,
        "seed": 3,
        "policy": {"kind": "sc"},
        "sweep": {"parameter": "groupB.mean_snr_db", "values": [0.0, 10.0]},
    }


@pytest.fixture
def experiment_report():
    """Factory of small hand-made reports."""
    from scalloc.experiment import ExperimentReport, ScheduledCountEntry

    def make(sweep_value=None) -> ExperimentReport:
        return ExperimentReport(
            experiment_name="study",
            policy="sc",
            seed=0,
            n_blocks=2000,
            warmup=100,
            sweep_value=sweep_value,
            group_names=["A", "B"],
            user_groups=["A", "B", "B"],
            per_user_throughput=[0.5, 1.25, 0.75],
            aggregate_throughput=2.5,
            group_throughput={"A": 0.5, "B": 1.0},
            sched_count_dist=[
                ScheduledCountEntry(counts=[0, 1], probability=0.25),
                ScheduledCountEntry(counts=[1, 1], probability=0.75),
            ],
            scheduled_count_mean=1.75,
            p2_dist={
                "[0.00,0.70)": 0.0,
                "[0.70,0.80)": 0.0,
                "[0.80,0.90)": 0.5,
                "[0.90,0.95)": 0.0,
                "[0.95,1.00]": 0.5,
            },
        )

    return make
