import pytest

from scalloc.channel import build_scenario, db_to_linear, sweep_scenarios
from scalloc.config import ScenarioConfig


def test_db_to_linear():
    assert db_to_linear(0.0) == 1.0
    assert db_to_linear(-10.0) == pytest.approx(0.1)
    assert db_to_linear(3.0) == pytest.approx(1.9953, abs=1e-4)


def test_build_scenario(two_group_scenario):
    specs = build_scenario(ScenarioConfig(**two_group_scenario))
    assert len(specs) == 6
    assert [spec.mean_snr for spec in specs[:3]] == [1.0] * 3
    assert [spec.mean_snr for spec in specs[3:]] == [10.0] * 3


def test_sweep_scenarios(two_group_scenario):
    config = ScenarioConfig(**two_group_scenario)
    points = sweep_scenarios(config)
    assert len(points) == 2
    assert [point.groups[1].mean_snr_db for point in points] == [0.0, 10.0]
    for point in points:
        assert point.sweep is None
        assert point.seed == config.seed
        assert point.groups[0].mean_snr_db == 0.0
    # the base configuration is unchanged
    assert config.groups[1].mean_snr_db == 10.0


def test_no_sweep(minimum_scenario):
    assert sweep_scenarios(ScenarioConfig(**minimum_scenario)) == []
