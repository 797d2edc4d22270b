import pytest

from scalloc.config.validators import (
    check_experiment_name,
    parse_sweep_parameter,
    parse_sweep_values,
)


@pytest.mark.parametrize("name", ["study", "Study-2", "two groups", "a_b"])
def test_valid_experiment_names(name):
    assert check_experiment_name(name) == name


@pytest.mark.parametrize("name", ["", "  ", "a/b", "a.b", "x*"])
def test_invalid_experiment_names(name):
    with pytest.raises(ValueError):
        check_experiment_name(name)


def test_parse_sweep_parameter():
    assert parse_sweep_parameter("groupB.mean_snr_db") == "B"
    assert parse_sweep_parameter("groupcell_edge.mean_snr_db") == "cell_edge"


@pytest.mark.parametrize(
    "parameter", ["B.mean_snr_db", "groupB.count", "groupB.mean_snr_db.x", "group.mean_snr_db"]
)
def test_invalid_sweep_parameter(parameter):
    with pytest.raises(ValueError):
        parse_sweep_parameter(parameter)


@pytest.mark.parametrize(
    "text, values",
    [
        ("0:20:5", [0.0, 5.0, 10.0, 15.0, 20.0]),
        ("0:10:4", [0.0, 4.0, 8.0]),
        ("10:0:-5", [10.0, 5.0, 0.0]),
        ("3:3:1", [3.0]),
        ("1, 2.5,4", [1.0, 2.5, 4.0]),
        ("7", [7.0]),
        ("", []),
        ("   ", []),
    ],
)
def test_parse_sweep_values(text, values):
    assert parse_sweep_values(text) == values


@pytest.mark.parametrize("text", ["0:10", "0:10:0", "0:10:-1", "a,b", "1,inf"])
def test_invalid_sweep_values(text):
    with pytest.raises(ValueError):
        parse_sweep_values(text)
