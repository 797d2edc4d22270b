"""Validator utilities."""

__all__ = [
    "check_experiment_name",
    "parse_sweep_parameter",
    "parse_sweep_values",
]

from .validator_utils import (
    check_experiment_name,
    parse_sweep_parameter,
    parse_sweep_values,
)
