"""
Validator functions.

These functions validate names and parse the sweep specifications accepted by the
configuration and the command line.
"""

import math
import re
from typing import List

_NAME_PATTERN = re.compile(r"^[a-zA-Z0-9_\- ]+$")
_PARAMETER_PATTERN = re.compile(r"^group(?P<group>[A-Za-z0-9_]+)\.mean_snr_db$")


def check_experiment_name(name: str) -> str:
    """
    Check that an experiment name can be used in file names.

    Parameters
    ----------
    name : str
        Experiment name.

    Returns
    -------
    str
        The name, unchanged.

    Raises
    ------
    ValueError
        If the name is empty or contains characters other than letters, digits,
        `_`, `-` and spaces.
    """
    if not name.strip():
        raise ValueError("Experiment name is empty.")
    if _NAME_PATTERN.match(name) is None:
        raise ValueError(
            f"Experiment name contains invalid characters (got {name!r}). Only "
            f"letters, numbers, underscores, dashes and spaces are allowed."
        )
    return name


def parse_sweep_parameter(parameter: str) -> str:
    """
    Group name targeted by a sweep parameter.

    Parameters
    ----------
    parameter : str
        Parameter in the form `group<NAME>.mean_snr_db`.

    Returns
    -------
    str
        Group name.

    Raises
    ------
    ValueError
        If the parameter does not have the expected form.

    Examples
    --------
    >>> from scalloc.config.validators import parse_sweep_parameter
    >>> parse_sweep_parameter("groupB.mean_snr_db")
    'B'
    """
    match = _PARAMETER_PATTERN.match(parameter)
    if match is None:
        raise ValueError(
            f"Unsupported sweep parameter {parameter!r}, expected "
            f"'group<NAME>.mean_snr_db'."
        )
    return match.group("group")


def parse_sweep_values(text: str) -> List[float]:
    """
    Parse sweep values.

    Accepts `start:stop:step` (stop included when reached) or a comma separated
    list. An empty string gives an empty sweep.

    Parameters
    ----------
    text : str
        Values specification.

    Returns
    -------
    list of float
        Sweep values.

    Raises
    ------
    ValueError
        If the text cannot be parsed or the step does not move towards `stop`.

    Examples
    --------
    >>> from scalloc.config.validators import parse_sweep_values
    >>> parse_sweep_values("0:20:5")
    [0.0, 5.0, 10.0, 15.0, 20.0]
    >>> parse_sweep_values("1.5, 3")
    [1.5, 3.0]
    """
    text = text.strip()
    if not text:
        return []

    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"Range must be 'start:stop:step' (got {text!r}).")
        start, stop, step = (float(part) for part in parts)
        if step == 0 or (stop - start) * step < 0:
            raise ValueError(f"Step {step} does not reach {stop} from {start}.")
        n_steps = math.floor((stop - start) / step + 1e-9)
        return [start + i * step for i in range(n_steps + 1)]

    values = [float(part) for part in text.split(",")]
    if not all(math.isfinite(value) for value in values):
        raise ValueError(f"Sweep values must be finite (got {text!r}).")
    return values
