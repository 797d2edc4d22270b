"""User populations built from scenario configurations."""

from typing import List

from ..config import ScenarioConfig
from .fading import FadingSpec


def db_to_linear(value_db: float) -> float:
    """
    Convert decibels to linear scale.

    Parameters
    ----------
    value_db : float
        Value in dB.

    Returns
    -------
    float
        `10 ** (value_db / 10)`.

    Examples
    --------
    >>> from scalloc.channel import db_to_linear
    >>> db_to_linear(10.0)
    10.0
    """
    return 10.0 ** (value_db / 10.0)


def build_scenario(config: ScenarioConfig) -> List[FadingSpec]:
    """
    Fading statistics of every user, users numbered group after group.

    Parameters
    ----------
    config : ScenarioConfig
        Scenario.

    Returns
    -------
    list of FadingSpec
        One spec per user.
    """
    return [
        FadingSpec(mean_snr=db_to_linear(group.mean_snr_db), fading=group.fading)
        for group in config.groups
        for _ in range(group.count)
    ]


def sweep_scenarios(config: ScenarioConfig) -> List[ScenarioConfig]:
    """
    One scenario per sweep point.

    Every point keeps the base seed, so users see the same uniform draws at every
    point and only the swept group's mean changes.

    Parameters
    ----------
    config : ScenarioConfig
        Scenario with a sweep.

    Returns
    -------
    list of ScenarioConfig
        Scenarios without sweep, in the order of the sweep values. Empty when the
        scenario has no sweep or no sweep values.
    """
    if config.sweep is None:
        return []
    group = config.sweep.group
    points = []
    for value in config.sweep.values:
        point = config.with_group_mean(group, value)
        point.sweep = None
        points.append(point)
    return points
