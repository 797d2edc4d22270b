"""Scenario configuration, the root of a simulation setup."""

from __future__ import annotations

import json
from pathlib import Path
from pprint import pformat
from typing import List, Optional, Union

import yaml
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_validator,
    model_validator,
)
from typing_extensions import Self

from .group_model import GroupConfig
from .policy_model import PolicyConfig
from .sweep_model import SweepConfig
from .validators import check_experiment_name


class ScenarioConfig(BaseModel):
    """
    Simulation scenario.

    A scenario describes the user population (`groups`), the length of the
    simulation, the throughput averaging window, the seed and the scheduling policy.
    An optional sweep varies the mean SNR of one group.

    Attributes
    ----------
    experiment_name : str
        Name used for report files.
    groups : list of GroupConfig
        User groups, users are numbered group after group.
    n_blocks : int
        Number of simulated blocks, at least ten windows.
    window : int
        Length of the throughput averaging window, in blocks.
    warmup : int or None
        Blocks discarded before measuring, defaults to `window`.
    seed : int
        Base seed of the random streams.
    policy : PolicyConfig
        Scheduling policy.
    sweep : SweepConfig or None
        Optional sweep over the mean SNR of a group.
    scheduled_threshold : float
        Power above which a user counts as scheduled.

    Examples
    --------
    >>> from scalloc.config import ScenarioConfig
    >>> config = ScenarioConfig(
    ...     experiment_name="homogeneous",
    ...     groups=[{"name": "A", "count": 3, "mean_snr_db": 0.0}],
    ...     n_blocks=1000,
    ...     window=100,
    ...     policy={"kind": "round_robin"},
    ... )
    >>> config.n_users, config.warmup
    (3, 100)
    """

    model_config = ConfigDict(
        validate_assignment=True,
        extra="forbid",
    )

    experiment_name: str
    """Name of the experiment, used for report files."""

    groups: List[GroupConfig] = Field(min_length=1)
    """User groups."""

    n_blocks: int = Field(default=100_000, ge=1)
    """Number of simulated blocks."""

    window: int = Field(default=1000, ge=1)
    """Throughput averaging window W, in blocks."""

    warmup: Optional[int] = Field(default=None, ge=0, validate_default=True)
    """Blocks excluded from the measurements, `window` when not set."""

    seed: int = Field(default=0, ge=0, lt=2**64)
    """Base seed."""

    policy: PolicyConfig
    """Scheduling policy."""

    sweep: Optional[SweepConfig] = None
    """Optional sweep over a group mean SNR."""

    scheduled_threshold: float = Field(default=1e-9, ge=0, lt=1)
    """Power above which a user counts as scheduled."""

    @field_validator("experiment_name")
    @classmethod
    def no_symbol(cls, name: str) -> str:
        """
        Validate the experiment name.

        Parameters
        ----------
        name : str
            Name to validate.

        Returns
        -------
        str
            Validated name.
        """
        return check_experiment_name(name)

    @field_validator("groups")
    @classmethod
    def unique_group_names(cls, groups: List[GroupConfig]) -> List[GroupConfig]:
        """
        Validate that group names are unique.

        Parameters
        ----------
        groups : list of GroupConfig
            Groups to validate.

        Returns
        -------
        list of GroupConfig
            Validated groups.

        Raises
        ------
        ValueError
            If two groups share a name.
        """
        names = [group.name for group in groups]
        if len(set(names)) != len(names):
            raise ValueError(f"Group names must be unique (got {names}).")
        return groups

    @model_validator(mode="after")
    def consistent_lengths(self: Self) -> Self:
        """
        Validate the simulation length against the window and the warm-up.

        Returns
        -------
        Self
            Validated scenario.

        Raises
        ------
        ValueError
            If `n_blocks < 10 * window`, if the warm-up leaves no measured block or
            if the sweep targets an unknown group.
        """
        if self.n_blocks < 10 * self.window:
            raise ValueError(
                f"n_blocks must be at least 10 windows (got n_blocks={self.n_blocks}, "
                f"window={self.window})."
            )
        if self.warmup is None:
            # bypass assignment validation
            self.__dict__["warmup"] = self.window
        if self.warmup >= self.n_blocks:
            raise ValueError(
                f"warmup must be smaller than n_blocks (got {self.warmup} >= "
                f"{self.n_blocks})."
            )
        if self.sweep is not None and self.sweep.group not in self.group_names:
            raise ValueError(
                f"Sweep targets unknown group {self.sweep.group!r} (groups are "
                f"{self.group_names})."
            )
        return self

    def __str__(self) -> str:
        """Pretty string representing the scenario.

        Returns
        -------
        str
            Pretty string.
        """
        return pformat(self.model_dump())

    @property
    def group_names(self) -> List[str]:
        """Names of the groups, in order.

        Returns
        -------
        list of str
            Group names.
        """
        return [group.name for group in self.groups]

    @property
    def n_users(self) -> int:
        """Total number of users.

        Returns
        -------
        int
            Number of users.
        """
        return sum(group.count for group in self.groups)

    def user_groups(self) -> List[str]:
        """Group name of each user, users numbered group after group.

        Returns
        -------
        list of str
            Group of each user.
        """
        return [group.name for group in self.groups for _ in range(group.count)]

    def with_group_mean(self, group: str, mean_snr_db: float) -> ScenarioConfig:
        """
        Copy of the scenario with a different mean SNR for `group`.

        Parameters
        ----------
        group : str
            Group name.
        mean_snr_db : float
            New mean SNR in dB.

        Returns
        -------
        ScenarioConfig
            Validated copy.

        Raises
        ------
        ValueError
            If the group does not exist.
        """
        if group not in self.group_names:
            raise ValueError(f"Unknown group {group!r} (groups are {self.group_names}).")
        data = self.model_dump()
        for entry in data["groups"]:
            if entry["name"] == group:
                entry["mean_snr_db"] = mean_snr_db
        return ScenarioConfig.model_validate(data)

    def with_policy(self, policy: PolicyConfig) -> ScenarioConfig:
        """
        Copy of the scenario with another policy.

        Parameters
        ----------
        policy : PolicyConfig
            Policy to use.

        Returns
        -------
        ScenarioConfig
            Validated copy.
        """
        data = self.model_dump()
        data["policy"] = policy.model_dump()
        return ScenarioConfig.model_validate(data)


def load_scenario(path: Union[str, Path]) -> ScenarioConfig:
    """
    Load a scenario from a JSON or YAML file.

    Parameters
    ----------
    path : str or Path
        Path to the scenario.

    Returns
    -------
    ScenarioConfig
        Scenario.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    ValueError
        If the file does not contain a mapping.
    """
    if not Path(path).exists():
        raise FileNotFoundError(
            f"Scenario file {path} does not exist in {Path.cwd()!s}"
        )

    # JSON documents are valid YAML
    with open(path) as f:
        dictionary = yaml.load(f, Loader=yaml.SafeLoader)

    if not isinstance(dictionary, dict):
        raise ValueError(f"Scenario file {path} does not contain a mapping.")

    return ScenarioConfig(**dictionary)


def save_scenario(config: ScenarioConfig, path: Union[str, Path]) -> Path:
    """
    Save a scenario to a JSON or YAML file.

    Parameters
    ----------
    config : ScenarioConfig
        Scenario to save.
    path : str or Path
        Existing directory (the file is then `<experiment_name>.yml`) or a file path
        with a `.json`, `.yml` or `.yaml` extension.

    Returns
    -------
    Path
        Path of the written file.

    Raises
    ------
    ValueError
        If the path has an unsupported extension.

    Examples
    --------
    >>> from scalloc.config import create_two_group_configuration, save_scenario
    >>> config = create_two_group_configuration("saved", policy="sc")
    >>> save_scenario(config, out_dir).name
    'saved.yml'
    """
    config_path = Path(path)
    if config_path.is_dir():
        config_path = config_path / f"{config.experiment_name}.yml"
    elif config_path.suffix not in (".json", ".yml", ".yaml"):
        raise ValueError(
            f"Path must be a directory or a .json, .yml or .yaml file "
            f"(got {config_path})."
        )

    dictionary = config.model_dump(mode="json")
    with open(config_path, "w") as f:
        if config_path.suffix == ".json":
            json.dump(dictionary, f, indent=2)
        else:
            yaml.dump(dictionary, f, default_flow_style=False, sort_keys=False)

    return config_path
