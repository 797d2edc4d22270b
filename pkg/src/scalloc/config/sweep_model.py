"""Sweep configuration."""

from __future__ import annotations

import math
from typing import List

from pydantic import BaseModel, ConfigDict, field_validator

from .validators import parse_sweep_parameter


class SweepConfig(BaseModel):
    """
    Sweep over the mean SNR of one group.

    Attributes
    ----------
    parameter : str
        Swept parameter, `group<NAME>.mean_snr_db`.
    values : list of float
        Mean SNR values in dB, possibly empty.
    """

    model_config = ConfigDict(
        validate_assignment=True,
        extra="forbid",
    )

    parameter: str
    """Swept parameter."""

    values: List[float] = []
    """Values taken by the parameter."""

    @field_validator("parameter")
    @classmethod
    def known_parameter(cls, parameter: str) -> str:
        """
        Validate the parameter name.

        Parameters
        ----------
        parameter : str
            Parameter name.

        Returns
        -------
        str
            Validated parameter.
        """
        parse_sweep_parameter(parameter)
        return parameter

    @field_validator("values")
    @classmethod
    def finite_values(cls, values: List[float]) -> List[float]:
        """
        Validate that the values are finite.

        Parameters
        ----------
        values : list of float
            Sweep values.

        Returns
        -------
        list of float
            Validated values.

        Raises
        ------
        ValueError
            If a value is infinite or NaN.
        """
        if not all(math.isfinite(value) for value in values):
            raise ValueError(f"Sweep values must be finite (got {values}).")
        return values

    @property
    def group(self) -> str:
        """Name of the swept group.

        Returns
        -------
        str
            Group name.
        """
        return parse_sweep_parameter(self.parameter)
