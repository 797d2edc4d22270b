"""User group configuration."""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .support import SupportedFading


class GroupConfig(BaseModel):
    """
    Users sharing the same mean SNR.

    Attributes
    ----------
    name : str
        Group name, used in reports and sweep parameters.
    count : int
        Number of users in the group.
    mean_snr_db : float
        Mean SNR of the group in dB.
    fading : SupportedFading
        Fading distribution of the instantaneous SNR.
    """

    model_config = ConfigDict(
        validate_assignment=True,
        extra="forbid",
    )

    name: str = Field(pattern=r"^[A-Za-z0-9_]+$")
    """Group name, letters, digits and underscores."""

    count: int = Field(ge=1)
    """Number of users, at least 1."""

    mean_snr_db: float
    """Mean SNR in dB."""

    fading: SupportedFading = SupportedFading.EXPONENTIAL
    """Fading distribution."""

    @field_validator("mean_snr_db")
    @classmethod
    def finite_mean(cls, value: float) -> float:
        """
        Validate that the mean SNR is finite.

        Parameters
        ----------
        value : float
            Mean SNR in dB.

        Returns
        -------
        float
            Validated value.

        Raises
        ------
        ValueError
            If the value is infinite or NaN.
        """
        if not math.isfinite(value):
            raise ValueError(f"Mean SNR must be finite (got {value}).")
        return value

    @property
    def mean_snr(self) -> float:
        """Mean SNR in linear scale.

        Returns
        -------
        float
            `10 ** (mean_snr_db / 10)`.
        """
        return 10.0 ** (self.mean_snr_db / 10.0)
