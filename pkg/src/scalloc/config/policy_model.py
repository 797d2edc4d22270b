"""Scheduling policy configuration."""

from __future__ import annotations

from pprint import pformat
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from .support import SupportedPolicy, SupportedUtility


class PolicyConfig(BaseModel):
    """
    Scheduling policy.

    `k_max` must be set for the capped superposition policy and only for it.

    Attributes
    ----------
    kind : SupportedPolicy
        Policy.
    utility : SupportedUtility
        Utility driving the weights of the weighted policies.
    k_max : int or None
        Maximum number of users per block for `sc_capped`.
    greedy : bool
        Whether `sc_capped` uses the greedy or the exhaustive search.

    Examples
    --------
    >>> from scalloc.config import PolicyConfig
    >>> PolicyConfig(kind="sc_capped", k_max=2).k_max
    2
    """

    model_config = ConfigDict(
        validate_assignment=True,
        extra="forbid",
    )

    kind: SupportedPolicy
    """Scheduling policy."""

    utility: SupportedUtility = SupportedUtility.PROPORTIONAL_FAIR
    """Utility whose gradient gives the per-block weights."""

    k_max: Optional[int] = Field(default=None, ge=1)
    """User cap of the capped superposition policy."""

    greedy: bool = True
    """Greedy (True) or exhaustive (False) subset search."""

    @model_validator(mode="after")
    def cap_only_for_capped_policy(self: Self) -> Self:
        """
        Validate that `k_max` is given exactly for `sc_capped`.

        Returns
        -------
        Self
            Validated policy.

        Raises
        ------
        ValueError
            If `k_max` is missing for `sc_capped` or set for another policy.
        """
        capped = self.kind == SupportedPolicy.SC_CAPPED
        if capped and self.k_max is None:
            raise ValueError("Policy 'sc_capped' requires 'k_max'.")
        if not capped and self.k_max is not None:
            raise ValueError(f"'k_max' is only valid for 'sc_capped' (got {self.kind}).")
        return self

    def __str__(self) -> str:
        """Pretty string representing the policy.

        Returns
        -------
        str
            Pretty string.
        """
        return pformat(self.model_dump())
