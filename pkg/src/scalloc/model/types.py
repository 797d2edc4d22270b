"""Value types of the allocation problem.

All vectors are stored as read-only float64 numpy arrays. Construction validates the
invariants of each type and raises `ContractViolationError` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from ..errors import ContractViolationError
from .tolerances import SIMPLEX_TOL

ArrayLike = Union[Sequence[float], NDArray]


def _as_vector(values: ArrayLike, name: str) -> NDArray:
    """Read-only 1D float64 copy of `values`, non-empty, finite and non-negative.

    Parameters
    ----------
    values : ArrayLike
        Input values.
    name : str
        Name used in error messages.

    Returns
    -------
    NDArray
        Validated array.

    Raises
    ------
    ContractViolationError
        If the values are not a non-empty vector of finite non-negative numbers.
    """
    array = np.array(values, dtype=np.float64)
    if array.ndim != 1 or array.size == 0:
        raise ContractViolationError(
            f"{name} must be a non-empty 1D vector (got shape {array.shape})."
        )
    if not np.all(np.isfinite(array)):
        raise ContractViolationError(f"{name} must be finite (got {array}).")
    if np.any(array < 0):
        raise ContractViolationError(f"{name} must be non-negative (got {array}).")
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class ChannelState:
    """Instantaneous SNR of each user in a block.

    Attributes
    ----------
    snr : NDArray
        Linear SNR per user, finite and non-negative.
    """

    snr: NDArray

    def __post_init__(self) -> None:
        object.__setattr__(self, "snr", _as_vector(self.snr, "snr"))

    def __len__(self) -> int:
        return self.snr.size

    def is_sorted(self) -> bool:
        """Whether the SNRs are in non-decreasing order.

        Returns
        -------
        bool
            True if sorted.
        """
        return bool(np.all(np.diff(self.snr) >= 0))


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Per-user objective weights.

    Attributes
    ----------
    beta : NDArray
        Weights, finite and strictly positive.
    """

    beta: NDArray

    def __post_init__(self) -> None:
        beta = _as_vector(self.beta, "beta")
        if np.any(beta <= 0):
            raise ContractViolationError(f"beta must be positive (got {beta}).")
        object.__setattr__(self, "beta", beta)

    def __len__(self) -> int:
        return self.beta.size


@dataclass(frozen=True, eq=False)
class PowerAllocation:
    """Fractions of the transmit power given to each user.

    Attributes
    ----------
    p : NDArray
        Non-negative powers summing to 1.
    active : Tuple[int, ...]
        Indices of the users with positive power, ascending.
    """

    p: NDArray
    active: Tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        p = _as_vector(self.p, "p")
        total = float(p.sum())
        if abs(total - 1.0) > SIMPLEX_TOL:
            raise ContractViolationError(
                f"Powers must sum to 1 within {SIMPLEX_TOL} (got {total!r})."
            )
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "active", tuple(int(i) for i in np.flatnonzero(p)))

    def __len__(self) -> int:
        return self.p.size

    @classmethod
    def vertex(cls, n_users: int, user: int) -> PowerAllocation:
        """All power to a single user.

        Parameters
        ----------
        n_users : int
            Number of users.
        user : int
            Index of the user receiving all the power.

        Returns
        -------
        PowerAllocation
            Simplex vertex.

        Raises
        ------
        ContractViolationError
            If `user` is out of range.
        """
        if not 0 <= user < n_users:
            raise ContractViolationError(
                f"User index {user} out of range for {n_users} users."
            )
        p = np.zeros(n_users)
        p[user] = 1.0
        return cls(p)


@dataclass(frozen=True, eq=False)
class RateVector:
    """Achieved rate of each user in bits per channel use.

    Attributes
    ----------
    r : NDArray
        Non-negative rates.
    """

    r: NDArray

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", _as_vector(self.r, "r"))

    def __len__(self) -> int:
        return self.r.size
