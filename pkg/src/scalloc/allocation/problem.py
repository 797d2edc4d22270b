"""Sorted view of an allocation problem."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.typing import NDArray

from ..errors import ContractViolationError
from ..model import ChannelState, PowerAllocation, WeightVector


@dataclass(frozen=True, eq=False)
class AllocationProblem:
    """
    Users stable-sorted by non-decreasing SNR.

    Positions in the sorted view are called sorted positions; `perm[i]` is the
    caller's index of the user at sorted position `i`. Users with equal SNR keep
    their original relative order.

    Attributes
    ----------
    state : ChannelState
        Sorted SNRs.
    weights : WeightVector
        Weights in sorted order.
    perm : NDArray
        Original index of each sorted position.
    """

    state: ChannelState
    weights: WeightVector
    perm: NDArray

    @classmethod
    def from_inputs(
        cls, state: ChannelState, weights: WeightVector
    ) -> AllocationProblem:
        """
        Sort the users of `state` and `weights` by SNR.

        Parameters
        ----------
        state : ChannelState
            SNRs in any order.
        weights : WeightVector
            Weights in the same order.

        Returns
        -------
        AllocationProblem
            Sorted problem.

        Raises
        ------
        ContractViolationError
            If the lengths differ.
        """
        if len(state) != len(weights):
            raise ContractViolationError(
                f"SNR and weight vectors differ in length ({len(state)} and "
                f"{len(weights)})."
            )
        perm = np.argsort(state.snr, kind="stable")
        perm.flags.writeable = False
        return cls(
            state=ChannelState(state.snr[perm]),
            weights=WeightVector(weights.beta[perm]),
            perm=perm,
        )

    @property
    def snr(self) -> NDArray:
        """Sorted SNRs.

        Returns
        -------
        NDArray
            SNRs.
        """
        return self.state.snr

    @property
    def beta(self) -> NDArray:
        """Weights in sorted order.

        Returns
        -------
        NDArray
            Weights.
        """
        return self.weights.beta

    @property
    def n_users(self) -> int:
        """Number of users.

        Returns
        -------
        int
            Number of users.
        """
        return len(self.state)

    def to_original(self, p_sorted: NDArray) -> PowerAllocation:
        """
        Allocation in the caller's order from powers in sorted order.

        Parameters
        ----------
        p_sorted : NDArray
            Powers indexed by sorted position.

        Returns
        -------
        PowerAllocation
            Allocation indexed like the original inputs.
        """
        p = np.empty(self.n_users)
        p[self.perm] = p_sorted
        return PowerAllocation(p)

    def to_sorted(self, alloc: PowerAllocation) -> NDArray:
        """
        Powers of `alloc` indexed by sorted position.

        Parameters
        ----------
        alloc : PowerAllocation
            Allocation in the caller's order.

        Returns
        -------
        NDArray
            Powers in sorted order.
        """
        return alloc.p[self.perm]

    def original_indices(self, positions: Tuple[int, ...]) -> Tuple[int, ...]:
        """
        Caller's indices of sorted positions.

        Parameters
        ----------
        positions : tuple of int
            Sorted positions.

        Returns
        -------
        tuple of int
            Original indices.
        """
        return tuple(int(self.perm[i]) for i in positions)


@dataclass(frozen=True, eq=False)
class PurgeDiagnostics:
    """
    Intermediate results of the three purging passes.

    All positions are sorted positions.

    Attributes
    ----------
    nu : NDArray
        `snr * beta` of each user.
    tau : NDArray
        `nu / (1 + snr)` of each user.
    after_beta_tau : tuple of int
        Users left by the weight/tau pass.
    after_nu : tuple of int
        Users left by the nu pass.
    after_crossing : tuple of int
        Users left by the crossing pass, the active set.
    crossings : tuple of float
        Crossing points of consecutive active users, strongest pair last. The
        sequence is strictly decreasing.
    n_comparisons : int
        Number of pairwise comparisons performed by the three passes.
    """

    nu: NDArray
    tau: NDArray
    after_beta_tau: Tuple[int, ...]
    after_nu: Tuple[int, ...]
    after_crossing: Tuple[int, ...]
    crossings: Tuple[float, ...]
    n_comparisons: int
