"""Sliding-window average throughput of each user."""

import numpy as np
from numpy.typing import NDArray

from ..errors import ContractViolationError
from ..model import RateVector

EPSILON = 1e-3
"""Floor and initial value of the average throughput."""


class ThroughputTracker:
    """
    Average rate of each user over the last `window` blocks.

    The window sum follows `S_n = S_{n-1} + r_n - r_{n-W}`, blocks before the first
    update counting as zero rate. The reported average is `max(epsilon, S_n / W)`, so
    the floor never feeds back into the sum. The sum is recomputed from the history
    every time the circular buffer wraps, which removes accumulated rounding errors.

    Parameters
    ----------
    n_users : int
        Number of users.
    window : int, optional
        Window length W in blocks, by default 1000.
    epsilon : float, optional
        Floor of the average, by default 1e-3.

    Examples
    --------
    >>> from scalloc.model import RateVector
    >>> from scalloc.scheduling import ThroughputTracker
    >>> tracker = ThroughputTracker(n_users=2, window=4)
    >>> tracker.r_tilde.tolist()
    [0.001, 0.001]
    >>> tracker.update(RateVector([2.0, 0.0]))
    >>> tracker.r_tilde.tolist()
    [0.5, 0.001]
    """

    def __init__(
        self, n_users: int, window: int = 1000, epsilon: float = EPSILON
    ) -> None:
        if n_users < 1:
            raise ContractViolationError(f"Need at least one user (got {n_users}).")
        if window < 1:
            raise ContractViolationError(f"Window must be at least 1 (got {window}).")
        if not epsilon > 0:
            raise ContractViolationError(f"Epsilon must be positive (got {epsilon}).")

        self.n_users = n_users
        self.window = window
        self.epsilon = epsilon

        self._history = np.zeros((window, n_users))
        self._sum = np.zeros(n_users)
        self._position = 0
        self.n_updates = 0

    @property
    def r_tilde(self) -> NDArray:
        """Average throughput of each user, floored at `epsilon`.

        Returns
        -------
        NDArray
            Averages, shape (n_users,).
        """
        return np.maximum(self.epsilon, self._sum / self.window)

    def update(self, rates: RateVector) -> None:
        """
        Add the rates of a block and drop the block leaving the window.

        Parameters
        ----------
        rates : RateVector
            Rates achieved in the block.

        Raises
        ------
        ContractViolationError
            If the number of users does not match.
        """
        if len(rates) != self.n_users:
            raise ContractViolationError(
                f"Expected {self.n_users} rates (got {len(rates)})."
            )
        self._sum += rates.r - self._history[self._position]
        self._history[self._position] = rates.r
        self._position = (self._position + 1) % self.window
        self.n_updates += 1

        if self._position == 0:
            self._sum = self._history.sum(axis=0)

    def window_mean(self) -> NDArray:
        """Exact mean of the rates in the window, without floor.

        Returns
        -------
        NDArray
            Mean of the last `window` blocks, missing blocks counting as zero.
        """
        return self._history.sum(axis=0) / self.window
