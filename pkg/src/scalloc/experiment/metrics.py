"""Per-block measurements accumulated over a simulation."""

from collections import Counter
from typing import Dict, List, Sequence

import numpy as np
from numpy.typing import NDArray

from ..model import PowerAllocation, RateVector
from .report import ScheduledCountEntry

P2_EDGES = (0.70, 0.80, 0.90, 0.95)
"""Inner edges of the buckets of the two-strongest power."""

P2_LABELS = (
    "[0.00,0.70)",
    "[0.70,0.80)",
    "[0.80,0.90)",
    "[0.90,0.95)",
    "[0.95,1.00]",
)


def two_strongest_power(p: NDArray) -> float:
    """
    Total power of the two users with the largest allocations.

    Parameters
    ----------
    p : NDArray
        Powers.

    Returns
    -------
    float
        Sum of the two largest powers, the single power for one user.

    Examples
    --------
    >>> import numpy as np
    >>> from scalloc.experiment.metrics import two_strongest_power
    >>> two_strongest_power(np.array([0.25, 0.5, 0.25]))
    0.75
    """
    if p.size < 3:
        return float(np.sum(p))
    return float(np.sum(np.partition(p, p.size - 2)[-2:]))


def p2_bucket(value: float) -> int:
    """
    Bucket index of a two-strongest power.

    Parameters
    ----------
    value : float
        Power in [0, 1].

    Returns
    -------
    int
        Index into `P2_LABELS`.
    """
    return int(np.digitize(value, P2_EDGES))


class MetricsAccumulator:
    """
    Accumulates rates and scheduling statistics of measured blocks.

    Parameters
    ----------
    user_groups : sequence of str
        Group of each user.
    group_names : sequence of str
        Groups, in order.
    threshold : float, optional
        Power above which a user counts as scheduled, by default 1e-9.
    """

    def __init__(
        self,
        user_groups: Sequence[str],
        group_names: Sequence[str],
        threshold: float = 1e-9,
    ) -> None:
        self.group_names = list(group_names)
        self.user_groups = list(user_groups)
        self.threshold = threshold
        self._group_index = np.array(
            [self.group_names.index(group) for group in self.user_groups]
        )

        self.n_blocks = 0
        self._rate_sum = np.zeros(len(self.user_groups))
        self._counts: Counter = Counter()
        self._p2 = np.zeros(len(P2_LABELS), dtype=np.int64)

    def update(self, alloc: PowerAllocation, rates: RateVector) -> None:
        """
        Add a measured block.

        Parameters
        ----------
        alloc : PowerAllocation
            Allocation of the block.
        rates : RateVector
            Rates of the block.
        """
        self.n_blocks += 1
        self._rate_sum += rates.r

        scheduled = alloc.p > self.threshold
        counts = np.bincount(
            self._group_index[scheduled], minlength=len(self.group_names)
        )
        self._counts[tuple(int(c) for c in counts)] += 1
        self._p2[p2_bucket(two_strongest_power(alloc.p))] += 1

    def per_user_throughput(self) -> NDArray:
        """Average rate of each user.

        Returns
        -------
        NDArray
            Throughputs.
        """
        return self._rate_sum / max(self.n_blocks, 1)

    def group_throughput(self) -> Dict[str, float]:
        """Mean per-user throughput of each group.

        Returns
        -------
        dict of str to float
            Throughput of each group.
        """
        throughput = self.per_user_throughput()
        return {
            name: float(np.mean(throughput[self._group_index == g]))
            for g, name in enumerate(self.group_names)
        }

    def sched_count_dist(self) -> List[ScheduledCountEntry]:
        """Distribution of the scheduled users per group, sorted by counts.

        Returns
        -------
        list of ScheduledCountEntry
            Observed counts and their probabilities.
        """
        total = max(self.n_blocks, 1)
        return [
            ScheduledCountEntry(counts=list(counts), probability=n / total)
            for counts, n in sorted(self._counts.items())
        ]

    def scheduled_count_mean(self) -> float:
        """Mean number of scheduled users per block.

        Returns
        -------
        float
            Mean count.
        """
        total = max(self.n_blocks, 1)
        return sum(sum(counts) * n for counts, n in self._counts.items()) / total

    def p2_dist(self) -> Dict[str, float]:
        """Distribution of the two-strongest power over the buckets.

        Returns
        -------
        dict of str to float
            Probability of each bucket.
        """
        total = max(self.n_blocks, 1)
        return {label: int(n) / total for label, n in zip(P2_LABELS, self._p2)}

