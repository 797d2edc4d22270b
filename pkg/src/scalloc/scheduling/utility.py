"""Per-block weights from the gradient of the network utility."""

from typing import Union

import numpy as np

from ..config.support import SupportedUtility
from ..model import WeightVector
from .tracker import ThroughputTracker


def weights_from_utility(
    utility: Union[SupportedUtility, str], tracker: ThroughputTracker
) -> WeightVector:
    """
    Gradient of the utility at the current average throughputs.

    Proportional fairness (sum of log-throughputs) gives `1 / R~_l`, the sum rate
    gives unit weights.

    Parameters
    ----------
    utility : SupportedUtility or str
        Network utility.
    tracker : ThroughputTracker
        Average throughputs.

    Returns
    -------
    WeightVector
        Weights of the block.
    """
    if SupportedUtility(utility) == SupportedUtility.PROPORTIONAL_FAIR:
        return WeightVector(1.0 / tracker.r_tilde)
    return WeightVector(np.ones(tracker.n_users))
