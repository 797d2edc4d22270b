"""Closed-form reference throughputs."""

import numpy as np
from scipy.special import exp1

from ..errors import ContractViolationError


def rr_reference_throughput(mean_snr: float, n_users: int = 1) -> float:
    """
    Round-robin throughput per user under exponential SNR.

    Each user is served one block in `n_users` and then achieves the ergodic rate
    `E[log2(1 + snr)] = log2(e) exp(1 / g) E1(1 / g)` for mean SNR `g`.

    Parameters
    ----------
    mean_snr : float
        Mean SNR in linear scale, positive.
    n_users : int, optional
        Number of users sharing the channel, by default 1.

    Returns
    -------
    float
        Throughput in bits per channel use.

    Raises
    ------
    ContractViolationError
        If the mean SNR is not positive or there are no users.

    Examples
    --------
    >>> from scalloc.scheduling import rr_reference_throughput
    >>> round(rr_reference_throughput(1.0), 4)
    0.8603
    """
    if not mean_snr > 0:
        raise ContractViolationError(f"Mean SNR must be positive (got {mean_snr}).")
    if n_users < 1:
        raise ContractViolationError(f"Need at least one user (got {n_users}).")
    inverse = 1.0 / mean_snr
    ergodic = np.log2(np.e) * np.exp(inverse) * exp1(inverse)
    return float(ergodic) / n_users
