"""
Block-fading SNR generation.

Each user draws from its own random stream, so adding users or changing another
user's statistics leaves a user's realisations unchanged. Under Rayleigh fading the
SNR is exponential, generated by inversion as `-g ln(1 - U)` with `U` uniform in
[0, 1).
"""

from dataclasses import dataclass
from typing import List, Sequence

import numpy as np
from numpy.typing import NDArray

from ..config.support import SupportedFading
from ..errors import ContractViolationError
from ..model import ChannelState
from ..utils import derive_generator


@dataclass(frozen=True)
class FadingSpec:
    """
    SNR statistics of one user.

    Attributes
    ----------
    mean_snr : float
        Mean SNR in linear scale.
    fading : SupportedFading
        Distribution of the instantaneous SNR.
    """

    mean_snr: float
    fading: SupportedFading = SupportedFading.EXPONENTIAL

    def __post_init__(self) -> None:
        if not (np.isfinite(self.mean_snr) and self.mean_snr > 0):
            raise ContractViolationError(
                f"Mean SNR must be finite and positive (got {self.mean_snr})."
            )


def _draw(spec: FadingSpec, uniforms: NDArray) -> NDArray:
    """SNR realisations of `spec` from uniforms in [0, 1).

    Parameters
    ----------
    spec : FadingSpec
        User statistics.
    uniforms : NDArray
        Uniform draws.

    Returns
    -------
    NDArray
        SNRs, same shape as `uniforms`.
    """
    if spec.fading == SupportedFading.DETERMINISTIC:
        return np.full(uniforms.shape, spec.mean_snr)
    return -spec.mean_snr * np.log1p(-uniforms)


def user_generators(seed: int, n_users: int) -> List[np.random.Generator]:
    """
    Independent generator of each user.

    Parameters
    ----------
    seed : int
        Base seed.
    n_users : int
        Number of users.

    Returns
    -------
    list of numpy.random.Generator
        Generator of user `l` at position `l`.
    """
    return [derive_generator(seed, user) for user in range(n_users)]


def sample_block(
    specs: Sequence[FadingSpec], rngs: Sequence[np.random.Generator]
) -> ChannelState:
    """
    SNRs of one block, one uniform draw per user.

    Parameters
    ----------
    specs : sequence of FadingSpec
        Statistics of each user.
    rngs : sequence of numpy.random.Generator
        Generator of each user.

    Returns
    -------
    ChannelState
        SNRs of the block.

    Raises
    ------
    ContractViolationError
        If the numbers of specs and generators differ.
    """
    if len(specs) != len(rngs):
        raise ContractViolationError(
            f"Got {len(specs)} fading specs and {len(rngs)} generators."
        )
    uniforms = np.array([rng.random() for rng in rngs])
    return ChannelState(
        np.array([_draw(spec, u) for spec, u in zip(specs, uniforms)], dtype=float)
    )


class ChannelSampler:
    """
    Buffered block sampler over per-user streams.

    Uniforms are drawn `chunk_size` at a time from every user's stream. The resulting
    sequence is the one obtained by calling `sample_block` block after block.

    Parameters
    ----------
    specs : sequence of FadingSpec
        Statistics of each user.
    seed : int
        Base seed of the user streams.
    chunk_size : int, optional
        Number of blocks drawn at once, by default 4096.
    """

    def __init__(
        self, specs: Sequence[FadingSpec], seed: int, chunk_size: int = 4096
    ) -> None:
        if len(specs) == 0:
            raise ContractViolationError("Need at least one user.")
        self.specs = list(specs)
        self.chunk_size = chunk_size
        self._rngs = user_generators(seed, len(self.specs))
        self._buffer = np.empty((0, len(self.specs)))
        self._position = 0

    def _refill(self) -> None:
        """Draw the next chunk of SNRs of every user."""
        columns = [
            _draw(spec, rng.random(self.chunk_size))
            for spec, rng in zip(self.specs, self._rngs)
        ]
        self._buffer = np.stack(columns, axis=-1)
        self._position = 0

    def sample_block(self) -> ChannelState:
        """
        SNRs of the next block.

        Returns
        -------
        ChannelState
            SNRs of the block.
        """
        if self._position >= self._buffer.shape[0]:
            self._refill()
        snr = self._buffer[self._position]
        self._position += 1
        return ChannelState(snr)
