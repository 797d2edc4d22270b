"""Deterministic random streams.

A run is seeded with a single 64-bit integer. Every consumer of randomness derives its
own PCG64 stream from that seed and a tuple of integer keys through
`numpy.random.SeedSequence` spawn keys, so streams never overlap and do not depend on
the order in which they are created.
"""

from typing import Tuple

import numpy as np


def derive_generator(seed: int, *keys: int) -> np.random.Generator:
    """PCG64 generator for the substream `keys` of `seed`.

    Parameters
    ----------
    seed : int
        Base seed, 0 <= seed < 2**64.
    *keys : int
        Substream keys, e.g. the user index.

    Returns
    -------
    numpy.random.Generator
        Independent generator.

    Examples
    --------
    >>> from scalloc.utils.seeding import derive_generator
    >>> a = derive_generator(7, 0).random(3)
    >>> b = derive_generator(7, 0).random(3)
    >>> bool((a == b).all())
    True
    >>> bool((a == derive_generator(7, 1).random(3)).any())
    False
    """
    spawn_key: Tuple[int, ...] = tuple(int(k) for k in keys)
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=spawn_key)
    return np.random.Generator(np.random.PCG64(sequence))
