from __future__ import annotations

import numpy as np

from app.config import settings

_SEED_MASK = (1 << 64) - 1


def make_rng(seed: int) -> np.random.Generator:
    """numpy Generator on the configured bit generator (PCG64 by default).

    Only the low 64 bits of ``seed`` are used.
    """
    bit_generator = getattr(np.random, settings.prng_name)
    return np.random.Generator(bit_generator(seed & _SEED_MASK))


def seeded_permutation(n: int, seed: int) -> list[int]:
    """Fisher-Yates shuffle of 0..n-1: for i = n-1 down to 1, swap i with j uniform in [0, i]."""
    rng = make_rng(seed)
    order = list(range(n))
    for i in range(n - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        order[i], order[j] = order[j], order[i]
    return order
