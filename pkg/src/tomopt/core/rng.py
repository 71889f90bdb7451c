"""Seeded random generators.

All randomness goes through numpy's PCG64 bit generator. A run seeded
with ``seed`` draws from ``Generator(PCG64(seed))``; work split into ``n``
chunks uses the children of ``SeedSequence(seed).spawn(n)``, chunk ``i``
taking child ``i``.
"""

from __future__ import annotations

from typing import List

import numpy as np

__all__ = ["make_rng", "spawn_rngs"]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def spawn_rngs(seed: int, n: int) -> List[np.random.Generator]:
    children = np.random.SeedSequence(seed).spawn(n)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]
