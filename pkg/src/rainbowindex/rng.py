"""Deterministic random streams.

All randomness flows through counter-based Philox generators keyed by
``(master_seed, stream_id)`` where the stream id is a SplitMix64 hash chain
over a tuple of small integers (purpose tag, grid index, trial index, ...).
Any unit of work can therefore be reproduced in isolation, and results do
not depend on execution order or thread count.
"""

import numpy as np

MASK64 = (1 << 64) - 1

# Purpose tags for substream derivation.
GRAPH_STREAM = 0
COLOR_STREAM = 1
SET_STREAM = 2


def mix64(x: int) -> int:
    """SplitMix64 finalizer: a fixed bijective 64-bit mix."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def stream_id(ids) -> int:
    """Fold a tuple of integers into a single 64-bit substream id."""
    h = 0
    for x in ids:
        h = mix64(h ^ mix64(x & MASK64))
    return h


def generator(seed: int, *ids: int) -> np.random.Generator:
    """Philox generator for substream ``ids`` under the master ``seed``."""
    key = np.array([seed & MASK64, stream_id(ids)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
