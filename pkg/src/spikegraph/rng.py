"""Reproducible counter-based random streams.

All randomness in the package flows through Philox generators keyed by
(master_seed, *stream). Distinct stream tuples give statistically
independent streams, so replica k of any Monte Carlo computation can be
assigned ``make_rng(seed, k)`` and run in parallel without coordination.
"""

from __future__ import annotations

import numpy as np


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Philox generator for the given master seed and stream indices."""
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [int(s) for s in stream]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))
