"""Reproducible random streams.

Every stream is keyed by ``(seed, *index)`` and drawn from the counter-based
Philox generator, so a trial's numbers do not depend on which other trials
ran or in what order.
"""
import numpy as np


def trial_rng(seed: int, *index: int) -> np.random.Generator:
    key = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [int(i) for i in index]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(key)))
