"""
Random streams, initialisation and standard bit mutation.

Every stream is a numpy PCG64 generator (128-bit state, published reference
outputs). Per-trial seeds come from numpy's SeedSequence so trials of one
experiment never share a stream.
"""

import numpy as np

from graph_core.label_subset import LabelSubset

SEED_LIMIT = 2 ** 64


def check_seed(seed: int) -> int:
    if not 0 <= seed < SEED_LIMIT:
        raise ValueError(f"Seed must be a 64-bit unsigned integer, got {seed}")
    return int(seed)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(check_seed(seed)))


def derive_seed(master_seed: int, trial_index: int) -> int:
    """64-bit seed of trial trial_index in an experiment seeded with master_seed."""
    sequence = np.random.SeedSequence([check_seed(master_seed), int(trial_index)])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def _mask_of(flags: np.ndarray) -> int:
    mask = 0
    for position in np.flatnonzero(flags):
        mask |= 1 << int(position)
    return mask


def random_subset(k: int, rng: np.random.Generator) -> LabelSubset:
    """Uniform sample from all 2^k bitstrings."""
    return LabelSubset(k, _mask_of(rng.integers(0, 2, size=k)))


def mutation_mask(k: int, rng: np.random.Generator) -> int:
    """One Bernoulli(1/k) draw per bit; set bits are the positions to flip."""
    return _mask_of(rng.random(k) < 1.0 / k)


def standard_mutation(x: LabelSubset, rng: np.random.Generator) -> LabelSubset:
    """Offspring of x with every bit flipped independently with probability 1/k."""
    if x.width < 1:
        raise ValueError("Standard mutation needs k >= 1")
    return x.flipped(mutation_mask(x.width, rng))
