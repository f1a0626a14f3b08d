"""Random stream handling.

All stochastic code in the package draws from ``numpy.random.Generator``
instances built here, so an experiment is fully determined by a 64-bit
master seed. Independent runs inside a batch each get a child stream
derived from ``(seed, run_index)``; the derivation is the documented
``SeedSequence(seed, spawn_key=(run_index,))`` hash of NumPy, so any
other implementation with access to NumPy can reproduce the streams.
"""

from __future__ import annotations

import numpy as np

from ._validation import check_int

_MAX_SEED = 2**64 - 1


def check_seed(seed) -> int:
    """Validate a 64-bit unsigned master seed."""
    return check_int("seed", seed, ge=0, le=_MAX_SEED)


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator for a master seed."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(check_seed(seed))))


def child_rng(seed: int, index: int) -> np.random.Generator:
    """Independent child stream for run ``index`` of a batch keyed by ``seed``.

    Children with distinct indices are statistically independent and do not
    depend on how many siblings exist or in which order they are created.
    """
    index = check_int("index", index, ge=0)
    seq = np.random.SeedSequence(check_seed(seed), spawn_key=(index,))
    return np.random.Generator(np.random.PCG64(seq))
