"""Deterministic seed derivation.

All randomness in the simulator flows from two places:

* SplitMix64, counter-style, for everything that must be reproducible from a
  compact ``(seed, index)`` pair shared between sender and receiver (fountain
  symbol construction).  The kernel implementations in :mod:`mpvsim._kernels`
  run the same mixing function on ``uint64``; the pure-int version here is the
  reference and is pinned by test vectors.
* numpy ``Generator`` substreams keyed by structured tuples for everything
  simulation-local (channel noise, payload bytes, Monte Carlo trials).  Keys
  go through ``SeedSequence`` so adding a path or a stream never perturbs the
  draws of another.
"""

from __future__ import annotations

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def sm64_mix(z: int) -> int:
    """SplitMix64 finalizer on a 64-bit value."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def sm64_at(seed: int, i: int) -> int:
    """i-th output of the SplitMix64 stream started at ``seed``.

    Equivalent to advancing the classic stateful generator i+1 times.
    """
    return sm64_mix((seed + (i + 1) * _GOLDEN) & MASK64)


def derive_seed(*parts: int) -> int:
    """Fold integer parts into one 63-bit seed.

    Result stays below 2**63 so it can cross int64 boundaries (numba kernels,
    JSON) without sign trouble.
    """
    acc = 0
    for p in parts:
        acc = sm64_mix(acc ^ sm64_at(p & MASK64, 0))
    return acc & (MASK64 >> 1)


def substream(*key) -> np.random.Generator:
    """numpy Generator for a structured key, independent per key.

    String key parts are hashed through SplitMix64 so keys stay readable at
    call sites.
    """
    ints = []
    for part in key:
        if isinstance(part, str):
            acc = 0
            for ch in part.encode():
                acc = sm64_mix(acc ^ ch)
            ints.append(acc)
        else:
            ints.append(int(part) & MASK64)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(ints)))
