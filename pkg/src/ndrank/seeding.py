"""Deterministic seed derivation.

A child seed is a pure function of the base seed and a key path, so any
sub-grid of an experiment can be rerun on its own and reproduce exactly.
Keys are mixed through :class:`numpy.random.SeedSequence`; strings are
hashed with CRC32 and signed or fractional numbers are mapped to
nonnegative integers first.
"""

from __future__ import annotations

import zlib

import numpy as np


def _encode(key) -> int:
    if isinstance(key, str):
        return zlib.crc32(key.encode("utf-8"))
    if isinstance(key, float) and not key.is_integer():
        key = round(key * 1_000_000)
    key = int(key)
    # zigzag: 0, -1, 1, -2, ... -> 0, 1, 2, 3, ...
    return 2 * key if key >= 0 else -2 * key - 1


def derive_seed(base_seed: int, *keys) -> int:
    """64-bit seed for the stream named by ``keys`` under ``base_seed``."""
    ss = np.random.SeedSequence([_encode(base_seed), *(_encode(k) for k in keys)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])
