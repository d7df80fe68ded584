"""Dominance and coverage between objective vectors (minimization)."""

from __future__ import annotations

import numpy as np


class DimensionError(ValueError):
    """Objective vectors of different lengths were compared."""


def as_population(points) -> np.ndarray:
    """Return ``points`` as a finite float array of shape ``(n, k)``."""
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionError(f"expected a nonempty (n, k) point set, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("objective values must be finite")
    return arr


def _pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise DimensionError(f"cannot compare vectors of shapes {a.shape} and {b.shape}")
    return a, b


def dominates(a, b) -> bool:
    """True iff ``a`` is no worse than ``b`` everywhere and strictly better somewhere."""
    a, b = _pair(a, b)
    return bool(np.all(a <= b) and np.any(a < b))


def covers(a, b) -> bool:
    """True iff ``a`` is no worse than ``b`` on every objective."""
    a, b = _pair(a, b)
    return bool(np.all(a <= b))


def dominance_matrix(points) -> np.ndarray:
    """Boolean matrix ``D`` with ``D[i, j]`` true iff point i dominates point j."""
    p = as_population(points)
    le = (p[:, None, :] <= p[None, :, :]).all(axis=2)
    lt = (p[:, None, :] < p[None, :, :]).any(axis=2)
    return le & lt


def nondominated_mask(points) -> np.ndarray:
    return ~dominance_matrix(points).any(axis=0)


def nondominated_indices(points) -> np.ndarray:
    """Indices of the nondominated members, in input order."""
    return np.flatnonzero(nondominated_mask(points))


def nondominated_set(points) -> np.ndarray:
    """Members not dominated by any other member.

    Input order is preserved and objective-space duplicates are kept, since
    equal vectors never dominate each other.
    """
    p = as_population(points)
    return p[nondominated_mask(p)]
