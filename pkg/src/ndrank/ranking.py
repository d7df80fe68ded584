"""Preference orderings over (mostly) nondominated point sets.

Every method maps an ``(n, k)`` point set to a :class:`RankAssignment`; lower
ranks are preferred.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .graph import condensation_layers
from .pareto import _pair, as_population, nondominated_mask


@dataclass(frozen=True)
class RankAssignment:
    ranks: np.ndarray
    method: str
    scores: np.ndarray

    def __len__(self) -> int:
        return len(self.ranks)

    def order(self) -> np.ndarray:
        """Point indices from best to worst score (stable)."""
        return np.argsort(self.scores, kind="stable")


def dense_rank(scores) -> np.ndarray:
    """1-based dense ranks of ``scores``; equal scores share a rank."""
    _, inverse = np.unique(np.asarray(scores), return_inverse=True)
    return inverse.reshape(-1).astype(np.int64) + 1


def comparison_matrix(points) -> np.ndarray:
    """``A[i, j, o]`` is +1 if point i beats j on objective o, -1 if it loses, 0 on ties."""
    p = as_population(points)
    return np.sign(p[None, :, :] - p[:, None, :]).astype(np.int8)


def average_rank_scores(points) -> np.ndarray:
    p = as_population(points)
    # competition ranking: 1 + number of points strictly better on each objective
    better = (p[None, :, :] < p[:, None, :]).sum(axis=1)
    return (better + 1).sum(axis=1)


def average_rank(points) -> RankAssignment:
    """Sum of per-objective ranks within the set."""
    scores = average_rank_scores(points)
    return RankAssignment(dense_rank(scores), "ar", scores)


def sum_of_ratios_scores(points) -> np.ndarray:
    p = as_population(points)
    lo = p.min(axis=0)
    span = p.max(axis=0) - lo
    flat = span == 0
    # an objective with no spread contributes nothing
    ratios = (p - lo) / np.where(flat, 1.0, span)
    ratios[:, flat] = 0.0
    return ratios.sum(axis=1)


def sum_of_ratios(points) -> RankAssignment:
    """Sum of min-max normalized objective values within the set."""
    scores = sum_of_ratios_scores(points)
    return RankAssignment(dense_rank(scores), "sr", scores)


def winning_score_scores(points) -> np.ndarray:
    return -comparison_matrix(points).sum(axis=(1, 2), dtype=np.int64)


def winning_score(points) -> RankAssignment:
    """Negated sum of per-objective win/loss margins over every other point."""
    scores = winning_score_scores(points)
    return RankAssignment(dense_rank(scores), "ws", scores)


class Favour(enum.Enum):
    A_FAVOURED = "a"
    B_FAVOURED = "b"
    NEITHER = "neither"


def favour(a, b) -> Favour:
    a, b = _pair(a, b)
    margin = int(np.sum(a < b)) - int(np.sum(a > b))
    if margin > 0:
        return Favour.A_FAVOURED
    if margin < 0:
        return Favour.B_FAVOURED
    return Favour.NEITHER


@dataclass(frozen=True)
class FavourGraph:
    """Favour digraph of a point set with its SCC condensation.

    ``edges[i, j]`` is true iff point i is favoured over point j.
    """

    edges: np.ndarray
    scc_of: np.ndarray
    layer_of: np.ndarray

    @property
    def n_components(self) -> int:
        return int(self.scc_of.max()) + 1


def favour_graph(points) -> FavourGraph:
    p = as_population(points)
    wins = (p[:, None, :] < p[None, :, :]).sum(axis=2)
    edges = wins > wins.T
    succ = [np.flatnonzero(row).tolist() for row in edges]
    comp, layer = condensation_layers(succ)
    return FavourGraph(edges, np.asarray(comp), np.asarray(layer, dtype=np.int64))


def favour_rank(points) -> RankAssignment:
    """Rank = longest-path layer of the point's SCC in the condensed favour graph."""
    layers = favour_graph(points).layer_of
    return RankAssignment(layers, "favour", layers.astype(float))


def k_optimality_scores(points) -> np.ndarray:
    """Order of efficiency of each point: the smallest z such that no other
    point dominates it on any z-objective subset.

    Point t dominates s on some subset of size z exactly when t is no worse
    than s on at least z objectives and strictly better on one of them, so
    the largest such subset is the whole set of objectives where t is no
    worse. That turns the subset search into one pairwise pass.
    """
    p = as_population(points)
    k = p.shape[1]
    # no_worse[t, s]: number of objectives on which t is no worse than s
    no_worse = (p[:, None, :] <= p[None, :, :]).sum(axis=2)
    strictly = (p[:, None, :] < p[None, :, :]).any(axis=2)
    largest = np.where(strictly, no_worse, 0).max(axis=0)
    if np.any(largest >= k):
        bad = np.flatnonzero(largest >= k).tolist()
        raise ValueError(f"k-optimality needs a nondominated set; points {bad} are dominated")
    return largest + 1


def k_optimality_rank(points) -> RankAssignment:
    z = k_optimality_scores(points)
    return RankAssignment(z.astype(np.int64), "ko", z.astype(float))


RANKERS: dict[str, Callable[..., RankAssignment]] = {
    "ar": average_rank,
    "sr": sum_of_ratios,
    "favour": favour_rank,
    "ko": k_optimality_rank,
    "ws": winning_score,
}


def rank(points, method: str) -> RankAssignment:
    try:
        fn = RANKERS[method]
    except KeyError:
        raise ValueError(f"unknown ranking method {method!r}; choose from {sorted(RANKERS)}") from None
    return fn(points)


def rank_front(points, method: str) -> tuple[RankAssignment, np.ndarray]:
    """Rank only the nondominated members; returns ranks and their indices."""
    idx = np.flatnonzero(nondominated_mask(points))
    return rank(as_population(points)[idx], method), idx
