"""Rank distributions, their relative entropy, and the random-population study."""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import ranking
from .pareto import nondominated_set
from .problems import generate_tsp
from .seeding import derive_seed

N_BINS = 20
BIN_EDGES = tuple(i / N_BINS for i in range(N_BINS + 1))


def rank_distribution(ranks: Iterable[int]) -> Counter:
    """Map rank -> number of points holding it."""
    return Counter(int(r) for r in np.asarray(ranks).ravel())


def relative_entropy(dist: Mapping[int, int]) -> float:
    """Shannon entropy of the rank histogram normalized by ``log n``.

    0 when every point shares one rank, 1 when all ranks differ. A single
    point counts as totally ordered and scores 1.
    """
    counts = [c for c in dist.values() if c > 0]
    n = sum(counts)
    if n < 1:
        raise ValueError("empty rank distribution")
    if n == 1:
        return 1.0
    h = sum((c / n) * math.log(c / n) for c in counts)
    re = h / math.log(1.0 / n)
    return min(1.0, max(0.0, re))


def relative_entropy_of_ranks(ranks) -> float:
    return relative_entropy(rank_distribution(ranks))


def bin_of(re: float) -> int | None:
    """Histogram bin for ``re``: ``None`` for exactly zero, else 0..19 for (lo, hi]."""
    if re == 0.0:
        return None
    return min(N_BINS - 1, bisect_left(BIN_EDGES, re) - 1)


@dataclass
class EntropyHistogram:
    method: str
    k: int
    zero_count: int = 0
    bins: list[int] = field(default_factory=lambda: [0] * N_BINS)

    def add(self, re: float) -> None:
        b = bin_of(re)
        if b is None:
            self.zero_count += 1
        else:
            self.bins[b] += 1

    @property
    def total(self) -> int:
        return self.zero_count + sum(self.bins)

    @property
    def zero_fraction(self) -> float:
        return self.zero_count / self.total if self.total else 0.0

    def rows(self) -> list[tuple[str, int, float, float, int]]:
        """CSV rows ``(method, k, bin_lo, bin_hi, count)``; the zero bar is ``lo = hi = 0``."""
        out = [(self.method, self.k, 0.0, 0.0, self.zero_count)]
        for i, c in enumerate(self.bins):
            out.append((self.method, self.k, BIN_EDGES[i], BIN_EDGES[i + 1], c))
        return out


def random_tsp_population(k: int, pop_size: int, seed: int, n_cities: int = 30, tsp_pc: float = 0.0) -> np.ndarray:
    """Objective vectors of ``pop_size`` random tours on a fresh random instance."""
    inst = generate_tsp(n_cities, k, tsp_pc, derive_seed(seed, "instance"))
    rng = np.random.default_rng(derive_seed(seed, "tours"))
    return np.stack([inst.evaluate(rng.permutation(n_cities), check=False) for _ in range(pop_size)])


def entropy_studies(
    k: int,
    n_pops: int,
    pop_size: int,
    problem_seed: int,
    methods: tuple[str, ...] = ("favour", "ko"),
    n_cities: int = 30,
    tsp_pc: float = 0.0,
) -> dict[str, EntropyHistogram]:
    """Histogram relative entropies of several methods over shared random populations.

    Repetition ``r`` draws its own instance and tours from a seed derived from
    ``(problem_seed, k, r)``, and each method ranks that population's
    nondominated subset.
    """
    if pop_size < 2:
        raise ValueError("pop_size must be at least 2")
    hists = {m: EntropyHistogram(m, k) for m in methods}
    for r in range(n_pops):
        pop = random_tsp_population(k, pop_size, derive_seed(problem_seed, "entropy", k, r), n_cities, tsp_pc)
        front = nondominated_set(pop)
        for m in methods:
            hists[m].add(relative_entropy_of_ranks(ranking.rank(front, m).ranks))
    return hists


def entropy_study(k: int, n_pops: int, pop_size: int, problem_seed: int, method: str, **kw) -> EntropyHistogram:
    return entropy_studies(k, n_pops, pop_size, problem_seed, (method,), **kw)[method]
