"""Mutation-only MOEA with a bounded random-replacement archive.

Parent selection is pluggable through :class:`MethodId`; everything else
(adjacent-swap mutation, archive policy, elitist seeding from the archive)
is shared so that differences between runs come from selection alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .pareto import nondominated_mask
from .problems import Problem
from . import ranking


class MethodId(str, enum.Enum):
    ARF = "ARF"  # average ranking, Pareto front only
    SRF = "SRF"  # sum of ratios, Pareto front only
    FR = "FR"  # favour relation, Pareto front only
    KO = "KO"  # k-optimality, Pareto front only
    RF = "RF"  # random, Pareto front only
    SO = "SO"  # normalized sum of objectives over the whole population
    RR = "RR"  # random over the whole population

    def __str__(self) -> str:
        return self.value


ALL_METHODS: tuple[MethodId, ...] = tuple(MethodId)

_FRONT_RANKERS = {
    MethodId.ARF: ranking.average_rank,
    MethodId.SRF: ranking.sum_of_ratios,
    MethodId.FR: ranking.favour_rank,
    MethodId.KO: ranking.k_optimality_rank,
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class MoeaConfig:
    popsize: int = 20
    generations: int = 500
    tournament_size: int = 5
    archive_capacity: int = 100
    method: MethodId = MethodId.ARF
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "method", MethodId(self.method))
        if self.popsize < 1 or self.tournament_size < 1 or self.archive_capacity < 1:
            raise ConfigError("popsize, tournament_size and archive_capacity must be positive")
        if self.generations < 0:
            raise ConfigError("generations must be nonnegative")
        if self.tournament_size > self.popsize:
            raise ConfigError("tournament_size cannot exceed popsize")


class Archive:
    """Bounded set of mutually noncovered points.

    A point is rejected if any entry covers it. Otherwise entries it dominates
    are dropped and, if the archive is still full, one uniformly random
    existing entry makes room.
    """

    def __init__(self, capacity: int, k: int, n: int):
        self.capacity = capacity
        self._obj = np.empty((capacity, k))
        self._gen = np.empty((capacity, n), dtype=np.int64)
        self._size = 0

    def __len__(self) -> int:
        return self._size

    @property
    def objectives(self) -> np.ndarray:
        return self._obj[: self._size]

    @property
    def genomes(self) -> np.ndarray:
        return self._gen[: self._size]

    def insert(self, genome, v, rng: np.random.Generator) -> bool:
        """Try to archive ``(genome, v)``; returns whether it entered."""
        size = self._size
        obj = self._obj[:size]
        if size and (obj <= v).all(axis=1).any():
            return False
        if size:
            # nothing covers v, so "v covers e" already means "v dominates e"
            keep = ~(v <= obj).all(axis=1)
            if not keep.all():
                size = int(keep.sum())
                self._obj[:size] = obj[keep]
                self._gen[:size] = self._gen[: self._size][keep]
        if size == self.capacity:
            victim = int(rng.integers(size))
            size -= 1
            self._obj[victim] = self._obj[size]
            self._gen[victim] = self._gen[size]
        self._obj[size] = v
        self._gen[size] = genome
        self._size = size + 1
        return True

    def check_invariants(self) -> None:
        obj = self.objectives
        if len(obj) > self.capacity:
            raise AssertionError("archive over capacity")
        cov = (obj[:, None, :] <= obj[None, :, :]).all(axis=2)
        np.fill_diagonal(cov, False)
        if cov.any():
            i, j = map(int, np.argwhere(cov)[0])
            raise AssertionError(f"archive entry {i} covers entry {j}")


def adjacent_swap_mutate(genome, rng: np.random.Generator) -> np.ndarray:
    """Copy of ``genome`` with one uniformly chosen adjacent pair swapped."""
    g = np.array(genome, copy=True)
    i = int(rng.integers(len(g) - 1))
    g[i], g[i + 1] = g[i + 1], g[i]
    return g


def tournament_select(ranks, candidates, size: int, rng: np.random.Generator) -> int:
    """Sample ``size`` candidates with replacement and return the best-ranked.

    ``ranks[i]`` belongs to ``candidates[i]``. Ties among the sampled best go
    to a uniformly random one of them.
    """
    ranks = np.asarray(ranks)
    pos = rng.integers(len(candidates), size=size)
    r = ranks[pos]
    tied = np.unique(pos[r == r.min()])
    pick = tied[0] if len(tied) == 1 else tied[rng.integers(len(tied))]
    return int(candidates[pick])


def rank_population(objectives, method: MethodId) -> tuple[np.ndarray, np.ndarray]:
    """Ranks for the selectable members and their population indices."""
    method = MethodId(method)
    if method is MethodId.RR:
        n = len(objectives)
        return np.ones(n, dtype=np.int64), np.arange(n)
    if method is MethodId.SO:
        scores = ranking.sum_of_ratios_scores(objectives)
        return ranking.dense_rank(scores), np.arange(len(objectives))
    front = np.flatnonzero(nondominated_mask(objectives))
    if method is MethodId.RF:
        return np.ones(len(front), dtype=np.int64), front
    ra = _FRONT_RANKERS[method](objectives[front])
    return ra.ranks, front


def run_moea(problem: Problem, cfg: MoeaConfig) -> Archive:
    """Evolve ``cfg.popsize`` permutations for ``cfg.generations`` generations.

    Each generation keeps one random archive member as the first individual,
    then fills the rest with tournament-selected parents under adjacent-swap
    mutation; every mutant is offered to the archive.
    """
    rng = np.random.default_rng(cfg.seed)
    n, k, popsize = problem.n, problem.k, cfg.popsize
    if cfg.tournament_size > popsize:
        raise ConfigError("tournament_size cannot exceed popsize")

    pop = np.stack([rng.permutation(n) for _ in range(popsize)])
    obj = np.stack([problem.evaluate(g, check=False) for g in pop])
    archive = Archive(cfg.archive_capacity, k, n)
    for i in np.flatnonzero(nondominated_mask(obj)):
        archive.insert(pop[i], obj[i], rng)

    evaluate = problem.evaluate
    for _ in range(cfg.generations):
        ranks, cands = rank_population(obj, cfg.method)
        new_pop = np.empty_like(pop)
        new_obj = np.empty_like(obj)
        j = int(rng.integers(len(archive)))
        new_pop[0] = archive.genomes[j]
        new_obj[0] = archive.objectives[j]
        for c in range(1, popsize):
            parent = tournament_select(ranks, cands, cfg.tournament_size, rng)
            child = adjacent_swap_mutate(pop[parent], rng)
            v = evaluate(child, check=False)
            archive.insert(child, v, rng)
            new_pop[c] = child
            new_obj[c] = v
        pop, obj = new_pop, new_obj
    return archive
