"""Benchmark families: k-objective TSPs and k-customer single-machine scheduling."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class ProblemError(ValueError):
    """Invalid generator parameters."""


class GenomeError(ValueError):
    """A genome is not a permutation of the right length."""


def check_permutation(genome, n: int) -> np.ndarray:
    g = np.asarray(genome)
    if g.shape != (n,) or not np.array_equal(np.sort(g), np.arange(n)):
        raise GenomeError(f"expected a permutation of 0..{n - 1}, got {g.tolist()}")
    return g


@dataclass(frozen=True, eq=False)
class TspInstance:
    n_cities: int
    k: int
    tsp_pc: float
    seed: int
    matrices: np.ndarray = field(repr=False)

    family = "tsp"

    @property
    def n(self) -> int:
        return self.n_cities

    def evaluate(self, genome, check: bool = True) -> np.ndarray:
        """Closed-tour length under each of the k distance matrices."""
        g = check_permutation(genome, self.n_cities) if check else genome
        return self.matrices[:, g, np.roll(g, -1)].sum(axis=1)


def generate_tsp(n_cities: int, k: int, tsp_pc: float, seed: int) -> TspInstance:
    """Objective 1 distances are uniform(0, 1) per city pair; objective i+1 is
    ``tsp_pc * d_i + (1 - tsp_pc) * u`` with a fresh uniform draw ``u``."""
    if n_cities < 3:
        raise ProblemError("need at least 3 cities")
    if k < 1:
        raise ProblemError("need at least one objective")
    if not -1.0 < tsp_pc < 1.0:
        raise ProblemError(f"tsp_pc must lie in (-1, 1), got {tsp_pc}")
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n_cities, 1)
    matrices = np.zeros((k, n_cities, n_cities))
    d = rng.random(len(iu[0]))
    for o in range(k):
        if o > 0:
            d = tsp_pc * d + (1.0 - tsp_pc) * rng.random(len(d))
        matrices[o][iu] = d
        matrices[o].T[iu] = d
    matrices.setflags(write=False)
    return TspInstance(n_cities, k, float(tsp_pc), int(seed), matrices)


@dataclass(frozen=True, eq=False)
class JspInstance:
    n_jobs: int
    k: int
    jsp_pc: float
    seed: int
    proc_time: np.ndarray = field(repr=False)
    due_date: np.ndarray = field(repr=False)
    customer: np.ndarray = field(repr=False)  # 1-based customer per job

    family = "jsp"

    @property
    def n(self) -> int:
        return self.n_jobs

    def latenesses(self, genome, check: bool = True) -> np.ndarray:
        """Per-job lateness, clamped at zero, indexed by job (not by position)."""
        g = check_permutation(genome, self.n_jobs) if check else genome
        finish = np.empty(self.n_jobs)
        finish[g] = np.cumsum(self.proc_time[g])
        return np.maximum(0.0, finish - self.due_date)

    def evaluate(self, genome, check: bool = True) -> np.ndarray:
        """Total lateness of each customer's jobs."""
        late = self.latenesses(genome, check)
        return np.bincount(self.customer - 1, weights=late, minlength=self.k)


def generate_jsp(n_jobs: int, k: int, jsp_pc: float, seed: int) -> JspInstance:
    """Processing times uniform integers in [50, 200]; due dates uniform reals
    in [50, 150 * jsp_pc]; each job goes to a uniformly random customer."""
    if k < 1 or n_jobs < k:
        raise ProblemError(f"need n_jobs >= k >= 1, got n_jobs={n_jobs}, k={k}")
    if 150.0 * jsp_pc < 50.0:
        raise ProblemError(f"jsp_pc must be at least 1/3 so that due dates span [50, 150*jsp_pc], got {jsp_pc}")
    rng = np.random.default_rng(seed)
    proc = rng.integers(50, 201, size=n_jobs)
    due = rng.uniform(50.0, 150.0 * jsp_pc, size=n_jobs)
    customer = rng.integers(1, k + 1, size=n_jobs)
    for a in (proc, due, customer):
        a.setflags(write=False)
    return JspInstance(n_jobs, k, float(jsp_pc), int(seed), proc, due, customer)


Problem = TspInstance | JspInstance


def generate(family: str, n: int, k: int, pc: float, seed: int) -> Problem:
    if family == "tsp":
        return generate_tsp(n, k, pc, seed)
    if family == "jsp":
        return generate_jsp(n, k, pc, seed)
    raise ProblemError(f"unknown problem family {family!r}")
