"""Paired-trial comparison grid.

Within a cell ``(family, k, pc)``, trial ``t`` generates one instance and
runs every method on it, each method with its own seed stream. Seeds are
derived from the base seed and the cell/trial/method names
(see :mod:`ndrank.seeding`), so a single cell reruns identically on its own.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import TextIO

import numpy as np

from .graph import CycleError
from .compare import (
    CoverResult,
    PairwiseSummary,
    bonferroni,
    format_ordering,
    pairwise_verdict,
    rank_ordering,
    sign_test_pvalue,
    verdict_string,
)
from .io import fmt, write_comments
from .moea import ALL_METHODS, MoeaConfig, run_moea
from .problems import generate
from .seeding import derive_seed

PAPER_KS = (5, 10, 15, 20)
PAPER_TSP_PCS = (-0.4, -0.2, 0.0, 0.2, 0.4)
PAPER_JSP_PCS = (10.0, 20.0, 30.0, 40.0, 50.0)


@dataclass(frozen=True)
class ExperimentGrid:
    family: str = "tsp"
    ks: tuple[int, ...] = PAPER_KS
    pcs: tuple[float, ...] = PAPER_TSP_PCS
    methods: tuple[str, ...] = tuple(m.value for m in ALL_METHODS)
    trials: int = 20
    base_seed: int = 0
    n: int = 30
    popsize: int = 20
    generations: int = 500
    tournament_size: int = 5
    archive_capacity: int = 100
    threshold: int | None = None  # defaults to 17 of 20, scaled for other trial counts
    bonferroni_m: int | None = None  # defaults to the number of method pairs

    @property
    def pairs(self) -> list[tuple[str, str]]:
        return list(itertools.combinations(self.methods, 2))

    @property
    def win_threshold(self) -> int:
        if self.threshold is not None:
            return self.threshold
        return math.ceil(self.trials * 17 / 20)

    @property
    def n_comparisons(self) -> int:
        return self.bonferroni_m if self.bonferroni_m is not None else len(self.pairs)

    def instance_seed(self, k: int, pc: float, trial: int) -> int:
        return derive_seed(self.base_seed, self.family, k, pc, trial, "instance")

    def method_seed(self, k: int, pc: float, trial: int, method: str) -> int:
        return derive_seed(self.base_seed, self.family, k, pc, trial, "method", method)

    def moea_config(self, method: str, seed: int) -> MoeaConfig:
        return MoeaConfig(self.popsize, self.generations, self.tournament_size, self.archive_capacity, method, seed)

    def meta(self) -> dict:
        d = asdict(self)
        d["threshold"] = self.win_threshold
        d["bonferroni_m"] = self.n_comparisons
        return {key: (" ".join(map(str, v)) if isinstance(v, tuple) else v) for key, v in d.items()}


def paper_grid(family: str = "tsp", **overrides) -> ExperimentGrid:
    overrides.setdefault("pcs", PAPER_TSP_PCS if family == "tsp" else PAPER_JSP_PCS)
    return ExperimentGrid(family=family, **overrides)


def _run_one(task) -> np.ndarray:
    family, n, k, pc, inst_seed, cfg = task
    return run_moea(generate(family, n, k, pc, inst_seed), cfg).objectives.copy()


@dataclass
class CellResult:
    family: str
    k: int
    pc: float
    archives: dict[tuple[int, str], np.ndarray] = field(repr=False)
    covers: dict[tuple[str, str], list[CoverResult]] = field(repr=False)
    summaries: list[PairwiseSummary]
    ordering: list[list[str]] | None

    def summary(self, a: str, b: str) -> PairwiseSummary:
        for s in self.summaries:
            if (s.method_a, s.method_b) == (a, b):
                return s
            if (s.method_a, s.method_b) == (b, a):
                return s.swapped()
        raise KeyError((a, b))


def run_cell(grid: ExperimentGrid, k: int, pc: float, workers: int = 1) -> CellResult:
    tasks, keys = [], []
    for t in range(grid.trials):
        inst_seed = grid.instance_seed(k, pc, t)
        for m in grid.methods:
            cfg = grid.moea_config(m, grid.method_seed(k, pc, t, m))
            tasks.append((grid.family, grid.n, k, pc, inst_seed, cfg))
            keys.append((t, m))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [_run_one(task) for task in tasks]
    archives = dict(zip(keys, results))

    covers = {}
    summaries = []
    for a, b in grid.pairs:
        trials = [CoverResult.of(archives[t, a], archives[t, b]) for t in range(grid.trials)]
        covers[a, b] = trials
        summaries.append(pairwise_verdict(trials, grid.win_threshold, a, b))
    try:
        ordering = rank_ordering(summaries, grid.methods)
    except CycleError:
        ordering = None
    return CellResult(grid.family, k, pc, archives, covers, summaries, ordering)


def run_grid(grid: ExperimentGrid, workers: int = 1, progress=None) -> list[CellResult]:
    cells = []
    for k in grid.ks:
        for pc in grid.pcs:
            cells.append(run_cell(grid, k, pc, workers))
            if progress:
                progress(cells[-1])
    return cells



def write_covers_csv(out: TextIO, grid: ExperimentGrid, cells: list[CellResult]) -> None:
    write_comments(out, grid.meta())
    out.write("family,k,pc,trial,method_a,method_b,cov_ab,cov_ba\n")
    for cell in cells:
        for (a, b), trials in cell.covers.items():
            for t, c in enumerate(trials):
                out.write(f"{cell.family},{cell.k},{fmt(cell.pc)},{t},{a},{b},{fmt(c.cov_ab)},{fmt(c.cov_ba)}\n")


def write_summary_csv(out: TextIO, grid: ExperimentGrid, cells: list[CellResult]) -> None:
    write_comments(out, grid.meta())
    out.write("family,k,pc,method_a,method_b,wins_a,wins_b,ties,verdict,p_value,p_bonferroni\n")
    for cell in cells:
        for s in cell.summaries:
            p = sign_test_pvalue(s.trials, max(s.wins_a, s.wins_b))
            q = bonferroni(p, grid.n_comparisons)
            out.write(
                f"{cell.family},{cell.k},{fmt(cell.pc)},{s.method_a},{s.method_b},"
                f"{s.wins_a},{s.wins_b},{s.ties},{s.verdict.name},{p:.6g},{q:.6g}\n"
            )


def table1(grid: ExperimentGrid, cells: list[CellResult]) -> list[tuple[str, int, str]]:
    """``(comparison, k, cell string)`` with one verdict character per pc, in grid order."""
    by = {(c.k, c.pc): c for c in cells}
    rows = []
    for a, b in grid.pairs:
        for k in grid.ks:
            if all((k, pc) in by for pc in grid.pcs):
                rows.append((f"{a} vs {b}", k, verdict_string([by[k, pc].summary(a, b) for pc in grid.pcs])))
    return rows


def write_table1_csv(out: TextIO, grid: ExperimentGrid, cells: list[CellResult]) -> None:
    write_comments(out, grid.meta())
    out.write("comparison,k,cells\n")
    for comp, k, s in table1(grid, cells):
        out.write(f"{comp},{k},{s}\n")


def format_table1(grid: ExperimentGrid, cells: list[CellResult]) -> str:
    rows = table1(grid, cells)
    ks = sorted({k for _, k, _ in rows}, key=grid.ks.index)
    cell = {(c, k): s for c, k, s in rows}
    comps = list(dict.fromkeys(c for c, _, _ in rows))
    width = max([len("Comparison")] + [len(c) for c in comps])
    col = max(len(grid.pcs), 5)
    lines = ["pc order: " + " ".join(fmt(pc) for pc in grid.pcs)]
    lines.append("Comparison".ljust(width) + "".join(f"  {'k=' + str(k):<{col}}" for k in ks))
    for c in comps:
        lines.append(c.ljust(width) + "".join(f"  {cell[c, k]:<{col}}" for k in ks))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def write_table2_csv(out: TextIO, grid: ExperimentGrid, cells: list[CellResult]) -> None:
    write_comments(out, grid.meta())
    out.write("family,k,pc,ordering\n")
    for c in cells:
        text = format_ordering(c.ordering) if c.ordering is not None else "INCONSISTENT"
        out.write(f'{c.family},{c.k},{fmt(c.pc)},"{text}"\n')


def format_table2(cells: list[CellResult]) -> str:
    lines = []
    for c in cells:
        label = f"{c.family.upper()} {c.k} / {fmt(c.pc)}"
        text = format_ordering(c.ordering) if c.ordering is not None else "INCONSISTENT (cyclic significant wins)"
        lines.append(f"{label:<16} {text}")
    return "\n".join(lines) + "\n"
