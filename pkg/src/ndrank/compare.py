"""Cover-metric comparison of archives and the sign-test protocol over paired trials."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import topological_layers
from .pareto import DimensionError


def cover(a, b) -> float:
    """Fraction of the points of ``b`` covered by at least one point of ``a``."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    b = np.atleast_2d(np.asarray(b, dtype=float))
    if b.size == 0 or b.shape[0] == 0:
        raise ValueError("cover(A, B) is undefined for empty B")
    if a.size == 0:
        return 0.0
    if a.shape[1] != b.shape[1]:
        raise DimensionError(f"objective counts differ: {a.shape[1]} vs {b.shape[1]}")
    covered = (a[:, None, :] <= b[None, :, :]).all(axis=2).any(axis=0)
    return float(covered.mean())


@dataclass(frozen=True)
class CoverResult:
    cov_ab: float
    cov_ba: float

    @classmethod
    def of(cls, a, b) -> "CoverResult":
        return cls(cover(a, b), cover(b, a))


class Verdict(enum.Enum):
    A_SIG = "A"
    NO_SIG = "0"
    B_SIG = "B"


@dataclass(frozen=True)
class PairwiseSummary:
    method_a: str
    method_b: str
    wins_a: int
    wins_b: int
    ties: int
    verdict: Verdict

    @property
    def trials(self) -> int:
        return self.wins_a + self.wins_b + self.ties

    def swapped(self) -> "PairwiseSummary":
        flip = {Verdict.A_SIG: Verdict.B_SIG, Verdict.B_SIG: Verdict.A_SIG, Verdict.NO_SIG: Verdict.NO_SIG}
        return PairwiseSummary(self.method_b, self.method_a, self.wins_b, self.wins_a, self.ties, flip[self.verdict])


def pairwise_verdict(
    trials: Sequence[CoverResult], threshold: int = 17, method_a: str = "A", method_b: str = "B"
) -> PairwiseSummary:
    """Count strict cover wins per side; a side reaching ``threshold`` wins is significant."""
    if not trials:
        raise ValueError("no trials")
    if threshold > len(trials):
        raise ValueError(f"threshold {threshold} exceeds the {len(trials)} trials")
    wins_a = sum(t.cov_ab > t.cov_ba for t in trials)
    wins_b = sum(t.cov_ba > t.cov_ab for t in trials)
    ties = len(trials) - wins_a - wins_b
    if wins_a >= threshold:
        verdict = Verdict.A_SIG
    elif wins_b >= threshold:
        verdict = Verdict.B_SIG
    else:
        verdict = Verdict.NO_SIG
    return PairwiseSummary(method_a, method_b, wins_a, wins_b, ties, verdict)


def binomial_tail(n: int, wins: int) -> Fraction:
    """Exact P(X >= wins) for X ~ Binomial(n, 1/2)."""
    if not 0 <= wins <= n:
        raise ValueError(f"need 0 <= wins <= n, got wins={wins}, n={n}")
    return Fraction(sum(math.comb(n, i) for i in range(wins, n + 1)), 2**n)


def sign_test_pvalue(n: int, wins: int, alternative: str = "greater") -> float:
    """Sign-test p-value for ``wins`` successes out of ``n`` under a fair coin.

    ``"greater"`` gives the upper tail P(X >= wins); ``"two-sided"`` doubles
    it and caps at 1.
    """
    tail = binomial_tail(n, wins)
    if alternative == "greater":
        return float(tail)
    if alternative == "two-sided":
        return float(min(Fraction(1), 2 * tail))
    raise ValueError(f"unknown alternative {alternative!r}")


def bonferroni(p: float, m: int) -> float:
    """Per-comparison p-value adjusted for ``m`` simultaneous comparisons."""
    if m < 1:
        raise ValueError("m must be positive")
    return min(1.0, p * m)


def rank_ordering(summaries: Sequence[PairwiseSummary], methods: Sequence[str] | None = None) -> list[list[str]]:
    """Best-to-worst groups such that no method sits left of one that beat it.

    Methods are layered by longest chain of significant wins above them;
    members of a layer are sorted alphabetically. Raises
    :class:`~ndrank.graph.CycleError` if significant wins form a cycle.
    """
    if methods is None:
        names: list[str] = []
        for s in summaries:
            for m in (s.method_a, s.method_b):
                if m not in names:
                    names.append(m)
    else:
        names = list(methods)
    idx = {m: i for i, m in enumerate(names)}
    succ: list[set[int]] = [set() for _ in names]
    for s in summaries:
        if s.verdict is Verdict.A_SIG:
            succ[idx[s.method_a]].add(idx[s.method_b])
        elif s.verdict is Verdict.B_SIG:
            succ[idx[s.method_b]].add(idx[s.method_a])
    layers = topological_layers([sorted(x) for x in succ])
    groups: dict[int, list[str]] = {}
    for m, layer in zip(names, layers):
        groups.setdefault(layer, []).append(m)
    return [sorted(groups[layer]) for layer in sorted(groups)]


def format_ordering(groups: list[list[str]]) -> str:
    """``[["ARF"], ["KO", "RF"]]`` -> ``"ARF, KO=RF"``."""
    return ", ".join("=".join(g) for g in groups)


def verdict_string(summaries_by_pc: Sequence[PairwiseSummary]) -> str:
    """One character per correlation setting: 'A', '0' or 'B'."""
    return "".join(s.verdict.value for s in summaries_by_pc)
