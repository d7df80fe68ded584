import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.stats import binom

from ndrank.compare import (
    CoverResult,
    PairwiseSummary,
    Verdict,
    bonferroni,
    cover,
    format_ordering,
    pairwise_verdict,
    rank_ordering,
    sign_test_pvalue,
    verdict_string,
)
from ndrank.graph import CycleError

from conftest import populations


def test_cover_examples():
    a = np.array([[0.0, 3.0], [1.0, 1.0]])
    assert cover(a, a) == 1.0
    assert cover([(0, 0)], [(1, 1), (2, 2)]) == 1.0
    assert cover([(1, 1), (2, 2)], [(0, 0)]) == 0.0
    assert cover([(0, 3)], [(1, 4), (4, 0)]) == 0.5


def test_cover_empty_b():
    with pytest.raises(ValueError):
        cover([(0, 0)], np.empty((0, 2)))


@given(populations(max_n=8, max_k=3, min_k=2), populations(max_n=8, max_k=3, min_k=2))
def test_cover_properties(a, b):
    if a.shape[1] != b.shape[1]:
        return
    base = cover(a, b)
    assert 0.0 <= base <= 1.0
    assert cover(np.vstack([a, b[:1]]), b) >= base
    assert cover(np.vstack([a, b]), b) == 1.0


def _trials(a_wins, b_wins, ties):
    return [CoverResult(0.5, 0.1)] * a_wins + [CoverResult(0.1, 0.5)] * b_wins + [CoverResult(0.0, 0.0)] * ties


def test_verdicts():
    assert pairwise_verdict(_trials(17, 0, 3)).verdict is Verdict.A_SIG
    assert pairwise_verdict(_trials(16, 4, 0)).verdict is Verdict.NO_SIG
    assert pairwise_verdict(_trials(20, 0, 0)).verdict is Verdict.A_SIG
    assert pairwise_verdict(_trials(2, 18, 0)).verdict is Verdict.B_SIG
    s = pairwise_verdict(_trials(5, 6, 9))
    assert (s.wins_a, s.wins_b, s.ties, s.trials) == (5, 6, 9, 20)


def test_verdict_threshold_larger_than_trials():
    with pytest.raises(ValueError):
        pairwise_verdict(_trials(3, 0, 0), threshold=17)


@given(st.integers(0, 20).flatmap(lambda a: st.tuples(st.just(a), st.integers(0, 20 - a))))
def test_verdict_antisymmetric(ab):
    a, b = ab
    trials = _trials(a, b, 20 - a - b)
    fwd = pairwise_verdict(trials, method_a="X", method_b="Y")
    rev = pairwise_verdict([CoverResult(t.cov_ba, t.cov_ab) for t in trials], method_a="Y", method_b="X")
    assert fwd.swapped() == rev


def test_sign_test_values():
    p = sign_test_pvalue(20, 17)
    assert p == 1351 / 2**20
    assert p < 0.0013
    assert bonferroni(p, 28) == pytest.approx(0.036, abs=0.001)
    assert sign_test_pvalue(20, 10) == pytest.approx(0.588, abs=5e-4)
    assert sign_test_pvalue(20, 17, "two-sided") == 2 * p


@given(st.integers(1, 64).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_sign_test_matches_scipy(nw):
    n, w = nw
    assert sign_test_pvalue(n, w) == pytest.approx(binom.sf(w - 1, n, 0.5), rel=1e-9, abs=1e-300)


@given(st.integers(1, 64))
def test_sign_test_all_wins(n):
    assert sign_test_pvalue(n, n, "two-sided") == min(1.0, 2 * 0.5**n)


def test_sign_test_bad_inputs():
    with pytest.raises(ValueError):
        sign_test_pvalue(5, 6)
    with pytest.raises(ValueError):
        sign_test_pvalue(5, 2, "less-ish")


def _summary(a, b, v):
    return PairwiseSummary(a, b, 0, 0, 0, v)


def test_ordering_one_winner():
    methods = ["ARF", "SRF", "FR", "KO", "RF", "SO", "RR"]
    summaries = []
    for i, a in enumerate(methods):
        for b in methods[i + 1 :]:
            summaries.append(_summary(a, b, Verdict.A_SIG if a == "ARF" else Verdict.NO_SIG))
    groups = rank_ordering(summaries, methods)
    assert groups == [["ARF"], ["FR", "KO", "RF", "RR", "SO", "SRF"]]
    assert format_ordering(groups) == "ARF, FR=KO=RF=RR=SO=SRF"


def test_ordering_trivial_and_chain():
    flat = [_summary("A", "B", Verdict.NO_SIG), _summary("A", "C", Verdict.NO_SIG), _summary("B", "C", Verdict.NO_SIG)]
    assert rank_ordering(flat) == [["A", "B", "C"]]
    chain = [_summary("A", "B", Verdict.A_SIG), _summary("C", "B", Verdict.B_SIG), _summary("A", "C", Verdict.A_SIG)]
    assert rank_ordering(chain) == [["A"], ["B"], ["C"]]


def test_ordering_cycle_is_reported():
    cyc = [_summary("A", "B", Verdict.A_SIG), _summary("B", "C", Verdict.A_SIG), _summary("C", "A", Verdict.A_SIG)]
    with pytest.raises(CycleError):
        rank_ordering(cyc)


def test_verdict_string():
    assert verdict_string([_summary("a", "b", v) for v in (Verdict.A_SIG, Verdict.NO_SIG, Verdict.B_SIG)]) == "A0B"
