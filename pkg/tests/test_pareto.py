import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from ndrank.pareto import DimensionError, covers, dominance_matrix, dominates, nondominated_set

from conftest import ABC, populations


def brute_nondominated(points):
    out = []
    for i, p in enumerate(points):
        if not any(
            all(q[o] <= p[o] for o in range(len(p))) and any(q[o] < p[o] for o in range(len(p)))
            for j, q in enumerate(points)
            if j != i
        ):
            out.append(p)
    return np.array(out).reshape(-1, points.shape[1])


def test_dominates_examples():
    assert dominates((1, 2), (2, 2))
    assert not dominates((1, 2), (1, 2))
    # objectives 1 and 2 of a and c
    assert dominates(ABC[0, :2], ABC[2, :2])


def test_covers_examples():
    assert covers((1, 2), (1, 2))
    assert covers((1, 2), (2, 3))
    assert not covers((2, 1), (1, 2))


@pytest.mark.parametrize("fn", [dominates, covers])
def test_length_mismatch(fn):
    with pytest.raises(DimensionError):
        fn((1, 2), (1, 2, 3))


def test_nondominated_examples():
    assert np.array_equal(nondominated_set(ABC), ABC)
    assert np.array_equal(nondominated_set([(0, 0), (1, 1), (2, 2)]), [[0, 0]])
    assert np.array_equal(nondominated_set([(1, 2), (1, 2)]), [[1, 2], [1, 2]])


def test_rejects_nonfinite():
    with pytest.raises(ValueError):
        nondominated_set([(0.0, np.inf)])


vec3 = hnp.arrays(np.float64, 3, elements=st.integers(0, 3).map(float))


@given(vec3)
def test_irreflexive(a):
    assert not dominates(a, a)


@given(vec3, vec3)
def test_antisymmetric_and_cover_relation(a, b):
    assert not (dominates(a, b) and dominates(b, a))
    assert covers(a, b) == (dominates(a, b) or bool(np.all(a == b)))


@given(vec3, vec3, vec3)
def test_transitive(a, b, c):
    if dominates(a, b) and dominates(b, c):
        assert dominates(a, c)


@given(populations(max_n=20, max_k=4))
def test_nondominated_matches_definition(p):
    nd = nondominated_set(p)
    assert np.array_equal(nd, brute_nondominated(p))
    d = dominance_matrix(p)
    excluded = d.any(axis=0)
    # every excluded member is dominated by some member
    assert all(d[:, j].any() for j in np.flatnonzero(excluded))
