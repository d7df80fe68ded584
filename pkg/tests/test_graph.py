import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ndrank.graph import CycleError, condensation_layers, strongly_connected_components, topological_layers


def random_digraph(n, p, rng):
    return [[j for j in range(n) if j != i and rng.random() < p] for i in range(n)]


def nx_layers(succ):
    g = nx.DiGraph()
    g.add_nodes_from(range(len(succ)))
    g.add_edges_from((u, v) for u, vs in enumerate(succ) for v in vs)
    c = nx.condensation(g)
    depth = {}
    for node in nx.topological_sort(c):
        preds = list(c.predecessors(node))
        depth[node] = 1 + max((depth[q] for q in preds), default=0)
    return [depth[c.graph["mapping"][v]] for v in range(len(succ))], [sorted(b) for b in nx.strongly_connected_components(g)]


@given(st.integers(1, 25), st.floats(0.0, 0.3), st.integers(0, 2**32 - 1))
def test_matches_networkx(n, p, seed):
    succ = random_digraph(n, p, np.random.default_rng(seed))
    expected_layers, expected_sccs = nx_layers(succ)
    sccs = strongly_connected_components(succ)
    assert sorted(sccs) == sorted(expected_sccs)
    assert condensation_layers(succ)[1] == expected_layers


def test_sccs_in_topological_order():
    succ = [[1], [2], [0, 3], [4], [3]]
    sccs = strongly_connected_components(succ)
    assert sccs == [[0, 1, 2], [3, 4]]


def test_deep_chain_no_recursion_limit():
    n = 5000
    succ = [[i + 1] for i in range(n - 1)] + [[]]
    assert condensation_layers(succ)[1] == list(range(1, n + 1))


def test_topological_layers_rejects_cycles():
    assert topological_layers([[1], [2], []]) == [1, 2, 3]
    with pytest.raises(CycleError):
        topological_layers([[1], [0]])
    with pytest.raises(CycleError):
        topological_layers([[0]])
