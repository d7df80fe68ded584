"""Strongly connected components and longest-path layering of digraphs.

Graphs are adjacency lists: ``succ[u]`` lists the successors of node ``u``,
with nodes numbered ``0..n-1``.
"""

from __future__ import annotations

from typing import Sequence


class CycleError(ValueError):
    """A graph expected to be acyclic contains a cycle."""


def strongly_connected_components(succ: Sequence[Sequence[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative.

    Components come out in topological order of the condensation: every
    edge between two components points from an earlier block to a later one.
    """
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            children = succ[v]
            while pos < len(children):
                w = children[pos]
                pos += 1
                if index[w] == -1:
                    work.append((v, pos))
                    work.append((w, 0))
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            else:
                if low[v] == index[v]:
                    block = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        block.append(w)
                        if w == v:
                            break
                    sccs.append(sorted(block))
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
    # Tarjan emits sink components first.
    sccs.reverse()
    return sccs


def condensation_layers(succ: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    """Collapse SCCs and layer the resulting DAG by longest path from a source.

    Returns ``(component_of, layer_of)`` per node. Source components get
    layer 1; every other component sits one below its deepest predecessor,
    so the set of layers is always ``{1..m}``.
    """
    sccs = strongly_connected_components(succ)
    comp = [0] * len(succ)
    for cid, block in enumerate(sccs):
        for v in block:
            comp[v] = cid
    depth = [1] * len(sccs)
    for cid, block in enumerate(sccs):
        for v in block:
            for w in succ[v]:
                c = comp[w]
                if c != cid and depth[c] < depth[cid] + 1:
                    depth[c] = depth[cid] + 1
    return comp, [depth[comp[v]] for v in range(len(succ))]


def topological_layers(succ: Sequence[Sequence[int]]) -> list[int]:
    """Longest-path layer per node of a DAG; raises :class:`CycleError` otherwise."""
    for block in strongly_connected_components(succ):
        if len(block) > 1:
            raise CycleError(f"cycle among nodes {block}")
    for v, children in enumerate(succ):
        if v in children:
            raise CycleError(f"self-loop at node {v}")
    return condensation_layers(succ)[1]
