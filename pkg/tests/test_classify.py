import itertools

import pytest

from graphstab.classify import (
    GraphClass as C,
    bipartition,
    classify,
    find_cycle,
    find_odd_cycle,
    path_order,
    sorted_labels,
)
from graphstab.graph import (
    Graph,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    has_induced_path4,
    path_graph,
    star_graph,
)

from conftest import all_graphs


def test_examples():
    assert classify(cycle_graph(4)) == {C.BIPARTITE, C.COGRAPH}
    assert classify(path_graph(4)) == {C.PATH, C.TREE, C.FOREST, C.BIPARTITE}
    assert classify(complete_graph(1)) == set(C)
    assert classify(Graph(0)) == set(C) - {C.TREE}
    assert C.EMPTY in classify(empty_graph(3))
    assert classify(star_graph(3)) == {C.TREE, C.FOREST, C.BIPARTITE, C.COGRAPH}
    assert sorted_labels(classify(path_graph(4))) == ["Bipartite", "Forest", "Path", "Tree"]


def test_bipartition_examples():
    assert bipartition(path_graph(4)) == ({0, 2}, {1, 3})
    assert bipartition(cycle_graph(3)) is None
    assert bipartition(empty_graph(3)) == ({0, 1, 2}, set())


def _acyclic(g):
    return g.m == g.n - len(connected_components(g))


def _two_colourable(g):
    return any(
        all((bits >> u & 1) != (bits >> v & 1) for u, v in g.edges) for bits in range(1 << g.n)
    )


@pytest.mark.parametrize("n", range(6))
def test_classify_against_definitions(n):
    for g in all_graphs(n):
        labels = classify(g)
        connected = len(connected_components(g)) <= 1
        max_deg = max((len(g.neighbors(v)) for v in range(n)), default=0)
        assert (C.EMPTY in labels) == (g.m == 0)
        assert (C.COMPLETE in labels) == (g.m == n * (n - 1) // 2)
        assert (C.FOREST in labels) == _acyclic(g)
        assert (C.TREE in labels) == (n >= 1 and connected and _acyclic(g))
        assert (C.PATH in labels) == (connected and _acyclic(g) and max_deg <= 2)
        assert (C.BIPARTITE in labels) == _two_colourable(g)
        assert (C.COGRAPH in labels) == (not has_induced_path4(g))
        # containments
        if C.TREE in labels:
            assert C.FOREST in labels
        if C.FOREST in labels:
            assert C.BIPARTITE in labels
        if C.EMPTY in labels:
            assert {C.BIPARTITE, C.COGRAPH} <= labels
        if C.COMPLETE in labels:
            assert C.COGRAPH in labels
        if C.PATH in labels:
            assert C.TREE in labels or n == 0


@pytest.mark.parametrize("n", range(6))
def test_witness_finders(n):
    for g in all_graphs(n):
        parts = bipartition(g)
        odd = find_odd_cycle(g)
        assert (parts is None) == (odd is not None)
        if parts is not None:
            a, b = parts
            assert a | b == set(range(n)) and not a & b
            assert all((u in a) != (v in a) for u, v in g.edges)
        else:
            assert len(odd) % 2 == 1 and len(set(odd)) == len(odd)
            assert all(g.has_edge(odd[i], odd[(i + 1) % len(odd)]) for i in range(len(odd)))
        cyc = find_cycle(g)
        assert (cyc is None) == _acyclic(g)
        if cyc is not None:
            assert len(cyc) >= 3 and len(set(cyc)) == len(cyc)
            assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_path_order_follows_edges():
    g = Graph.from_edges(5, [(3, 0), (0, 4), (4, 1), (1, 2)])
    order = path_order(g)
    assert order == [2, 1, 4, 0, 3]
    assert all(g.has_edge(a, b) for a, b in itertools.pairwise(order))
    with pytest.raises(ValueError):
        path_order(disjoint_union(path_graph(2), path_graph(2)))
