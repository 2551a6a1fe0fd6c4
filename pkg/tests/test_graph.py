import itertools

import pytest
from hypothesis import given

from graphstab.generators import random_cograph
from graphstab.graph import (
    Graph,
    GraphError,
    add_edge,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    degree,
    delete_edge,
    delete_vertex,
    disjoint_union,
    empty_graph,
    has_induced_path3,
    has_induced_path4,
    is_connected,
    join,
    nonedges,
    path_graph,
    star_graph,
)

from conftest import graphs

C4 = cycle_graph(4)


def test_complement_examples():
    assert complement(complete_graph(3)) == empty_graph(3)
    assert complement(empty_graph(5)) == complete_graph(5)
    assert complement(C4).sorted_edges() == [(0, 2), (1, 3)]


def test_delete_vertex_examples():
    assert delete_vertex(path_graph(3), 1) == empty_graph(2)
    for v in range(4):
        assert delete_vertex(complete_graph(4), v) == complete_graph(3)
        h = delete_vertex(C4, v)
        assert h.m == 2 and is_connected(h)


def test_delete_vertex_shifts_indices():
    g = Graph.from_edges(4, [(0, 3), (1, 2)])
    assert delete_vertex(g, 1).sorted_edges() == [(0, 2)]


def test_edge_edits():
    assert delete_edge(complete_graph(2), (0, 1)) == empty_graph(2)
    assert add_edge(path_graph(3), (2, 0)) == complete_graph(3)
    p4 = delete_edge(C4, (0, 3))
    assert p4 == path_graph(4)


@pytest.mark.parametrize(
    "op, args",
    [
        (delete_edge, (path_graph(3), (0, 2))),
        (add_edge, (path_graph(3), (0, 1))),
        (add_edge, (path_graph(3), (1, 1))),
        (add_edge, (path_graph(3), (0, 3))),
        (delete_vertex, (path_graph(3), 3)),
        (degree, (path_graph(3), -1)),
    ],
)
def test_edit_errors(op, args):
    with pytest.raises(GraphError):
        op(*args)


def test_constructor_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(2, frozenset({(0, 0)}))
    with pytest.raises(GraphError):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_nonedges_examples():
    assert nonedges(complete_graph(6)) == []
    assert nonedges(empty_graph(3)) == [(0, 1), (0, 2), (1, 2)]
    assert nonedges(path_graph(4)) == [(0, 2), (0, 3), (1, 3)]


def test_degree_and_components():
    assert degree(star_graph(3), 0) == 3
    assert connected_components(empty_graph(4)) == [{0}, {1}, {2}, {3}]
    sizes = sorted(len(c) for c in connected_components(disjoint_union(path_graph(2), path_graph(3))))
    assert sizes == [2, 3]


def test_induced_paths():
    for n in range(7):
        assert not has_induced_path3(complete_graph(n))
    assert not has_induced_path4(C4)
    assert not has_induced_path3(disjoint_union(path_graph(2), path_graph(2)))
    assert has_induced_path3(path_graph(3))
    assert has_induced_path4(path_graph(4))
    assert has_induced_path4(cycle_graph(5))


def test_join_builds_complete_multipartite():
    assert join(empty_graph(2), empty_graph(2)) == Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


@given(graphs())
def test_delete_then_add_edge_restores(g):
    for e in g.edges:
        assert add_edge(delete_edge(g, e), e) == g


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_edges_and_nonedges_partition_pairs(g):
    non = set(nonedges(g))
    assert not non & g.edges
    assert non | g.edges == set(itertools.combinations(range(g.n), 2))


@given(graphs())
def test_induced_p3_matches_triples(g):
    brute = any(
        sum(g.has_edge(a, b) for a, b in itertools.combinations(t, 2)) == 2
        for t in itertools.combinations(range(g.n), 3)
    )
    assert has_induced_path3(g) == brute


def test_cograph_generator_is_p4_free(rng):
    for _ in range(100):
        assert not has_induced_path4(random_cograph(rng.randint(1, 12), rng))
