import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphstab.cograph import (
    JOIN,
    UNION,
    CoTree,
    NotCograph,
    build_cotree,
    chi_critical_vertices,
    cograph_alpha_beta_stability,
    cograph_chi_stability,
    cograph_decide,
    cograph_omega_stability,
    cograph_omega_unfrozen_edge,
    cograph_unfrozenness,
    cograph_vertex_stability,
    complement_cotree,
    cotree_delete_vertex,
    cotree_params,
    count_max_cliques_through,
    count_max_cliques_through_both,
    enumerate_max_cliques,
    expand,
    is_cograph,
    leaf,
    make_node,
    parse_coexpression,
    to_coexpression,
)
from graphstab.generators import random_cograph
from graphstab.generic import perfect_cross_check
from graphstab.graph import (
    Graph,
    Parameter,
    Question,
    complement,
    complete_graph,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    empty_graph,
    has_induced_path4,
    nonedges,
    path_graph,
)
from graphstab.oracle import decide_by_definition, exact_params, omega_exact

from conftest import PARAMS, SWEEP_QUESTIONS, all_graphs, brute_max_cliques

A, B, W, X = Parameter.ALPHA, Parameter.BETA, Parameter.OMEGA, Parameter.CHI
C4 = cycle_graph(4)
K3_K2 = disjoint_union(complete_graph(3), complete_graph(2))


def _canonical(t):
    if t.kind == "leaf":
        return
    assert len(t.children) >= 2
    for c in t.children:
        assert c.kind != t.kind
        _canonical(c)


def _cographs(rng, count, lo=1, hi=12):
    return [random_cograph(rng.randint(lo, hi), rng) for _ in range(count)]


def test_c4_cotree():
    t = build_cotree(C4)
    assert t.kind == JOIN and all(c.kind == UNION for c in t.children)
    assert to_coexpression(t) == "(j (u v1 v3) (u v2 v4))"
    assert (t.chi, t.alpha, t.omega, t.count) == (2, 2, 2, 4)
    assert cotree_params(t) == (2, 2, 2, 2)


def test_complete_and_p4():
    t = build_cotree(complete_graph(5))
    assert t.kind == JOIN and len(t.children) == 5
    assert (t.chi, t.omega, t.alpha, t.count) == (5, 5, 1, 1)
    with pytest.raises(NotCograph) as info:
        build_cotree(path_graph(4))
    assert sorted(info.value.witness) == [0, 1, 2, 3]
    assert not is_cograph(path_graph(4))


def test_label_examples():
    t = make_node(JOIN, [make_node(UNION, [leaf(0), leaf(1)]), make_node(UNION, [leaf(2), leaf(3)])])
    assert (t.alpha, t.chi) == (2, 2)
    assert cotree_params(build_cotree(K3_K2)) == (2, 3, 3, 3)


def test_make_node_flattens_and_splices():
    inner = make_node(UNION, [leaf(2), leaf(0)])
    t = make_node(UNION, [inner, leaf(1)])
    assert [c.vertex for c in t.children] == [0, 1, 2]
    assert make_node(JOIN, [leaf(4)]) == leaf(4)


def test_delete_vertex_examples():
    t = build_cotree(complete_graph(4))
    assert cotree_delete_vertex(t, 2) == make_node(JOIN, [leaf(0), leaf(1), leaf(3)])
    c4 = build_cotree(C4)
    d = cotree_delete_vertex(c4, 0)
    assert (d.chi, d.alpha) == (2, 2)
    assert expand(d, 4) == Graph(4, C4.edges - {(0, 1), (0, 3)})
    assert cotree_delete_vertex(make_node(UNION, [leaf(0), leaf(1)]), 1) == leaf(0)
    assert cotree_delete_vertex(leaf(0), 0) is None


def test_clique_count_examples():
    assert count_max_cliques_through(build_cotree(complete_graph(4)), 2) == 1
    assert count_max_cliques_through(build_cotree(C4), 0) == 2
    assert count_max_cliques_through(build_cotree(K3_K2)) == 1


def test_decider_examples():
    v = cograph_vertex_stability(complete_graph(4), X)
    assert not v.holds and v.witnesses == (0, 1, 2, 3)
    assert cograph_vertex_stability(complete_graph(4), A).holds
    assert cograph_vertex_stability(C4, A).holds
    assert chi_critical_vertices(complete_graph(3)) == {0, 1, 2}
    assert chi_critical_vertices(C4) == set()
    assert chi_critical_vertices(K3_K2) == {0, 1, 2}
    assert len(cograph_chi_stability(complete_graph(4)).witnesses) == 6
    assert cograph_chi_stability(C4).holds
    assert cograph_chi_stability(disjoint_union(complete_graph(3), complete_graph(3))).holds
    assert not cograph_omega_stability(complete_graph(4)).holds
    assert cograph_omega_stability(C4).holds
    p3 = expand(make_node(JOIN, [leaf(0), make_node(UNION, [leaf(1), leaf(2)])]))
    assert cograph_omega_stability(p3).holds
    assert not cograph_alpha_beta_stability(complete_graph(3), A).holds
    assert cograph_alpha_beta_stability(C4, A).holds
    two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
    assert not cograph_alpha_beta_stability(two_k2, B).holds
    assert not cograph_unfrozenness(empty_graph(3), X).holds
    assert all(cograph_unfrozenness(complete_graph(5), p).holds for p in PARAMS)
    assert cograph_unfrozenness(two_k2, X).holds


@given(st.integers(0, 10**6), st.integers(1, 14))
def test_cotree_round_trip(seed, n):
    g = random_cograph(n, random.Random(seed))
    assert not has_induced_path4(g)
    t = build_cotree(g)
    _canonical(t)
    assert expand(t, n) == g
    assert parse_coexpression(to_coexpression(t)) == t
    assert complement_cotree(t) == build_cotree(complement(g))


@pytest.mark.parametrize("n", range(1, 6))
def test_is_cograph_exhaustive(n):
    for g in all_graphs(n):
        assert is_cograph(g) == (not has_induced_path4(g))


def test_labels_and_counts_match_brute_force(rng):
    for g in _cographs(rng, 80, hi=10):
        t = build_cotree(g)
        assert cotree_params(t) == exact_params(g)
        cliques = brute_max_cliques(g)
        assert t.count == len(cliques)
        assert sorted(map(sorted, enumerate_max_cliques(t))) == sorted(map(sorted, cliques))
        for u in range(g.n):
            assert count_max_cliques_through(t, u) == sum(u in c for c in cliques)
        for u, v in itertools.combinations(range(g.n), 2):
            assert count_max_cliques_through_both(t, u, v) == sum(u in c and v in c for c in cliques)


def test_delete_vertex_matches_graph_deletion(rng):
    for g in _cographs(rng, 60):
        t = build_cotree(g)
        for v in range(g.n):
            d = cotree_delete_vertex(t, v)
            h = Graph(g.n, frozenset(e for e in g.edges if v not in e))
            got = expand(d, g.n) if d is not None else Graph(g.n)
            assert got == h
            assert cotree_params(d) == exact_params(delete_vertex(g, v))


def test_omega_unfrozen_edge_matches_oracle(rng):
    for g in _cographs(rng, 60, hi=10):
        w = omega_exact(g)
        for e in nonedges(g):
            assert cograph_omega_unfrozen_edge(g, e) == (omega_exact(Graph(g.n, g.edges | {e})) == w)


@pytest.mark.parametrize("n", range(1, 6))
def test_decider_exhaustive_small(n):
    for g in all_graphs(n):
        if not is_cograph(g):
            continue
        for p in PARAMS:
            for q in SWEEP_QUESTIONS:
                got = cograph_decide(g, p, q)
                want = decide_by_definition(g, p, q)
                assert (got.holds, got.witnesses) == (want.holds, want.witnesses), (g, p, q)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(6, 11))
def test_decider_matches_oracle(seed, n):
    g = random_cograph(n, random.Random(seed))
    for p in PARAMS:
        for q in SWEEP_QUESTIONS:
            got = cograph_decide(g, p, q)
            want = decide_by_definition(g, p, q)
            assert (got.holds, got.witnesses) == (want.holds, want.witnesses)


def test_dualities_hold_on_cographs(rng):
    for g in _cographs(rng, 40, hi=9):
        h = complement(g)
        assert cograph_decide(g, W, Question.UNFROZENNESS) == cograph_decide(h, A, Question.STABILITY)
        for p in (A, B):
            assert cograph_decide(g, p, Question.UNFROZENNESS).holds == cograph_decide(
                h, W, Question.STABILITY
            ).holds
        assert perfect_cross_check(g)


def test_parse_errors():
    for bad in ["", "(j v1)", "(x v1 v2)", "(u v1 v1)", "(u v1 v2", "v0"]:
        with pytest.raises(ValueError):
            parse_coexpression(bad)
    assert isinstance(parse_coexpression("v3"), CoTree)
