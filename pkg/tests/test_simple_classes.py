import pytest

from graphstab.bipartite import bipartite_params
from graphstab.graph import Parameter, Question, complete_graph, cycle_graph, empty_graph, path_graph
from graphstab.oracle import alpha_exact, beta_exact, decide_by_definition
from graphstab.simple_classes import (
    complete_decide,
    empty_decide,
    path_changes,
    path_decide,
    path_table,
)

from conftest import PARAMS, SWEEP_QUESTIONS

A, B, W, X = Parameter.ALPHA, Parameter.BETA, Parameter.OMEGA, Parameter.CHI
S, V, U = Question.STABILITY, Question.VERTEX_STABILITY, Question.UNFROZENNESS


def test_empty_examples():
    assert empty_decide(5, B, V).holds
    assert not empty_decide(1, A, V).holds
    assert not empty_decide(3, X, U).holds
    assert empty_decide(1, X, U).holds
    assert all(empty_decide(7, p, S).holds for p in PARAMS)


def test_complete_examples():
    v = complete_decide(4, X, S)
    assert not v.holds and len(v.witnesses) == 6
    assert complete_decide(3, A, V).holds
    assert complete_decide(7, W, U).holds
    assert complete_decide(7, W, Question.FROZENNESS).holds
    assert not complete_decide(1, A, V).holds
    assert complete_decide(1, B, V).holds and not complete_decide(2, B, V).holds


def test_path_examples():
    assert not path_decide(4, A, S).holds
    assert path_decide(5, B, S).holds
    assert path_decide(6, B, U).holds
    assert not path_decide(5, A, U).holds


@pytest.mark.parametrize("n", range(0, 11))
@pytest.mark.parametrize("p", PARAMS)
@pytest.mark.parametrize("q", SWEEP_QUESTIONS)
def test_closed_forms_match_oracle(n, p, q):
    for decide, g in (
        (path_decide, path_graph(n)),
        (empty_decide, empty_graph(n)),
        (complete_decide, complete_graph(n)),
    ):
        got = decide(n, p, q)
        want = decide_by_definition(g, p, q)
        assert (got.holds, got.witnesses) == (want.holds, want.witnesses), (decide.__name__, n)


@pytest.mark.parametrize("n", range(0, 201))
def test_path_table_agrees_with_element_sweep(n):
    for p in PARAMS:
        for q in (S, V, U):
            _, changed = path_changes(n, p, q.domain)
            assert path_table(n, p, q) == (not changed)


def test_path_table_rows():
    for n in range(4, 201):
        even = n % 2 == 0
        for p in (X, W):
            assert path_table(n, p, S) and path_table(n, p, V) and not path_table(n, p, U)
        assert not path_table(n, B, V)
        assert path_table(n, A, S) == path_table(n, B, S) == (not even)
        assert path_table(n, A, V) == even
        assert path_table(n, A, U) == path_table(n, B, U) == even


@pytest.mark.parametrize("n", range(0, 201))
def test_path_parameters_via_matching(n):
    alpha, beta, _, _ = bipartite_params(path_graph(n))
    assert beta == n // 2 and alpha == (n + 1) // 2


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_facts(n):
    g = cycle_graph(n)
    assert alpha_exact(g) == n // 2
    assert beta_exact(g) == (n + 1) // 2
