"""Deciders for trees and forests.

Parameters are assembled per tree component: alpha and beta add up, omega
and chi take the maximum. Alpha per component comes from the bipartite
matching engine.
"""
from __future__ import annotations

from collections import deque

from . import bipartite
from .classify import is_forest
from .graph import (
    Graph,
    GraphError,
    Parameter,
    Question,
    component_masks,
    delete_edge,
    delete_vertex,
    find_induced_path3,
    induced_subgraph,
    iter_bits,
    nonedges,
)
from .oracle import vertex_frozenness_constant, vertex_unfrozenness_constant
from .verdict import Verdict, verdict_from_changes, verdict_from_values

A, B, W, X = Parameter.ALPHA, Parameter.BETA, Parameter.OMEGA, Parameter.CHI
_INDEX = {A: 0, B: 1, W: 2, X: 3}


class NotForest(GraphError):
    pass


def _require(g: Graph) -> None:
    if not is_forest(g):
        raise NotForest("graph has a cycle")


def forest_params(g: Graph) -> tuple[int, int, int, int]:
    """``(alpha, beta, omega, chi)`` of a forest."""
    _require(g)
    alpha = beta = top = 0
    for comp in component_masks(g):
        tree, _ = induced_subgraph(g, iter_bits(comp))
        b = bipartite.matching_number(tree)
        alpha += tree.n - b
        beta += b
        top = max(top, 2 if tree.n >= 2 else 1)
    return (alpha, beta, top, top)


def _distances(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in iter_bits(g.adj[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _added_value(g: Graph, e: tuple[int, int], p: Parameter, base: int, dist) -> int:
    """omega or chi of ``g + e``; the chord closes a cycle of length ``d + 1``."""
    u, v = e
    d = dist[u][v]
    if p is W:
        return 3 if d == 2 else max(base, 2)
    return 3 if d > 0 and d % 2 == 0 else max(base, 2)


def forest_changes(g: Graph, p: Parameter, domain: str):
    """Per-element values: ``(before, {element: after})``, or ``(elements, changed)`` for alpha/beta additions."""
    _require(g)
    k = _INDEX[p]
    base = forest_params(g)[k]
    if domain == "edge":
        return base, {e: forest_params(delete_edge(g, e))[k] for e in g.sorted_edges()}
    if domain == "vertex":
        return base, {v: forest_params(delete_vertex(g, v))[k] for v in range(g.n)}
    if p in (W, X):
        dist = [_distances(g, s) for s in range(g.n)]
        return base, {e: _added_value(g, e, p, base, dist) for e in nonedges(g)}
    return None, None


def forest_decide(g: Graph, p: Parameter, q: Question) -> Verdict:
    if q is Question.VERTEX_UNFROZENNESS:
        return vertex_unfrozenness_constant(g, p)
    if q is Question.VERTEX_FROZENNESS:
        return vertex_frozenness_constant(g, p)
    if q.domain == "nonedge" and p in (A, B):
        return forest_alpha_beta_unfrozenness(g, p, q)
    base, after = forest_changes(g, p, q.domain)
    return verdict_from_values(q, base, after)


def forest_stability(g: Graph, p: Parameter) -> Verdict:
    return forest_decide(g, p, Question.STABILITY)


def forest_vertex_stability(g: Graph, p: Parameter) -> Verdict:
    return forest_decide(g, p, Question.VERTEX_STABILITY)


def forest_omega_chi_unfrozenness(g: Graph) -> Verdict:
    """Forests with an edge are omega- and chi-unfrozen iff they have no induced P3.

    When frozen, the witnesses are the nonedges closing an induced P3.
    """
    _require(g)
    if g.m == 0:
        raise GraphError("edgeless forests are empty graphs")
    if find_induced_path3(g) is None:
        return Verdict(True)
    closing = [(u, v) for u, v in nonedges(g) if g.adj[u] & g.adj[v]]
    return Verdict(False, tuple(closing))


def forest_alpha_beta_unfrozenness(
    g: Graph, p: Parameter, q: Question = Question.UNFROZENNESS
) -> Verdict:
    """Same per-nonedge answer as the bipartite engine; alpha and beta agree since n is fixed."""
    _require(g)
    if p not in (A, B):
        raise ValueError("alpha or beta only")
    elements, changed = bipartite.bipartite_changes(g, B, "nonedge")
    return verdict_from_changes(q, elements, changed)
