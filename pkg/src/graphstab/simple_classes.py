"""Closed-form deciders for empty graphs ``I_n``, complete graphs ``K_n`` and paths ``P_n``.

All three take only the vertex count. Vertices are ``0..n-1``; for paths
they are numbered along the path.
"""
from __future__ import annotations

from itertools import combinations

from .graph import Parameter, Question
from .oracle import vertex_frozenness_constant, vertex_unfrozenness_constant
from .graph import empty_graph
from .verdict import Verdict, verdict_from_changes

A, B, W, X = Parameter.ALPHA, Parameter.BETA, Parameter.OMEGA, Parameter.CHI


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _vertex_addition(n: int, p: Parameter, q: Question) -> Verdict:
    g = empty_graph(n)  # only n matters
    if q is Question.VERTEX_UNFROZENNESS:
        return vertex_unfrozenness_constant(g, p)
    return vertex_frozenness_constant(g, p)


def _uniform(q: Question, elements: list, all_change: bool) -> Verdict:
    return verdict_from_changes(q, elements, elements if all_change else ())


# -- empty graphs ----------------------------------------------------------


def empty_decide(n: int, p: Parameter, q: Question) -> Verdict:
    if q.domain == "new-vertex":
        return _vertex_addition(n, p, q)
    if q.domain == "edge":
        return Verdict(True)
    if q.domain == "vertex":
        verts = list(range(n))
        if p in (X, W):
            return _uniform(q, verts, n == 1)
        if p is B:
            return _uniform(q, verts, False)
        return _uniform(q, verts, True)
    # nonedges of I_n are the edges of K_n
    if p is X:
        return _uniform(q, _pairs(n), True)
    dual_p = W if p in (A, B) else B
    dual_q = Question.STABILITY if not q.wants_change else Question.CRITICALITY
    return complete_decide(n, dual_p, dual_q)


# -- complete graphs -------------------------------------------------------


def complete_decide(n: int, p: Parameter, q: Question) -> Verdict:
    if q.domain == "new-vertex":
        return _vertex_addition(n, p, q)
    if q.domain == "nonedge":
        return Verdict(True)
    if q.domain == "edge":
        return _uniform(q, _pairs(n), True)
    verts = list(range(n))
    if p is A:
        return _uniform(q, verts, n == 1)
    if p is B:
        return _uniform(q, verts, n >= 2)
    return _uniform(q, verts, True)


# -- paths -----------------------------------------------------------------


def path_value(k: int, p: Parameter) -> int:
    """Parameter of ``P_k``."""
    if p is A:
        return (k + 1) // 2
    if p is B:
        return k // 2
    return min(k, 2)


def _union_value(parts: tuple[int, ...], p: Parameter) -> int:
    vals = [path_value(k, p) for k in parts]
    if p in (A, B):
        return sum(vals)
    return max(vals, default=0)


def path_edge_deleted(n: int, i: int, p: Parameter) -> int:
    """Parameter of ``P_n`` minus edge ``{i, i+1}``."""
    return _union_value((i + 1, n - i - 1), p)


def path_vertex_deleted(n: int, i: int, p: Parameter) -> int:
    return _union_value((i, n - 1 - i), p)


def path_nonedge_added(n: int, i: int, j: int, p: Parameter) -> int:
    """Parameter of ``P_n`` plus the chord ``{i, j}``, ``j >= i + 2``.

    An independent set of ``G + ij`` misses ``i`` or ``j``, so
    ``alpha(G + ij) = max(alpha(G - i), alpha(G - j))``. The chord closes a
    cycle on ``j - i + 1`` vertices.
    """
    if p in (A, B):
        a = max(path_vertex_deleted(n, i, A), path_vertex_deleted(n, j, A))
        return a if p is A else n - a
    if p is W:
        return 3 if j - i == 2 else 2
    return 3 if (j - i) % 2 == 0 else 2


def path_table(n: int, p: Parameter, q: Question) -> bool:
    """Whole-graph answer for stability, vertex-stability and unfrozenness."""
    if n == 0:
        return True
    if q is Question.STABILITY:
        if n == 1 or n == 3:
            return True
        if n == 2:
            return False
        return p in (X, W) or n % 2 == 1
    if q is Question.VERTEX_STABILITY:
        if n == 1:
            return p is B
        if n == 2:
            return p is A
        if n == 3:
            return False
        if p in (X, W):
            return True
        if p is B:
            return False
        return n % 2 == 0
    if q is Question.UNFROZENNESS:
        if n <= 2:
            return True
        if n == 3:
            return False
        return p in (A, B) and n % 2 == 0
    raise ValueError(f"no table entry for {q}")


def path_changes(n: int, p: Parameter, domain: str) -> tuple[list, list]:
    """``(elements, changed elements)`` for one edit domain of ``P_n``."""
    base = path_value(n, p)
    if domain == "edge":
        elements = [(i, i + 1) for i in range(n - 1)]
        changed = [e for e in elements if path_edge_deleted(n, e[0], p) != base]
    elif domain == "vertex":
        elements = list(range(n))
        changed = [v for v in elements if path_vertex_deleted(n, v, p) != base]
    else:
        elements = [(i, j) for i in range(n) for j in range(i + 2, n)]
        changed = [e for e in elements if path_nonedge_added(n, *e, p) != base]
    return elements, changed


def path_decide(n: int, p: Parameter, q: Question) -> Verdict:
    if q.domain == "new-vertex":
        return _vertex_addition(n, p, q)
    if q in (Question.STABILITY, Question.VERTEX_STABILITY, Question.UNFROZENNESS):
        if path_table(n, p, q):
            return Verdict(True)
        elements, changed = path_changes(n, p, q.domain)
        if not changed:
            raise AssertionError(f"path table and element sweep disagree on P_{n} {p} {q}")
        return Verdict(False, tuple(sorted(changed)))
    elements, changed = path_changes(n, p, q.domain)
    return verdict_from_changes(q, elements, changed)
