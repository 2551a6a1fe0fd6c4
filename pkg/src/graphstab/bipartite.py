"""Matching-based parameters and deciders for bipartite graphs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .classify import bipartition, two_coloring
from .graph import (
    Edge,
    Graph,
    GraphError,
    Parameter,
    Question,
    add_edge,
    component_masks,
    delete_edge,
    delete_vertex,
    edge,
    find_induced_path3,
    iter_bits,
    nonedges,
    popcount,
)
from .oracle import vertex_frozenness_constant, vertex_unfrozenness_constant
from .verdict import Verdict, verdict_from_changes

A, B, W, X = Parameter.ALPHA, Parameter.BETA, Parameter.OMEGA, Parameter.CHI


class NotBipartite(GraphError):
    pass


@dataclass(frozen=True)
class MatchingCover:
    """Maximum matching with the König cover and the complementary independent set."""

    matching: frozenset[Edge]
    cover: frozenset[int]
    independent: frozenset[int]


def _parts(g: Graph) -> tuple[set[int], set[int]]:
    parts = bipartition(g)
    if parts is None:
        raise NotBipartite("graph has an odd cycle")
    return parts


def _hopcroft_karp(g: Graph, left: list[int]) -> dict[int, int]:
    """Maximum matching as a symmetric mate map."""
    mate: dict[int, int] = {}
    adj = g.adj
    inf = len(left) + 1
    while True:
        dist: dict[int, int] = {}
        queue = deque()
        for u in left:
            if u not in mate:
                dist[u] = 0
                queue.append(u)
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for w in iter_bits(adj[u]):
                x = mate.get(w)
                if x is None:
                    found = min(found, dist[u] + 1)
                elif x not in dist:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if found == inf:
            return mate

        def augment(u: int) -> bool:
            for w in iter_bits(adj[u]):
                x = mate.get(w)
                if (x is None and dist[u] + 1 == found) or (
                    x is not None and dist.get(x) == dist[u] + 1 and augment(x)
                ):
                    mate[u] = w
                    mate[w] = u
                    return True
            dist[u] = inf
            return False

        for u in left:
            if u not in mate:
                augment(u)


def max_matching(g: Graph, parts: tuple[set[int], set[int]] | None = None) -> MatchingCover:
    """Maximum matching plus minimum vertex cover and maximum independent set.

    The cover is read off the alternating-reachability sets: with ``Z`` the
    vertices reachable from unmatched left vertices, the cover is
    ``(left - Z) | (right & Z)``.
    """
    if parts is None:
        parts = _parts(g)
    left, right = set(parts[0]), set(parts[1])
    if left & right or len(left) + len(right) != g.n:
        raise GraphError("parts do not partition the vertex set")
    for u, v in g.edges:
        if (u in left) == (v in left):
            raise GraphError(f"edge {(u, v)} does not cross the bipartition")
    mate = _hopcroft_karp(g, sorted(left))
    reach = {u for u in left if u not in mate}
    stack = list(reach)
    while stack:
        u = stack.pop()
        for w in iter_bits(g.adj[u]):
            if w not in reach and mate.get(u) != w:
                reach.add(w)
                x = mate.get(w)
                if x is not None and x not in reach:
                    reach.add(x)
                    stack.append(x)
    cover = (left - reach) | (right & reach)
    matching = frozenset(edge(u, w) for u, w in mate.items() if u in left)
    return MatchingCover(matching, frozenset(cover), frozenset(range(g.n)) - cover)


def matching_number(g: Graph) -> int:
    color = two_coloring(g)
    if color is None:
        raise NotBipartite("graph has an odd cycle")
    return len(_hopcroft_karp(g, [v for v in range(g.n) if color[v] == 0])) // 2


def bipartite_params(g: Graph) -> tuple[int, int, int, int]:
    """``(alpha, beta, omega, chi)`` of a bipartite graph."""
    beta = matching_number(g)
    if g.n == 0:
        w = 0
    elif g.m == 0:
        w = 1
    else:
        w = 2
    return (g.n - beta, beta, w, w)


def _value(g: Graph, p: Parameter) -> int:
    return bipartite_params(g)[[A, B, W, X].index(p)]


def min_cover_through(g: Graph, u: int) -> bool:
    """Whether some minimum vertex cover contains ``u``.

    Holds exactly when ``beta(g - u) = beta(g) - 1``.
    """
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    return matching_number(delete_vertex(g, u)) == matching_number(g) - 1


def beta_unfrozen_edge(g: Graph, e: tuple[int, int]) -> bool:
    """Whether adding the nonedge ``e`` keeps beta.

    Case 1, ``e`` crosses the bipartition, and case 2a, ``g + e`` can still be
    2-coloured: recompute the matching on ``g + e``. Case 2b, ``g + e`` has an
    odd cycle: beta stays iff a minimum cover of ``g`` already holds an
    endpoint.
    """
    u, v = edge(*e)
    if g.has_edge(u, v):
        raise GraphError(f"{(u, v)} is an edge")
    color = two_coloring(g)
    if color is None:
        raise NotBipartite("graph has an odd cycle")
    h = add_edge(g, (u, v))
    if color[u] != color[v] or two_coloring(h) is not None:
        return matching_number(h) == matching_number(g)
    return min_cover_through(g, u) or min_cover_through(g, v)


def _parity_components(g: Graph) -> tuple[list[int], list[int]]:
    color = two_coloring(g)
    if color is None:
        raise NotBipartite("graph has an odd cycle")
    comp = [0] * g.n
    for i, c in enumerate(component_masks(g)):
        for v in iter_bits(c):
            comp[v] = i
    return color, comp


def bipartite_changes(g: Graph, p: Parameter, domain: str) -> tuple[list, list]:
    """``(elements, changed)`` for edge deletion, vertex deletion or nonedge addition."""
    color, comp = _parity_components(g)
    m = g.m
    if domain == "edge":
        elements = g.sorted_edges()
        if p in (X, W):
            # m >= 2 leaves an edge behind; m == 1 drops to 1
            changed = elements if m == 1 else []
        else:
            beta = matching_number(g)
            changed = [e for e in elements if matching_number(delete_edge(g, e)) != beta]
        return elements, changed
    if domain == "vertex":
        elements = list(range(g.n))
        if p in (X, W):
            if m == 0:
                changed = elements if g.n == 1 else []
            else:
                changed = [v for v in elements if popcount(g.adj[v]) == m]
        else:
            base = _value(g, p)
            changed = [v for v in elements if _value(delete_vertex(g, v), p) != base]
        return elements, changed
    elements = nonedges(g)
    if p is W:
        # a triangle can only appear through the new edge
        changed = [
            (u, v) for u, v in elements if m == 0 or g.adj[u] & g.adj[v]
        ]
    elif p is X:
        changed = [
            (u, v)
            for u, v in elements
            if m == 0 or (comp[u] == comp[v] and color[u] == color[v])
        ]
    else:
        changed = [e for e in elements if not beta_unfrozen_edge(g, e)]
    return elements, changed


def bipartite_decide(g: Graph, p: Parameter, q: Question) -> Verdict:
    if q is Question.VERTEX_UNFROZENNESS:
        return vertex_unfrozenness_constant(g, p)
    if q is Question.VERTEX_FROZENNESS:
        return vertex_frozenness_constant(g, p)
    elements, changed = bipartite_changes(g, p, q.domain)
    return verdict_from_changes(q, elements, changed)


def bipartite_stability(g: Graph, p: Parameter) -> Verdict:
    return bipartite_decide(g, p, Question.STABILITY)


def bipartite_vertex_stability(g: Graph, p: Parameter) -> Verdict:
    return bipartite_decide(g, p, Question.VERTEX_STABILITY)


def bipartite_unfrozenness(g: Graph, p: Parameter) -> Verdict:
    """Unfrozenness; for omega and chi, with edges present, it holds iff no induced P3."""
    if p in (W, X) and g.m > 0:
        _parts(g)
        if find_induced_path3(g) is None:
            return Verdict(True)
    return bipartite_decide(g, p, Question.UNFROZENNESS)
