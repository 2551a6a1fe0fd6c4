"""Immutable simple graphs on vertices ``0..n-1`` and the elementary edits.

Adjacency is kept as one Python ``int`` bitset per vertex; bit ``j`` of
``adj[i]`` is set iff ``{i, j}`` is an edge.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs and illegal edits."""


class Parameter(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"
    OMEGA = "omega"
    CHI = "chi"

    def __str__(self) -> str:
        return self.value


class Question(enum.Enum):
    STABILITY = "stability"
    VERTEX_STABILITY = "vertex-stability"
    CRITICALITY = "criticality"
    VERTEX_CRITICALITY = "vertex-criticality"
    UNFROZENNESS = "unfrozenness"
    FROZENNESS = "frozenness"
    VERTEX_UNFROZENNESS = "vertex-unfrozenness"
    VERTEX_FROZENNESS = "vertex-frozenness"

    def __str__(self) -> str:
        return self.value

    @property
    def domain(self) -> str:
        """Which elements the question quantifies over.

        One of ``"edge"`` (deletion), ``"vertex"`` (deletion), ``"nonedge"``
        (addition) or ``"new-vertex"`` (addition).
        """
        return _DOMAIN[self]

    @property
    def wants_change(self) -> bool:
        """True for the critical/frozen pole, False for stable/unfrozen."""
        return self in _CHANGE_POLE


_DOMAIN = {
    Question.STABILITY: "edge",
    Question.CRITICALITY: "edge",
    Question.VERTEX_STABILITY: "vertex",
    Question.VERTEX_CRITICALITY: "vertex",
    Question.UNFROZENNESS: "nonedge",
    Question.FROZENNESS: "nonedge",
    Question.VERTEX_UNFROZENNESS: "new-vertex",
    Question.VERTEX_FROZENNESS: "new-vertex",
}
_CHANGE_POLE = frozenset(
    {
        Question.CRITICALITY,
        Question.VERTEX_CRITICALITY,
        Question.FROZENNESS,
        Question.VERTEX_FROZENNESS,
    }
)


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered pair to ``(min, max)``."""
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple loop-free graph.

    Equality and hashing use ``(n, edges)``; the bitset adjacency is derived.
    """

    n: int
    edges: frozenset[Edge] = frozenset()
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj = [0] * n
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {{{u},{v}}} out of range for n={n}")
            if u > v:
                u, v = v, u
            norm.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if len(norm) != len(self.edges) or not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        seen: set[Edge] = set()
        for u, v in edges:
            e = edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        adj = tuple(adj)
        n = len(adj)
        es = [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1]
        return cls(n, frozenset(es))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    return Graph.from_adjacency((full & ~a) & ~(1 << i) for i, a in enumerate(g.adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertices above ``v`` shift down by one."""
    _check_vertex(g, v)

    def shift(x: int) -> int:
        return x - 1 if x > v else x

    return Graph(
        g.n - 1,
        frozenset((shift(a), shift(b)) for a, b in g.edges if v not in (a, b)),
    )


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    e = edge(*e)
    if e not in g.edges:
        raise GraphError(f"{e} is not an edge")
    return Graph(g.n, g.edges - {e})


def add_edge(g: Graph, e: tuple[int, int]) -> Graph:
    e = edge(*e)
    _check_vertex(g, e[0])
    _check_vertex(g, e[1])
    if e in g.edges:
        raise GraphError(f"{e} is already an edge")
    return Graph(g.n, g.edges | {e})


def nonedges(g: Graph) -> list[Edge]:
    adj = g.adj
    return [
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if not adj[u] >> v & 1
    ]


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabelled to ``0..k-1``; also returns the old labels."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    es = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(keep), frozenset(es)), keep


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return popcount(g.adj[v])


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, ordered by min vertex."""
    rest = g.vertex_mask() if within is None else within
    adj = g.adj
    comps = []
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: Graph) -> list[set[int]]:
    return [set(iter_bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def _induces_path(g: Graph, order: tuple[int, ...]) -> bool:
    k = len(order)
    for i, j in combinations(range(k), 2):
        if g.has_edge(order[i], order[j]) != (j == i + 1):
            return False
    return True


def find_induced_path3(g: Graph) -> tuple[int, int, int] | None:
    """An induced ``a - b - c`` (``a``, ``c`` non-adjacent), or ``None``."""
    for b in range(g.n):
        nb = g.neighbors(b)
        for a, c in combinations(nb, 2):
            if not g.has_edge(a, c):
                return (a, b, c)
    return None


def has_induced_path3(g: Graph) -> bool:
    return find_induced_path3(g) is not None


def find_induced_path4(g: Graph, within: int | None = None) -> tuple[int, ...] | None:
    """An induced P4 ``(a, b, c, d)`` in path order, or ``None``.

    Brute force over the middle edge ``{b, c}`` and the two ends.
    """
    verts = g.vertex_mask() if within is None else within
    adj = g.adj
    for b in iter_bits(verts):
        for c in iter_bits(adj[b] & verts):
            if c < b:
                continue
            ends_b = adj[b] & verts & ~adj[c] & ~(1 << c)
            ends_c = adj[c] & verts & ~adj[b] & ~(1 << b)
            for a in iter_bits(ends_b):
                d_mask = ends_c & ~adj[a]
                if d_mask:
                    d = (d_mask & -d_mask).bit_length() - 1
                    return (a, b, c, d)
    return None


def has_induced_path4(g: Graph) -> bool:
    return find_induced_path4(g) is not None


# Named families. Vertex 0..n-1; paths and cycles run in index order.


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph(n, frozenset(edge(i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(*graphs: Graph) -> Graph:
    es = []
    off = 0
    for h in graphs:
        es.extend((u + off, v + off) for u, v in h.edges)
        off += h.n
    return Graph(off, frozenset(es))


def join(*graphs: Graph) -> Graph:
    base = disjoint_union(*graphs)
    es = set(base.edges)
    offs = []
    off = 0
    for h in graphs:
        offs.append((off, off + h.n))
        off += h.n
    for (a0, a1), (b0, b1) in combinations(offs, 2):
        es.update((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return Graph(base.n, frozenset(es))
