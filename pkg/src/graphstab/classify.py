from __future__ import annotations

import enum

from .graph import Graph, component_masks, iter_bits, popcount


class GraphClass(enum.Enum):
    EMPTY = "Empty"
    COMPLETE = "Complete"
    PATH = "Path"
    TREE = "Tree"
    FOREST = "Forest"
    BIPARTITE = "Bipartite"
    COGRAPH = "Cograph"

    def __str__(self) -> str:
        return self.value


# cheapest closed forms first
PRECEDENCE = (
    GraphClass.EMPTY,
    GraphClass.COMPLETE,
    GraphClass.PATH,
    GraphClass.TREE,
    GraphClass.FOREST,
    GraphClass.BIPARTITE,
    GraphClass.COGRAPH,
)


def two_coloring(g: Graph) -> list[int] | None:
    """Colour 0/1 per vertex with each component's lowest vertex on 0, or None."""
    color = [-1] * g.n
    for comp in component_masks(g):
        root = (comp & -comp).bit_length() - 1
        color[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in iter_bits(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def bipartition(g: Graph) -> tuple[set[int], set[int]] | None:
    """Split into two independent sets, or ``None`` if there is an odd cycle.

    Isolated vertices land in the first set.
    """
    color = two_coloring(g)
    if color is None:
        return None
    return (
        {v for v in range(g.n) if color[v] == 0},
        {v for v in range(g.n) if color[v] == 1},
    )


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(component_masks(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and len(component_masks(g)) == 1


def is_path(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return is_tree(g) and all(popcount(a) <= 2 for a in g.adj)


def path_order(g: Graph) -> list[int]:
    """Vertices of a path graph from one end to the other.

    Starts at the lower-indexed end so the order is deterministic.
    """
    if not is_path(g):
        raise ValueError("not a path")
    if g.n <= 1:
        return list(range(g.n))
    start = min(v for v in range(g.n) if popcount(g.adj[v]) == 1)
    order = [start]
    prev = -1
    cur = start
    while len(order) < g.n:
        nxt = next(w for w in iter_bits(g.adj[cur]) if w != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def classify(g: Graph) -> frozenset[GraphClass]:
    from .cograph import is_cograph

    labels = set()
    n, m = g.n, g.m
    if m == 0:
        labels.add(GraphClass.EMPTY)
    if m == n * (n - 1) // 2:
        labels.add(GraphClass.COMPLETE)
    if is_path(g):
        labels.add(GraphClass.PATH)
    if is_tree(g):
        labels.add(GraphClass.TREE)
    if is_forest(g):
        labels.add(GraphClass.FOREST)
    if two_coloring(g) is not None:
        labels.add(GraphClass.BIPARTITE)
    if is_cograph(g):
        labels.add(GraphClass.COGRAPH)
    return frozenset(labels)


def sorted_labels(labels: frozenset[GraphClass]) -> list[str]:
    return sorted(str(c) for c in labels)


def find_odd_cycle(g: Graph) -> list[int] | None:
    """Vertices of an odd cycle in order, or ``None`` if ``g`` is bipartite."""
    parent = [-1] * g.n
    depth = [-1] * g.n
    for comp in component_masks(g):
        root = (comp & -comp).bit_length() - 1
        depth[root] = 0
        queue = [root]
        for u in queue:
            for w in iter_bits(g.adj[u]):
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif depth[w] == depth[u]:
                    left, right = [u], [w]
                    while left[-1] != right[-1]:
                        left.append(parent[left[-1]])
                        right.append(parent[right[-1]])
                    return left + right[-2::-1]
    return None


def find_cycle(g: Graph) -> list[int] | None:
    """Vertices of some cycle in order, or ``None`` for forests."""
    parent = [-1] * g.n
    seen = [False] * g.n
    for comp in component_masks(g):
        root = (comp & -comp).bit_length() - 1
        seen[root] = True
        stack = [root]
        while stack:
            u = stack.pop()
            for w in iter_bits(g.adj[u]):
                if w == parent[u]:
                    continue
                if seen[w]:
                    # walk both ends up to their meeting point
                    anc_u = [u]
                    while anc_u[-1] != root:
                        anc_u.append(parent[anc_u[-1]])
                    path_w = [w]
                    while path_w[-1] not in anc_u:
                        path_w.append(parent[path_w[-1]])
                    meet = path_w[-1]
                    return anc_u[: anc_u.index(meet) + 1] + path_w[-2::-1]
                seen[w] = True
                parent[w] = u
                stack.append(w)
    return None
