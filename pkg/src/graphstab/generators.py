"""Seeded instance generators and the ``family key=value ...`` spec strings the CLI accepts."""
from __future__ import annotations

import heapq
import random

from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)


class GenSpecError(ValueError):
    pass


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a random Prüfer sequence."""
    if n <= 1:
        return Graph(max(n, 0))
    if n == 2:
        return Graph(2, frozenset({(0, 1)}))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, frozenset(edges))


def random_forest(n: int, trees: int, rng: random.Random) -> Graph:
    """Disjoint random trees over a random split of ``n`` vertices, labels shuffled."""
    trees = max(1, min(trees, n)) if n else 0
    cuts = sorted(rng.sample(range(1, n), trees - 1)) if trees > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])] if n else []
    labels = list(range(n))
    rng.shuffle(labels)
    edges = []
    off = 0
    for k in sizes:
        t = random_tree(k, rng)
        edges.extend(
            (min(labels[off + u], labels[off + v]), max(labels[off + u], labels[off + v]))
            for u, v in t.edges
        )
        off += k
    return Graph(n, frozenset(edges))


def random_bipartite(a: int, b: int, p: float, rng: random.Random) -> Graph:
    """Each of the ``a * b`` cross pairs present with probability ``p``; labels shuffled."""
    n = a + b
    labels = list(range(n))
    rng.shuffle(labels)
    edges = []
    for i in range(a):
        for j in range(a, n):
            if rng.random() < p:
                u, v = labels[i], labels[j]
                edges.append((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def random_cograph(n: int, rng: random.Random) -> Graph:
    """Random co-expression: merge two random parts by union or join until one is left."""
    parts: list[tuple[list[int], list[tuple[int, int]]]] = [([v], []) for v in range(n)]
    while len(parts) > 1:
        i, j = sorted(rng.sample(range(len(parts)), 2))
        vj, ej = parts.pop(j)
        vi, ei = parts.pop(i)
        edges = ei + ej
        if rng.random() < 0.5:
            edges += [(min(u, v), max(u, v)) for u in vi for v in vj]
        parts.append((vi + vj, edges))
    return Graph(n, frozenset(parts[0][1]) if parts else frozenset())


FAMILIES = ("empty", "complete", "path", "cycle", "star", "tree", "forest", "bipartite", "cograph")


def parse_spec(spec: str) -> tuple[str, dict[str, str]]:
    fields = spec.split()
    if not fields:
        raise GenSpecError("empty generator spec")
    family, opts = fields[0], {}
    if family not in FAMILIES:
        raise GenSpecError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    for f in fields[1:]:
        key, sep, val = f.partition("=")
        if not sep or not key or not val:
            raise GenSpecError(f"expected key=value, got {f!r}")
        opts[key] = val
    return family, opts


def generate(spec: str, seed: int | None = None) -> Graph:
    """Build the graph described by ``spec``, e.g. ``"cograph n=10 seed=7"``.

    A ``seed=`` inside the spec wins over ``seed``; the default seed is 0.
    """
    family, opts = parse_spec(spec)
    allowed = {"n", "seed", "p", "a", "b", "trees"}
    unknown = set(opts) - allowed
    if unknown:
        raise GenSpecError(f"unknown option(s) {sorted(unknown)}")
    try:
        n = int(opts["n"]) if "n" in opts else None
        rng = random.Random(int(opts.get("seed", seed if seed is not None else 0)))
        if family == "bipartite":
            a = int(opts["a"]) if "a" in opts else None
            b = int(opts["b"]) if "b" in opts else None
            if a is None and b is None:
                if n is None:
                    raise GenSpecError("bipartite needs n= or a= and b=")
                a = n // 2
                b = n - a
            elif a is None or b is None:
                raise GenSpecError("give both a= and b=")
            return random_bipartite(a, b, float(opts.get("p", "0.5")), rng)
        if n is None:
            raise GenSpecError(f"{family} needs n=")
        if n < 0:
            raise GenSpecError("n must be non-negative")
        if family == "empty":
            return empty_graph(n)
        if family == "complete":
            return complete_graph(n)
        if family == "path":
            return path_graph(n)
        if family == "cycle":
            if n < 3:
                raise GenSpecError("cycle needs n >= 3")
            return cycle_graph(n)
        if family == "star":
            if n < 1:
                raise GenSpecError("star needs n >= 1")
            return star_graph(n - 1)
        if family == "tree":
            return random_tree(n, rng)
        if family == "forest":
            return random_forest(n, int(opts.get("trees", "2")), rng)
        return random_cograph(n, rng)
    except ValueError as exc:
        if isinstance(exc, GenSpecError):
            raise
        raise GenSpecError(str(exc)) from None
