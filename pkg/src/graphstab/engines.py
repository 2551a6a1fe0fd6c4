"""Route (parameter, question) queries to a class engine or the oracle."""
from __future__ import annotations

from typing import Callable

from . import bipartite, cograph, forest, oracle, simple_classes
from .classify import (
    PRECEDENCE,
    GraphClass,
    classify,
    find_cycle,
    find_odd_cycle,
    is_forest,
    is_path,
    is_tree,
    path_order,
)
from .graph import Graph, GraphError, Parameter, Question, component_masks, edge, nonedges
from .verdict import Verdict

ENGINES = ("empty", "complete", "path", "tree", "forest", "bipartite", "cograph", "oracle")
_CLASS_ENGINE = {
    GraphClass.EMPTY: "empty",
    GraphClass.COMPLETE: "complete",
    GraphClass.PATH: "path",
    GraphClass.TREE: "tree",
    GraphClass.FOREST: "forest",
    GraphClass.BIPARTITE: "bipartite",
    GraphClass.COGRAPH: "cograph",
}

# theorem behind each engine's verdicts, shown by ``solve --explain``
EXPLAIN = {
    "empty": "empty graphs: Thm. empty-graphs-stability-vertexstability, Prop. empty-graphs-chi-unfrozenness, Cor. empty-graphs-unfrozenness",
    "complete": "complete graphs: Prop. complete-graphs-xi-critical, Cor. complete-graphs-vertexstability, Cor. complete-graph-unfrozenness",
    "path": "paths: Thm. path-stability-vertexstability, Obs. path-2-3-unfrozen-frozen, Props. path-omega-chi-unfrozen and path-alpha-beta-unfrozenness",
    "tree": "trees: Cor. tree-stability-vertexstability, Prop. tree-omega-chi-unfrozenness, Cor. tree-forest-alpha-beta-unfrozenness",
    "forest": "forests: Thm. forests-stability-vertexstability, Thm. forest-omega-chi-unfrozenness, Cor. tree-forest-alpha-beta-unfrozenness",
    "bipartite": "bipartite graphs: Cor. bipartite-stability-vertexstability, Thms. bipartite-chi-unfrozenness and bipartite-beta-unfrozenness",
    "cograph": "co-graphs: Thms. co-graph-chi-stability, co-graph-omega-stability, co-graph-chi-unfrozenness and the complement corollaries",
    "oracle": "definition: recompute the parameter after every single edit",
}


class EngineMismatch(GraphError):
    """The requested engine does not apply; the message names a recognition witness."""


def _one_based(vs) -> list[int]:
    return [v + 1 for v in vs]


def _mismatch(g: Graph, engine: str) -> EngineMismatch:
    if engine == "empty":
        return EngineMismatch(f"not empty: edge {_one_based(g.sorted_edges()[0])}")
    if engine == "complete":
        return EngineMismatch(f"not complete: nonedge {_one_based(nonedges(g)[0])}")
    if engine == "cograph":
        try:
            cograph.build_cotree(g)
        except cograph.NotCograph as exc:
            return EngineMismatch(f"not a co-graph: induced P4 on {_one_based(exc.witness)}")
    if engine == "bipartite":
        return EngineMismatch(f"not bipartite: odd cycle {_one_based(find_odd_cycle(g))}")
    cyc = find_cycle(g)
    if cyc is not None:
        return EngineMismatch(f"not a {engine}: cycle {_one_based(cyc)}")
    if engine == "tree":
        comps = component_masks(g)
        return EngineMismatch(f"not a tree: {len(comps)} components")
    deg3 = next(v for v in range(g.n) if bin(g.adj[v]).count("1") > 2) if g.n else None
    return EngineMismatch(f"not a path: vertex {deg3 + 1} has degree > 2")


def _path_engine(g: Graph, p: Parameter, q: Question) -> Verdict:
    order = path_order(g)
    v = simple_classes.path_decide(g.n, p, q)
    if v.holds or q.domain == "new-vertex":
        return v
    if q.domain == "vertex":
        wit = sorted(order[i] for i in v.witnesses)
    else:
        wit = sorted(edge(order[i], order[j]) for i, j in v.witnesses)
    return Verdict(False, tuple(wit))


_DECIDERS: dict[str, Callable[[Graph, Parameter, Question], Verdict]] = {
    "empty": lambda g, p, q: simple_classes.empty_decide(g.n, p, q),
    "complete": lambda g, p, q: simple_classes.complete_decide(g.n, p, q),
    "path": _path_engine,
    "tree": forest.forest_decide,
    "forest": forest.forest_decide,
    "bipartite": bipartite.bipartite_decide,
    "cograph": cograph.cograph_decide,
    "oracle": oracle.decide_by_definition,
}

_APPLIES = {
    "empty": lambda g: g.m == 0,
    "complete": lambda g: g.m == g.n * (g.n - 1) // 2,
    "path": is_path,
    "tree": is_tree,
    "forest": is_forest,
    "bipartite": lambda g: find_odd_cycle(g) is None,
    "cograph": cograph.is_cograph,
    "oracle": lambda g: True,
}


def applicable_engines(g: Graph) -> list[str]:
    """Class engines for ``g`` in routing order (oracle excluded)."""
    labels = classify(g)
    return [_CLASS_ENGINE[c] for c in PRECEDENCE if c in labels]


def select_engine(g: Graph, engine: str = "auto") -> str:
    if engine == "auto":
        if g.n == 0:
            return "oracle"
        engines = applicable_engines(g)
        return engines[0] if engines else "oracle"
    if engine not in _DECIDERS:
        raise ValueError(f"unknown engine {engine!r}")
    if not _APPLIES[engine](g):
        raise _mismatch(g, engine)
    return engine


def run_engine(g: Graph, p: Parameter, q: Question, engine: str) -> Verdict:
    """Run ``engine`` without checking that it applies."""
    return _DECIDERS[engine](g, p, q)


def decide_with_engine(
    g: Graph, p: Parameter, q: Question, engine: str = "auto"
) -> tuple[Verdict, str]:
    name = select_engine(g, engine)
    return run_engine(g, p, q, name), name


def decide(g: Graph, p: Parameter, q: Question, engine: str = "auto") -> Verdict:
    return decide_with_engine(g, p, q, engine)[0]
