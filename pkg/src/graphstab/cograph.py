"""Co-trees and the co-graph deciders.

A co-tree is kept in canonical n-ary form: children of a union are connected,
children of a join are co-connected, so no node has a child of its own kind.
Each node carries alpha, omega, chi and the number of maximum cliques of the
subgraph it induces.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from math import prod

from .graph import (
    Edge,
    Graph,
    GraphError,
    Parameter,
    Question,
    complement,
    component_masks,
    find_induced_path4,
    iter_bits,
    nonedges,
)
from .oracle import vertex_frozenness_constant, vertex_unfrozenness_constant
from .verdict import Verdict, verdict_from_changes

A, B, W, X = Parameter.ALPHA, Parameter.BETA, Parameter.OMEGA, Parameter.CHI

LEAF, UNION, JOIN = "leaf", "union", "join"


class NotCograph(GraphError):
    """Raised when the graph has an induced P4; ``witness`` is one, in path order."""

    def __init__(self, witness: tuple[int, ...]):
        super().__init__(f"induced P4 on vertices {list(witness)}")
        self.witness = witness


@dataclass(frozen=True)
class CoTree:
    kind: str
    children: tuple["CoTree", ...] = ()
    vertex: int = -1
    alpha: int = field(init=False)
    omega: int = field(init=False)
    count: int = field(init=False)
    mask: int = field(init=False)

    def __post_init__(self) -> None:
        kids = self.children
        if self.kind == LEAF:
            vals = (1, 1, 1, 1 << self.vertex)
        elif self.kind == UNION:
            w = max(c.omega for c in kids)
            vals = (
                sum(c.alpha for c in kids),
                w,
                sum(c.count for c in kids if c.omega == w),
                _or(c.mask for c in kids),
            )
        elif self.kind == JOIN:
            vals = (
                max(c.alpha for c in kids),
                sum(c.omega for c in kids),
                prod(c.count for c in kids),
                _or(c.mask for c in kids),
            )
        else:
            raise ValueError(f"unknown node kind {self.kind!r}")
        for name, val in zip(("alpha", "omega", "count", "mask"), vals):
            object.__setattr__(self, name, val)

    @property
    def chi(self) -> int:
        # co-graphs are perfect
        return self.omega

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    @property
    def max_clique_count(self) -> int:
        return self.count

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(iter_bits(self.mask))

    def child_with(self, v: int) -> "CoTree":
        bit = 1 << v
        for c in self.children:
            if c.mask & bit:
                return c
        raise KeyError(v)

    def __str__(self) -> str:
        return to_coexpression(self)


def _or(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def _lowbit(t: CoTree) -> int:
    return t.mask & -t.mask


def leaf(v: int) -> CoTree:
    return CoTree(LEAF, vertex=v)


def make_node(kind: str, children) -> CoTree:
    """Internal node in canonical form: same-kind children are absorbed, order by lowest vertex."""
    flat: list[CoTree] = []
    for c in children:
        if c.kind == kind:
            flat.extend(c.children)
        else:
            flat.append(c)
    if len(flat) == 1:
        return flat[0]
    if not flat:
        raise ValueError("internal node without children")
    return CoTree(kind, tuple(sorted(flat, key=_lowbit)))


# -- construction ----------------------------------------------------------


def build_cotree(g: Graph) -> CoTree:
    """Co-tree of ``g`` by recursive splitting into components and co-components.

    Raises ``NotCograph`` with an induced P4 when neither split applies.
    """
    if g.n == 0:
        raise GraphError("the null graph has no co-tree")
    gc = complement(g)

    def build(mask: int) -> CoTree:
        if mask & (mask - 1) == 0:
            return leaf(mask.bit_length() - 1)
        comps = component_masks(g, mask)
        if len(comps) > 1:
            return CoTree(UNION, tuple(build(c) for c in comps))
        cocomps = component_masks(gc, mask)
        if len(cocomps) > 1:
            return CoTree(JOIN, tuple(build(c) for c in cocomps))
        raise NotCograph(find_induced_path4(g, mask))

    return build(g.vertex_mask())


def is_cograph(g: Graph) -> bool:
    if g.n == 0:
        return True
    try:
        build_cotree(g)
    except NotCograph:
        return False
    return True


def expand(t: CoTree, n: int | None = None) -> Graph:
    """The graph a co-tree describes."""
    if n is None:
        n = t.mask.bit_length()
    edges = []

    def walk(node: CoTree) -> None:
        if node.kind == JOIN:
            kids = node.children
            for i in range(len(kids)):
                for j in range(i + 1, len(kids)):
                    for u in iter_bits(kids[i].mask):
                        edges.extend((u, v) for v in iter_bits(kids[j].mask))
        for c in node.children:
            walk(c)

    walk(t)
    return Graph(n, frozenset((min(e), max(e)) for e in edges))


def complement_cotree(t: CoTree) -> CoTree:
    if t.kind == LEAF:
        return t
    kind = JOIN if t.kind == UNION else UNION
    return CoTree(kind, tuple(complement_cotree(c) for c in t.children))


def cotree_params(t: CoTree | None) -> tuple[int, int, int, int]:
    """``(alpha, beta, omega, chi)`` read off the root."""
    if t is None:
        return (0, 0, 0, 0)
    return (t.alpha, t.size - t.alpha, t.omega, t.chi)


def cotree_delete_vertex(t: CoTree, v: int) -> CoTree | None:
    """Co-tree after removing leaf ``v``; ``None`` when nothing is left.

    Only nodes on the path from ``v`` to the root are rebuilt.
    """
    if not t.mask >> v & 1:
        raise KeyError(f"vertex {v} is not a leaf of this co-tree")

    def drop(node: CoTree) -> CoTree | None:
        if node.kind == LEAF:
            return None
        kids = []
        for c in node.children:
            if c.mask >> v & 1:
                r = drop(c)
                if r is not None:
                    kids.append(r)
            else:
                kids.append(c)
        return make_node(node.kind, kids)

    return drop(t)


# -- co-expression text form -----------------------------------------------


def to_coexpression(t: CoTree) -> str:
    """Prefix form with 1-based leaves, e.g. ``(j (u v1 v3) (u v2 v4))``."""
    if t.kind == LEAF:
        return f"v{t.vertex + 1}"
    op = "u" if t.kind == UNION else "j"
    return "(" + " ".join([op] + [to_coexpression(c) for c in t.children]) + ")"


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_coexpression(text: str) -> CoTree:
    """Inverse of ``to_coexpression``; nested same-kind operators are flattened."""
    tokens = _TOKEN.findall(text)
    pos = 0

    def expr() -> CoTree:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of co-expression")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            if pos >= len(tokens) or tokens[pos] not in ("u", "j"):
                raise ValueError(f"expected operator at token {pos}")
            kind = UNION if tokens[pos] == "u" else JOIN
            pos += 1
            kids = []
            while pos < len(tokens) and tokens[pos] != ")":
                kids.append(expr())
            if pos >= len(tokens):
                raise ValueError("missing ')'")
            pos += 1
            if len(kids) < 2:
                raise ValueError("operators need at least two operands")
            seen = 0
            for k in kids:
                if seen & k.mask:
                    raise ValueError("vertex used twice")
                seen |= k.mask
            return make_node(kind, kids)
        m = re.fullmatch(r"v([1-9][0-9]*)", tok)
        if not m:
            raise ValueError(f"bad token {tok!r}")
        return leaf(int(m.group(1)) - 1)

    t = expr()
    if pos != len(tokens):
        raise ValueError("trailing tokens in co-expression")
    return t


# -- maximum cliques -------------------------------------------------------


def count_max_cliques_through(t: CoTree, v: int | None = None) -> int:
    """Number of maximum cliques, or of those containing ``v``."""
    if v is None:
        return t.count
    if not t.mask >> v & 1:
        raise KeyError(f"vertex {v} is not a leaf of this co-tree")
    node, factor = t, 1
    while node.kind != LEAF:
        c = node.child_with(v)
        if node.kind == UNION:
            if c.omega < node.omega:
                return 0
        else:
            factor *= prod(o.count for o in node.children if o is not c)
        node = c
    return factor


def count_max_cliques_through_both(t: CoTree, u: int, v: int) -> int:
    """Number of maximum cliques containing both ``u`` and ``v``."""
    node, factor = t, 1
    while True:
        cu, cv = node.child_with(u), node.child_with(v)
        if node.kind == UNION:
            if cu is not cv or cu.omega < node.omega:
                return 0
            node = cu
            continue
        if cu is cv:
            factor *= prod(o.count for o in node.children if o is not cu)
            node = cu
            continue
        rest = prod(o.count for o in node.children if o is not cu and o is not cv)
        return factor * rest * count_max_cliques_through(cu, u) * count_max_cliques_through(cv, v)


def enumerate_max_cliques(t: CoTree, limit: int = 10_000) -> list[frozenset[int]]:
    """All maximum cliques; test use only, the count can be exponential."""

    def walk(node: CoTree) -> list[frozenset[int]]:
        if node.kind == LEAF:
            return [frozenset((node.vertex,))]
        if node.kind == UNION:
            out = []
            for c in node.children:
                if c.omega == node.omega:
                    out.extend(walk(c))
        else:
            out = [frozenset()]
            for c in node.children:
                out = [a | b for a in out for b in walk(c)]
        if len(out) > limit:
            raise OverflowError(f"more than {limit} maximum cliques")
        return out

    return walk(t)


def restricted_labels(t: CoTree, mask: int) -> tuple[int, int]:
    """``(alpha, omega)`` of the subgraph induced by ``mask``; zeros when empty."""
    sub = t.mask & mask
    if not sub:
        return (0, 0)
    if sub == t.mask:
        return (t.alpha, t.omega)
    parts = [restricted_labels(c, sub) for c in t.children if c.mask & sub]
    if t.kind == UNION:
        return (sum(a for a, _ in parts), max(w for _, w in parts))
    return (max(a for a, _ in parts), sum(w for _, w in parts))


# -- deciders --------------------------------------------------------------


class _Ctx:
    """A co-graph with its co-tree and the complement's, built on demand."""

    def __init__(self, g: Graph, tree: CoTree | None = None):
        self.g = g
        if g.n and tree is None:
            tree = build_cotree(g)
        self.tree = tree

    @cached_property
    def comp(self) -> "_Ctx":
        tc = complement_cotree(self.tree) if self.tree is not None else None
        return _Ctx(complement(self.g), tc)


def _root_alpha(t: CoTree | None) -> int:
    return 0 if t is None else t.alpha


def _root_chi(t: CoTree | None) -> int:
    return 0 if t is None else t.chi


def _alpha_vertex_changes(ctx: _Ctx) -> list[int]:
    t = ctx.tree
    return [v for v in range(ctx.g.n) if _root_alpha(cotree_delete_vertex(t, v)) != t.alpha]


def chi_critical_vertices(g: Graph, tree: CoTree | None = None) -> set[int]:
    """Vertices whose removal lowers chi."""
    if g.n == 0:
        return set()
    t = tree or build_cotree(g)
    return {v for v in range(g.n) if _root_chi(cotree_delete_vertex(t, v)) != t.chi}


def _vertex_changes(ctx: _Ctx, p: Parameter) -> list[int]:
    if ctx.g.n == 0:
        return []
    if p is X:
        return sorted(chi_critical_vertices(ctx.g, ctx.tree))
    if p is A:
        return _alpha_vertex_changes(ctx)
    if p is W:
        # omega(g - v) = alpha(complement - v)
        return _alpha_vertex_changes(ctx.comp)
    # beta is kept iff alpha drops by one, since n drops by one
    critical = set(_alpha_vertex_changes(ctx))
    return [v for v in range(ctx.g.n) if v not in critical]


def _omega_edge_changes(ctx: _Ctx) -> list[Edge]:
    """Edges lying in every maximum clique; exactly the omega-critical ones."""
    t = ctx.tree
    return [
        (u, v)
        for u, v in ctx.g.sorted_edges()
        if count_max_cliques_through_both(t, u, v) == t.count
    ]


def _omega_unfrozen(ctx: _Ctx, e: Edge) -> bool:
    """Whether adding nonedge ``e`` keeps omega.

    ``g + uv`` gains a larger clique iff the common neighbourhood of ``u`` and
    ``v`` holds a clique of size ``omega - 1``.
    """
    u, v = e
    _, w = restricted_labels(ctx.tree, ctx.g.adj[u] & ctx.g.adj[v])
    return w + 2 <= ctx.tree.omega


def cograph_omega_unfrozen_edge(g: Graph, e: tuple[int, int]) -> bool:
    u, v = min(e), max(e)
    if u == v or g.has_edge(u, v):
        raise GraphError(f"{(u, v)} is not a nonedge")
    return _omega_unfrozen(_Ctx(g), (u, v))


def _alpha_edge_changes(ctx: _Ctx) -> list[Edge]:
    # alpha(g - e) = omega(complement + e)
    comp = ctx.comp
    return [e for e in ctx.g.sorted_edges() if not _omega_unfrozen(comp, e)]


def _chi_frozen(t: CoTree, u: int, v: int) -> bool:
    """Whether adding nonedge ``uv`` raises chi, by descent to the lowest common node."""
    node = t
    while True:
        cu, cv = node.child_with(u), node.child_with(v)
        if node.kind == JOIN:
            node = cu
            continue
        if cu is not cv:
            return node.chi == 1
        rest = max((c.chi for c in node.children if c is not cu), default=0)
        if cu.chi < rest:
            return False
        node = cu


def _edge_changes(ctx: _Ctx, p: Parameter) -> list[Edge]:
    if ctx.g.m == 0:
        return []
    if p is X:
        crit = chi_critical_vertices(ctx.g, ctx.tree)
        return [(u, v) for u, v in ctx.g.sorted_edges() if u in crit and v in crit]
    if p is W:
        return _omega_edge_changes(ctx)
    # alpha and beta change together at fixed n
    return _alpha_edge_changes(ctx)


def _nonedge_changes(ctx: _Ctx, p: Parameter) -> list[Edge]:
    g = ctx.g
    if g.n == 0 or g.m == g.n * (g.n - 1) // 2:
        return []
    if p is X:
        return [(u, v) for u, v in nonedges(g) if _chi_frozen(ctx.tree, u, v)]
    if p is W:
        # omega(g + e) = alpha(complement - e)
        return _alpha_edge_changes(ctx.comp)
    # alpha(g + e) = omega(complement - e)
    return _omega_edge_changes(ctx.comp)


def cograph_changes(g: Graph, p: Parameter, domain: str, tree: CoTree | None = None):
    """``(elements, changed)`` for edge deletion, vertex deletion or nonedge addition."""
    ctx = _Ctx(g, tree)
    if domain == "edge":
        return g.sorted_edges(), _edge_changes(ctx, p)
    if domain == "vertex":
        return list(range(g.n)), _vertex_changes(ctx, p)
    return nonedges(g), _nonedge_changes(ctx, p)


def cograph_decide(g: Graph, p: Parameter, q: Question, tree: CoTree | None = None) -> Verdict:
    if q is Question.VERTEX_UNFROZENNESS:
        return vertex_unfrozenness_constant(g, p)
    if q is Question.VERTEX_FROZENNESS:
        return vertex_frozenness_constant(g, p)
    elements, changed = cograph_changes(g, p, q.domain, tree)
    return verdict_from_changes(q, elements, changed)


def cograph_params(g: Graph) -> tuple[int, int, int, int]:
    return cotree_params(build_cotree(g) if g.n else None)


def cograph_vertex_stability(g: Graph, p: Parameter) -> Verdict:
    return cograph_decide(g, p, Question.VERTEX_STABILITY)


def cograph_chi_stability(g: Graph) -> Verdict:
    return cograph_decide(g, X, Question.STABILITY)


def cograph_omega_stability(g: Graph) -> Verdict:
    return cograph_decide(g, W, Question.STABILITY)


def cograph_alpha_beta_stability(g: Graph, p: Parameter) -> Verdict:
    if p not in (A, B):
        raise ValueError("alpha or beta only")
    return cograph_decide(g, p, Question.STABILITY)


def cograph_unfrozenness(g: Graph, p: Parameter) -> Verdict:
    return cograph_decide(g, p, Question.UNFROZENNESS)
