"""Exact parameters and the definitional decider.

Everything here is exponential and capped by vertex count. It is the
reference every class engine is tested against.
"""
from __future__ import annotations

import os
from functools import lru_cache

from . import kernels
from .graph import (
    Graph,
    Parameter,
    Question,
    add_edge,
    complement,
    delete_edge,
    delete_vertex,
    nonedges,
)
from .verdict import Verdict, verdict_from_values

DEFAULT_CAPS = {
    Parameter.ALPHA: 24,
    Parameter.BETA: 24,
    Parameter.OMEGA: 24,
    Parameter.CHI: 16,
}
CAP_ENV = "STABILITY_ORACLE_CAP"


class OracleCapExceeded(ValueError):
    pass


def cap_for(p: Parameter) -> int:
    """Size cap for ``p``; ``STABILITY_ORACLE_CAP`` overrides every default."""
    env = os.environ.get(CAP_ENV)
    if env:
        return int(env)
    return DEFAULT_CAPS[p]


def _check(g: Graph, p: Parameter, cap: int | None) -> None:
    limit = cap_for(p) if cap is None else cap
    if g.n > limit:
        raise OracleCapExceeded(f"{p} oracle capped at n={limit}, got n={g.n}")


@lru_cache(maxsize=1 << 18)
def _alpha(g: Graph) -> int:
    return kernels.max_independent_set_size(g.n, g.adj)


@lru_cache(maxsize=1 << 18)
def _omega(g: Graph) -> int:
    h = complement(g)
    return kernels.max_independent_set_size(h.n, h.adj)


@lru_cache(maxsize=1 << 18)
def _chi(g: Graph) -> int:
    return kernels.chromatic_number(g.n, g.adj, _omega(g))


def alpha_exact(g: Graph, cap: int | None = None) -> int:
    _check(g, Parameter.ALPHA, cap)
    return _alpha(g)


def beta_exact(g: Graph, cap: int | None = None) -> int:
    """Minimum vertex cover size, as ``n - alpha`` (Gallai)."""
    _check(g, Parameter.BETA, cap)
    return g.n - _alpha(g)


def omega_exact(g: Graph, cap: int | None = None) -> int:
    _check(g, Parameter.OMEGA, cap)
    return _omega(g)


def chi_exact(g: Graph, cap: int | None = None) -> int:
    _check(g, Parameter.CHI, cap)
    return _chi(g)


_EXACT = {
    Parameter.ALPHA: alpha_exact,
    Parameter.BETA: beta_exact,
    Parameter.OMEGA: omega_exact,
    Parameter.CHI: chi_exact,
}


def exact_value(g: Graph, p: Parameter, cap: int | None = None) -> int:
    return _EXACT[p](g, cap)


def exact_params(g: Graph) -> tuple[int, int, int, int]:
    """``(alpha, beta, omega, chi)``."""
    return (alpha_exact(g), beta_exact(g), omega_exact(g), chi_exact(g))


def vertex_unfrozenness_constant(g: Graph, p: Parameter) -> Verdict:
    """Vertex-unfrozenness is settled for every graph.

    No graph is alpha-, omega- or chi-vertex-unfrozen (an isolated new vertex
    raises alpha; one joined to everything raises omega and chi), and only the
    null graph is beta-vertex-unfrozen. The witness is the new vertex,
    reported as index ``n``.
    """
    holds = p is Parameter.BETA and g.n == 0
    return Verdict(holds, () if holds else (g.n,))


def vertex_frozenness_constant(g: Graph, p: Parameter) -> Verdict:
    """Every vertex addition changes ``p`` only on the null graph, and never for beta.

    A new vertex adjacent to all others keeps alpha when ``n >= 1``; an
    isolated one keeps omega and chi when ``n >= 1`` and keeps beta always.
    """
    holds = p is not Parameter.BETA and g.n == 0
    return Verdict(holds, () if holds else (g.n,))


def decide_by_definition(
    g: Graph, p: Parameter, q: Question, cap: int | None = None
) -> Verdict:
    """Answer ``q`` for ``p`` by recomputing ``p`` after every single edit."""
    if q is Question.VERTEX_UNFROZENNESS:
        return vertex_unfrozenness_constant(g, p)
    if q is Question.VERTEX_FROZENNESS:
        return vertex_frozenness_constant(g, p)
    _check(g, p, cap)
    value = exact_value(g, p, cap)
    domain = q.domain
    if domain == "edge":
        after = {e: exact_value(delete_edge(g, e), p, cap) for e in g.sorted_edges()}
    elif domain == "vertex":
        after = {v: exact_value(delete_vertex(g, v), p, cap) for v in range(g.n)}
    else:
        after = {e: exact_value(add_edge(g, e), p, cap) for e in nonedges(g)}
    return verdict_from_values(q, value, after)
