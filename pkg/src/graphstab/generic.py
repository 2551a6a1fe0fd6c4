"""Class-independent deciders parameterised by a parameter evaluator, and complement dualities."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import oracle
from .graph import Graph, Parameter, Question, complement, delete_edge, delete_vertex
from .verdict import Verdict, verdict_from_values


@dataclass(frozen=True)
class ParamEvaluator:
    """A graph parameter with the largest vertex count it accepts.

    ``func`` must be a pure function so evaluators can be shared freely.
    """

    func: Callable[[Graph], int]
    cap: int | None = None
    name: str = ""

    def __call__(self, g: Graph) -> int:
        if self.cap is not None and g.n > self.cap:
            raise oracle.OracleCapExceeded(f"{self.name or 'evaluator'} capped at n={self.cap}")
        return self.func(g)

    @classmethod
    def exact(cls, p: Parameter) -> "ParamEvaluator":
        return cls(lambda g: oracle.exact_value(g, p), oracle.cap_for(p), str(p))


def closure_vertex_stability(g: Graph, evaluate: ParamEvaluator) -> Verdict:
    """Vertex-stability by evaluating every ``g - v``; valid when the class is closed under induced subgraphs."""
    base = evaluate(g)
    return verdict_from_values(
        Question.VERTEX_STABILITY, base, {v: evaluate(delete_vertex(g, v)) for v in range(g.n)}
    )


def closure_stability(g: Graph, evaluate: ParamEvaluator) -> Verdict:
    """Stability by evaluating every ``g - e``; valid when the class is closed under subgraphs."""
    base = evaluate(g)
    return verdict_from_values(
        Question.STABILITY, base, {e: evaluate(delete_edge(g, e)) for e in g.sorted_edges()}
    )


def perfect_cross_check(g: Graph, decide=None) -> bool:
    """Whether omega- and chi-vertex-stability agree, as they must on perfect graphs."""
    if decide is None:
        from .engines import decide
    w = decide(g, Parameter.OMEGA, Question.VERTEX_STABILITY)
    x = decide(g, Parameter.CHI, Question.VERTEX_STABILITY)
    return w.holds == x.holds


# duality id -> (question answered on g, parameter and question asked of the complement)
DUALITIES = {
    "omega-unfrozenness": (Parameter.OMEGA, Parameter.ALPHA),
    "alpha-unfrozenness": (Parameter.ALPHA, Parameter.OMEGA),
    "beta-unfrozenness": (Parameter.BETA, Parameter.OMEGA),
}


def complement_duality(g: Graph, which: str, decide=None) -> Verdict:
    """Answer an unfrozenness question on ``g`` by a stability question on its complement.

    omega-unfrozenness of ``g`` is alpha-stability of the complement, and
    alpha- and beta-unfrozenness are omega-stability of the complement. A
    nonedge of ``g`` is an edge of the complement, so witnesses carry over
    unchanged.
    """
    if which not in DUALITIES:
        raise ValueError(f"unknown duality {which!r}; choose from {sorted(DUALITIES)}")
    if decide is None:
        from .engines import decide
    _, dual_p = DUALITIES[which]
    return decide(complement(g), dual_p, Question.STABILITY)
