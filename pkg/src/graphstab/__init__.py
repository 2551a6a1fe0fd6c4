"""Stability, criticality and unfrozenness of alpha, beta, omega and chi on special graph classes."""
from .classify import GraphClass, bipartition, classify
from .engines import decide, decide_with_engine
from .graph import Graph, GraphError, Parameter, Question
from .kernels import BACKEND
from .oracle import decide_by_definition
from .verdict import Verdict

__all__ = [
    "BACKEND",
    "Graph",
    "GraphClass",
    "GraphError",
    "Parameter",
    "Question",
    "Verdict",
    "bipartition",
    "classify",
    "decide",
    "decide_by_definition",
    "decide_with_engine",
]
