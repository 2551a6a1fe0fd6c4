import itertools
import random

import pytest
from hypothesis import strategies as st

from graphstab.graph import Graph, Parameter, Question

SWEEP_QUESTIONS = [
    Question.STABILITY,
    Question.VERTEX_STABILITY,
    Question.UNFROZENNESS,
    Question.CRITICALITY,
    Question.FROZENNESS,
    Question.VERTEX_CRITICALITY,
]
PARAMS = list(Parameter)


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))


def random_graph(n, p, rng):
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, c in zip(pairs, chosen) if c))


# Brute-force references, deliberately naive and independent of the kernels.


def brute_alpha(g):
    for k in range(g.n, 0, -1):
        for s in itertools.combinations(range(g.n), k):
            if not any(g.has_edge(u, v) for u, v in itertools.combinations(s, 2)):
                return k
    return 0


def brute_omega(g):
    for k in range(g.n, 0, -1):
        for s in itertools.combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(s, 2)):
                return k
    return 0


def brute_chi(g):
    """Fewest independent sets covering V, by DP over vertex subsets."""
    n = g.n
    indep = [
        not any(g.has_edge(u, v) for u, v in itertools.combinations([i for i in range(n) if s >> i & 1], 2))
        for s in range(1 << n)
    ]
    best = [0] + [n + 1] * ((1 << n) - 1)
    for s in range(1, 1 << n):
        low = s & -s
        sub = s
        while sub:
            if sub & low and indep[sub]:
                best[s] = min(best[s], best[s ^ sub] + 1)
            sub = (sub - 1) & s
    return best[(1 << n) - 1]


def brute_min_covers(g):
    """All minimum vertex covers."""
    for k in range(g.n + 1):
        found = [
            set(s)
            for s in itertools.combinations(range(g.n), k)
            if all(u in s or v in s for u, v in g.edges)
        ]
        if found:
            return found
    return []


def brute_max_cliques(g):
    w = brute_omega(g)
    return [
        frozenset(s)
        for s in itertools.combinations(range(g.n), w)
        if all(g.has_edge(u, v) for u, v in itertools.combinations(s, 2))
    ]


@pytest.fixture
def rng():
    return random.Random(20240601)


# Acceptance lines, collected during the run and repeated in the terminal summary.
_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_report(request):
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def report(number, ok, summary):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {summary}"
        print(line)
        lines.append(line)

    return report


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance")
        for line in sorted(lines):
            terminalreporter.write_line(line)
