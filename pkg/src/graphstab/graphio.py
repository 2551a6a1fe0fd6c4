"""Plain-text graph format.

::

    c optional comment lines
    p <n> <m>
    e <u> <v>        (m lines, 1-based vertices)
"""
from __future__ import annotations

from pathlib import Path

from .graph import Graph


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_graph(text: str) -> Graph:
    n = m = None
    header_line = 0
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        kind = fields[0]
        if kind == "p":
            if n is not None:
                raise ParseError(lineno, "second 'p' line")
            if len(fields) != 3:
                raise ParseError(lineno, "expected 'p <n> <m>'")
            n, m = _ints(lineno, fields[1:])
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative count")
            header_line = lineno
        elif kind == "e":
            if n is None:
                raise ParseError(lineno, "'e' line before 'p' line")
            if len(fields) != 3:
                raise ParseError(lineno, "expected 'e <u> <v>'")
            u, v = _ints(lineno, fields[1:])
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"vertex out of range 1..{n}")
            if u == v:
                raise ParseError(lineno, f"loop at vertex {u}")
            e = (min(u, v) - 1, max(u, v) - 1)
            if e in edges:
                raise ParseError(lineno, f"duplicate edge {u} {v}")
            edges.add(e)
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")
    if n is None:
        raise ParseError(0, "missing 'p' line")
    if len(edges) != m:
        raise ParseError(header_line, f"header declares {m} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def _ints(lineno: int, fields: list[str]) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(fields)!r}") from None


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))
