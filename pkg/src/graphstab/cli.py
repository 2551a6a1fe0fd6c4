"""Command-line front end.

Exit codes: 0 success (and, for ``solve``, every queried property holds),
1 some property fails or some decider disagrees with the oracle,
2 usage, parse or engine errors, 3 oracle size cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import oracle
from .classify import classify, sorted_labels
from .engines import ENGINES, EXPLAIN, EngineMismatch, applicable_engines, decide_with_engine, run_engine
from .generators import GenSpecError, generate
from .graph import Graph, Parameter, Question
from .graphio import ParseError, format_graph, read_graph

SWEEP_QUESTIONS = (
    Question.STABILITY,
    Question.VERTEX_STABILITY,
    Question.UNFROZENNESS,
    Question.CRITICALITY,
    Question.FROZENNESS,
    Question.VERTEX_CRITICALITY,
)


def _witness_json(w):
    if isinstance(w, tuple):
        return [w[0] + 1, w[1] + 1]
    return w + 1


def _params(choice: str) -> list[Parameter]:
    return list(Parameter) if choice == "all" else [Parameter(choice)]


def _questions(choice: str) -> list[Question]:
    return list(SWEEP_QUESTIONS) if choice == "all" else [Question(choice)]


def _load(args) -> Graph:
    if getattr(args, "gen", None):
        return generate(args.gen, args.seed)
    if not getattr(args, "path", None):
        raise GenSpecError("give a graph file or --gen")
    return read_graph(args.path)


def cmd_classify(args) -> int:
    g = read_graph(args.path)
    for label in sorted_labels(classify(g)):
        print(label)
    return 0


def cmd_solve(args) -> int:
    g = read_graph(args.path)
    classes = sorted_labels(classify(g))
    all_hold = True
    for p in _params(args.param):
        for q in _questions(args.question):
            start = time.perf_counter()
            verdict, engine = decide_with_engine(g, p, q, args.engine)
            micros = round((time.perf_counter() - start) * 1e6)
            record = {
                "n": g.n,
                "m": g.m,
                "classes": classes,
                "parameter": str(p),
                "question": str(q),
                "holds": verdict.holds,
                "witnesses": [_witness_json(w) for w in verdict.witnesses],
                "engine": engine,
            }
            if not args.no_timing:
                record["microseconds"] = micros
            if args.explain:
                record["explain"] = EXPLAIN[engine]
            print(json.dumps(record))
            all_hold &= verdict.holds
    return 0 if all_hold else 1


def cmd_verify(args) -> int:
    g = _load(args)
    engines = applicable_engines(g)
    failures = 0
    for engine in engines:
        for p in Parameter:
            for q in SWEEP_QUESTIONS:
                got = run_engine(g, p, q, engine)
                want = oracle.decide_by_definition(g, p, q)
                same = (got.holds, got.witnesses) == (want.holds, want.witnesses)
                failures += not same
                print(f"{'PASS' if same else 'FAIL'} {engine} {p} {q} holds={want.holds}")
    print(f"{len(engines)} engine(s), {failures} disagreement(s)")
    return 0 if failures == 0 else 1


def cmd_gen(args) -> int:
    g = generate(args.spec, args.seed)
    text = format_graph(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_cotree(args) -> int:
    from .cograph import build_cotree

    g = read_graph(args.path)
    print(build_cotree(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphstab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print the special classes a graph belongs to")
    p.add_argument("path")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="answer stability questions, one JSON record per query")
    p.add_argument("path")
    p.add_argument("--param", default="all", choices=["all"] + [str(x) for x in Parameter])
    p.add_argument("--question", default="all", choices=["all"] + [str(x) for x in Question])
    p.add_argument("--engine", default="auto", choices=["auto", *ENGINES])
    p.add_argument("--no-timing", action="store_true", help="omit the microseconds field")
    p.add_argument("--explain", action="store_true", help="name the result behind each verdict")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check every applicable engine against the oracle")
    p.add_argument("path", nargs="?")
    p.add_argument("--gen", metavar="SPEC", help='generate the instance, e.g. "cograph n=10 seed=7"')
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated graph in the text format")
    p.add_argument("spec", help='e.g. "path n=6", "tree n=9 seed=2", "bipartite n=12 p=0.3 seed=1"')
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cotree", help="print the co-expression of a co-graph")
    p.add_argument("path")
    p.set_defaults(func=cmd_cotree)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except oracle.OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, GenSpecError, EngineMismatch, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
