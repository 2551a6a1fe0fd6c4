"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py --sizes 12 18 24 --count 30
"""
import argparse
import random
import time

from graphstab import _kernels_py
from graphstab.graph import Graph

try:
    from graphstab import _ckernels
except ImportError:
    _ckernels = None


def random_graphs(n, p, count, seed):
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return [Graph(n, frozenset(e for e in pairs if rng.random() < p)) for _ in range(count)]


def timed(fn, graphs):
    start = time.perf_counter()
    out = [fn(g.n, g.adj) for g in graphs]
    return time.perf_counter() - start, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 24, 32, 40])
    ap.add_argument("--density", type=float, default=0.5)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    backends = [("python", _kernels_py)] + ([("cython", _ckernels)] if _ckernels else [])
    if _ckernels is None:
        print("compiled kernels not built; timing the Python fallback only")
    print(f"{'kernel':<10}{'n':>4}" + "".join(f"{name + ' ms':>12}" for name, _ in backends) + f"{'speedup':>10}")
    for kernel in ("max_independent_set_size", "chromatic_number"):
        for n in args.sizes:
            graphs = random_graphs(n, args.density, args.count, args.seed + n)
            times, results = [], []
            for _, mod in backends:
                t, out = timed(getattr(mod, kernel), graphs)
                times.append(t)
                results.append(out)
            assert all(r == results[0] for r in results), "backends disagree"
            speed = f"{times[0] / times[1]:>9.1f}x" if len(times) > 1 else ""
            label = "alpha" if kernel.startswith("max") else "chi"
            print(f"{label:<10}{n:>4}" + "".join(f"{t * 1e3:>12.2f}" for t in times) + speed)


if __name__ == "__main__":
    main()
