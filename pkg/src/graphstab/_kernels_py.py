"""Pure-Python exact kernels over bitset adjacency.

Same signatures as the compiled ``_ckernels`` module. ``adj`` is a sequence
of ints, one neighbourhood bitset per vertex.
"""
from __future__ import annotations

from typing import Sequence


def _popcount(x: int) -> int:
    return bin(x).count("1")


def max_independent_set_size(n: int, adj: Sequence[int]) -> int:
    """Size of a maximum independent set (branch and bound on bitsets)."""
    best = 0

    def search(cand: int, size: int) -> None:
        nonlocal best
        # degree <= 1 vertices can always be taken
        while cand:
            pick = -1
            max_deg = -1
            max_v = -1
            c = cand
            while c:
                low = c & -c
                v = low.bit_length() - 1
                c ^= low
                d = _popcount(adj[v] & cand)
                if d <= 1:
                    pick = v
                    break
                if d > max_deg:
                    max_deg = d
                    max_v = v
            if pick < 0:
                break
            cand &= ~(adj[pick] | (1 << pick))
            size += 1
        if not cand:
            if size > best:
                best = size
            return
        if size + _popcount(cand) <= best:
            return
        v = max_v
        search(cand & ~(adj[v] | (1 << v)), size + 1)
        search(cand & ~(1 << v), size)

    search((1 << n) - 1, 0)
    return best


def _greedy_colors(n: int, adj: Sequence[int], order: list[int]) -> int:
    classes: list[int] = []
    for v in order:
        for i, cls in enumerate(classes):
            if not adj[v] & cls:
                classes[i] = cls | (1 << v)
                break
        else:
            classes.append(1 << v)
    return len(classes)


def _colorable(n: int, adj: Sequence[int], order: list[int], k: int) -> bool:
    classes = [0] * k

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        nb = adj[v]
        # colours beyond used+1 are symmetric to colour `used`
        for c in range(min(used + 1, k)):
            if not nb & classes[c]:
                classes[c] |= 1 << v
                if place(i + 1, used + 1 if c == used else used):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return place(0, 0)


def chromatic_number(n: int, adj: Sequence[int], lower: int = 0) -> int:
    """Least ``k`` with a proper ``k``-colouring.

    ``lower`` is a known lower bound (e.g. the clique number); the search runs
    upward from it to the greedy upper bound.
    """
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: -_popcount(adj[v]))
    upper = _greedy_colors(n, adj, order)
    k = max(lower, 1 if not any(adj) else 2)
    while k < upper:
        if _colorable(n, adj, order, k):
            return k
        k += 1
    return upper
