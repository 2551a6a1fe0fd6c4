# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact kernels over 64-bit adjacency bitsets (n <= 64)."""

from libc.stdint cimport uint64_t

ctypedef uint64_t u64

cdef enum:
    MAXN = 64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _pop(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int _low(u64 x) nogil:
    return __builtin_ctzll(x)


cdef inline u64 _bit(int v) nogil:
    return (<u64>1) << v


cdef void _mis(const u64* adj, u64 cand, int size, int* best) nogil:
    cdef int v, d, pick, max_deg, max_v
    cdef u64 c
    while cand:
        pick = -1
        max_deg = -1
        max_v = -1
        c = cand
        while c:
            v = _low(c)
            c &= c - 1
            d = _pop(adj[v] & cand)
            if d <= 1:
                pick = v
                break
            if d > max_deg:
                max_deg = d
                max_v = v
        if pick < 0:
            break
        cand &= ~(adj[pick] | _bit(pick))
        size += 1
    if not cand:
        if size > best[0]:
            best[0] = size
        return
    if size + _pop(cand) <= best[0]:
        return
    v = max_v
    _mis(adj, cand & ~(adj[v] | _bit(v)), size + 1, best)
    _mis(adj, cand & ~_bit(v), size, best)


cdef int _load(int n, object adj_seq, u64* adj) except -1:
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        adj[i] = <u64>adj_seq[i]
    return 0


def max_independent_set_size(int n, adj_seq):
    cdef u64 adj[MAXN]
    cdef int best = 0
    cdef u64 full
    if n == 0:
        return 0
    _load(n, adj_seq, adj)
    full = (~(<u64>0)) if n == 64 else (_bit(n) - 1)
    _mis(adj, full, 0, &best)
    return best


cdef bint _place(const u64* adj, const int* order, int n, int i, int used,
                 int k, u64* classes) nogil:
    cdef int v, c, top
    cdef u64 nb
    if i == n:
        return True
    v = order[i]
    nb = adj[v]
    top = used + 1
    if top > k:
        top = k
    for c in range(top):
        if not (nb & classes[c]):
            classes[c] |= _bit(v)
            if _place(adj, order, n, i + 1, used + 1 if c == used else used, k, classes):
                return True
            classes[c] &= ~_bit(v)
    return False


def chromatic_number(int n, adj_seq, int lower=0):
    cdef u64 adj[MAXN]
    cdef u64 classes[MAXN]
    cdef int order[MAXN]
    cdef int i, j, c, k, upper, ncls
    cdef bint any_edge = False
    cdef bint placed
    if n == 0:
        return 0
    _load(n, adj_seq, adj)
    py_order = sorted(range(n), key=lambda v: -_pop(adj[v]))
    for i in range(n):
        order[i] = py_order[i]
        if adj[i]:
            any_edge = True
    # greedy upper bound
    ncls = 0
    for i in range(n):
        placed = False
        for c in range(ncls):
            if not (adj[order[i]] & classes[c]):
                classes[c] |= _bit(order[i])
                placed = True
                break
        if not placed:
            classes[ncls] = _bit(order[i])
            ncls += 1
    upper = ncls
    k = 2 if any_edge else 1
    if lower > k:
        k = lower
    while k < upper:
        for j in range(k):
            classes[j] = 0
        if _place(adj, order, n, 0, 0, k, classes):
            return k
        k += 1
    return upper
