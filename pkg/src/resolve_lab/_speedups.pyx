# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twins of the kernels in ``_purekernels.py``.

Vertex sets are ``uint64`` bitmasks, so the mask and multicover kernels
accept graphs of order <= 64 only; ``kernels.py`` routes larger graphs to
the pure backend.
"""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc, qsort

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef int32_t INF = 2147483647
INF_CODE = 2147483647


def bfs_distances(int n, const int32_t[::1] indptr, const int32_t[::1] indices):
    out = np.full((n, n), INF, dtype=np.int32)
    if n == 0:
        return out
    cdef int32_t[:, ::1] d = out
    cdef int32_t* queue = <int32_t*> malloc(n * sizeof(int32_t))
    cdef int s, head, tail, u, w, p, du
    if queue == NULL:
        raise MemoryError()
    try:
        with nogil:
            for s in range(n):
                d[s, s] = 0
                head = 0
                tail = 1
                queue[0] = s
                while head < tail:
                    u = queue[head]
                    head += 1
                    du = d[s, u] + 1
                    for p in range(indptr[u], indptr[u + 1]):
                        w = indices[p]
                        if d[s, w] == INF:
                            d[s, w] = du
                            queue[tail] = w
                            tail += 1
    finally:
        free(queue)
    return out


def distinguish_masks(const int32_t[:, ::1] codes, int kind, int cap,
                      const int32_t[::1] eu, const int32_t[::1] ev):
    cdef int n = codes.shape[0]
    cdef int m = eu.shape[0]
    cdef int items = m if kind == 1 else n
    cdef int w, i, a, b, k, x, y
    cdef Py_ssize_t npairs
    if n > 64:
        raise ValueError("compiled masks need n <= 64")
    table = np.empty((n, items), dtype=np.int32)
    cdef int32_t[:, ::1] T = table
    for w in range(n):
        for i in range(items):
            if kind == 1:
                x = codes[w, eu[i]]
                y = codes[w, ev[i]]
                T[w, i] = x if x < y else y
            else:
                x = codes[w, i]
                if cap > 0 and x > cap:
                    x = cap
                T[w, i] = x
    if kind == 2:
        npairs = m
    else:
        npairs = <Py_ssize_t> items * (items - 1) // 2
    pa = np.empty(npairs, dtype=np.int32)
    pb = np.empty(npairs, dtype=np.int32)
    pm = np.empty(npairs, dtype=np.uint64)
    cdef int32_t[::1] A = pa
    cdef int32_t[::1] B = pb
    cdef uint64_t[::1] M = pm
    cdef uint64_t mask
    k = 0
    if kind == 2:
        for i in range(m):
            A[i] = eu[i]
            B[i] = ev[i]
    else:
        for b in range(items):
            for a in range(b):
                A[k] = a
                B[k] = b
                k += 1
    with nogil:
        for k in range(npairs):
            a = A[k]
            b = B[k]
            mask = 0
            for w in range(n):
                if T[w, a] != T[w, b]:
                    mask |= (<uint64_t> 1) << w
            M[k] = mask
    return pa, pb, pm


cdef struct Ctx:
    const uint64_t* masks
    int P
    int n
    int t
    uint64_t best
    int best_size
    int* cov
    int64_t* keys


cdef int _cmp_int64(const void* a, const void* b) noexcept nogil:
    cdef int64_t x = (<int64_t*> a)[0]
    cdef int64_t y = (<int64_t*> b)[0]
    return (x > y) - (x < y)


cdef int _cmp_int_desc(const void* a, const void* b) noexcept nogil:
    cdef int x = (<int*> a)[0]
    cdef int y = (<int*> b)[0]
    return (x < y) - (x > y)


cdef uint64_t _greedy(Ctx* c) noexcept nogil:
    cdef int* need = <int*> malloc(c.P * sizeof(int))
    cdef uint64_t chosen = 0, bit
    cdef int p, v, gain, best_v, best_gain
    for p in range(c.P):
        need[p] = c.t
    while True:
        best_v = -1
        best_gain = 0
        for v in range(c.n):
            bit = (<uint64_t> 1) << v
            if chosen & bit:
                continue
            gain = 0
            for p in range(c.P):
                if need[p] and (c.masks[p] & bit):
                    gain += 1
            if gain > best_gain:
                best_v = v
                best_gain = gain
        if best_v < 0:
            break
        bit = (<uint64_t> 1) << best_v
        chosen |= bit
        for p in range(c.P):
            if need[p] and (c.masks[p] & bit):
                need[p] -= 1
    free(need)
    return chosen


cdef int _lower_bound(Ctx* c, uint64_t chosen, uint64_t excluded, int* branch_out) noexcept nogil:
    cdef uint64_t free_ = ~(chosen | excluded)
    cdef uint64_t avail, a, used
    cdef int p, need, ca, total = 0, maxneed = 0, branch = -1, branch_avail = 1 << 30
    cdef int nkeys = 0, acc, deg_bound, pack, i, v
    for v in range(c.n):
        c.cov[v] = 0
    for p in range(c.P):
        need = c.t - __builtin_popcountll(c.masks[p] & chosen)
        if need <= 0:
            continue
        avail = c.masks[p] & free_
        ca = __builtin_popcountll(avail)
        if ca < need:
            branch_out[0] = -1
            return -1
        total += need
        if need > maxneed:
            maxneed = need
        if ca < branch_avail:
            branch = p
            branch_avail = ca
        c.keys[nkeys] = <int64_t> ca * c.P + p
        nkeys += 1
        a = avail
        while a:
            c.cov[__builtin_ctzll(a)] += 1
            a &= a - 1
    branch_out[0] = branch
    if branch < 0:
        return 0
    qsort(c.cov, c.n, sizeof(int), _cmp_int_desc)
    acc = 0
    deg_bound = 0
    for i in range(c.n):
        if acc >= total or c.cov[i] == 0:
            break
        acc += c.cov[i]
        deg_bound += 1
    qsort(c.keys, nkeys, sizeof(int64_t), _cmp_int64)
    used = 0
    pack = 0
    for i in range(nkeys):
        p = <int> (c.keys[i] % c.P)
        avail = c.masks[p] & free_
        if not (avail & used):
            used |= avail
            pack += c.t - __builtin_popcountll(c.masks[p] & chosen)
    if deg_bound > maxneed:
        maxneed = deg_bound
    if pack > maxneed:
        maxneed = pack
    return maxneed


cdef void _search(Ctx* c, uint64_t chosen, uint64_t excluded, int size) noexcept nogil:
    cdef int p
    cdef int lb = _lower_bound(c, chosen, excluded, &p)
    cdef uint64_t avail, low, skipped
    if lb < 0:
        return
    if p < 0:
        if size < c.best_size:
            c.best = chosen
            c.best_size = size
        return
    if size + lb >= c.best_size:
        return
    avail = c.masks[p] & ~(chosen | excluded)
    skipped = 0
    while avail:
        low = avail & (~avail + 1)
        avail ^= low
        _search(c, chosen | low, excluded | skipped, size + 1)
        skipped |= low
        if size + 1 >= c.best_size:
            return


def multicover(const uint64_t[::1] masks, int n, int t, int limit=-1):
    cdef Ctx c
    cdef uint64_t g
    cdef int gsize
    cdef bint found
    if n > 64:
        raise ValueError("compiled multicover needs n <= 64")
    c.masks = &masks[0] if masks.shape[0] else NULL
    c.P = masks.shape[0]
    c.n = n
    c.t = t
    c.cov = <int*> malloc((n + 1) * sizeof(int))
    c.keys = <int64_t*> malloc((c.P + 1) * sizeof(int64_t))
    if c.cov == NULL or c.keys == NULL:
        free(c.cov)
        free(c.keys)
        raise MemoryError()
    try:
        with nogil:
            g = _greedy(&c)
            gsize = __builtin_popcountll(g)
            if limit < 0 or gsize <= limit:
                c.best = g
                c.best_size = gsize
                found = True
            else:
                c.best = 0
                c.best_size = limit + 1
                found = False
            _search(&c, 0, 0, 0)
            if c.best_size <= limit or limit < 0:
                found = True
    finally:
        free(c.cov)
        free(c.keys)
    if not found:
        return -1
    return int(c.best)
