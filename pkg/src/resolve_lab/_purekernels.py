"""Pure-Python hot kernels.

Reference implementation of the three hot loops.  ``_speedups.pyx`` mirrors
these functions step for step (same branching order, same tie-breaking), so
both backends return identical witnesses.
"""

import numpy as np

INF_CODE = 2**31 - 1

VERTEX, EDGE, LOCAL = 0, 1, 2


def bfs_distances(n, indptr, indices):
    indptr = indptr.tolist()
    indices = indices.tolist()
    nbrs = [indices[indptr[v]:indptr[v + 1]] for v in range(n)]
    out = np.full((n, n), INF_CODE, dtype=np.int32)
    for s in range(n):
        row = [INF_CODE] * n
        row[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in nbrs[u]:
                    if row[w] == INF_CODE:
                        row[w] = d
                        nxt.append(w)
            frontier = nxt
        out[s] = row
    return out


def coordinate_table(codes, kind, cap, eu, ev):
    """``table[w][item]``: the coordinate landmark ``w`` assigns to ``item``."""
    d = codes.tolist()
    if kind == EDGE:
        return [[min(row[a], row[b]) for a, b in zip(eu, ev)] for row in d]
    if cap:
        return [[min(cap, x) for x in row] for row in d]
    return d


def item_pairs(n, kind, eu, ev):
    if kind == LOCAL:
        return list(zip(eu, ev))
    count = len(eu) if kind == EDGE else n
    return [(a, b) for b in range(count) for a in range(b)]


def distinguish_masks(codes, kind, cap, eu, ev):
    """Pairs of items and, per pair, the bitmask of landmarks separating them."""
    n = codes.shape[0]
    table = coordinate_table(codes, kind, cap, eu, ev)
    pairs = item_pairs(n, kind, eu, ev)
    masks = []
    for a, b in pairs:
        m = 0
        for w in range(n):
            row = table[w]
            if row[a] != row[b]:
                m |= 1 << w
        masks.append(m)
    return pairs, masks


# ------------------------------------------------------------ multicover


def _popcount(x):
    return x.bit_count()


def _greedy(masks, n, t):
    need = [t] * len(masks)
    chosen = 0
    while True:
        best_v, best_gain = -1, 0
        for v in range(n):
            bit = 1 << v
            if chosen & bit:
                continue
            gain = 0
            for p, m in enumerate(masks):
                if need[p] and m & bit:
                    gain += 1
            if gain > best_gain:
                best_v, best_gain = v, gain
        if best_v < 0:
            break
        bit = 1 << best_v
        chosen |= bit
        for p, m in enumerate(masks):
            if need[p] and m & bit:
                need[p] -= 1
    return chosen


def _lower_bound(masks, n, t, chosen, excluded):
    """Return (bound, branch_pair) or (-1, -1) when infeasible.

    ``branch_pair`` is -1 when every pair is already covered.
    """
    free = ~(chosen | excluded)
    total = 0
    maxneed = 0
    branch, branch_avail = -1, 1 << 30
    cov = [0] * n
    order = []
    for p, m in enumerate(masks):
        need = t - _popcount(m & chosen)
        if need <= 0:
            continue
        avail = m & free
        ca = _popcount(avail)
        if ca < need:
            return -1, -1
        total += need
        if need > maxneed:
            maxneed = need
        if ca < branch_avail:
            branch, branch_avail = p, ca
        order.append((ca, p, avail, need))
        a = avail
        while a:
            low = a & -a
            cov[low.bit_length() - 1] += 1
            a ^= low
    if branch < 0:
        return 0, -1
    # each further vertex lowers the summed requirement by at most its coverage
    cov.sort(reverse=True)
    acc = 0
    deg_bound = 0
    for c in cov:
        if acc >= total or c == 0:
            break
        acc += c
        deg_bound += 1
    # pairs with pairwise disjoint candidate sets need separate vertices
    order.sort()
    used = 0
    pack = 0
    for ca, p, avail, need in order:
        if not avail & used:
            used |= avail
            pack += need
    return max(maxneed, deg_bound, pack), branch


def multicover(masks, n, t, limit):
    """Minimum vertex set hitting every mask at least ``t`` times.

    Returns the set as a bitmask, or -1 if no set of size <= ``limit`` exists
    (``limit < 0`` means unbounded).  Masks must each have >= ``t`` bits.
    """
    g = _greedy(masks, n, t)
    gsize = _popcount(g)
    if limit < 0 or gsize <= limit:
        best, best_size = g, gsize
    else:
        best, best_size = -1, limit + 1

    def search(chosen, excluded, size):
        nonlocal best, best_size
        lb, p = _lower_bound(masks, n, t, chosen, excluded)
        if lb < 0:
            return
        if p < 0:
            if size < best_size:
                best, best_size = chosen, size
            return
        if size + lb >= best_size:
            return
        avail = masks[p] & ~(chosen | excluded)
        skipped = 0
        while avail:
            low = avail & -avail
            avail ^= low
            search(chosen | low, excluded | skipped, size + 1)
            skipped |= low
            if size + 1 >= best_size:
                return

    search(0, 0, 0)
    return best
