"""Simple undirected graphs, shortest-path distances and I/O.

Vertices are dense integers ``0..n-1``.  Adjacency is kept as one Python
integer bitmask per vertex, which makes neighbourhood comparisons and BFS
frontiers cheap on the small graphs this package works with.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator
from functools import cached_property

import numpy as np

from . import kernels

INF = math.inf

#: Largest order accepted by :func:`enumerate_labeled_graphs` (2**21 graphs at 7).
MAX_ENUMERATION_ORDER = 7


class GraphFormatError(ValueError):
    """Raised when an edge list or graph6 string cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in normalized:
                raise ValueError(f"duplicate edge {e}")
            normalized.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._edges = tuple(sorted(normalized))
        self._adj = tuple(adj)

    @classmethod
    def from_adjacency_masks(cls, masks: Iterable[int]) -> Graph:
        masks = list(masks)
        edges = [(u, v) for u, m in enumerate(masks) for v in _bits(m) if u < v]
        return cls(len(masks), edges)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` tuples with ``u < v``."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self._n + 1, dtype=np.int32)
        indices = []
        for v in range(self._n):
            nb = self.neighbors(v)
            indices.extend(nb)
            indptr[v + 1] = indptr[v] + len(nb)
        return indptr, np.asarray(indices, dtype=np.int32)

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    @cached_property
    def distance_rows(self) -> list[list[int]]:
        """Raw distance codes as nested lists (``kernels.INF_CODE`` for INF)."""
        return self.distances.codes.tolist()

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for v in range(self._n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    nxt |= self._adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_complete(self) -> bool:
        return self.m == self._n * (self._n - 1) // 2

    def induced_subgraph(self, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Induced subgraph on ``keep``, re-indexed densely in increasing order.

        Returns the subgraph and the map old index -> new index.
        """
        keep = sorted(set(keep))
        relabel = {old: new for new, old in enumerate(keep)}
        edges = [(relabel[u], relabel[v]) for u, v in self._edges if u in relabel and v in relabel]
        return Graph(len(keep), edges), relabel

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, edges={list(self._edges)})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class DistanceMatrix:
    """All-pairs shortest-path distances.

    Entries for vertices in different components are :data:`INF`.  The raw
    table ``codes`` stores those as :data:`kernels.INF_CODE`, an integer
    larger than any real distance, so comparisons and ``min`` keep the
    semantics of an extended distance.
    """

    def __init__(self, codes: np.ndarray):
        self.codes = codes
        self.n = codes.shape[0]

    def __getitem__(self, uv: tuple[int, int]):
        c = int(self.codes[uv])
        return INF if c == kernels.INF_CODE else c

    def row(self, u: int) -> list:
        return [INF if c == kernels.INF_CODE else c for c in self.codes[u].tolist()]

    def tolist(self) -> list[list]:
        return [self.row(u) for u in range(self.n)]

    def diameter(self):
        """Largest finite distance (0 on graphs with fewer than two vertices)."""
        finite = self.codes[self.codes != kernels.INF_CODE]
        return int(finite.max()) if finite.size else 0


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    indptr, indices = g.csr
    return DistanceMatrix(kernels.bfs_distances(g.n, indptr, indices))


# ---------------------------------------------------------------- formats


def graph_from_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines ``u v``.

    ``#`` starts a comment; blank lines are ignored.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        what = "malformed header" if header is None else "malformed edge line"
        if len(fields) != 2:
            raise GraphFormatError(f"{what}: expected two integers, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"{what}: expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("header counts must be non-negative", lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edges", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex index out of range 0..{n - 1}", lineno)
        e = (min(a, b), max(a, b))
        if e in seen:
            raise GraphFormatError(f"duplicate edge {a} {b}", lineno)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"declared {header[1]} edges but found {len(edges)}")
    return Graph(header[0], edges)


def graph_to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    else:
        raise ValueError("graph6 supports at most 258047 vertices")
    bits = [g.has_edge(i, j) for j in range(1, n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def graph_from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 byte {ch!r}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise GraphFormatError("unsupported graph6 size field")
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for ch in body:
        v = ord(ch) - 63
        bits.extend(v >> (5 - k) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise GraphFormatError("non-zero padding bits")
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    return Graph(n, [p for p, b in zip(pairs, bits) if b])


def read_graph(path: str, fmt: str | None = None) -> Graph:
    """Read a graph file; format from ``fmt`` or the extension (.g6 vs edge list)."""
    with open(path) as fh:
        text = fh.read()
    if fmt is None:
        fmt = "g6" if str(path).endswith(".g6") else "el"
    if fmt == "g6":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return graph_from_graph6(first)
    if fmt == "el":
        return graph_from_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, path: str, fmt: str | None = None) -> None:
    if fmt is None:
        fmt = "g6" if str(path).endswith(".g6") else "el"
    text = graph_to_graph6(g) + "\n" if fmt == "g6" else graph_to_edge_list(g)
    with open(path, "w") as fh:
        fh.write(text)


# ---------------------------------------------------------------- generators


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Yield every labeled simple graph on ``n`` vertices exactly once.

    Edge subsets are enumerated as binary counters over the pairs in graph6
    column order, so the stream order is deterministic.
    """
    if n > MAX_ENUMERATION_ORDER:
        raise ValueError(
            f"refusing to enumerate labeled graphs of order {n}: "
            f"limit is {MAX_ENUMERATION_ORDER} (2^21 graphs)"
        )
    if n < 0:
        raise ValueError("order must be non-negative")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield _graph_from_trusted(n, [p for k, p in enumerate(pairs) if mask >> k & 1], adj)


def _graph_from_trusted(n: int, edges: list[tuple[int, int]], adj: list[int]) -> Graph:
    # Skips validation; callers guarantee sorted, distinct u<v edges.
    g = Graph.__new__(Graph)
    g._n = n
    g._edges = tuple(sorted(edges))
    g._adj = tuple(adj)
    return g


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


# ---------------------------------------------------------------- cliques


def max_clique(g: Graph) -> list[int]:
    """A maximum clique, by branch and bound with a greedy-colouring bound.

    Candidates are coloured greedily; a vertex whose colour index plus the
    current clique size cannot beat the incumbent is pruned (MCQ-style).
    """
    adj = g.adjacency
    best: list[int] = []

    def color_order(cand: int) -> list[tuple[int, int]]:
        # (vertex, colour bound) in increasing bound order
        order = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append((v, color))
                uncolored &= ~low
                avail &= ~low & ~adj[v]
        return order

    def expand(clique: list[int], cand: int):
        nonlocal best
        for v, bound in reversed(color_order(cand)):
            if len(clique) + bound <= len(best):
                return
            clique.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = sorted(clique)
            clique.pop()
            cand &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    return best


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return len(set(vs)) == len(vs) and all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))
