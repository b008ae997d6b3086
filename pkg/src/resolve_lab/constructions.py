"""Extremal graph families and the fault-tolerant set procedures.

Families come back as :class:`LabeledFamily`: the graph, its designated
landmarks and a role label per vertex (``c``, ``leaf:0120``, ``s_1``,
``r_1``, ``u_1`` or ``lattice:(2,0)``) so tests can address vertices by role.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Graph
from .resolve import (
    EDGE_METRIC,
    VERTEX_METRIC,
    Kind,
    VariantSpec,
    is_fault_tolerant,
    is_resolving,
    truncated,
)


class ConstructionError(RuntimeError):
    """A construction's guaranteed property failed on a concrete instance."""


@dataclass(frozen=True)
class LabeledFamily:
    graph: Graph
    landmarks: list[int]
    labels: list[str]
    variant: VariantSpec

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def label_lines(self) -> str:
        return "".join(f"{i}\t{lab}\n" for i, lab in enumerate(self.labels))


def _family(labels: list[str], edges, landmark_labels, variant) -> LabeledFamily:
    pos = {lab: i for i, lab in enumerate(labels)}
    g = Graph(len(labels), [(pos[a], pos[b]) for a, b in edges])
    return LabeledFamily(g, [pos[x] for x in landmark_labels], labels, variant)


def build_J(k: int) -> LabeledFamily:
    """Ternary-star family with ``dim = k`` and ``ftdim >= 3^(k-1) - k``.

    Leaves are the ternary strings of length ``k`` except the all-ones string
    and the ``k`` strings with one 0 and ``k-1`` ones.  ``s_i`` sees the
    leaves with digit ``i`` equal to 0; ``r_i`` sees digits 0 and 1 and
    ``s_i``.  Order ``3^k + k``.
    """
    if k < 2:
        # J_1 splits into two components and s_1 no longer resolves it.
        raise ValueError("build_J needs k >= 2")
    leaves = []
    for digits in itertools.product("012", repeat=k):
        word = "".join(digits)
        if word == "1" * k or (word.count("0") == 1 and word.count("1") == k - 1):
            continue
        leaves.append(word)
    s = [f"s_{i}" for i in range(1, k + 1)]
    r = [f"r_{i}" for i in range(1, k + 1)]
    labels = ["c"] + [f"leaf:{w}" for w in leaves] + s + r
    edges = [("c", f"leaf:{w}") for w in leaves]
    for w in leaves:
        for i, d in enumerate(w):
            if d == "0":
                edges.append((s[i], f"leaf:{w}"))
            if d in "01":
                edges.append((r[i], f"leaf:{w}"))
    edges += list(zip(r, s))
    return _family(labels, edges, s, VERTEX_METRIC)


def build_H(k: int) -> LabeledFamily:
    """Binary star ``K_{1,2^k}`` plus ``u_i`` joined to the leaves with digit ``i`` = 0."""
    if k < 1:
        raise ValueError("build_H needs k >= 1")
    leaves = ["".join(b) for b in itertools.product("01", repeat=k)]
    u = [f"u_{i}" for i in range(1, k + 1)]
    labels = ["c"] + [f"leaf:{w}" for w in leaves] + u
    edges = [("c", f"leaf:{w}") for w in leaves]
    edges += [(u[i], f"leaf:{w}") for w in leaves for i, d in enumerate(w) if d == "0"]
    return _family(labels, edges, u, EDGE_METRIC)


def build_A(k: int) -> LabeledFamily:
    """``H_k`` with a clique on the ``u_i``, minus leaves 1-resolved like the centre."""
    if k < 1:
        raise ValueError("build_A needs k >= 1")
    h = build_H(k)
    u = h.landmarks
    edges = list(h.graph.edges) + list(itertools.combinations(u, 2))
    g = Graph(h.graph.n, edges)
    adim = truncated(1)
    center_vec = _vectors(g, adim, u)[h.index("c")]
    vecs = _vectors(g, adim, u)
    drop = {v for v in range(g.n) if v != h.index("c") and vecs[v] == center_vec}
    if drop != {h.index("leaf:" + "1" * k)}:
        raise ConstructionError(f"A_{k}: expected to delete only the all-ones leaf, got {sorted(drop)}")
    sub, relabel = g.induced_subgraph(v for v in range(g.n) if v not in drop)
    labels = [h.labels[old] for old in sorted(relabel)]
    return LabeledFamily(sub, [relabel[x] for x in u], labels, adim)


def _vectors(g: Graph, v: VariantSpec, S: Sequence[int]) -> list[tuple]:
    rows = g.distance_rows
    cap = v.cap
    if cap:
        return [tuple(min(cap, rows[s][x]) for s in S) for x in range(g.n)]
    return [tuple(rows[s][x] for s in S) for x in range(g.n)]


# ---------------------------------------------------------------- lattices


def _king_edges(points: list[tuple[int, ...]]) -> list[tuple[int, int]]:
    index = {p: i for i, p in enumerate(points)}
    k = len(points[0]) if points else 0
    edges = []
    for i, p in enumerate(points):
        for delta in itertools.product((-1, 0, 1), repeat=k):
            q = tuple(a + b for a, b in zip(p, delta))
            j = index.get(q)
            if j is not None and j > i:
                edges.append((i, j))
    return edges


def _lattice_label(p) -> str:
    return "lattice:(" + ",".join(map(str, p)) + ")"


def build_D_box(k: int, lo: Sequence[int], hi: Sequence[int]) -> LabeledFamily:
    """Induced king-move lattice on the integer box ``[lo, hi]``."""
    lo, hi = list(lo), list(hi)
    if len(lo) != k or len(hi) != k:
        raise ValueError(f"box corners must have {k} coordinates")
    if any(a > b or a < 0 for a, b in zip(lo, hi)):
        raise ValueError("need 0 <= lo <= hi coordinatewise")
    points = list(itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))))
    g = Graph(len(points), _king_edges(points))
    return LabeledFamily(g, [], [_lattice_label(p) for p in points], VERTEX_METRIC)


def lattice_coords(fam: LabeledFamily) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in lab[len("lattice:("):-1].split(",")) for lab in fam.labels]


def build_I(k: int, q: int) -> LabeledFamily:
    """Box ``[q, 3q]^k`` plus one spike per axis whose coordinates are distances.

    Landmark ``i`` has coordinate ``i`` equal to 0 and the rest ``2q``.  Each
    spike layer ``i+1`` holds the lattice neighbours of layer ``i`` that
    have some coordinate equal to ``i+1``.  The result is checked: every
    vertex's distance to landmark ``i`` must equal its ``i``-th coordinate.
    """
    if k < 1 or q < 1:
        raise ValueError("build_I needs k >= 1 and q >= 1")
    box = set(itertools.product(range(q, 3 * q + 1), repeat=k))
    layer = []
    for i in range(k):
        p = [2 * q] * k
        p[i] = 0
        layer.append(tuple(p))
    landmarks = list(layer)
    spikes = set(layer)
    for i in range(q - 1):
        nxt = set()
        for p in layer:
            for delta in itertools.product((-1, 0, 1), repeat=k):
                r = tuple(a + b for a, b in zip(p, delta))
                if min(r) >= 0 and (i + 1) in r:
                    nxt.add(r)
        layer = sorted(nxt)
        spikes |= nxt
    points = sorted(box | spikes)
    g = Graph(len(points), _king_edges(points))
    index = {p: j for j, p in enumerate(points)}
    fam = LabeledFamily(g, [index[p] for p in landmarks], [_lattice_label(p) for p in points], VERTEX_METRIC)
    rows = g.distance_rows
    for j, p in enumerate(points):
        for i, s in enumerate(fam.landmarks):
            if rows[s][j] != p[i]:
                raise ConstructionError(
                    f"I_{k}({q}): vertex {p} is at distance {rows[s][j]} from landmark {i}, "
                    f"expected {p[i]}"
                )
    return fam


# ---------------------------------------------------------------- fault-tolerant sets


def _closed_neighborhood(g: Graph, S: Sequence[int]) -> set[int]:
    out = set(S)
    for s in S:
        out.update(g.neighbors(s))
    return out


def _require_resolving(g: Graph, v: VariantSpec, S: Sequence[int]) -> None:
    if g.n <= 1:
        raise ValueError("graph must have order greater than 1")
    cert = is_resolving(g, v, S)
    if not cert:
        raise ValueError(f"landmarks {list(S)} do not resolve the graph under {v} (pair {cert.pair})")


def _vertex_ft(g: Graph, v: VariantSpec, S: Sequence[int]) -> list[int]:
    S = list(S)
    _require_resolving(g, v, S)
    closed = _closed_neighborhood(g, S)
    extra = set()
    for s in S:
        T = sorted(closed - {s})
        vecs = _vectors(g, v, T)
        groups: dict[tuple, list[int]] = {}
        for x, vec in enumerate(vecs):
            groups.setdefault(vec, []).append(x)
        partners = []
        for members in groups.values():
            if len(members) < 2:
                continue
            if s not in members or len(members) > 2:
                raise ConstructionError(
                    f"removing landmark {s} leaves unresolved vertices {members}"
                )
            partners.extend(x for x in members if x != s)
        if len(partners) > 1:
            raise ConstructionError(f"landmark {s} collides with several vertices {partners}")
        extra.add(partners[0] if partners else s)
    return sorted(closed | extra)


def ft_construct_metric(g: Graph, S: Sequence[int]) -> list[int]:
    """Fault-tolerant resolving set from a resolving set ``S``.

    Takes the closed neighbourhood of ``S`` and, for each landmark ``s``,
    adds the one vertex that the neighbourhood minus ``s`` confuses with
    ``s`` (if any).  Size is at most ``|S| (2 + 3^(|S|-1))``.
    """
    return _vertex_ft(g, VERTEX_METRIC, S)


def ft_construct_truncated(g: Graph, k: int, S: Sequence[int]) -> list[int]:
    """As :func:`ft_construct_metric`, for ``k``-truncated resolving sets."""
    return _vertex_ft(g, truncated(k), S)


def ft_construct_edge(g: Graph, S: Sequence[int]) -> list[int]:
    """Fault-tolerant edge resolving set from an edge resolving set ``S``.

    For each landmark ``s`` and neighbour ``u`` the set ``N[S] - {s}`` can
    confuse edge ``su`` with at most one edge ``uv``; ``v`` is added.
    Size is at most ``|S| (1 + 2^|S|)``.
    """
    S = list(S)
    _require_resolving(g, EDGE_METRIC, S)
    closed = _closed_neighborhood(g, S)
    rows = g.distance_rows
    extra = set()
    for s in S:
        T = sorted(closed - {s})

        def vec(e):
            return tuple(min(rows[x][e[0]], rows[x][e[1]]) for x in T)

        edge_vecs: dict[tuple, list[tuple[int, int]]] = {}
        for e in g.edges:
            edge_vecs.setdefault(vec(e), []).append(e)
        for group in edge_vecs.values():
            if len(group) < 2:
                continue
            if len(group) > 2 or not any(s in e for e in group):
                raise ConstructionError(f"removing landmark {s} leaves unresolved edges {group}")
        for u in g.neighbors(s):
            su = (min(s, u), max(s, u))
            clash = [e for e in edge_vecs[vec(su)] if e != su]
            if not clash:
                extra.add(s)
                continue
            (e,) = clash
            if u not in e or s in e:
                raise ConstructionError(f"edge {su} is confused with {e} after removing {s}")
            extra.add(e[0] if e[1] == u else e[1])
    return sorted(closed | extra)


def ft_bound(v: VariantSpec, size: int) -> int:
    """Size guarantee of the construction for a resolving set of ``size`` vertices."""
    if v.kind is Kind.EDGE_METRIC:
        return size * (1 + 2**size)
    if v.kind in (Kind.VERTEX_METRIC, Kind.TRUNCATED):
        return size * (2 + 3 ** (size - 1))
    raise ValueError(f"no fault-tolerant construction for {v}")


def ft_construct(g: Graph, v: VariantSpec, S: Sequence[int]) -> list[int]:
    """Dispatch to the construction matching ``v``; output is re-verified."""
    if v.kind is Kind.EDGE_METRIC:
        out = ft_construct_edge(g, S)
    elif v.kind is Kind.VERTEX_METRIC:
        out = ft_construct_metric(g, S)
    elif v.kind is Kind.TRUNCATED:
        out = ft_construct_truncated(g, v.k, S)
    else:
        raise ValueError(f"no fault-tolerant construction for {v}")
    cert = is_fault_tolerant(g, v, out)
    if not cert:
        raise ConstructionError(f"output {out} is not fault tolerant: {cert}")
    return out


def pendant_extend(g: Graph, v: int, r: int) -> Graph:
    """Attach ``r`` new leaves to vertex ``v``; local dimension is unchanged."""
    if r < 1:
        raise ValueError("r must be positive")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if not g.is_connected() or g.m == 0:
        raise ValueError("pendant extension needs a connected graph with an edge")
    return Graph(g.n + r, list(g.edges) + [(v, g.n + i) for i in range(r)])
