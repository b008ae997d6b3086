"""Resolving sets for the five metric-dimension variants.

Every variant is reduced to the same object: a list of item pairs that must
be told apart, each with the set of vertices whose single distance tells
them apart (its *distinguishers*).  A landmark set resolves the graph when
it hits every pair once, and is fault tolerant when it hits every pair at
least twice, so both minimum problems are set multicover instances.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from . import kernels
from .graph import DistanceMatrix, Graph


class Kind(enum.Enum):
    VERTEX_METRIC = "metric"
    EDGE_METRIC = "edge"
    TRUNCATED = "trunc"
    LOCAL = "local"


@dataclass(frozen=True)
class VariantSpec:
    """Which resolving notion is in force.

    ``TRUNCATED`` carries the truncation parameter ``k``: distances are
    capped at ``k + 1``.  ``truncated(1)`` is the adjacency dimension.
    """

    kind: Kind
    k: int | None = None

    def __post_init__(self):
        if self.kind is Kind.TRUNCATED:
            if self.k is None or self.k < 1:
                raise ValueError("truncated variant needs k >= 1")
        elif self.k is not None:
            raise ValueError(f"{self.kind.value} variant takes no parameter")

    @property
    def cap(self) -> int:
        return self.k + 1 if self.kind is Kind.TRUNCATED else 0

    @property
    def name(self) -> str:
        if self.kind is Kind.TRUNCATED:
            return f"trunc={self.k}"
        return self.kind.value

    def __str__(self):
        return self.name


VERTEX_METRIC = VariantSpec(Kind.VERTEX_METRIC)
EDGE_METRIC = VariantSpec(Kind.EDGE_METRIC)
LOCAL = VariantSpec(Kind.LOCAL)


def truncated(k: int) -> VariantSpec:
    return VariantSpec(Kind.TRUNCATED, k)


ADJACENCY = truncated(1)

#: The five variants exercised by the characterization suites.
ALL_VARIANTS = (VERTEX_METRIC, EDGE_METRIC, truncated(1), truncated(2), LOCAL)


def parse_variant(text: str) -> VariantSpec:
    """Parse ``metric``, ``edge``, ``local``, ``adim`` or ``trunc=K``."""
    text = text.strip().lower()
    if text in ("metric", "vertex", "dim"):
        return VERTEX_METRIC
    if text in ("edge", "edim"):
        return EDGE_METRIC
    if text in ("local", "ldim"):
        return LOCAL
    if text in ("adim", "adjacency"):
        return ADJACENCY
    if text.startswith("trunc"):
        _, _, k = text.partition("=")
        try:
            return truncated(int(k))
        except ValueError:
            pass
    raise ValueError(f"unknown variant {text!r}; use metric|edge|local|adim|trunc=K")


def _kernel_kind(v: VariantSpec) -> int:
    if v.kind is Kind.EDGE_METRIC:
        return kernels.EDGE
    if v.kind is Kind.LOCAL:
        return kernels.LOCAL
    return kernels.VERTEX


# ---------------------------------------------------------------- vectors

Item = int | tuple[int, int]


def _check_item(g: Graph, v: VariantSpec, it: Item) -> None:
    if isinstance(it, tuple):
        if v.kind is not Kind.EDGE_METRIC:
            raise ValueError(f"edge item {it} is only valid under the edge variant")
        a, b = it
        if not g.has_edge(a, b):
            raise ValueError(f"{it} is not an edge")
    else:
        if v.kind is Kind.EDGE_METRIC:
            raise ValueError("the edge variant resolves edges, not vertices")
        if not 0 <= it < g.n:
            raise ValueError(f"vertex {it} out of range")


def coordinate(dm: DistanceMatrix, v: VariantSpec, landmark: int, it: Item):
    """Single-landmark coordinate of an item; ``math.inf`` across components."""
    if isinstance(it, tuple):
        d = min(dm[landmark, it[0]], dm[landmark, it[1]])
    else:
        d = dm[landmark, it]
    if v.kind is Kind.TRUNCATED:
        return min(v.k + 1, d)
    return d


def item_vector(g: Graph, v: VariantSpec, it: Item, S: Sequence[int]) -> tuple:
    """Distance vector of ``it`` with respect to the ordered landmarks ``S``."""
    _check_item(g, v, it)
    dm = g.distances
    return tuple(coordinate(dm, v, s, it) for s in S)


def distinguishes(g: Graph, v: VariantSpec, landmark: int, pair: tuple[Item, Item]) -> bool:
    a, b = pair
    _check_item(g, v, a)
    _check_item(g, v, b)
    if a == b:
        raise ValueError("pair items must be distinct")
    dm = g.distances
    return coordinate(dm, v, landmark, a) != coordinate(dm, v, landmark, b)


def items(g: Graph, v: VariantSpec) -> list[Item]:
    return list(g.edges) if v.kind is Kind.EDGE_METRIC else list(g.vertices())


def required_pairs(g: Graph, v: VariantSpec) -> list[tuple[Item, Item]]:
    """Item pairs that a resolving set must separate under ``v``."""
    if v.kind is Kind.LOCAL:
        return list(g.edges)
    its = items(g, v)
    return [(its[a], its[b]) for b in range(len(its)) for a in range(b)]


# ---------------------------------------------------------------- matrix


@dataclass(frozen=True)
class DistinguishMatrix:
    """Pairs needing distinction and, per pair, its distinguisher bitmask."""

    n: int
    variant: VariantSpec
    pairs: list[tuple[Item, Item]]
    masks: list[int]

    def distinguishers(self, index: int) -> list[int]:
        return [w for w in range(self.n) if self.masks[index] >> w & 1]

    def mask_of(self, pair: tuple[Item, Item]) -> int:
        try:
            return self.masks[self.pairs.index(pair)]
        except ValueError:
            return self.masks[self.pairs.index((pair[1], pair[0]))]


def build_distinguish_matrix(g: Graph, v: VariantSpec) -> DistinguishMatrix:
    eu = [e[0] for e in g.edges]
    ev = [e[1] for e in g.edges]
    raw_pairs, masks = kernels.distinguish_masks(g.distances.codes, _kernel_kind(v), v.cap, eu, ev)
    if v.kind is Kind.EDGE_METRIC:
        pairs = [(g.edges[a], g.edges[b]) for a, b in raw_pairs]
    else:
        pairs = raw_pairs
    return DistinguishMatrix(g.n, v, pairs, masks)


# ---------------------------------------------------------------- certificates


@dataclass(frozen=True)
class Certificate:
    """Outcome of a resolving check; falsy when the check failed.

    ``pair`` is an unresolved item pair; ``removed`` is the landmark whose
    loss exposed it (fault-tolerance checks only).
    """

    ok: bool
    pair: tuple[Item, Item] | None = None
    removed: int | None = None

    def __bool__(self):
        return self.ok


def _validate_landmarks(g: Graph, S: Sequence[int]) -> list[int]:
    S = list(S)
    if len(set(S)) != len(S):
        raise ValueError("landmark set contains duplicates")
    for s in S:
        if not 0 <= s < g.n:
            raise ValueError(f"landmark {s} out of range")
    return S


def _code_vector(g: Graph, v: VariantSpec):
    # Vectors over raw codes; INF_CODE compares exactly like INF.
    rows = g.distance_rows
    if v.kind is Kind.EDGE_METRIC:
        return lambda S, e: tuple(min(rows[s][e[0]], rows[s][e[1]]) for s in S)
    cap = v.cap
    if cap:
        return lambda S, u: tuple(min(cap, rows[s][u]) for s in S)
    return lambda S, u: tuple(rows[s][u] for s in S)


def _first_collision(g: Graph, v: VariantSpec, S: Sequence[int]):
    vec = _code_vector(g, v)
    if v.kind is Kind.LOCAL:
        for a, b in g.edges:
            if vec(S, a) == vec(S, b):
                return (a, b)
        return None
    seen: dict[tuple, Item] = {}
    for it in items(g, v):
        key = vec(S, it)
        if key in seen:
            return (seen[key], it)
        seen[key] = it
    return None


def is_resolving(g: Graph, v: VariantSpec, S: Sequence[int]) -> Certificate:
    S = _validate_landmarks(g, S)
    clash = _first_collision(g, v, S)
    return Certificate(clash is None, clash)


def is_fault_tolerant(g: Graph, v: VariantSpec, S: Sequence[int]) -> Certificate:
    """Check that ``S - {s}`` resolves for every landmark ``s``."""
    S = _validate_landmarks(g, S)
    if not S:
        raise ValueError("a fault-tolerant set must be nonempty")
    for s in S:
        rest = [x for x in S if x != s]
        clash = _first_collision(g, v, rest)
        if clash is not None:
            return Certificate(False, clash, s)
    return Certificate(True)


# ---------------------------------------------------------------- solver


class InfeasibleError(ValueError):
    """No vertex set covers some pair the required number of times."""

    def __init__(self, pair, available: int, required: int):
        self.pair = pair
        super().__init__(
            f"pair {pair} has only {available} distinguisher(s); {required} required"
        )


def _reduce(masks: Iterable[int]) -> list[int]:
    # A pair whose distinguishers contain another pair's is covered for free.
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


def _mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def min_multicover(
    M: DistinguishMatrix, t: int, forbid_empty: bool = False, limit: int | None = None
) -> list[int] | None:
    """Minimum vertex set hitting every pair of ``M`` at least ``t`` times.

    With ``limit`` set, only sets of at most that size are searched and
    ``None`` is returned when none exists.
    """
    if t < 1:
        raise ValueError("multiplicity must be positive")
    for pair, m in zip(M.pairs, M.masks):
        c = m.bit_count()
        if c < t:
            raise InfeasibleError(pair, c, t)
    if not M.pairs:
        best = [0] if forbid_empty and M.n > 0 else []
        return best if limit is None or len(best) <= limit else None
    mask = kernels.multicover(_reduce(M.masks), M.n, t, -1 if limit is None else limit)
    if mask < 0:
        return None
    return _mask_to_list(mask)


def min_resolving(g: Graph, v: VariantSpec) -> tuple[int, list[int]]:
    """Exact dimension under ``v`` and a minimum resolving set."""
    S = min_multicover(build_distinguish_matrix(g, v), 1)
    return len(S), S


def min_fault_tolerant(g: Graph, v: VariantSpec) -> tuple[int, list[int]]:
    """Exact fault-tolerant dimension and a witness.

    The 0-vertex graph has no nonempty landmark set; it reports ``(0, [])``.
    """
    S = min_multicover(build_distinguish_matrix(g, v), 2, forbid_empty=True)
    return len(S), S


def has_resolving_set_of_size(g: Graph, v: VariantSpec, size: int, t: int = 1) -> list[int] | None:
    """A resolving (``t=1``) or fault-tolerant (``t=2``) set of at most ``size`` vertices."""
    return min_multicover(build_distinguish_matrix(g, v), t, forbid_empty=t > 1, limit=size)


def mdim(g: Graph, t: int) -> tuple[int, list[int]]:
    """The ``t``-metric dimension: every vertex pair distinguished ``t`` times."""
    S = min_multicover(build_distinguish_matrix(g, VERTEX_METRIC), t, forbid_empty=True)
    return len(S), S


# ---------------------------------------------------------------- naive oracles


def naive_min_resolving(g: Graph, v: VariantSpec) -> int:
    """Smallest resolving set size by trying subsets in increasing size."""
    for size in range(g.n + 1):
        for S in itertools.combinations(range(g.n), size):
            if is_resolving(g, v, S):
                return size
    raise AssertionError("the full vertex set always resolves")


def naive_min_fault_tolerant(g: Graph, v: VariantSpec) -> int:
    for size in range(1, g.n + 1):
        for S in itertools.combinations(range(g.n), size):
            if is_fault_tolerant(g, v, S):
                return size
    return 0


# ---------------------------------------------------------------- counting and degrees


def count_within_distance(dm: DistanceMatrix, v: int, j: int) -> int:
    """Number of vertices ``u != v`` with ``dist(u, v) <= j``."""
    if j < 0:
        raise ValueError("radius must be non-negative")
    return sum(1 for u, d in enumerate(dm.row(v)) if u != v and d <= j)


def count_at_distance(dm: DistanceMatrix, v: int, j: int) -> int:
    return sum(1 for u, d in enumerate(dm.row(v)) if u != v and d == j)


def degree_bound(v: VariantSpec, size: int) -> int:
    """Largest degree a member of a resolving set of ``size`` vertices can have."""
    if size < 1:
        raise ValueError("resolving set must be nonempty")
    if v.kind is Kind.EDGE_METRIC:
        return 2 ** (size - 1)
    if v.kind is Kind.TRUNCATED and v.k == 1:
        return 2 ** (size - 1) + size - 1
    if v.kind is Kind.LOCAL:
        raise ValueError("local resolving sets admit landmarks of any degree")
    return 3 ** (size - 1)


@dataclass(frozen=True)
class DegreeRow:
    landmark: int
    degree: int
    bound: int
    ok: bool


def landmark_degree_report(g: Graph, v: VariantSpec, S: Sequence[int]) -> list[DegreeRow]:
    cert = is_resolving(g, v, S)
    if not cert:
        raise ValueError(f"landmarks do not resolve the graph under {v}: {cert.pair}")
    bound = degree_bound(v, len(S))
    return [DegreeRow(s, g.degree(s), bound, g.degree(s) <= bound) for s in S]


@dataclass
class SolveSummary:
    """Both dimensions of a graph under one variant."""

    variant: VariantSpec
    dimension: int
    witness: list[int]
    ft_dimension: int
    ft_witness: list[int]
    degenerate: bool = field(default=False)


def solve_both(g: Graph, v: VariantSpec) -> SolveSummary:
    M = build_distinguish_matrix(g, v)
    S = min_multicover(M, 1)
    T = min_multicover(M, 2, forbid_empty=True)
    return SolveSummary(v, len(S), S, len(T), T, degenerate=g.n == 0)
