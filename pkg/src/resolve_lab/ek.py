"""Union-distinct set families and their link to cliques under edge metric dimension.

A family of subsets of ``{1..k}`` is union-distinct when the unions over
unordered pairs of distinct members are pairwise distinct.  ``ek(k)`` is
the largest such family.  A union-distinct family of size ``m`` yields a
graph with an ``m``-clique and edge metric dimension at most ``k``, and a
clique in a graph with an edge resolving set of size ``k`` yields a
union-distinct family of the clique's size.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .graph import Graph, clique_number, enumerate_labeled_graphs, graph_to_graph6, is_clique, max_clique
from .resolve import EDGE_METRIC, has_resolving_set_of_size, is_resolving

EXHAUSTIVE_MAX_K = 4
SEARCH_MAX_K = 6


class TheoremViolation(RuntimeError):
    """A check that the theory guarantees failed on a concrete input."""


@dataclass(frozen=True)
class SubsetFamily:
    """Members are bitmasks: bit ``i-1`` set means element ``i`` is present."""

    ground_k: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.ground_k < 1:
            raise ValueError("ground set size must be positive")
        object.__setattr__(self, "members", tuple(self.members))
        full = (1 << self.ground_k) - 1
        for m in self.members:
            if m < 0 or m & ~full:
                raise ValueError(f"member {m:#b} is not a subset of {{1..{self.ground_k}}}")
        if len(set(self.members)) != len(self.members):
            raise ValueError("family has duplicate members")

    def __len__(self):
        return len(self.members)

    def as_sets(self) -> list[set[int]]:
        return [{i + 1 for i in range(self.ground_k) if m >> i & 1} for m in self.members]

    @classmethod
    def from_sets(cls, k: int, sets: Iterable[Iterable[int]]) -> SubsetFamily:
        members = []
        for s in sets:
            mask = 0
            for i in s:
                if not 1 <= i <= k:
                    raise ValueError(f"element {i} outside 1..{k}")
                mask |= 1 << (i - 1)
            members.append(mask)
        return cls(k, tuple(members))


@dataclass(frozen=True)
class UnionCollision:
    pair_a: tuple[int, int]
    pair_b: tuple[int, int]
    shared_union: int


def find_union_collision(F: SubsetFamily, strict: bool = False) -> UnionCollision | None:
    """First pair of member pairs with equal union, or ``None``.

    With ``strict`` a member paired with itself also counts, so no union of
    two members may equal a third member.
    """
    seen: dict[int, tuple[int, int]] = {}
    members = F.members
    for b in range(len(members)):
        for a in range(b + 1 if strict else b):
            u = members[a] | members[b]
            if u in seen:
                return UnionCollision(seen[u], (a, b), u)
            seen[u] = (a, b)
    return None


def is_union_distinct(F: SubsetFamily, strict: bool = False) -> bool:
    return find_union_collision(F, strict) is None


# ---------------------------------------------------------------- ek search


def ek_exhaustive(k: int, strict: bool = False) -> tuple[int, SubsetFamily]:
    """Scan families from the largest size down; first hit is the lex-least optimum."""
    if not 1 <= k <= EXHAUSTIVE_MAX_K:
        raise ValueError(f"exhaustive ek search supports 1 <= k <= {EXHAUSTIVE_MAX_K}")
    for size in range(2**k, 0, -1):
        for members in itertools.combinations(range(2**k), size):
            F = SubsetFamily(k, members)
            if is_union_distinct(F, strict):
                return size, F
    raise AssertionError("a single set is always union-distinct")


def ek_search(k: int, strict: bool = False) -> tuple[int, SubsetFamily]:
    """Depth-first search over families in increasing member order with a capacity bound.

    Members are tried smallest first, so the first family of the optimal
    size found is lexicographically least.
    """
    if not 1 <= k <= SEARCH_MAX_K:
        raise ValueError(f"ek search supports 1 <= k <= {SEARCH_MAX_K}")
    universe = 2**k
    # pair unions are distinct subsets, so C(m, 2) <= 2^k (or C(m+1, 2) when strict)
    cap = 1
    while (cap + 1) * (cap + (2 if strict else 0)) // 2 <= universe:
        cap += 1
    best: list[int] = []
    chosen: list[int] = []
    unions: set[int] = set()

    def extend(start: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for x in range(start, universe):
            if len(chosen) + (universe - x) <= len(best) or len(best) >= cap:
                return
            new = [x | y for y in chosen]
            if strict:
                new.append(x)
            if len(set(new)) != len(new) or unions.intersection(new):
                continue
            chosen.append(x)
            unions.update(new)
            extend(x + 1)
            chosen.pop()
            unions.difference_update(new)

    extend(0)
    return len(best), SubsetFamily(k, tuple(best))


def ek_bruteforce(k: int, method: str = "auto", strict: bool = False) -> tuple[int, SubsetFamily]:
    """``ek(k)`` with a lex-least witness.

    ``method`` is ``"exhaustive"`` (k <= 4), ``"search"`` (k <= 6) or ``"auto"``.
    """
    if method == "auto":
        method = "exhaustive" if k <= 2 else "search"
    if method == "exhaustive":
        return ek_exhaustive(k, strict)
    if method == "search":
        return ek_search(k, strict)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------- graph bridge


@dataclass(frozen=True)
class FamilyGraph:
    graph: Graph
    landmarks: list[int]
    clique: list[int]


def family_to_graph(F: SubsetFamily) -> FamilyGraph:
    """Landmarks ``u_1..u_k`` (vertices ``0..k-1``) and a clique ``v_1..v_m``.

    ``u_i`` is joined to ``v_j`` exactly when ``i`` belongs to the ``j``-th member.
    """
    hit = find_union_collision(F)
    if hit is not None:
        raise ValueError(f"family is not union-distinct: pairs {hit.pair_a} and {hit.pair_b}")
    k, m = F.ground_k, len(F)
    clique = list(range(k, k + m))
    edges = list(itertools.combinations(clique, 2))
    edges += [(i, k + j) for j, s in enumerate(F.members) for i in range(k) if s >> i & 1]
    return FamilyGraph(Graph(k + m, edges), list(range(k)), clique)


def clique_to_family(g: Graph, clique: Sequence[int], landmarks: Sequence[int]) -> SubsetFamily:
    """Read a union-distinct family off a clique and an edge resolving set.

    ``p_i`` is the distance from the clique to landmark ``i``; member ``j``
    collects the landmarks that clique vertex ``j`` attains ``p_i`` for.
    """
    clique, landmarks = list(clique), list(landmarks)
    if not clique or not is_clique(g, clique):
        raise ValueError("vertices do not form a nonempty clique")
    if not landmarks:
        raise ValueError("landmark set must be nonempty")
    cert = is_resolving(g, EDGE_METRIC, landmarks)
    if not cert:
        raise ValueError(f"landmarks are not edge resolving (edges {cert.pair})")
    rows = g.distance_rows
    p = [min(rows[u][v] for v in clique) for u in landmarks]
    members = []
    for v in clique:
        members.append(sum(1 << i for i, u in enumerate(landmarks) if rows[u][v] == p[i]))
    if len(set(members)) != len(members):
        raise TheoremViolation(f"clique vertices share a landmark profile: {members}")
    F = SubsetFamily(len(landmarks), tuple(members))
    hit = find_union_collision(F)
    if hit is not None:
        raise TheoremViolation(f"family read off the clique has colliding unions {hit}")
    return F


# ---------------------------------------------------------------- family files


def family_to_text(F: SubsetFamily) -> str:
    lines = []
    for s in F.as_sets():
        lines.append(",".join(map(str, sorted(s))) if s else "-")
    return "".join(line + "\n" for line in lines)


def family_from_text(text: str, k: int | None = None) -> SubsetFamily:
    """Parse one member per line (``-`` is the empty set; ``#`` starts a comment)."""
    sets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "-":
            sets.append([])
            continue
        try:
            sets.append([int(x) for x in line.split(",")])
        except ValueError:
            raise ValueError(f"line {lineno}: expected '-' or comma-separated integers") from None
    if k is None:
        k = max((max(s) for s in sets if s), default=1)
    return SubsetFamily.from_sets(k, sets)


# ---------------------------------------------------------------- mc(k) = ek(k)


@dataclass
class McEkReport:
    k: int
    n_max: int
    ek: int
    witness: SubsetFamily
    construction_edim_ok: bool = False
    construction_clique: int = 0
    roundtrip_size: int = 0
    graphs_scanned: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.construction_edim_ok
            and self.construction_clique >= self.ek
            and self.roundtrip_size == self.ek
            and not self.counterexamples
        )

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "max_n": self.n_max,
            "ek": self.ek,
            "witness": [sorted(s) for s in self.witness.as_sets()],
            "construction_edim_at_most_k": self.construction_edim_ok,
            "construction_clique": self.construction_clique,
            "roundtrip_size": self.roundtrip_size,
            "graphs_scanned": self.graphs_scanned,
            "counterexamples": self.counterexamples,
            "ok": self.ok,
        }


def verify_mc_ek(k: int, n_max: int) -> McEkReport:
    """Check both directions of ``mc(k) = ek(k)`` at small scale.

    (a) the witness graph has edim at most ``k`` and clique at least ``ek(k)``
    and its clique maps back to a family of the same size; (b) no labeled
    graph of order at most ``n_max`` has edim at most ``k`` and a larger clique.
    """
    if not 1 <= k <= 3:
        raise ValueError("verify_mc_ek supports 1 <= k <= 3")
    if n_max > 7:
        raise ValueError("verify_mc_ek enumerates graphs of order at most 7")
    value, witness = ek_bruteforce(k)
    rep = McEkReport(k, n_max, value, witness)
    fg = family_to_graph(witness)
    rep.construction_edim_ok = (
        bool(is_resolving(fg.graph, EDGE_METRIC, fg.landmarks))
        and has_resolving_set_of_size(fg.graph, EDGE_METRIC, k) is not None
    )
    clique = max_clique(fg.graph)
    rep.construction_clique = len(clique)
    rep.roundtrip_size = len(clique_to_family(fg.graph, fg.clique, fg.landmarks))
    for n in range(1, n_max + 1):
        if n <= value:
            continue
        for g in enumerate_labeled_graphs(n):
            rep.graphs_scanned += 1
            if clique_number(g) > value and has_resolving_set_of_size(g, EDGE_METRIC, k) is not None:
                rep.counterexamples.append(graph_to_graph6(g))
    return rep
