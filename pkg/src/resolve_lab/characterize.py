"""Structural predicates for the boundary cases and suites that compare them to the solver.

Every suite runs over labeled graphs (no isomorphism reduction) in the
order produced by :func:`enumerate_labeled_graphs`.  ``RESOLVE_LAB_THREADS``
greater than 1 spreads the graph stream over worker processes; results are
merged back in stream order so reports do not depend on the worker count.
"""

from __future__ import annotations

import enum
import os
import random
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .constructions import build_A, build_H, build_I, build_J, ft_bound, ft_construct
from .graph import Graph, enumerate_labeled_graphs, graph_from_graph6, graph_to_graph6
from .resolve import (
    ADJACENCY,
    ALL_VARIANTS,
    EDGE_METRIC,
    LOCAL,
    VERTEX_METRIC,
    Kind,
    VariantSpec,
    has_resolving_set_of_size,
    is_fault_tolerant,
    landmark_degree_report,
    min_fault_tolerant,
    min_resolving,
    truncated,
)

MAX_SUITE_ORDER = 6


# ---------------------------------------------------------------- predicates


def _is_path_component(g: Graph, comp: list[int]) -> bool:
    if len(comp) == 1:
        return True
    edges = sum(g.degree(v) for v in comp) // 2
    return edges == len(comp) - 1 and all(g.degree(v) <= 2 for v in comp)


def _component_edges(g: Graph, comp: list[int]) -> int:
    return sum(g.degree(v) for v in comp) // 2


def predicate_dim1(g: Graph) -> bool:
    """Graphs with metric dimension 1: a path, optionally plus one isolated vertex."""
    comps = g.components()
    return (
        g.n >= 2
        and len(comps) <= 2
        and sum(1 for c in comps if len(c) >= 2) <= 1
        and all(_is_path_component(g, c) for c in comps)
    )


def predicate_edim1(g: Graph) -> bool:
    """Graphs with edge metric dimension 1."""
    comps = g.components()
    sizes = [_component_edges(g, c) for c in comps]
    return (
        g.m >= 2
        and all(_is_path_component(g, c) for c in comps)
        and sum(1 for s in sizes if s >= 1) <= 2
        and sum(1 for s in sizes if s >= 2) <= 1
    )


def predicate_dimk1(g: Graph, k: int) -> bool:
    """Graphs with ``k``-truncated dimension 1: ``P_i`` (2 <= i <= k+2) or ``P_j + K_1`` (j <= k+1)."""
    if k < 1:
        raise ValueError("k must be positive")
    comps = g.components()
    if not all(_is_path_component(g, c) for c in comps):
        return False
    if len(comps) == 1:
        return 2 <= g.n <= k + 2
    if len(comps) == 2:
        small, big = sorted(comps, key=len)
        return len(small) == 1 and len(big) <= k + 1
    return False


def predicate_adim1(g: Graph) -> bool:
    """Graphs with adjacency dimension 1."""
    return g.n == 2 or (g.n == 3 and g.m >= 1 and not g.is_complete())


def predicate_ldim1(g: Graph) -> bool:
    """One bipartite component with an edge; everything else isolated."""
    big = [c for c in g.components() if len(c) > 1]
    if len(big) != 1:
        return False
    side = {big[0][0]: 0}
    stack = [big[0][0]]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in side:
                side[w] = 1 - side[u]
                stack.append(w)
            elif side[w] == side[u]:
                return False
    return True


def predicate_xdim1(g: Graph, v: VariantSpec) -> bool:
    if v.kind is Kind.VERTEX_METRIC:
        return predicate_dim1(g)
    if v.kind is Kind.EDGE_METRIC:
        return predicate_edim1(g)
    if v.kind is Kind.LOCAL:
        return predicate_ldim1(g)
    if v.k == 1:
        return predicate_adim1(g) if g.n >= 3 else predicate_dimk1(g, 1)
    return predicate_dimk1(g, v.k)


def _open_twins(g: Graph, u: int, v: int) -> bool:
    adj = g.adjacency
    clear = ~((1 << u) | (1 << v))
    return adj[u] & clear == adj[v] & clear


def twin_condition(g: Graph, v: VariantSpec) -> bool:
    """Every vertex has a twin ``N(u) - {v} = N(v) - {u}`` of the kind ``v`` requires.

    Vertex and truncated variants accept any twin, the edge variant needs a
    twin sharing a neighbour, and the local variant an adjacent twin.
    """
    adj = g.adjacency

    def ok(x: int, y: int) -> bool:
        if not _open_twins(g, x, y):
            return False
        if v.kind is Kind.EDGE_METRIC:
            return bool(adj[x] & adj[y])
        if v.kind is Kind.LOCAL:
            return bool(adj[x] >> y & 1)
        return True

    return all(any(ok(x, y) for y in range(g.n) if y != x) for x in range(g.n))


def is_complete_or_edgeless(g: Graph) -> bool:
    return g.m == 0 or g.is_complete()


# ---------------------------------------------------------------- parallel map


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("RESOLVE_LAB_THREADS", "1")))
    except ValueError:
        return 1


def _chunk_worker(args):
    fn, codes = args
    return [fn(graph_from_graph6(c)) for c in codes]


def map_graphs(fn: Callable[[Graph], object], graphs: Iterable[Graph], chunk: int = 2048) -> list:
    """``[fn(g) for g in graphs]``, optionally across processes; order preserved.

    ``fn`` must be a module-level callable (or a ``functools.partial`` of one)
    when ``RESOLVE_LAB_THREADS`` asks for more than one worker.
    """
    workers = _workers()
    if workers == 1:
        return [fn(g) for g in graphs]
    codes = [graph_to_graph6(g) for g in graphs]
    parts = [(fn, codes[i:i + chunk]) for i in range(0, len(codes), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [r for part in pool.map(_chunk_worker, parts) for r in part]


def all_graphs(n_max: int, n_min: int = 1) -> list[Graph]:
    if n_max > MAX_SUITE_ORDER:
        raise ValueError(f"suites enumerate labeled graphs of order at most {MAX_SUITE_ORDER}")
    return [g for n in range(n_min, n_max + 1) for g in enumerate_labeled_graphs(n)]


# ---------------------------------------------------------------- equivalence suites


class Equivalence(enum.Enum):
    DIM1_FT2 = "ft=2 <=> dim=1"
    FT_EQUALS_N = "ft=n <=> twin condition"
    DIM_N_MINUS_1 = "dim=n-1 <=> complete/edgeless"
    STRUCTURE_DIM1 = "dim=1 <=> structure"


@dataclass
class CharacterizationReport:
    variant: VariantSpec
    which: Equivalence
    n: int
    graphs_checked: int
    mismatches: list[tuple[str, bool, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "variant": self.variant.name,
            "check": self.which.name,
            "max_n": self.n,
            "graphs_checked": self.graphs_checked,
            "mismatches": [
                {"graph6": g6, "structural": s, "solver": r} for g6, s, r in self.mismatches
            ],
        }


def _verdicts(which: Equivalence, v: VariantSpec, g: Graph) -> tuple[bool, bool]:
    if which is Equivalence.DIM1_FT2:
        return min_resolving(g, v)[0] == 1, min_fault_tolerant(g, v)[0] == 2
    if which is Equivalence.FT_EQUALS_N:
        return twin_condition(g, v), min_fault_tolerant(g, v)[0] == g.n
    if which is Equivalence.DIM_N_MINUS_1:
        structural = g.is_complete() if v.kind is Kind.LOCAL else is_complete_or_edgeless(g)
        return structural, min_resolving(g, v)[0] == g.n - 1
    return predicate_xdim1(g, v), min_resolving(g, v)[0] == 1


class _Check:
    """Picklable per-graph check for :func:`map_graphs`."""

    def __init__(self, which: Equivalence, v: VariantSpec):
        self.which = which
        self.v = v

    def __call__(self, g: Graph):
        a, b = _verdicts(self.which, self.v, g)
        return None if a == b else (graph_to_graph6(g), a, b)


def run_equivalence_suite(
    n_max: int, variant: VariantSpec, which: Equivalence, n_min: int = 1
) -> CharacterizationReport:
    """Compare a structural characterization with the solver on every labeled graph."""
    if which is Equivalence.DIM_N_MINUS_1 and variant.kind not in (Kind.VERTEX_METRIC, Kind.LOCAL):
        raise ValueError("the dim = n-1 characterization covers the metric and local variants")
    graphs = all_graphs(n_max, n_min)
    found = map_graphs(_Check(which, variant), graphs)
    return CharacterizationReport(
        variant, which, n_max, len(graphs), [x for x in found if x is not None]
    )


CHARACTERIZATION_PLAN: tuple[tuple[Equivalence, VariantSpec], ...] = (
    *((Equivalence.DIM1_FT2, v) for v in ALL_VARIANTS),
    *((Equivalence.STRUCTURE_DIM1, v) for v in ALL_VARIANTS),
    *((Equivalence.FT_EQUALS_N, v) for v in ALL_VARIANTS),
    (Equivalence.DIM_N_MINUS_1, VERTEX_METRIC),
    (Equivalence.DIM_N_MINUS_1, LOCAL),
)


def characterization_suite(n_max: int = 5, n_min: int = 1) -> list[CharacterizationReport]:
    return [run_equivalence_suite(n_max, v, which, n_min) for which, v in CHARACTERIZATION_PLAN]


# ---------------------------------------------------------------- generic check reports


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"check": self.name, "checked": self.checked, "ok": self.ok, "violations": self.violations}


DEGREE_VARIANTS = (VERTEX_METRIC, EDGE_METRIC, ADJACENCY, truncated(2))


class _DegreeCheck:
    def __init__(self, v: VariantSpec):
        self.v = v

    def __call__(self, g: Graph):
        size, S = min_resolving(g, self.v)
        if size == 0:
            return None
        bad = [r for r in landmark_degree_report(g, self.v, S) if not r.ok]
        if not bad:
            return None
        return {
            "graph6": graph_to_graph6(g),
            "set": S,
            "landmark": bad[0].landmark,
            "degree": bad[0].degree,
            "bound": bad[0].bound,
        }


def degree_suite(n_max: int = 6, ks: Iterable[int] = (2, 3)) -> list[CheckResult]:
    """Landmark degree bounds over all labeled graphs, then sharpness on the extremal families."""
    graphs = all_graphs(n_max)
    out = []
    for v in DEGREE_VARIANTS:
        res = CheckResult(f"degree bound {v.name}", len(graphs))
        res.violations = [x for x in map_graphs(_DegreeCheck(v), graphs) if x is not None]
        out.append(res)
    for k in ks:
        for name, fam, expected in (
            (f"H_{k} landmark degree", build_H(k), 2 ** (k - 1)),
            (f"A_{k} landmark degree", build_A(k), 2 ** (k - 1) + k - 1),
            (f"I_{k}(1) landmark degree", build_I(k, 1), 3 ** (k - 1)),
        ):
            res = CheckResult(name, 1)
            degrees = [fam.graph.degree(s) for s in fam.landmarks]
            resolving = min_resolving(fam.graph, fam.variant)[0] == k
            if degrees != [expected] * k or not resolving:
                res.violations.append({"degrees": degrees, "expected": expected, "dim_is_k": resolving})
            out.append(res)
    return out


# ---------------------------------------------------------------- lower and upper bounds


def lower_bound_suite(k_max: int = 3) -> list[CheckResult]:
    """Dimension exactly ``k`` and the fault-tolerant lower bounds for the extremal families.

    The lower bounds are decided with a bounded search (no fault-tolerant set
    of size ``bound - 1``), which is much cheaper than the exact optimum.
    """
    out = []
    for k in range(2, k_max + 1):
        J, H, A = build_J(k), build_H(k), build_A(k)
        rows = (
            ("J", J, VERTEX_METRIC, 3 ** (k - 1) - k),
            ("H", H, EDGE_METRIC, 2 ** (k - 1) + 1),
            ("A", A, ADJACENCY, 2 ** (k - 1)),
            ("J", J, truncated(2), 3 ** (k - 1) - k),
        )
        for tag, fam, v, bound in rows:
            res = CheckResult(f"{tag}_{k} {v.name}: dim = {k}", 1)
            dim, _ = min_resolving(fam.graph, v)
            if dim != k:
                res.violations.append({"dimension": dim, "expected": k})
            out.append(res)
            res = CheckResult(f"{tag}_{k} {v.name}: ft >= {bound}", 1)
            smaller = has_resolving_set_of_size(fam.graph, v, bound - 1, t=2) if bound > 1 else None
            if smaller is not None:
                res.violations.append({"fault_tolerant_set": smaller, "bound": bound})
            out.append(res)
    return out


UPPER_VARIANTS = (VERTEX_METRIC, EDGE_METRIC, truncated(2))


def random_connected_graphs(n: int, count: int, seed: int = 20240607) -> list[Graph]:
    """``count`` distinct uniformly random connected labeled graphs on ``n`` vertices."""
    rng = random.Random(seed)
    pairs = [(u, v) for v in range(n) for u in range(v)]
    seen, out = set(), []
    while len(out) < count:
        mask = rng.getrandbits(len(pairs))
        if mask in seen:
            continue
        g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if g.is_connected():
            seen.add(mask)
            out.append(g)
    return out


class _UpperCheck:
    def __init__(self, v: VariantSpec):
        self.v = v

    def __call__(self, g: Graph):
        size, S = min_resolving(g, self.v)
        if g.n <= 1 or size == 0:
            return None
        problem = None
        try:
            out = ft_construct(g, self.v, S)
            bound = ft_bound(self.v, size)
            if not is_fault_tolerant(g, self.v, out):
                problem = "not fault tolerant"
            elif len(out) > bound:
                problem = f"size {len(out)} exceeds {bound}"
        except Exception as exc:  # a failed construction step is a violation, not a crash
            problem = f"{type(exc).__name__}: {exc}"
        if problem is None:
            return None
        return {"graph6": graph_to_graph6(g), "set": S, "problem": problem}


def upper_bound_suite(
    n_max: int = 6, sample_order: int | None = 7, sample_size: int = 1000, connected_only: bool = True
) -> list[CheckResult]:
    """Run the fault-tolerant constructions from a minimum resolving set and check them.

    All labeled graphs up to ``n_max`` are used, plus a fixed random sample
    of connected graphs of order ``sample_order``.
    """
    graphs = [g for g in all_graphs(n_max, 2) if g.is_connected() or not connected_only]
    if sample_order:
        graphs += random_connected_graphs(sample_order, sample_size)
    out = []
    for v in UPPER_VARIANTS:
        res = CheckResult(f"construction {v.name}", len(graphs))
        res.violations = [x for x in map_graphs(_UpperCheck(v), graphs) if x is not None]
        out.append(res)
    return out
