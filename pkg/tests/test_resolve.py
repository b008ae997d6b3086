import itertools
import math

import pytest
from hypothesis import given, settings

from resolve_lab.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_labeled_graphs,
    path_graph,
)
from resolve_lab.resolve import (
    ADJACENCY,
    ALL_VARIANTS,
    EDGE_METRIC,
    LOCAL,
    VERTEX_METRIC,
    InfeasibleError,
    Kind,
    build_distinguish_matrix,
    count_at_distance,
    count_within_distance,
    degree_bound,
    distinguishes,
    has_resolving_set_of_size,
    is_fault_tolerant,
    is_resolving,
    item_vector,
    landmark_degree_report,
    mdim,
    min_fault_tolerant,
    min_multicover,
    min_resolving,
    parse_variant,
    required_pairs,
    solve_both,
    truncated,
)

from . import oracle
from .test_graph import graphs

ORACLE_KIND = {
    Kind.VERTEX_METRIC: "metric",
    Kind.EDGE_METRIC: "edge",
    Kind.TRUNCATED: "trunc",
    Kind.LOCAL: "local",
}


def oracle_dims(g, v):
    return oracle.dims(g.n, g.edges, ORACLE_KIND[v.kind], v.k)


def test_parse_variant():
    assert parse_variant("metric") == VERTEX_METRIC
    assert parse_variant("edge") == EDGE_METRIC
    assert parse_variant("local") == LOCAL
    assert parse_variant("adim") == ADJACENCY == truncated(1)
    assert parse_variant("trunc=3") == truncated(3)
    for bad in ("trunc=0", "trunc=x", "nope"):
        with pytest.raises(ValueError):
            parse_variant(bad)


def test_item_vectors_use_inf_and_caps():
    g = disjoint_union(path_graph(4), Graph(1))
    assert item_vector(g, VERTEX_METRIC, 3, [0, 4]) == (3, math.inf)
    assert item_vector(g, truncated(1), 3, [0, 4]) == (2, 2)
    assert item_vector(g, EDGE_METRIC, (2, 3), [0]) == (2,)
    with pytest.raises(ValueError):
        item_vector(g, VERTEX_METRIC, (0, 1), [0])


def test_distinguishes():
    g = path_graph(3)
    assert distinguishes(g, VERTEX_METRIC, 0, (1, 2))
    assert not distinguishes(g, VERTEX_METRIC, 1, (0, 2))


def test_required_pairs_local_only_edges():
    g = path_graph(4)
    assert required_pairs(g, LOCAL) == [(0, 1), (1, 2), (2, 3)]
    assert len(required_pairs(g, VERTEX_METRIC)) == 6
    assert len(required_pairs(g, EDGE_METRIC)) == 3


@pytest.mark.parametrize(
    "g, v, dim, ft",
    [
        (path_graph(4), VERTEX_METRIC, 1, 2),
        (complete_graph(4), VERTEX_METRIC, 3, 4),
        (cycle_graph(4), LOCAL, 1, 2),
        (complete_graph(1), VERTEX_METRIC, 0, 1),
        (empty_graph(3), EDGE_METRIC, 0, 1),
        (empty_graph(3), VERTEX_METRIC, 2, 3),
        (complete_bipartite(2, 2), VERTEX_METRIC, 2, 4),
        (path_graph(4), ADJACENCY, 2, 3),
    ],
)
def test_known_dimensions(g, v, dim, ft):
    assert min_resolving(g, v)[0] == dim
    assert min_fault_tolerant(g, v)[0] == ft


def test_empty_graph_of_order_zero():
    assert min_resolving(Graph(0), VERTEX_METRIC) == (0, [])
    assert min_fault_tolerant(Graph(0), VERTEX_METRIC) == (0, [])
    with pytest.raises(ValueError):
        is_fault_tolerant(Graph(0), VERTEX_METRIC, [])


@pytest.mark.parametrize("v", ALL_VARIANTS, ids=str)
def test_solver_matches_oracle_n4(v):
    for g in enumerate_labeled_graphs(4):
        dim, S = min_resolving(g, v)
        ft, T = min_fault_tolerant(g, v)
        assert (dim, ft) == oracle_dims(g, v)
        assert is_resolving(g, v, S)
        assert is_fault_tolerant(g, v, T)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_solver_matches_oracle_random(g):
    for v in ALL_VARIANTS:
        assert (min_resolving(g, v)[0], min_fault_tolerant(g, v)[0]) == oracle_dims(g, v)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_invariants(g):
    for v in ALL_VARIANTS:
        s = solve_both(g, v)
        if g.n >= 1:
            assert s.ft_dimension >= s.dimension + 1
            assert s.ft_dimension <= g.n
            # every superset of a resolving set resolves
            rest = [x for x in range(g.n) if x not in s.witness]
            if rest:
                assert is_resolving(g, v, sorted(s.witness + rest[:1]))
            # fault tolerance is exactly resolution after any single deletion
            for x in s.ft_witness:
                assert is_resolving(g, v, [y for y in s.ft_witness if y != x])
        if g.n >= 2 and s.dimension:
            assert has_resolving_set_of_size(g, v, s.dimension - 1) is None
            assert has_resolving_set_of_size(g, v, s.ft_dimension - 1, t=2) is None


def test_certificates_report_pairs():
    g = path_graph(3)
    cert = is_resolving(g, VERTEX_METRIC, [1])
    assert not cert and cert.pair == (0, 2)
    cert = is_fault_tolerant(g, VERTEX_METRIC, [0, 2])
    assert cert
    cert = is_fault_tolerant(g, VERTEX_METRIC, [0, 1])
    assert not cert and cert.removed == 0


def test_landmark_validation():
    g = path_graph(3)
    with pytest.raises(ValueError):
        is_resolving(g, VERTEX_METRIC, [0, 0])
    with pytest.raises(ValueError):
        is_resolving(g, VERTEX_METRIC, [5])


def test_distinguish_matrix():
    M = build_distinguish_matrix(path_graph(3), VERTEX_METRIC)
    assert M.pairs == [(0, 1), (0, 2), (1, 2)]
    assert M.distinguishers(1) == [0, 2]
    assert M.mask_of((0, 2)) == 0b101
    E = build_distinguish_matrix(path_graph(3), EDGE_METRIC)
    assert E.pairs == [((0, 1), (1, 2))]


def test_infeasible_multicover():
    M = build_distinguish_matrix(complete_graph(3), VERTEX_METRIC)
    with pytest.raises(InfeasibleError):
        min_multicover(M, 3)


def test_mdim():
    assert mdim(path_graph(4), 1)[0] == 1
    assert mdim(path_graph(4), 2)[0] == 2
    assert mdim(complete_graph(4), 2)[0] == 4


def test_counting():
    dm = cycle_graph(6).distances
    assert count_within_distance(dm, 0, 1) == 2
    assert count_within_distance(dm, 0, 3) == 5
    assert count_at_distance(dm, 0, 3) == 1


def test_degree_bounds():
    assert degree_bound(VERTEX_METRIC, 3) == 9
    assert degree_bound(EDGE_METRIC, 3) == 4
    assert degree_bound(ADJACENCY, 3) == 6
    assert degree_bound(truncated(2), 3) == 9
    with pytest.raises(ValueError):
        degree_bound(LOCAL, 2)
    rows = landmark_degree_report(path_graph(4), VERTEX_METRIC, [0])
    assert rows[0].degree == 1 and rows[0].ok
    with pytest.raises(ValueError):
        landmark_degree_report(path_graph(4), VERTEX_METRIC, [1])


def test_adding_a_vertex_keeps_cycle_resolving():
    g = cycle_graph(6)
    for S in itertools.combinations(range(6), 2):
        if is_resolving(g, VERTEX_METRIC, S):
            assert is_resolving(g, VERTEX_METRIC, sorted(set(S) | {5 - S[0]}))
