import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resolve_lab.graph import (
    INF,
    Graph,
    GraphFormatError,
    clique_number,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_labeled_graphs,
    graph_from_edge_list,
    graph_from_graph6,
    graph_to_edge_list,
    graph_to_graph6,
    is_clique,
    max_clique,
    path_graph,
    read_graph,
    write_graph,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def test_edge_list_path():
    g = graph_from_edge_list("4 3\n0 1\n1 2\n2 3")
    assert g == path_graph(4)


def test_edge_list_singleton_and_comments():
    assert graph_from_edge_list("# header\n1 0\n").n == 1
    g = graph_from_edge_list("3 2 # tail comment\n\n0 1\n# skip\n1 2\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("3 1\n0 0", 2, "self-loop"),
        ("3 1\n0 3", 2, "range"),
        ("3 2\n0 1\n1 0", 3, "duplicate"),
        ("x 1\n0 1", 1, "header"),
        ("3 2\n0 1", None, "declared 2"),
        ("3 1\n0 1 2", 2, ""),
        ("3 1\n0 1\n1 2", 3, ""),
    ],
)
def test_edge_list_errors_name_the_line(text, line, fragment):
    with pytest.raises(GraphFormatError) as info:
        graph_from_edge_list(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_edge_list_missing_header():
    with pytest.raises(GraphFormatError):
        graph_from_edge_list("# nothing\n")


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_graph6_known_strings():
    assert graph_to_graph6(complete_graph(3)) == "Bw"
    assert graph_to_graph6(empty_graph(2)) == "A?"
    assert graph_to_graph6(Graph(0)) == "?"
    assert graph_from_graph6(">>graph6<<Bw\n") == complete_graph(3)


def test_graph6_matches_networkx():
    g = cycle_graph(7)
    expected = nx.to_graph6_bytes(nx.cycle_graph(7), header=False).decode().strip()
    assert graph_to_graph6(g) == expected


def test_graph6_long_form_round_trip():
    g = path_graph(70)
    text = graph_to_graph6(g)
    assert text.startswith("~")
    assert graph_from_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "B", "Bw?", "B\x7f", "~??"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphFormatError):
        graph_from_graph6(bad)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_round_trips(g):
    assert graph_from_graph6(graph_to_graph6(g)) == g
    assert graph_from_edge_list(graph_to_edge_list(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_distances_match_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    ref = dict(nx.all_pairs_shortest_path_length(G))
    dm = g.distances
    for u in range(g.n):
        for v in range(g.n):
            assert dm[u, v] == ref[u].get(v, INF)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_distance_matrix_invariants(g):
    dm = g.distances
    comp = {v: i for i, c in enumerate(g.components()) for v in c}
    for u in range(g.n):
        assert dm[u, u] == 0
        for v in range(g.n):
            assert dm[u, v] == dm[v, u]
            assert (dm[u, v] == INF) == (comp[u] != comp[v])
            for w in range(g.n):
                if dm[u, w] != INF and dm[w, v] != INF:
                    assert dm[u, v] <= dm[u, w] + dm[w, v]


def test_inf_ordering():
    assert INF == math.inf and INF > 10**9
    g = disjoint_union(path_graph(2), path_graph(1))
    assert g.distances[0, 2] == INF
    assert g.distances.diameter() == 1


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_enumeration_counts(n, count):
    gs = list(enumerate_labeled_graphs(n))
    assert len(gs) == count
    assert len(set(gs)) == count


def test_enumeration_connected_counts():
    # labeled connected graphs: OEIS A001187
    assert [sum(g.is_connected() for g in enumerate_labeled_graphs(n)) for n in range(1, 6)] == [1, 1, 4, 38, 728]


def test_enumeration_refuses_large_order():
    with pytest.raises(ValueError):
        next(enumerate_labeled_graphs(8))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_clique_against_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    ref = max((len(c) for c in nx.find_cliques(G)), default=0)
    assert clique_number(g) == ref
    assert is_clique(g, max_clique(g))


def test_read_write(tmp_path):
    g = cycle_graph(5)
    for name in ("c5.el", "c5.g6", "c5.txt"):
        path = tmp_path / name
        write_graph(g, str(path))
        assert read_graph(str(path)) == g
    write_graph(g, str(tmp_path / "x.el"), "g6")
    assert read_graph(str(tmp_path / "x.el"), "g6") == g


def test_induced_subgraph_relabels():
    sub, relabel = cycle_graph(5).induced_subgraph([0, 1, 2, 4])
    assert relabel == {0: 0, 1: 1, 2: 2, 4: 3}
    assert sub.edges == ((0, 1), (0, 3), (1, 2))
