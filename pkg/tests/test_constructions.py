import itertools

import pytest

from resolve_lab.constructions import (
    ConstructionError,
    build_A,
    build_D_box,
    build_H,
    build_I,
    build_J,
    ft_bound,
    ft_construct,
    ft_construct_edge,
    ft_construct_metric,
    ft_construct_truncated,
    lattice_coords,
    pendant_extend,
)
from resolve_lab.graph import complete_graph, cycle_graph, path_graph
from resolve_lab.resolve import (
    ADJACENCY,
    EDGE_METRIC,
    LOCAL,
    VERTEX_METRIC,
    build_distinguish_matrix,
    count_at_distance,
    is_fault_tolerant,
    is_resolving,
    item_vector,
    min_resolving,
    truncated,
)


def test_J2_shape():
    J = build_J(2)
    assert J.graph.n == 11 and J.graph.is_connected()
    assert item_vector(J.graph, VERTEX_METRIC, J.index("leaf:02"), J.landmarks) == (1, 3)
    assert item_vector(J.graph, VERTEX_METRIC, J.index("leaf:21"), J.landmarks) == (3, 2)
    assert "leaf:11" not in J.labels and "leaf:01" not in J.labels


def test_J_rejects_degenerate_k():
    with pytest.raises(ValueError):
        build_J(1)


@pytest.mark.parametrize("k", [2, 3])
def test_J_order_and_dimension(k):
    J = build_J(k)
    assert J.graph.n == 3**k + k
    assert is_resolving(J.graph, VERTEX_METRIC, J.landmarks)
    assert min_resolving(J.graph, VERTEX_METRIC)[0] == k


def test_J_sibling_triples_have_three_distinguishers():
    J = build_J(3)
    M = build_distinguish_matrix(J.graph, VERTEX_METRIC)
    s1 = J.index("s_1")
    checked = 0
    for tail in itertools.product("012", repeat=2):
        words = ["".join((d,) + tail) for d in "01"]
        labels = [f"leaf:{w}" for w in words]
        if not all(lab in J.labels for lab in labels):
            continue
        v, w = (J.index(lab) for lab in labels)
        assert set(M.distinguishers(M.pairs.index((min(v, w), max(v, w))))) == {v, w, s1}
        checked += 1
    assert checked >= 5


@pytest.mark.parametrize("k", [1, 2, 3])
def test_H(k):
    H = build_H(k)
    assert H.graph.n == 1 + 2**k + k
    assert [H.graph.degree(u) for u in H.landmarks] == [2 ** (k - 1)] * k
    assert is_resolving(H.graph, EDGE_METRIC, H.landmarks)
    assert min_resolving(H.graph, EDGE_METRIC)[0] == k


def test_H1_is_star_plus_pendant():
    H = build_H(1)
    assert H.graph.edges == ((0, 1), (0, 2), (1, 3))


def test_H2_landmarks_are_last():
    assert build_H(2).landmarks == [5, 6]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_A(k):
    A = build_A(k)
    assert A.graph.n == k + 2**k
    assert "leaf:" + "1" * k not in A.labels
    assert [A.graph.degree(u) for u in A.landmarks] == [2 ** (k - 1) + k - 1] * k
    assert is_resolving(A.graph, ADJACENCY, A.landmarks)
    assert min_resolving(A.graph, ADJACENCY)[0] == k


def test_D_box():
    D = build_D_box(2, [0, 0], [2, 2])
    assert D.graph.n == 9
    assert D.graph.degree(D.index("lattice:(1,1)")) == 8
    assert build_D_box(1, [0], [3]).graph == path_graph(4)
    with pytest.raises(ValueError):
        build_D_box(2, [2, 0], [1, 2])


@pytest.mark.parametrize("k, q", [(1, 1), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_I_coordinates_are_distances(k, q):
    fam = build_I(k, q)
    rows = fam.graph.distance_rows
    for x, coords in enumerate(lattice_coords(fam)):
        assert tuple(rows[s][x] for s in fam.landmarks) == coords


def test_I_examples():
    I21 = build_I(2, 1)
    assert [I21.graph.degree(s) for s in I21.landmarks] == [3, 3]
    assert min_resolving(build_I(2, 2).graph, VERTEX_METRIC)[0] == 2
    I23 = build_I(2, 3)
    dm = I23.graph.distances
    for s in I23.landmarks:
        assert [count_at_distance(dm, s, j) for j in (1, 2)] == [3, 5]


def test_ft_metric_examples():
    assert ft_construct_metric(path_graph(4), [0]) == [0, 1, 2]
    assert ft_construct_metric(complete_graph(2), [0]) == [0, 1]
    J = build_J(2)
    out = ft_construct_metric(J.graph, J.landmarks)
    assert is_fault_tolerant(J.graph, VERTEX_METRIC, out) and len(out) <= 10


def test_ft_edge_examples():
    out = ft_construct_edge(path_graph(3), [0])
    assert is_fault_tolerant(path_graph(3), EDGE_METRIC, out) and len(out) <= 3
    H = build_H(2)
    out = ft_construct_edge(H.graph, H.landmarks)
    assert is_fault_tolerant(H.graph, EDGE_METRIC, out) and len(out) <= 10
    assert ft_construct_edge(complete_graph(2), [0]) == [0, 1]


def test_ft_truncated_examples():
    assert ft_construct_truncated(path_graph(4), 3, [0]) == ft_construct_metric(path_graph(4), [0])
    with pytest.raises(ValueError):
        ft_construct_truncated(path_graph(3), 1, [1])
    J = build_J(2)
    out = ft_construct_truncated(J.graph, 2, J.landmarks)
    assert is_fault_tolerant(J.graph, truncated(2), out)


def test_ft_requires_resolving_input():
    with pytest.raises(ValueError):
        ft_construct_metric(path_graph(4), [1])
    with pytest.raises(ValueError):
        ft_construct(path_graph(4), LOCAL, [0])


def test_ft_bound():
    assert ft_bound(VERTEX_METRIC, 2) == 10
    assert ft_bound(EDGE_METRIC, 2) == 10
    assert ft_bound(truncated(2), 1) == 3


def test_pendant_extend():
    g = pendant_extend(complete_graph(3), 0, 5)
    assert min_resolving(g, LOCAL)[0] == 2 and g.max_degree() >= 5
    assert min_resolving(pendant_extend(cycle_graph(4), 1, 3), LOCAL)[0] == 1
    p = pendant_extend(path_graph(3), 1, 1)
    assert (p.n, p.m) == (4, 3)


def test_pendant_extend_keeps_local_dimension_on_small_graphs():
    from resolve_lab.graph import enumerate_labeled_graphs

    for g in enumerate_labeled_graphs(5):
        if not g.is_connected() or g.m == 0:
            continue
        want = min_resolving(g, LOCAL)[0]
        for v in (0, g.n - 1):
            assert min_resolving(pendant_extend(g, v, 2), LOCAL)[0] == want


def test_label_lines():
    text = build_H(1).label_lines()
    assert text.splitlines() == ["0\tc", "1\tleaf:0", "2\tleaf:1", "3\tu_1"]


def test_construction_error_is_runtime_error():
    assert issubclass(ConstructionError, RuntimeError)
