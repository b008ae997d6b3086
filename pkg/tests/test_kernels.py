import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resolve_lab import _purekernels as pure
from resolve_lab import kernels
from resolve_lab.graph import Graph
from resolve_lab.resolve import ALL_VARIANTS, min_fault_tolerant, min_resolving

from .test_graph import graphs

fast = pytest.importorskip("resolve_lab._speedups")


def _edges(g):
    eu = np.array([u for u, _ in g.edges], dtype=np.int32)
    ev = np.array([v for _, v in g.edges], dtype=np.int32)
    return eu, ev


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=14))
def test_bfs_parity(g):
    indptr, indices = g.csr
    assert np.array_equal(
        pure.bfs_distances(g.n, indptr, indices), fast.bfs_distances(g.n, indptr, indices)
    )


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10), st.sampled_from([(0, 0), (1, 0), (2, 0), (0, 2), (0, 3)]))
def test_mask_parity(g, kind_cap):
    kind, cap = kind_cap
    codes = g.distances.codes
    eu, ev = _edges(g)
    p_pairs, p_masks = pure.distinguish_masks(codes, kind, cap, eu.tolist(), ev.tolist())
    a, b, m = fast.distinguish_masks(codes, kind, cap, eu, ev)
    assert p_pairs == list(zip(a.tolist(), b.tolist()))
    assert p_masks == m.tolist()


def brute_multicover(masks, n, t):
    for size in range(n + 1):
        for S in itertools.combinations(range(n), size):
            s = sum(1 << v for v in S)
            if all((m & s).bit_count() >= t for m in masks):
                return size
    return None


@st.composite
def cover_instances(draw):
    n = draw(st.integers(1, 9))
    t = draw(st.integers(1, 3))
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=12))
    masks = [m for m in masks if m.bit_count() >= t] or [(1 << n) - 1]
    if (1 << n) - 1 in masks and n < t:
        t = n
    return masks, n, t


@settings(max_examples=200, deadline=None)
@given(cover_instances())
def test_multicover_optimal_and_identical(inst):
    masks, n, t = inst
    want = brute_multicover(masks, n, t)
    a = pure.multicover(masks, n, t, -1)
    b = fast.multicover(np.array(masks, dtype=np.uint64), n, t, -1)
    assert a == b
    assert a.bit_count() == want
    assert all((m & a).bit_count() >= t for m in masks)


@settings(max_examples=100, deadline=None)
@given(cover_instances(), st.integers(0, 6))
def test_multicover_limit(inst, limit):
    masks, n, t = inst
    want = brute_multicover(masks, n, t)
    for res in (pure.multicover(masks, n, t, limit),
                fast.multicover(np.array(masks, dtype=np.uint64), n, t, limit)):
        if want <= limit:
            assert res >= 0 and res.bit_count() == want
        else:
            assert res == -1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_solver_witnesses_identical_across_backends(g):
    out = {}
    for name in ("pure", "compiled"):
        prev = kernels.use_backend(name)
        try:
            out[name] = [(min_resolving(g, v), min_fault_tolerant(g, v)) for v in ALL_VARIANTS]
        finally:
            kernels.use_backend(prev)
    assert out["pure"] == out["compiled"]


def test_large_graph_falls_back_to_pure(backend):
    g = Graph(70, [(i, i + 1) for i in range(69)])
    assert min_resolving(g, ALL_VARIANTS[0]) == (1, [0])


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use_backend("gpu")
