"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import statistics
import time

from resolve_lab import kernels
from resolve_lab.characterize import all_graphs
from resolve_lab.constructions import build_A, build_D_box, build_H, build_J
from resolve_lab.graph import Graph
from resolve_lab.resolve import ALL_VARIANTS, ADJACENCY, EDGE_METRIC, VERTEX_METRIC, min_fault_tolerant, min_resolving


def bfs_box():
    g = build_D_box(2, [0, 0], [29, 29]).graph
    indptr, indices = g.csr
    kernels.bfs_distances(g.n, indptr, indices)


def fresh(g):
    # drop cached distances so every run pays for them
    return Graph(g.n, g.edges)


def solve_families():
    for fam, v in ((build_J(3), VERTEX_METRIC), (build_H(3), EDGE_METRIC), (build_A(3), ADJACENCY)):
        g = fresh(fam.graph)
        min_resolving(g, v)
        min_fault_tolerant(g, v)


SMALL = all_graphs(5)


def sweep_n5():
    for g in SMALL:
        g = fresh(g)
        for v in ALL_VARIANTS:
            min_fault_tolerant(g, v)


CASES = {
    "bfs D_2 box 900 vertices": bfs_box,
    "J_3/H_3/A_3 dim + ft": solve_families,
    "ft dimension, all graphs n<=5, 5 variants": sweep_n5,
}


def timed(fn, repeat):
    runs = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t)
    return statistics.median(runs)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    if kernels._fast is None:
        raise SystemExit("compiled kernels are not built; reinstall without RESOLVE_LAB_NO_EXT")
    print(f"{'case':45} {'pure s':>9} {'compiled s':>11} {'speedup':>8}")
    for name, fn in CASES.items():
        out = {}
        for backend in ("pure", "compiled"):
            prev = kernels.use_backend(backend)
            try:
                out[backend] = timed(fn, args.repeat)
            finally:
                kernels.use_backend(prev)
        print(f"{name:45} {out['pure']:9.3f} {out['compiled']:11.3f} {out['pure'] / out['compiled']:7.1f}x")


if __name__ == "__main__":
    main()
