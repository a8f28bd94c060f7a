"""Compare the numba and pure-Python kernel paths on representative inputs.

    python benchmarks/bench_kernels.py [--repeat N]

The first numba call per kernel includes compilation (or a cache load), so
each kernel is warmed once before timing.
"""

import argparse
import time

import numpy as np

from polyind import accel, build_extremal, enumerate_polyhedra


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    small = list(enumerate_polyhedra(8))
    big = build_extremal(3, 12).result.graph  # 56 vertices, within the MIS envelope
    huge = build_extremal(7, 12).result.graph

    def mis(k):
        def run():
            for g in small:
                k.max_independent_mask(accel.as_masks(g.masks, k.jit), g.n)
            k.max_independent_mask(accel.as_masks(big.masks, k.jit), big.n)
        return run

    def bfs(k):
        ip, ix = huge.csr
        return lambda: k.bfs_distances(ip, ix, huge.n)

    def cut(k):
        ip, ix = huge.csr
        return lambda: k.vertex_cut(ip, ix, huge.n, 3)

    def refine(k):
        ip, ix = huge.csr
        colors = np.zeros(huge.n, dtype=np.int64)
        return lambda: k.refine_colors(ip, ix, huge.n, colors)

    def quad(k):
        ip, ix = big.csr
        return lambda: k.separating_4cycle(ip, ix, big.n)

    return [
        (f"max_independent ({len(small)} graphs n=8 + n={big.n})", mis),
        (f"bfs_distances (n={huge.n})", bfs),
        (f"vertex_cut t=3 (n={huge.n})", cut),
        (f"refine_colors (n={huge.n})", refine),
        (f"separating_4cycle (n={big.n})", quad),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py, jit = accel.kernels(jit=False), accel.kernels(jit=True)
    print(f"{'kernel':44} {'python s':>10} {'numba s':>10} {'speedup':>8}")
    for name, make in workloads():
        fj = make(jit)
        fj()  # warm-up / compile
        tj = _best(fj, args.repeat)
        tp = _best(make(py), args.repeat)
        print(f"{name:44} {tp:10.4f} {tj:10.4f} {tp / tj:8.1f}")


if __name__ == "__main__":
    main()
