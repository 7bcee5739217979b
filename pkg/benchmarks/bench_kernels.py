"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from tileforge import kernels
from tileforge.lattice import LatticeSet
from tileforge.torus import FiniteAbelianGroup, translate_rows


def cover_case():
    # a six-cell tile on Z_12 x Z_11 with no tiling (exhaustive search)
    g = FiniteAbelianGroup((12, 11))
    tile = LatticeSet(2, ((0, 3), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2)))
    rows, _ = translate_rows(tile, g)
    return (rows, g.order, 10**7)


def clique_case(rng):
    # dense random graph; asks for a clique that is not there
    n = 150
    upper = np.triu((rng.random((n, n)) < 0.6).astype(np.uint8), 1)
    return (upper | upper.T, 16, 10**7)


def cube_cloud(rng, n, dim, span):
    arr = np.unique(rng.integers(0, span, size=(n, dim)), axis=0)
    order = np.lexsort(arr.T[::-1])
    return arr[order].astype(np.int64)


def labels_case(rng):
    return (cube_cloud(rng, 6000, 3, 40), 1, kernels.MODE_MOORE)


def distance_case(rng):
    arr = cube_cloud(rng, 3000, 4, 30)
    ranks = (arr[:, 0] >= 15).astype(np.int64)
    return (arr, ranks)


def overlap_case(rng):
    arr = cube_cloud(rng, 4000, 3, 60) * 2
    ranks = rng.integers(0, 8, size=arr.shape[0]).astype(np.int64)
    shift = np.array([1, 1, 0], dtype=np.int64)
    return (arr, ranks, 8, shift, 2)


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    cases = {
        "exact_cover": cover_case(),
        "find_clique": clique_case(rng),
        "contact_labels": labels_case(rng),
        "min_cross_distance": distance_case(rng),
        "shifted_overlap": overlap_case(rng),
    }
    backends = kernels.available_backends()
    names = sorted(backends)
    print("kernel".ljust(20) + "".join(n.rjust(12) for n in names) + "speedup".rjust(10))
    for kernel, case in cases.items():
        times = {n: best_of(getattr(backends[n], kernel), case, args.repeat) for n in names}
        row = kernel.ljust(20) + "".join(f"{times[n]:11.4f}s" for n in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
