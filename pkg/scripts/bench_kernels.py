#!/usr/bin/env python3
"""Time the multiply kernels on random matrices of growing size.

Prints one table row per size: nnz, mxm wall time, mxv wall time, and the
effective multiply-add rate for mxm.
"""

import argparse
import random
import time

from sgk.containers import CooMatrix, SparseVector, Triple, nvals, to_compressed
from sgk.domains import FLOAT64
from sgk.kernels import mxm, mxv
from sgk.semirings import registry_get


def random_matrix(n: int, density: float, rng: random.Random):
    cells = {}
    target = int(n * n * density)
    for _ in range(target):
        cells[(rng.randrange(n), rng.randrange(n))] = rng.uniform(-1.0, 1.0)
    triples = tuple(Triple(r, c, v) for (r, c), v in sorted(cells.items()))
    return to_compressed(CooMatrix(n, n, triples, FLOAT64))


def random_dense_vector(n: int, rng: random.Random) -> SparseVector:
    return SparseVector(n, tuple((i, rng.uniform(-1.0, 1.0)) for i in range(n)),
                        FLOAT64)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="50,100,200,400",
                    help="comma-separated matrix dimensions")
    ap.add_argument("--density", type=float, default=0.02)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3,
                    help="take the best of this many runs")
    args = ap.parse_args()

    sizes = [int(t) for t in args.sizes.split(",") if t.strip()]
    rng = random.Random(args.seed)
    s = registry_get("plus_times/float-double")

    print(f"{'n':>6} {'nnz':>8} {'mxm ms':>10} {'mxv ms':>10} {'Mmul/s':>8}")
    for n in sizes:
        a = random_matrix(n, args.density, rng)
        b = random_matrix(n, args.density, rng)
        v = random_dense_vector(n, rng)

        best_mm = min(
            timed(lambda: mxm(a, b, s)) for _ in range(args.repeat)
        )
        best_mv = min(
            timed(lambda: mxv(a, v, s)) for _ in range(args.repeat)
        )
        # Each stored pair (a_ik, b_kj) costs one multiply-add in mxm.
        flops = estimate_mxm_work(a, b)
        rate = flops / best_mm / 1e6 if best_mm else float("inf")
        print(f"{n:>6} {nvals(a):>8} {best_mm * 1e3:>10.2f} "
              f"{best_mv * 1e3:>10.2f} {rate:>8.2f}")


def timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def row_nnz(m, i: int) -> int:
    return m.offsets[i + 1] - m.offsets[i]


def estimate_mxm_work(a, b) -> int:
    """Number of elementary products Gustavson's method performs."""
    b_rows = [row_nnz(b, k) for k in range(b.nrows)]
    total = 0
    for i in range(a.nrows):
        for p in range(a.offsets[i], a.offsets[i + 1]):
            total += b_rows[a.minor_indices[p]]
    return total


if __name__ == "__main__":
    main()
