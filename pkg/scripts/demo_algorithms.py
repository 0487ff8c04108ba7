#!/usr/bin/env python3
"""Run every graph algorithm on one seeded random graph and print a summary.

Builds an undirected graph for the structural algorithms, a weighted
digraph for shortest paths, and a strongly connected digraph for PageRank,
then prints what each algorithm found.
"""

import argparse
import random

from sgk.algorithms import (
    bfs,
    clustering_coefficients,
    connected_components,
    degrees,
    pagerank,
    sssp_minplus,
    triangle_count,
)
from sgk.containers import CooMatrix, Triple, nvals, to_compressed, vector_entries
from sgk.domains import FLOAT64, INT64


def build_undirected(n: int, p: float, rng: random.Random):
    cells = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                cells.add((u, v))
                cells.add((v, u))
    triples = tuple(Triple(u, v, 1) for u, v in sorted(cells))
    return to_compressed(CooMatrix(n, n, triples, INT64))


def build_weighted_digraph(n: int, p: float, rng: random.Random):
    triples = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                triples.append(Triple(u, v, round(rng.uniform(0.5, 9.5), 2)))
    return to_compressed(CooMatrix(n, n, tuple(triples), FLOAT64))


def build_strongly_connected(n: int, p: float, rng: random.Random):
    cells = {(i, (i + 1) % n) for i in range(n)}
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                cells.add((u, v))
    triples = tuple(Triple(u, v, 1.0) for u, v in sorted(cells))
    return to_compressed(CooMatrix(n, n, triples, FLOAT64))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=30, help="vertex count")
    ap.add_argument("--seed", type=int, default=7, help="random seed")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    n = args.n

    g = build_undirected(n, 3.0 / n, rng)
    print(f"undirected graph: {n} vertices, {nvals(g) // 2} edges")

    deg = dict(vector_entries(degrees(g, "out")))
    print(f"  max degree: {max(deg.values(), default=0)}")

    r = bfs(g, [0])
    levels = dict(vector_entries(r.levels))
    print(f"  bfs from 0: reached {r.reached_count}, "
          f"eccentricity {max(levels.values())}")

    labels = vector_entries(connected_components(g))
    print(f"  components: {len({x for _i, x in labels})}")

    print(f"  triangles: {triangle_count(g)}")

    cc = dict(vector_entries(clustering_coefficients(g)))
    if cc:
        mean = sum(cc.values()) / len(cc)
        print(f"  mean clustering (over {len(cc)} closed vertices): {mean:.4f}")
    else:
        print("  mean clustering: no vertex closes a wedge")

    w = build_weighted_digraph(n, 3.0 / n, rng)
    dist = dict(vector_entries(sssp_minplus(w, 0)))
    far = max(dist, key=dist.get)
    print(f"weighted digraph: {nvals(w)} edges")
    print(f"  sssp from 0: {len(dist)} reachable, "
          f"farthest is {far} at {dist[far]:.2f}")

    sc = build_strongly_connected(n, 1.5 / n, rng)
    pr = pagerank(sc, alpha=0.85, max_iters=200, tol=1e-10)
    ranks = dict(vector_entries(pr.ranks))
    top = sorted(ranks, key=ranks.get, reverse=True)[:3]
    print(f"strongly connected digraph: {nvals(sc)} edges")
    print(f"  pagerank converged in {pr.iterations} iterations "
          f"(residual {pr.residual:.2e})")
    print("  top vertices: " + ", ".join(
        f"{v} ({ranks[v]:.4f})" for v in top
    ))


if __name__ == "__main__":
    main()
