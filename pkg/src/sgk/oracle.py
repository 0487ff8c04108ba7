"""Dense brute-force reference implementations.

Everything here is deliberately naive: full two-dimensional arrays, literal
triple loops, textbook graph routines.  The point is to have a second,
structurally unrelated computation of every answer the sparse code
produces, so the two can be checked against each other.  Nothing in this
module imports the kernels or the algorithm compositions.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .containers import CooMatrix, SparseVector, Triple, entries_of, vector_entries
from .errors import DimensionMismatchError
from .semirings import Monoid, Semiring


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major full matrix; absent graph positions hold an explicit fill
    value chosen by the caller (the ambient additive identity)."""

    nrows: int
    ncols: int
    values: tuple  # tuple of row tuples

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("dimensions must be non-negative")
        if len(self.values) != self.nrows:
            raise ValueError("row count does not match nrows")
        for row in self.values:
            if len(row) != self.ncols:
                raise ValueError("row width does not match ncols")

    def at(self, i: int, j: int):
        return self.values[i][j]


def dense_from_rows(rows: Sequence[Sequence[Any]]) -> DenseMatrix:
    vals = tuple(tuple(r) for r in rows)
    return DenseMatrix(len(vals), len(vals[0]) if vals else 0, vals)


# ---------------------------------------------------------------------------
# Dense counterparts of the multiplication and reduction kernels


def dense_mxm(a: DenseMatrix, b: DenseMatrix, s: Semiring) -> DenseMatrix:
    if a.ncols != b.nrows:
        raise DimensionMismatchError(
            f"dense_mxm: inner dimensions differ ({a.ncols} vs {b.nrows})"
        )
    add = s.add.op.eval
    mul = s.mul.eval
    zero = s.add.identity
    out = []
    for i in range(a.nrows):
        row = []
        for k in range(b.ncols):
            acc = zero
            for j in range(a.ncols):
                acc = add(acc, mul(a.values[i][j], b.values[j][k]))
            row.append(acc)
        out.append(tuple(row))
    return DenseMatrix(a.nrows, b.ncols, tuple(out))


def dense_mxv(a: DenseMatrix, v: Sequence[Any], s: Semiring,
              transpose_input: bool = False) -> tuple:
    in_len = a.nrows if transpose_input else a.ncols
    out_len = a.ncols if transpose_input else a.nrows
    if len(v) != in_len:
        raise DimensionMismatchError(
            f"dense_mxv: vector length {len(v)} does not match {in_len}"
        )
    add = s.add.op.eval
    mul = s.mul.eval
    zero = s.add.identity
    out = []
    for i in range(out_len):
        acc = zero
        for j in range(in_len):
            aij = a.values[j][i] if transpose_input else a.values[i][j]
            acc = add(acc, mul(aij, v[j]))
        out.append(acc)
    return tuple(out)


def dense_ewise(a: DenseMatrix, b: DenseMatrix, s: Semiring) -> DenseMatrix:
    """Cell-wise mul over every position.  Where either side holds the
    ambient zero the product is zero again (annihilator), which is exactly
    the sparse intersection rule."""
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise DimensionMismatchError("dense_ewise: shapes differ")
    mul = s.mul.eval
    out = tuple(
        tuple(mul(a.values[i][j], b.values[i][j]) for j in range(a.ncols))
        for i in range(a.nrows)
    )
    return DenseMatrix(a.nrows, a.ncols, out)


def dense_reduce(a: DenseMatrix, m: Monoid, axis: str) -> tuple:
    if axis not in ("rows", "cols"):
        raise ValueError('axis must be "rows" or "cols"')
    add = m.op.eval
    out = []
    if axis == "rows":
        for i in range(a.nrows):
            acc = m.identity
            for j in range(a.ncols):
                acc = add(acc, a.values[i][j])
            out.append(acc)
    else:
        for j in range(a.ncols):
            acc = m.identity
            for i in range(a.nrows):
                acc = add(acc, a.values[i][j])
            out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# Textbook graph routines


def oracle_bfs(adjacency: Sequence[Iterable[int]], sources: Iterable[int]) -> dict:
    """Queue BFS over adjacency lists; returns {vertex: hop level}."""
    levels = {s: 0 for s in sources}
    q = deque(levels)
    while q:
        u = q.popleft()
        for v in adjacency[u]:
            if v not in levels:
                levels[v] = levels[u] + 1
                q.append(v)
    return levels


def oracle_sssp(adjacency: Sequence[Iterable[tuple[int, Any]]], source: int) -> dict:
    """Dijkstra with a binary heap over (neighbor, weight) adjacency lists;
    returns {vertex: distance} for reachable vertices."""
    dist: dict[int, Any] = {}
    heap = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in dist:
            continue
        dist[u] = d
        for v, w in adjacency[u]:
            if v not in dist:
                heapq.heappush(heap, (d + w, v))
    return dist


def oracle_components(n: int, edges: Iterable[tuple[int, int]]) -> list:
    """Union-find; returns the smallest-index label per vertex."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            # Smaller root wins so the final label is the component minimum.
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    return [find(i) for i in range(n)]


def oracle_triangles(n: int, edges: Iterable[tuple[int, int]]) -> int:
    """Count triangles by checking, for every vertex, which pairs of its
    higher-numbered neighbors are themselves adjacent."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    count = 0
    for u in range(n):
        nb = sorted(w for w in adj[u] if w > u)
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                if nb[j] in adj[nb[i]]:
                    count += 1
    return count


def oracle_clustering(n: int, edges: Iterable[tuple[int, int]]) -> dict:
    """Per-vertex clustering coefficient by wedge enumeration; vertices of
    degree < 2 are omitted."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    coeff = {}
    for u in range(n):
        d = len(adj[u])
        if d < 2:
            continue
        nb = sorted(adj[u])
        closed = 0
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                if nb[j] in adj[nb[i]]:
                    closed += 1
        coeff[u] = closed / (d * (d - 1) / 2)
    return coeff


def oracle_pagerank(n: int, edges: Iterable[tuple[int, int]], alpha: float,
                    max_iters: int = 10000, tol: float = 1e-12) -> list:
    """Power iteration phrased per-edge (no normalized matrix is formed),
    so the arithmetic takes a different path from the kernel version."""
    out = [[] for _ in range(n)]
    outdeg = [0] * n
    for u, v in edges:
        out[u].append(v)
        outdeg[u] += 1
    if any(d == 0 for d in outdeg):
        raise ValueError("dangling vertex")
    rank = [1.0 / n] * n
    base = (1.0 - alpha) / n
    for _ in range(max_iters):
        nxt = [0.0] * n
        for u in range(n):
            share = rank[u] / outdeg[u]
            for v in out[u]:
                nxt[v] += share
        nxt = [base + alpha * x for x in nxt]
        change = sum(abs(nxt[i] - rank[i]) for i in range(n))
        rank = nxt
        if change <= tol:
            break
    return rank


# ---------------------------------------------------------------------------
# Bridges between sparse containers and dense arrays


def to_dense(m, zero) -> DenseMatrix:
    """Expand a sparse matrix (compressed or triple form) to a full array
    with `zero` in every unstored position."""
    grid = [[zero] * m.ncols for _ in range(m.nrows)]
    triples = m.triples if isinstance(m, CooMatrix) else entries_of(m)
    for r, c, v in triples:
        grid[r][c] = v
    return DenseMatrix(m.nrows, m.ncols, tuple(tuple(row) for row in grid))


def vector_to_dense(v: SparseVector, zero) -> tuple:
    out = [zero] * v.length
    for i, x in vector_entries(v):
        out[i] = x
    return tuple(out)


def from_dense(d: DenseMatrix, zero, domain) -> CooMatrix:
    """Collect every cell different from `zero` into a triple-form matrix."""
    triples = []
    for i in range(d.nrows):
        for j in range(d.ncols):
            x = d.values[i][j]
            if not x == zero:
                triples.append(Triple(i, j, x))
    return CooMatrix(d.nrows, d.ncols, tuple(triples), domain)


def vector_from_dense(values: Sequence[Any], zero, domain) -> SparseVector:
    entries = tuple(
        (i, x) for i, x in enumerate(values) if not x == zero
    )
    return SparseVector(len(values), entries, domain)
