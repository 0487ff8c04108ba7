"""The nine primitive operations every graph algorithm is built from.

All kernels are pure: inputs are immutable and never modified, results are
new containers.  Matrix results keep the orientation of the first matrix
argument.  Where a semiring is supplied, any computed value equal to the
additive identity is dropped from the result, so the stored pattern of a
kernel output never contains the operative zero.  Kernels that take a bare
op or monoid have no zero in scope and keep every computed value.

Floating-point accumulation order is fixed: within each output slot,
contributions fold from the additive identity in ascending minor-index
order.  That makes results reproducible and directly comparable against a
dense reference evaluation.
"""

from __future__ import annotations

from typing import Any, Sequence

from .containers import (
    COL,
    ROW,
    CompressedMatrix,
    CooMatrix,
    MatrixDescriptor,
    SparseVector,
    Triple,
    reorient,
    to_compressed,
    to_tuples,
)
from .errors import (
    DimensionMismatchError,
    DomainMismatchError,
    DuplicateIndexError,
    IndexRangeError,
)
from .semirings import BinaryOp, Monoid, Semiring, UnaryOp

_AXES = ("rows", "cols")
_MISSING = object()


def _check_axis(axis: str) -> None:
    if axis not in _AXES:
        raise ValueError(f"axis must be one of {_AXES}")


def _major_dim(m: CompressedMatrix) -> int:
    return m.nrows if m.orientation == ROW else m.ncols


def _require_domain(expected, *containers) -> None:
    for c in containers:
        if c.domain != expected:
            raise DomainMismatchError(
                f"container domain {c.domain.kind} does not match "
                f"operation domain {expected.kind}"
            )


def _from_slices(nrows: int, ncols: int,
                 slices: Sequence[Sequence[tuple[int, Any]]],
                 domain, built: str, wanted: str) -> CompressedMatrix:
    """Assemble a matrix from per-slice (minor, val) lists.

    `built` names the orientation the slices are in (ROW: slices are rows,
    minor indices are columns; COL: the reverse); the result is reoriented
    to `wanted`.
    """
    offsets = [0]
    minors: list[int] = []
    values: list[Any] = []
    for sl in slices:
        for j, v in sl:
            minors.append(j)
            values.append(v)
        offsets.append(len(minors))
    out = CompressedMatrix(
        nrows=nrows,
        ncols=ncols,
        orientation=built,
        offsets=tuple(offsets),
        minor_indices=tuple(minors),
        values=tuple(values),
        descriptor=MatrixDescriptor(),
        domain=domain,
    )
    return reorient(out, wanted)


def _check_index_list(indices: Sequence[int], bound: int, what: str) -> None:
    seen: set[int] = set()
    for i in indices:
        if not isinstance(i, int) or not 0 <= i < bound:
            raise IndexRangeError(f"{what} index {i!r} out of range [0, {bound})")
        if i in seen:
            raise DuplicateIndexError(f"duplicate {what} index {i}")
        seen.add(i)


# ---------------------------------------------------------------------------
# Multiplication


def mxm(a: CompressedMatrix, b: CompressedMatrix, s: Semiring) -> CompressedMatrix:
    """Sparse matrix-matrix multiply over a semiring.

    C(i, k) = add-fold over j of mul(A(i, j), B(j, k)), row-wise with a
    sparse accumulator per output row (Gustavson's method).  Implicit
    entries contribute nothing because the additive identity annihilates
    under mul.
    """
    if a.ncols != b.nrows:
        raise DimensionMismatchError(
            f"mxm: inner dimensions differ ({a.nrows}x{a.ncols} times {b.nrows}x{b.ncols})"
        )
    _require_domain(s.domain, a, b)
    ar = reorient(a, ROW)
    br = reorient(b, ROW)
    add = s.add.op.eval
    mul = s.mul.eval
    zero = s.add.identity
    out_rows = []
    for i in range(ar.nrows):
        acc: dict[int, Any] = {}
        for p in range(ar.offsets[i], ar.offsets[i + 1]):
            j = ar.minor_indices[p]
            av = ar.values[p]
            for q in range(br.offsets[j], br.offsets[j + 1]):
                k = br.minor_indices[q]
                t = mul(av, br.values[q])
                prev = acc.get(k, _MISSING)
                acc[k] = add(zero if prev is _MISSING else prev, t)
        out_rows.append(sorted((k, v) for k, v in acc.items() if not v == zero))
    return _from_slices(a.nrows, b.ncols, out_rows, s.domain, ROW, a.orientation)


def mxv(a: CompressedMatrix, v: SparseVector, s: Semiring,
        transpose_input: bool = False) -> SparseVector:
    """Sparse matrix-vector multiply; the flag multiplies by the transpose.

    w(i) = add-fold over j of mul(A'(i, j), v(j)) where A' is A or its
    transpose.  Computed values equal to the additive identity are dropped.
    """
    in_len = a.nrows if transpose_input else a.ncols
    out_len = a.ncols if transpose_input else a.nrows
    if v.length != in_len:
        raise DimensionMismatchError(
            f"mxv: vector length {v.length} does not match matrix dimension {in_len}"
        )
    _require_domain(s.domain, a, v)
    eff = reorient(a, COL if transpose_input else ROW)
    add = s.add.op.eval
    mul = s.mul.eval
    zero = s.add.identity
    vmap = dict(v.entries)
    entries = []
    for i in range(_major_dim(eff)):
        acc = zero
        hit = False
        for p in range(eff.offsets[i], eff.offsets[i + 1]):
            x = vmap.get(eff.minor_indices[p], _MISSING)
            if x is _MISSING:
                continue
            acc = add(acc, mul(eff.values[p], x))
            hit = True
        if hit and not acc == zero:
            entries.append((i, acc))
    return SparseVector(out_len, tuple(entries), s.domain)


# ---------------------------------------------------------------------------
# Element-wise operations


def ewise_mult(a: CompressedMatrix, b: CompressedMatrix, op: BinaryOp) -> CompressedMatrix:
    """Element-wise multiply on the intersection of the stored patterns."""
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise DimensionMismatchError(
            f"ewise_mult: shapes {a.nrows}x{a.ncols} and {b.nrows}x{b.ncols} differ"
        )
    _require_domain(op.domain, a, b)
    ar = reorient(a, ROW)
    br = reorient(b, ROW)
    fn = op.eval
    out_rows = []
    for i in range(ar.nrows):
        row = []
        pa, ea = ar.offsets[i], ar.offsets[i + 1]
        pb, eb = br.offsets[i], br.offsets[i + 1]
        while pa < ea and pb < eb:
            ja = ar.minor_indices[pa]
            jb = br.minor_indices[pb]
            if ja == jb:
                row.append((ja, fn(ar.values[pa], br.values[pb])))
                pa += 1
                pb += 1
            elif ja < jb:
                pa += 1
            else:
                pb += 1
        out_rows.append(row)
    return _from_slices(a.nrows, a.ncols, out_rows, op.domain, ROW, a.orientation)


def reduce(a: CompressedMatrix, m: Monoid, axis: str) -> SparseVector:
    """Fold each row (axis="rows") or column (axis="cols") under a monoid.

    Empty slices produce no entry.  With a plus monoid over a pattern
    matrix this is the out-degree (rows) or in-degree (cols).
    """
    _check_axis(axis)
    _require_domain(m.domain, a)
    eff = reorient(a, ROW if axis == "rows" else COL)
    length = a.nrows if axis == "rows" else a.ncols
    add = m.op.eval
    entries = []
    for i in range(_major_dim(eff)):
        lo, hi = eff.offsets[i], eff.offsets[i + 1]
        if lo == hi:
            continue
        acc = m.identity
        for p in range(lo, hi):
            acc = add(acc, eff.values[p])
        entries.append((i, acc))
    return SparseVector(length, tuple(entries), m.domain)


# ---------------------------------------------------------------------------
# Sub-matrix selection and insertion


def subref(a: CompressedMatrix, rows: Sequence[int], cols: Sequence[int]) -> CompressedMatrix:
    """Select the sub-matrix B(p, q) = A(rows[p], cols[q]).

    Index lists may be in any order, so this also expresses row/column
    permutation and relabeling.
    """
    _check_index_list(rows, a.nrows, "row")
    _check_index_list(cols, a.ncols, "column")
    ar = reorient(a, ROW)
    colpos = {c: q for q, c in enumerate(cols)}
    out_rows = []
    for r in rows:
        row = []
        for p in range(ar.offsets[r], ar.offsets[r + 1]):
            q = colpos.get(ar.minor_indices[p])
            if q is not None:
                row.append((q, ar.values[p]))
        row.sort(key=lambda e: e[0])
        out_rows.append(row)
    return _from_slices(len(rows), len(cols), out_rows, a.domain, ROW, a.orientation)


def subassign(c: CompressedMatrix, rows: Sequence[int], cols: Sequence[int],
              b: CompressedMatrix) -> CompressedMatrix:
    """Replace the region C(rows x cols) with B.

    Replace semantics: after the call, position (rows[p], cols[q]) holds
    B(p, q) -- including holding nothing where B stores nothing.  Positions
    outside the cross product are untouched, which gives the round-trip law
    subref(subassign(C, r, c, B), r, c) == B.
    """
    if b.nrows != len(rows) or b.ncols != len(cols):
        raise DimensionMismatchError(
            f"subassign: block is {b.nrows}x{b.ncols} but index lists select "
            f"{len(rows)}x{len(cols)}"
        )
    _check_index_list(rows, c.nrows, "row")
    _check_index_list(cols, c.ncols, "column")
    _require_domain(c.domain, b)
    rset = set(rows)
    cset = set(cols)
    kept = [t for t in to_tuples(c).triples if not (t.row in rset and t.col in cset)]
    placed = [Triple(rows[t.row], cols[t.col], t.val) for t in to_tuples(b).triples]
    merged = tuple(sorted(kept + placed, key=lambda t: (t.row, t.col)))
    return to_compressed(CooMatrix(c.nrows, c.ncols, merged, c.domain), c.orientation)


# ---------------------------------------------------------------------------
# Scaling


def scale_matrix(a: CompressedMatrix, d: SparseVector, op: BinaryOp,
                 axis: str) -> CompressedMatrix:
    """Combine each entry with a per-row (axis="rows") or per-column factor.

    A'(i, j) = op(A(i, j), d(i)) or op(A(i, j), d(j)).  Entries whose
    factor is absent from d are dropped (an absent factor annihilates).
    """
    _check_axis(axis)
    expected = a.nrows if axis == "rows" else a.ncols
    if d.length != expected:
        raise DimensionMismatchError(
            f"scale_matrix: factor length {d.length} does not match {expected}"
        )
    _require_domain(op.domain, a, d)
    ar = reorient(a, ROW)
    fn = op.eval
    dmap = dict(d.entries)
    out_rows = []
    for i in range(ar.nrows):
        row = []
        if axis == "rows":
            f = dmap.get(i, _MISSING)
            if f is not _MISSING:
                for p in range(ar.offsets[i], ar.offsets[i + 1]):
                    row.append((ar.minor_indices[p], fn(ar.values[p], f)))
        else:
            for p in range(ar.offsets[i], ar.offsets[i + 1]):
                j = ar.minor_indices[p]
                f = dmap.get(j, _MISSING)
                if f is not _MISSING:
                    row.append((j, fn(ar.values[p], f)))
        out_rows.append(row)
    return _from_slices(a.nrows, a.ncols, out_rows, op.domain, ROW, a.orientation)


def scale_vector(v: SparseVector, w: SparseVector, op: BinaryOp) -> SparseVector:
    """Element-wise combine on the intersection of two vectors' patterns.

    This doubles as the masking primitive: intersecting a frontier with a
    boolean indicator keeps exactly the masked positions.
    """
    if v.length != w.length:
        raise DimensionMismatchError(
            f"scale_vector: lengths {v.length} and {w.length} differ"
        )
    _require_domain(op.domain, v, w)
    fn = op.eval
    entries = []
    ev, ew = v.entries, w.entries
    pv = pw = 0
    while pv < len(ev) and pw < len(ew):
        iv, xv = ev[pv]
        iw, xw = ew[pw]
        if iv == iw:
            entries.append((iv, fn(xv, xw)))
            pv += 1
            pw += 1
        elif iv < iw:
            pv += 1
        else:
            pw += 1
    return SparseVector(v.length, tuple(entries), op.domain)


# ---------------------------------------------------------------------------
# Unary application


def apply_unary(a, f: UnaryOp, drop_zeros_for=None):
    """Apply f to every stored value of a matrix or vector.

    The pattern is unchanged, except that entries whose new value equals
    `drop_zeros_for` (a monoid identity supplied by the caller) are dropped
    when that argument is given.
    """
    if isinstance(a, SparseVector):
        _require_domain(f.input_domain, a)
        if drop_zeros_for is not None:
            f.output_domain.check_value(drop_zeros_for)
        ents = []
        for i, v in a.entries:
            y = f.eval(v)
            if drop_zeros_for is not None and y == drop_zeros_for:
                continue
            ents.append((i, y))
        return SparseVector(a.length, tuple(ents), f.output_domain)
    if isinstance(a, CompressedMatrix):
        _require_domain(f.input_domain, a)
        if drop_zeros_for is None:
            return CompressedMatrix(
                nrows=a.nrows,
                ncols=a.ncols,
                orientation=a.orientation,
                offsets=a.offsets,
                minor_indices=a.minor_indices,
                values=tuple(f.eval(v) for v in a.values),
                descriptor=MatrixDescriptor(),
                domain=f.output_domain,
            )
        f.output_domain.check_value(drop_zeros_for)
        out = []
        for i in range(_major_dim(a)):
            sl = []
            for p in range(a.offsets[i], a.offsets[i + 1]):
                y = f.eval(a.values[p])
                if y == drop_zeros_for:
                    continue
                sl.append((a.minor_indices[p], y))
            out.append(sl)
        return _from_slices(a.nrows, a.ncols, out, f.output_domain,
                            a.orientation, a.orientation)
    raise TypeError(f"apply_unary is not defined for {type(a).__name__}")
