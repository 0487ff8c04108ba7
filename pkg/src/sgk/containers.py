"""Sparse matrix and vector containers: tuples/COO, CSR, CSC.

All containers are immutable after construction and validate their
structural invariants (sortedness, uniqueness, index ranges) when built, so
a container that exists is a container that is well formed.  Matrices use
the row convention A(i, j) nonzero <=> edge i -> j; indices are 0-based
everywhere inside the library.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, NamedTuple, Sequence

from .domains import BOOLEAN, ValueDomain
from .errors import (
    DimensionMismatchError,
    DomainMismatchError,
    DuplicateIndexError,
    IndexRangeError,
    SgkError,
)
from .semirings import Monoid

ROW = "row"
COL = "col"
_ORIENTATIONS = (ROW, COL)


class Triple(NamedTuple):
    """One stored matrix entry."""

    row: int
    col: int
    val: Any


@dataclass(frozen=True)
class MatrixDescriptor:
    """Matrix metadata; `symmetric` records what a file header declared.

    The flag is advisory: is_symmetric() checks the stored pattern and
    values, it never trusts the descriptor.
    """

    symmetric: bool = False


@dataclass(frozen=True)
class CooMatrix:
    """Finalized tuple-format matrix: triples sorted by (row, col), no duplicates."""

    nrows: int
    ncols: int
    triples: tuple[Triple, ...]
    domain: ValueDomain

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionMismatchError("matrix dimensions must be non-negative")
        prev = None
        for t in self.triples:
            if not (0 <= t.row < self.nrows and 0 <= t.col < self.ncols):
                raise IndexRangeError(
                    f"entry ({t.row}, {t.col}) out of range for "
                    f"{self.nrows}x{self.ncols} matrix"
                )
            key = (t.row, t.col)
            if prev is not None and key <= prev:
                raise SgkError("triples must be sorted by (row, col) without duplicates")
            prev = key


@dataclass(frozen=True)
class CompressedMatrix:
    """CSR or CSC storage: offsets per major slice, sorted minor indices, values."""

    nrows: int
    ncols: int
    orientation: str
    offsets: tuple[int, ...]
    minor_indices: tuple[int, ...]
    values: tuple[Any, ...]
    descriptor: MatrixDescriptor
    domain: ValueDomain

    def __post_init__(self):
        if self.orientation not in _ORIENTATIONS:
            raise ValueError(f"orientation must be one of {_ORIENTATIONS}")
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionMismatchError("matrix dimensions must be non-negative")
        major = self.nrows if self.orientation == ROW else self.ncols
        minor = self.ncols if self.orientation == ROW else self.nrows
        nnz = len(self.minor_indices)
        if len(self.values) != nnz:
            raise SgkError("minor_indices and values must have equal length")
        if len(self.offsets) != major + 1 or self.offsets[0] != 0 or self.offsets[-1] != nnz:
            raise SgkError("offsets must span [0, nnz] with one slot per major slice")
        for i in range(major):
            lo, hi = self.offsets[i], self.offsets[i + 1]
            if lo > hi:
                raise SgkError("offsets must be non-decreasing")
            prev = -1
            for p in range(lo, hi):
                j = self.minor_indices[p]
                if j <= prev:
                    raise SgkError("minor indices must be strictly increasing per slice")
                if not 0 <= j < minor:
                    raise IndexRangeError(f"minor index {j} out of range")
                prev = j


@dataclass(frozen=True)
class SparseVector:
    """Sparse vector: (index, value) entries with strictly increasing indices."""

    length: int
    entries: tuple[tuple[int, Any], ...]
    domain: ValueDomain

    def __post_init__(self):
        if self.length < 0:
            raise DimensionMismatchError("vector length must be non-negative")
        prev = -1
        for i, _v in self.entries:
            if i <= prev:
                raise SgkError("vector entries must be strictly increasing by index")
            if not 0 <= i < self.length:
                raise IndexRangeError(f"index {i} out of range for length {self.length}")
            prev = i


# ---------------------------------------------------------------------------
# Construction


def build_from_triples(nrows: int, ncols: int,
                       triples: Iterable[tuple],
                       dup: Monoid) -> CooMatrix:
    """Build a finalized COO matrix, collapsing duplicates with `dup`.

    Duplicate (row, col) positions are folded with dup.op in input order.
    The monoid's domain becomes the matrix domain and every value is
    checked against it.
    """
    domain = dup.domain
    seen: dict[tuple[int, int], Any] = {}
    for pos, t in enumerate(triples):
        r, c, v = t
        if not isinstance(r, int) or not isinstance(c, int) \
                or not (0 <= r < nrows and 0 <= c < ncols):
            raise IndexRangeError(
                f"triple {pos}: position ({r!r}, {c!r}) out of range for "
                f"{nrows}x{ncols} matrix"
            )
        domain.check_value(v)
        key = (r, c)
        if key in seen:
            seen[key] = dup.op.eval(seen[key], v)
        else:
            seen[key] = v
    items = tuple(Triple(r, c, seen[(r, c)]) for r, c in sorted(seen))
    return CooMatrix(nrows, ncols, items, domain)


def vector_from_entries(length: int,
                        entries: Iterable[tuple[int, Any]],
                        domain: ValueDomain) -> SparseVector:
    """Build a sparse vector; duplicate indices are an error."""
    pairs = []
    seen: set[int] = set()
    for i, v in entries:
        if not isinstance(i, int) or not 0 <= i < length:
            raise IndexRangeError(f"index {i!r} out of range for length {length}")
        if i in seen:
            raise DuplicateIndexError(f"duplicate vector index {i}")
        seen.add(i)
        domain.check_value(v)
        pairs.append((i, v))
    pairs.sort(key=lambda p: p[0])
    return SparseVector(length, tuple(pairs), domain)


# ---------------------------------------------------------------------------
# Conversions


def to_compressed(m: CooMatrix, orientation: str = ROW,
                  descriptor: MatrixDescriptor | None = None) -> CompressedMatrix:
    if orientation not in _ORIENTATIONS:
        raise ValueError(f"orientation must be one of {_ORIENTATIONS}")
    major = m.nrows if orientation == ROW else m.ncols
    if orientation == ROW:
        ordered = m.triples
    else:
        ordered = tuple(sorted(m.triples, key=lambda t: (t.col, t.row)))
    counts = [0] * (major + 1)
    minors = []
    values = []
    for t in ordered:
        i = t.row if orientation == ROW else t.col
        j = t.col if orientation == ROW else t.row
        counts[i + 1] += 1
        minors.append(j)
        values.append(t.val)
    for i in range(major):
        counts[i + 1] += counts[i]
    return CompressedMatrix(
        nrows=m.nrows,
        ncols=m.ncols,
        orientation=orientation,
        offsets=tuple(counts),
        minor_indices=tuple(minors),
        values=tuple(values),
        descriptor=descriptor if descriptor is not None else MatrixDescriptor(),
        domain=m.domain,
    )


def to_tuples(m: CompressedMatrix) -> CooMatrix:
    triples = []
    major = m.nrows if m.orientation == ROW else m.ncols
    for i in range(major):
        for p in range(m.offsets[i], m.offsets[i + 1]):
            j = m.minor_indices[p]
            r, c = (i, j) if m.orientation == ROW else (j, i)
            triples.append(Triple(r, c, m.values[p]))
    triples.sort(key=lambda t: (t.row, t.col))
    return CooMatrix(m.nrows, m.ncols, tuple(triples), m.domain)


def reorient(m: CompressedMatrix, orientation: str) -> CompressedMatrix:
    if orientation not in _ORIENTATIONS:
        raise ValueError(f"orientation must be one of {_ORIENTATIONS}")
    if m.orientation == orientation:
        return m
    return to_compressed(to_tuples(m), orientation, m.descriptor)


def transpose(m: CompressedMatrix) -> CompressedMatrix:
    """Exchange rows and columns; the result keeps m's orientation.

    A CSR matrix reinterpreted as CSC (and swapped dimensions) is already
    the transpose, so this is a relabeling plus one reorientation.
    """
    flipped = CompressedMatrix(
        nrows=m.ncols,
        ncols=m.nrows,
        orientation=COL if m.orientation == ROW else ROW,
        offsets=m.offsets,
        minor_indices=m.minor_indices,
        values=m.values,
        descriptor=m.descriptor,
        domain=m.domain,
    )
    return reorient(flipped, m.orientation)


# ---------------------------------------------------------------------------
# Queries


def is_symmetric(m: CompressedMatrix) -> bool:
    """True when pattern and values are equal under transposition."""
    if m.nrows != m.ncols:
        raise DimensionMismatchError("symmetry is defined for square matrices only")
    return to_tuples(m).triples == to_tuples(transpose(m)).triples


def nvals(m) -> int:
    if isinstance(m, CompressedMatrix):
        return len(m.values)
    if isinstance(m, CooMatrix):
        return len(m.triples)
    if isinstance(m, SparseVector):
        return len(m.entries)
    raise TypeError(f"nvals is not defined for {type(m).__name__}")


def dims(m) -> tuple[int, int]:
    if isinstance(m, (CompressedMatrix, CooMatrix)):
        return (m.nrows, m.ncols)
    raise TypeError(f"dims is not defined for {type(m).__name__}")


def entries_of(m) -> tuple[Triple, ...]:
    """All stored entries as (row, col, val) triples, sorted by (row, col)."""
    if isinstance(m, CompressedMatrix):
        return to_tuples(m).triples
    if isinstance(m, CooMatrix):
        return m.triples
    raise TypeError(f"entries_of is not defined for {type(m).__name__}")


def vector_entries(v: SparseVector) -> tuple[tuple[int, Any], ...]:
    """All stored entries as (index, value) pairs, sorted by index."""
    return v.entries


def vector_length(v: SparseVector) -> int:
    return v.length


# ---------------------------------------------------------------------------
# Vector reshaping helpers


def pattern_complement(v: SparseVector) -> SparseVector:
    """Boolean vector that is True exactly where `v` stores nothing."""
    stored = {i for i, _ in v.entries}
    ents = tuple((i, True) for i in range(v.length) if i not in stored)
    return SparseVector(v.length, ents, BOOLEAN)


def densify_vector(v: SparseVector, fill) -> SparseVector:
    """Make every position explicit, using `fill` where nothing is stored."""
    v.domain.check_value(fill)
    stored = dict(v.entries)
    ents = tuple((i, stored.get(i, fill)) for i in range(v.length))
    return SparseVector(v.length, ents, v.domain)


def vector_as_column(v: SparseVector) -> CompressedMatrix:
    """View a length-n vector as an n x 1 matrix (for matrix-level folds)."""
    offsets = [0] * (v.length + 1)
    stored = dict(v.entries)
    values = []
    for i in range(v.length):
        offsets[i + 1] = offsets[i] + (1 if i in stored else 0)
        if i in stored:
            values.append(stored[i])
    return CompressedMatrix(
        nrows=v.length,
        ncols=1,
        orientation=ROW,
        offsets=tuple(offsets),
        minor_indices=tuple(0 for _ in values),
        values=tuple(values),
        descriptor=MatrixDescriptor(),
        domain=v.domain,
    )


# ---------------------------------------------------------------------------
# Validation support (used heavily by the test suite)


def check_invariants(obj, check_values: bool = True) -> bool:
    """Re-run all structural validations; optionally value-check the domain.

    Containers validate themselves on construction, so this re-checks by
    rebuilding and additionally verifies every stored value is a member of
    the declared domain.  Returns True or raises.
    """
    if isinstance(obj, CompressedMatrix):
        CompressedMatrix(obj.nrows, obj.ncols, obj.orientation, obj.offsets,
                         obj.minor_indices, obj.values, obj.descriptor, obj.domain)
        vals: Sequence = obj.values
    elif isinstance(obj, CooMatrix):
        CooMatrix(obj.nrows, obj.ncols, obj.triples, obj.domain)
        vals = [t.val for t in obj.triples]
    elif isinstance(obj, SparseVector):
        SparseVector(obj.length, obj.entries, obj.domain)
        vals = [v for _i, v in obj.entries]
    else:
        raise TypeError(f"no invariants defined for {type(obj).__name__}")
    if check_values:
        for v in vals:
            if not obj.domain.contains(v):
                raise DomainMismatchError(
                    f"stored value {v!r} is outside domain {obj.domain.kind}"
                )
    return True
