"""Sparse semiring graph kernels.

Sparse matrices and vectors over pluggable semirings, nine primitive
kernels, and graph algorithms (BFS, shortest paths, components, triangles,
clustering, PageRank) expressed purely through those primitives.
"""

from .algorithms import (
    BfsResult,
    PageRankResult,
    bfs,
    clustering_coefficients,
    connected_components,
    degrees,
    pagerank,
    sssp_minplus,
    triangle_count,
)
from .containers import (
    COL,
    ROW,
    CompressedMatrix,
    CooMatrix,
    MatrixDescriptor,
    SparseVector,
    Triple,
    build_from_triples,
    densify_vector,
    dims,
    entries_of,
    is_symmetric,
    nvals,
    pattern_complement,
    reorient,
    to_compressed,
    to_tuples,
    transpose,
    vector_as_column,
    vector_entries,
    vector_from_entries,
)
from .domains import (
    ALL_DOMAINS,
    BOOLEAN,
    COMPLEX128,
    FLOAT32,
    FLOAT64,
    INT8,
    INT16,
    INT32,
    INT64,
    OPAQUE,
    UINT8,
    UINT16,
    UINT32,
    UINT64,
    ValueDomain,
    domain_from_kind,
    ulp_distance,
)
from .errors import (
    DimensionMismatchError,
    DomainMismatchError,
    DuplicateIndexError,
    DuplicateNameError,
    IndexRangeError,
    InternalInvariantError,
    LawCheckError,
    ParseError,
    PreconditionError,
    SgkError,
    UnknownSemiringError,
    UnserializableDomainError,
    UnsupportedDomainError,
    UsageError,
)
from .io_formats import (
    MatrixMarketHeader,
    read_edge_list,
    read_matrix_market,
    write_matrix_market,
)
from .kernels import (
    apply_unary,
    ewise_mult,
    mxm,
    mxv,
    reduce,
    scale_matrix,
    scale_vector,
    subassign,
    subref,
)
from .semirings import (
    CANONICAL_NAMES,
    BinaryOp,
    Monoid,
    Semiring,
    UnaryOp,
    and_op,
    check_law_triples,
    law_sample_pool,
    max_monoid,
    min_monoid,
    or_monoid,
    plus_monoid,
    register_semiring,
    registry_get,
    select2nd_op,
    times_op,
    tropical_plus_op,
    verify_semiring_laws,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_DOMAINS",
    "BOOLEAN",
    "BfsResult",
    "BinaryOp",
    "CANONICAL_NAMES",
    "COL",
    "COMPLEX128",
    "CompressedMatrix",
    "CooMatrix",
    "DimensionMismatchError",
    "DomainMismatchError",
    "DuplicateIndexError",
    "DuplicateNameError",
    "FLOAT32",
    "FLOAT64",
    "INT16",
    "INT32",
    "INT64",
    "INT8",
    "IndexRangeError",
    "InternalInvariantError",
    "LawCheckError",
    "MatrixDescriptor",
    "MatrixMarketHeader",
    "Monoid",
    "OPAQUE",
    "PageRankResult",
    "ParseError",
    "PreconditionError",
    "ROW",
    "Semiring",
    "SgkError",
    "SparseVector",
    "Triple",
    "UINT16",
    "UINT32",
    "UINT64",
    "UINT8",
    "UnaryOp",
    "UnknownSemiringError",
    "UnserializableDomainError",
    "UnsupportedDomainError",
    "UsageError",
    "ValueDomain",
    "and_op",
    "apply_unary",
    "bfs",
    "build_from_triples",
    "check_law_triples",
    "clustering_coefficients",
    "connected_components",
    "degrees",
    "densify_vector",
    "dims",
    "domain_from_kind",
    "entries_of",
    "ewise_mult",
    "is_symmetric",
    "law_sample_pool",
    "max_monoid",
    "min_monoid",
    "mxm",
    "mxv",
    "nvals",
    "or_monoid",
    "pagerank",
    "pattern_complement",
    "plus_monoid",
    "read_edge_list",
    "read_matrix_market",
    "reduce",
    "register_semiring",
    "registry_get",
    "reorient",
    "scale_matrix",
    "scale_vector",
    "select2nd_op",
    "sssp_minplus",
    "subassign",
    "subref",
    "times_op",
    "to_compressed",
    "to_tuples",
    "transpose",
    "triangle_count",
    "tropical_plus_op",
    "ulp_distance",
    "vector_as_column",
    "vector_entries",
    "vector_from_entries",
    "verify_semiring_laws",
    "write_matrix_market",
]
