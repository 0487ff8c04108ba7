import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import (
    assert_matrix_equals_dense,
    assert_vector_equals_dense,
    int_sampler,
    random_csr,
    random_vector,
    sampler_for,
    snapshot,
)
from sgk.containers import (
    COL,
    ROW,
    CooMatrix,
    SparseVector,
    Triple,
    check_invariants,
    entries_of,
    nvals,
    to_compressed,
    to_tuples,
    vector_entries,
)
from sgk.domains import BOOLEAN, FLOAT64, INT64
from sgk.errors import (
    DimensionMismatchError,
    DomainMismatchError,
    DuplicateIndexError,
    IndexRangeError,
)
from sgk.kernels import (
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
from sgk.oracle import dense_mxm, dense_mxv, to_dense
from sgk.semirings import BinaryOp, UnaryOp, plus_monoid, registry_get


def pattern_matrix(n, edges, domain=BOOLEAN, one=True):
    triples = tuple(Triple(u, v, one) for u, v in sorted(edges))
    return to_compressed(CooMatrix(n, n, triples, domain))


def k3(domain=INT64, one=1):
    return pattern_matrix(3, [(u, v) for u in range(3) for v in range(3) if u != v],
                          domain, one)


# ---------------------------------------------------------------------------
# mxm


def test_mxm_boolean_path_two_hop():
    a = pattern_matrix(3, [(0, 1), (1, 2)])
    c = mxm(a, a, registry_get("or_and"))
    assert entries_of(c) == (Triple(0, 2, True),)


def test_mxm_identity_matrix_is_neutral():
    rng = random.Random(5)
    s = registry_get("plus_times/float-double")
    a = random_csr(6, 6, 0.4, FLOAT64, sampler_for(s.name), rng)
    eye = to_compressed(
        CooMatrix(6, 6, tuple(Triple(i, i, 1.0) for i in range(6)), FLOAT64)
    )
    assert entries_of(mxm(a, eye, s)) == entries_of(a)
    assert entries_of(mxm(eye, a, s)) == entries_of(a)


def test_mxm_min_plus_two_edge_path():
    s = registry_get("min_plus/float-double")
    a = to_compressed(
        CooMatrix(3, 3, (Triple(0, 1, 2.0), Triple(1, 2, 3.0)), FLOAT64)
    )
    c = mxm(a, a, s)
    assert entries_of(c) == (Triple(0, 2, 5.0),)


def test_mxm_dimension_and_domain_errors():
    s = registry_get("plus_times/signed-int-64")
    a = pattern_matrix(3, [(0, 1)], INT64, 1)
    b = to_compressed(CooMatrix(4, 3, (), INT64))
    with pytest.raises(DimensionMismatchError):
        mxm(a, b, s)
    f = to_compressed(CooMatrix(3, 3, (), FLOAT64))
    with pytest.raises(DomainMismatchError):
        mxm(a, f, s)


def test_mxm_result_follows_first_operand_orientation():
    s = registry_get("plus_times/signed-int-64")
    a = to_compressed(to_tuples(k3()), COL)
    b = k3()
    assert mxm(a, b, s).orientation == COL
    assert mxm(b, a, s).orientation == ROW


def test_mxm_drops_computed_zeros():
    s = registry_get("plus_times/signed-int-64")
    a = to_compressed(CooMatrix(2, 2, (Triple(0, 0, 1), Triple(0, 1, 1)), INT64))
    b = to_compressed(CooMatrix(2, 1, (Triple(0, 0, 5), Triple(1, 0, -5)), INT64))
    c = mxm(a, b, s)
    assert entries_of(c) == ()
    assert check_invariants(c)


def test_mxm_associativity_exact_for_wrapping_ints_and_booleans():
    rng = random.Random(17)
    for name in ("plus_times/signed-int-64", "or_and/boolean"):
        s = registry_get(name)
        sample = sampler_for("plus_times") if "int" in name else sampler_for("or_and")
        draw = (lambda r: r.randint(-99, 99)) if "int" in name else sample
        for _ in range(10):
            a = random_csr(5, 4, 0.4, s.domain, draw, rng)
            b = random_csr(4, 6, 0.4, s.domain, draw, rng)
            c = random_csr(6, 3, 0.4, s.domain, draw, rng)
            left = mxm(mxm(a, b, s), c, s)
            right = mxm(a, mxm(b, c, s), s)
            assert entries_of(left) == entries_of(right)


# ---------------------------------------------------------------------------
# mxv


def test_mxv_advances_frontier_along_path():
    s = registry_get("or_and")
    a = pattern_matrix(3, [(0, 1), (1, 2)])
    e0 = SparseVector(3, ((0, True),), BOOLEAN)
    w = mxv(a, e0, s, transpose_input=True)
    assert vector_entries(w) == ((1, True),)


def test_mxv_empty_vector_gives_empty_result():
    s = registry_get("or_and")
    a = pattern_matrix(3, [(0, 1), (1, 2)])
    w = mxv(a, SparseVector(3, (), BOOLEAN), s)
    assert vector_entries(w) == ()


def test_mxv_min_plus_relaxation_step():
    s = registry_get("min_plus/float-double")
    a = to_compressed(
        CooMatrix(3, 3, (Triple(0, 1, 2.0), Triple(1, 2, 3.0)), FLOAT64)
    )
    dist = SparseVector(3, ((0, 0.0),), FLOAT64)
    w = mxv(a, dist, s, transpose_input=True)
    assert vector_entries(w) == ((1, 2.0),)


def test_mxv_without_transpose_collects_successor_values():
    s = registry_get("plus_times/signed-int-64")
    a = to_compressed(CooMatrix(2, 3, (Triple(0, 2, 4), Triple(1, 0, 3)), INT64))
    v = SparseVector(3, ((0, 10), (2, 100)), INT64)
    w = mxv(a, v, s)
    assert vector_entries(w) == ((0, 400), (1, 30))


def test_mxv_length_checks_respect_transpose_flag():
    s = registry_get("plus_times/signed-int-64")
    a = to_compressed(CooMatrix(2, 3, (), INT64))
    v2 = SparseVector(2, (), INT64)
    v3 = SparseVector(3, (), INT64)
    assert vector_entries(mxv(a, v3, s)) == ()
    assert vector_entries(mxv(a, v2, s, transpose_input=True)) == ()
    with pytest.raises(DimensionMismatchError):
        mxv(a, v2, s)
    with pytest.raises(DimensionMismatchError):
        mxv(a, v3, s, transpose_input=True)


# ---------------------------------------------------------------------------
# ewise_mult


def test_ewise_mult_boolean_self_intersection():
    a = pattern_matrix(4, [(0, 1), (2, 3)])
    c = ewise_mult(a, a, registry_get("or_and").mul)
    assert entries_of(c) == entries_of(a)


def test_ewise_mult_disjoint_patterns_empty():
    a = pattern_matrix(3, [(0, 1)], INT64, 1)
    b = pattern_matrix(3, [(1, 2)], INT64, 1)
    c = ewise_mult(a, b, registry_get("plus_times/signed-int-64").mul)
    assert entries_of(c) == ()


def test_ewise_mult_counts_triangle_corners_of_k3():
    s = registry_get("plus_times/signed-int-64")
    a = k3()
    b = mxm(a, a, s)
    corners = ewise_mult(a, b, s.mul)
    total = sum(t.val for t in entries_of(corners))
    assert total == 6  # one triangle, six corner traversals


def test_ewise_mult_keeps_zero_results():
    op = registry_get("plus_times/signed-int-64").mul
    a = pattern_matrix(2, [(0, 1)], INT64, 1)
    b = to_compressed(CooMatrix(2, 2, (Triple(0, 1, 0),), INT64))
    c = ewise_mult(a, b, op)
    assert entries_of(c) == (Triple(0, 1, 0),)


def test_ewise_mult_shape_mismatch():
    a = pattern_matrix(2, [(0, 1)], INT64, 1)
    b = to_compressed(CooMatrix(3, 3, (), INT64))
    with pytest.raises(DimensionMismatchError):
        ewise_mult(a, b, registry_get("plus_times/signed-int-64").mul)


# ---------------------------------------------------------------------------
# reduce


def test_reduce_rows_of_k3_gives_out_degrees():
    deg = reduce(k3(), plus_monoid(INT64), "rows")
    assert vector_entries(deg) == ((0, 2), (1, 2), (2, 2))


def test_reduce_empty_matrix_is_empty_vector():
    m = to_compressed(CooMatrix(3, 3, (), INT64))
    assert vector_entries(reduce(m, plus_monoid(INT64), "rows")) == ()


def test_reduce_single_entry_max_cols():
    from sgk.semirings import max_monoid

    m = to_compressed(CooMatrix(2, 2, (Triple(0, 1, 7),), INT64))
    v = reduce(m, max_monoid(INT64), "cols")
    assert vector_entries(v) == ((1, 7),)


def test_reduce_rejects_bad_axis():
    with pytest.raises(ValueError):
        reduce(k3(), plus_monoid(INT64), "diag")


def test_reduce_keeps_stored_values_equal_to_identity():
    m = to_compressed(CooMatrix(2, 2, (Triple(0, 0, 0), Triple(0, 1, 0)), INT64))
    v = reduce(m, plus_monoid(INT64), "rows")
    assert vector_entries(v) == ((0, 0),)


# ---------------------------------------------------------------------------
# subref / subassign


def test_subref_induced_subgraph_of_k3():
    sub = subref(k3(), [0, 1], [0, 1])
    assert entries_of(sub) == (Triple(0, 1, 1), Triple(1, 0, 1))


def test_subref_full_range_identity():
    m = k3()
    sub = subref(m, [0, 1, 2], [0, 1, 2])
    assert entries_of(sub) == entries_of(m)


def test_subref_reversal_permutation_matches_dense():
    rng = random.Random(23)
    m = random_csr(5, 5, 0.4, INT64, int_sampler(), rng)
    perm = [4, 3, 2, 1, 0]
    sub = subref(m, perm, perm)
    dense = to_dense(m, 0)
    for i in range(5):
        for j in range(5):
            got = dict(((t.row, t.col), t.val) for t in entries_of(sub)).get((i, j), 0)
            assert got == dense.values[perm[i]][perm[j]]


def test_subref_rejects_bad_indices():
    with pytest.raises(IndexRangeError):
        subref(k3(), [0, 7], [0])
    with pytest.raises(DuplicateIndexError):
        subref(k3(), [0, 0], [1])


def test_subassign_empty_block_clears_region():
    m = k3()
    empty = to_compressed(CooMatrix(2, 2, (), INT64))
    c = subassign(m, [0, 1], [0, 1], empty)
    remaining = entries_of(c)
    assert Triple(0, 1, 1) not in remaining
    assert Triple(1, 0, 1) not in remaining
    assert Triple(0, 2, 1) in remaining  # outside the block column set


def test_subassign_into_disjoint_empty_region_adds_nnz():
    base = pattern_matrix(4, [(0, 1)], INT64, 1)
    block = pattern_matrix(2, [(0, 0), (1, 1)], INT64, 1)
    c = subassign(base, [2, 3], [2, 3], block)
    assert nvals(c) == nvals(base) + nvals(block)


def test_subassign_subref_round_trip():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.randint(2, 8)
        m = random_csr(n, n, 0.4, INT64, int_sampler(), rng)
        k = rng.randint(1, n)
        rows = rng.sample(range(n), k)
        cols = rng.sample(range(n), k)
        block = random_csr(k, k, 0.5, INT64, int_sampler(), rng)
        assert entries_of(subref(subassign(m, rows, cols, block), rows, cols)) \
            == entries_of(block)


def test_subassign_shape_mismatch():
    with pytest.raises(DimensionMismatchError):
        subassign(k3(), [0], [0, 1], to_compressed(CooMatrix(2, 2, (), INT64)))


# ---------------------------------------------------------------------------
# scale_matrix / scale_vector


def test_scale_rows_to_stochastic():
    s = registry_get("plus_times/float-double")
    a = k3(FLOAT64, 1.0)
    deg = reduce(a, s.add, "rows")
    inv = apply_unary(deg, UnaryOp("reciprocal", FLOAT64, FLOAT64, lambda x: 1.0 / x))
    p = scale_matrix(a, inv, s.mul, "rows")
    sums = reduce(p, s.add, "rows")
    assert all(abs(x - 1.0) < 1e-15 for _, x in vector_entries(sums))


def test_scale_matrix_all_ones_is_identity():
    m = k3()
    ones = SparseVector(3, ((0, 1), (1, 1), (2, 1)), INT64)
    out = scale_matrix(m, ones, registry_get("plus_times/signed-int-64").mul, "cols")
    assert entries_of(out) == entries_of(m)


def test_scale_matrix_empty_factor_drops_everything():
    m = k3()
    empty = SparseVector(3, (), INT64)
    out = scale_matrix(m, empty, registry_get("plus_times/signed-int-64").mul, "rows")
    assert entries_of(out) == ()


def test_scale_matrix_cols_uses_column_factor():
    m = to_compressed(CooMatrix(2, 2, (Triple(0, 0, 2), Triple(0, 1, 3)), INT64))
    d = SparseVector(2, ((1, 10),), INT64)
    out = scale_matrix(m, d, registry_get("plus_times/signed-int-64").mul, "cols")
    assert entries_of(out) == (Triple(0, 1, 30),)


def test_scale_vector_masks_frontier():
    op = registry_get("or_and").mul
    frontier = SparseVector(3, ((0, True), (1, True)), BOOLEAN)
    mask = SparseVector(3, ((1, True), (2, True)), BOOLEAN)
    out = scale_vector(frontier, mask, op)
    assert vector_entries(out) == ((1, True),)


def test_scale_vector_identity_and_disjoint():
    op = registry_get("plus_times/signed-int-64").mul
    v = SparseVector(3, ((0, 4), (2, 6)), INT64)
    ones = SparseVector(3, ((0, 1), (1, 1), (2, 1)), INT64)
    assert vector_entries(scale_vector(v, ones, op)) == vector_entries(v)
    other = SparseVector(3, ((1, 9),), INT64)
    assert vector_entries(scale_vector(v, other, op)) == ()


# ---------------------------------------------------------------------------
# apply_unary


def test_apply_unary_constant_one_builds_pattern():
    m = to_compressed(CooMatrix(2, 2, (Triple(0, 1, 2.5), Triple(1, 0, 7.0)), FLOAT64))
    pat = apply_unary(m, UnaryOp("one", FLOAT64, INT64, lambda _x: 1))
    assert entries_of(pat) == (Triple(0, 1, 1), Triple(1, 0, 1))
    assert pat.domain is INT64


def test_apply_unary_identity_function():
    m = k3()
    out = apply_unary(m, UnaryOp("id", INT64, INT64, lambda x: x))
    assert entries_of(out) == entries_of(m)


def test_apply_unary_damping_matches_direct_arithmetic():
    v = SparseVector(3, ((0, 0.5), (1, 0.25), (2, 0.25)), FLOAT64)
    alpha, beta = 0.85, 0.05
    out = apply_unary(v, UnaryOp("damp", FLOAT64, FLOAT64, lambda x: alpha * x + beta))
    assert vector_entries(out) == tuple(
        (i, alpha * x + beta) for i, x in vector_entries(v)
    )


def test_apply_unary_drop_zeros_for():
    v = SparseVector(3, ((0, 1), (1, 2), (2, 1)), INT64)
    out = apply_unary(v, UnaryOp("dec", INT64, INT64, lambda x: x - 1),
                      drop_zeros_for=0)
    assert vector_entries(out) == ((1, 1),)


def test_apply_unary_matrix_drop_zeros_keeps_orientation():
    m = to_compressed(to_tuples(k3()), COL)
    out = apply_unary(m, UnaryOp("dec", INT64, INT64, lambda x: x - 1),
                      drop_zeros_for=0)
    assert out.orientation == COL
    assert entries_of(out) == ()


def test_apply_unary_domain_mismatch():
    m = k3()
    with pytest.raises(DomainMismatchError):
        apply_unary(m, UnaryOp("neg", FLOAT64, FLOAT64, lambda x: -x))


# ---------------------------------------------------------------------------
# Cross-cutting invariants


def test_kernels_never_store_the_operative_zero():
    rng = random.Random(41)
    for name in ("plus_times/signed-int-64", "min_plus/float-double", "or_and/boolean"):
        s = registry_get(name)
        sample = int_sampler() if s.domain is INT64 else sampler_for(name)
        for _ in range(10):
            a = random_csr(6, 6, 0.3, s.domain, sample, rng)
            b = random_csr(6, 6, 0.3, s.domain, sample, rng)
            v = random_vector(6, 0.5, s.domain, sample, rng)
            for t in entries_of(mxm(a, b, s)):
                assert not t.val == s.zero
            for _i, x in vector_entries(mxv(a, v, s)):
                assert not x == s.zero


def test_kernels_do_not_mutate_inputs():
    rng = random.Random(43)
    s = registry_get("plus_times/float-double")
    a = random_csr(5, 5, 0.4, FLOAT64, sampler_for(s.name), rng)
    b = random_csr(5, 5, 0.4, FLOAT64, sampler_for(s.name), rng)
    v = random_vector(5, 0.6, FLOAT64, sampler_for(s.name), rng)
    before = (snapshot(a), snapshot(b), snapshot(v))
    mxm(a, b, s)
    mxv(a, v, s, transpose_input=True)
    ewise_mult(a, b, s.mul)
    reduce(a, s.add, "cols")
    subref(a, [2, 0], [1, 3])
    subassign(a, [0, 1], [0, 1], subref(b, [0, 1], [0, 1]))
    scale_matrix(a, v, s.mul, "rows")
    scale_vector(v, v, s.mul)
    apply_unary(a, UnaryOp("neg", FLOAT64, FLOAT64, lambda x: -x))
    assert (snapshot(a), snapshot(b), snapshot(v)) == before


def test_mxv_against_dense_oracle_small_sweep():
    rng = random.Random(47)
    for name in ("plus_times/float-double", "min_plus/float-double",
                  "min_max/signed-int-64", "or_and/boolean"):
        s = registry_get(name)
        sample = sampler_for(name)
        for _ in range(15):
            n, m = rng.randint(1, 8), rng.randint(1, 8)
            a = random_csr(n, m, 0.35, s.domain, sample, rng)
            v = random_vector(m, 0.5, s.domain, sample, rng)
            got = mxv(a, v, s)
            want = dense_mxv(to_dense(a, s.zero),
                             [dict(vector_entries(v)).get(i, s.zero) for i in range(m)],
                             s)
            assert_vector_equals_dense(got, want, s.zero)


def test_mxm_against_dense_oracle_small_sweep():
    rng = random.Random(53)
    for name in ("plus_times/float-double", "max_plus/float-double",
                  "min_select2nd/signed-int-64"):
        s = registry_get(name)
        sample = sampler_for(name)
        for _ in range(10):
            n, k, m = rng.randint(1, 7), rng.randint(1, 7), rng.randint(1, 7)
            a = random_csr(n, k, 0.4, s.domain, sample, rng)
            b = random_csr(k, m, 0.4, s.domain, sample, rng)
            got = mxm(a, b, s)
            want = dense_mxm(to_dense(a, s.zero), to_dense(b, s.zero), s)
            assert_matrix_equals_dense(got, want, s.zero)


@given(st.integers(0, 6), st.data())
def test_reduce_rows_matches_python_sum(n, data):
    cells = data.draw(
        st.lists(
            st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)),
                      st.integers(-9, 9)),
            max_size=12,
        )
    ) if n else []
    from sgk.containers import build_from_triples

    m = to_compressed(build_from_triples(n, n, cells, plus_monoid(INT64)))
    got = dict(vector_entries(reduce(m, plus_monoid(INT64), "rows")))
    want = {}
    for t in entries_of(m):
        want[t.row] = want.get(t.row, 0) + t.val
    assert got == want
