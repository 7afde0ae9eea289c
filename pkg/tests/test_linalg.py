from __future__ import annotations

import itertools
import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from torus_ghw.field import field_make
from torus_ghw.linalg import in_row_space, matmul, nullspace, rank, rref


def _span_size(M, F):
    """Number of distinct vectors in the row space, by enumeration."""
    seen = set()
    for coefs in itertools.product(range(F.q), repeat=M.shape[0]):
        v = np.zeros(M.shape[1], dtype=np.int64)
        for c, row in zip(coefs, M):
            v = F.vadd(v, F.vmul(row, c))
        seen.add(tuple(v))
    return len(seen)


@st.composite
def small_matrices(draw):
    q = draw(st.sampled_from([2, 3, 4, 5]))
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 6))
    data = draw(st.lists(st.integers(0, q - 1), min_size=rows * cols, max_size=rows * cols))
    return field_make(q), np.array(data, dtype=np.int64).reshape(rows, cols)


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_rank_matches_span_enumeration(case):
    F, M = case
    r = rank(M, F)
    assert F.q ** r == _span_size(M, F)
    assert round(math.log(_span_size(M, F), F.q)) == r


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_rref_shape_and_row_space(case):
    F, M = case
    R, piv = rref(M, F)
    assert R.shape[0] == len(piv) == rank(M, F)
    for i, p in enumerate(piv):
        assert R[i, p] == 1
        assert np.count_nonzero(R[:, p]) == 1
        assert np.all(R[i, :p] == 0)
    assert list(piv) == sorted(piv)
    for row in M:
        assert in_row_space(row, R, F)


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_nullspace_is_complement(case):
    F, M = case
    N = nullspace(M, F)
    assert N.shape[0] == M.shape[1] - rank(M, F)
    if N.shape[0]:
        assert np.all(matmul(M, N.T, F) == 0)
        assert rank(N, F) == N.shape[0]


def test_in_row_space_negative():
    F = field_make(3)
    R = np.array([[1, 0, 1]])
    assert not in_row_space([0, 1, 0], R, F)
    assert in_row_space([2, 0, 2], R, F)
