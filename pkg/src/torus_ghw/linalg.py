"""Dense Gaussian elimination over GF(q) on integer numpy arrays."""

from __future__ import annotations

import numpy as np

from .field import FieldSpec


def _eliminate(A: np.ndarray, field: FieldSpec, r: int, c: int) -> None:
    factors = A[:, c].copy()
    factors[r] = 0
    rows = np.nonzero(factors)[0]
    if len(rows) == 0:
        return
    if field.e == 1:
        A[rows] = (A[rows] - factors[rows, None] * A[r][None, :]) % field.p
    else:
        A[rows] = field.vsub(A[rows], field.vmul(factors[rows, None], A[r][None, :]))


def rref(M, field: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form with first-nonzero pivoting.

    Returns the nonzero rows of the reduced matrix and the pivot columns;
    pivots come out leftmost-first, so the result is canonical for the row
    space of ``M``.
    """
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    m, n = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r] = field.vmul(A[r], field.inv(lead))
        _eliminate(A, field, r, c)
        pivots.append(c)
        r += 1
    return A[:r].copy(), pivots


def rank(M, field: FieldSpec) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(M, field)[1])


def nullspace(M, field: FieldSpec) -> np.ndarray:
    """Basis (as rows, in reduced echelon form) of ``{x : M x = 0}``."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(M, field)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for j, pc in enumerate(pivots):
            basis[t, pc] = field.neg(int(R[j, f]))
    if len(free) == 0:
        return basis
    return rref(basis, field)[0]


def matmul(A, B, field: FieldSpec) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if field.e == 1:
        # entries < 2^16, inner dimension small: no int64 overflow
        return (A @ B) % field.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = field.vadd(out, field.vmul(A[:, t][:, None], B[t][None, :]))
    return out


def in_row_space(v, R: np.ndarray, field: FieldSpec) -> bool:
    """True if ``v`` lies in the row space of ``R`` (any matrix)."""
    R = np.asarray(R, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64).reshape(1, -1)
    if R.shape[0] == 0:
        return not np.any(v)
    return rank(np.vstack([R, v]), field) == rank(R, field)
