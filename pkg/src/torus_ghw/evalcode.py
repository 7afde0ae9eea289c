"""Evaluation codes of homogeneous forms on projective point sets."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, EmptyPointSet, GHWError, MixedFields, ParseError
from .field import FieldSpec, field_make
from .geometry import PointSet
from .linalg import nullspace, rank, rref
from .poly import HomogPoly, eval_matrix, monomial_basis


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear code given by a generator matrix in reduced row-echelon form."""

    field: FieldSpec
    n: int
    gen: np.ndarray
    provenance: tuple = ("explicit",)
    pivots: tuple = dc_field(default=(), repr=False)
    points: PointSet | None = dc_field(default=None, repr=False)

    @property
    def k(self) -> int:
        return int(self.gen.shape[0])

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and np.array_equal(self.gen, other.gen))

    def __hash__(self):
        return hash((self.field.q, self.n, self.gen.tobytes()))

    def __repr__(self):
        return f"LinearCode(q={self.field.q}, n={self.n}, k={self.k}, provenance={self.provenance!r})"

    def contains(self, other: "LinearCode") -> bool:
        """True if every codeword of ``other`` is a codeword of ``self``."""
        if other.k == 0:
            return True
        return rank(np.vstack([self.gen, other.gen]), self.field) == self.k

    def codeword(self, message: Sequence[int]) -> np.ndarray:
        msg = np.asarray(message, dtype=np.int64).reshape(1, -1)
        if msg.shape[1] != self.k:
            raise DimensionMismatch(f"message length {msg.shape[1]} != k = {self.k}")
        F = self.field
        out = np.zeros(self.n, dtype=np.int64)
        for i in range(self.k):
            if msg[0, i]:
                out = F.vadd(out, F.vmul(self.gen[i], msg[0, i]))
        return out

    def to_dict(self) -> dict:
        return {"q": self.field.q, "n": self.n, "k": self.k,
                "rows": [[int(x) for x in row] for row in self.gen]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        lines = [f"{self.field.q} {self.n} {self.k}"]
        lines += [" ".join(str(int(x)) for x in row) for row in self.gen]
        return "\n".join(lines) + "\n"


def _finish(field: FieldSpec, M: np.ndarray, n: int, provenance: tuple,
            points: PointSet | None = None) -> LinearCode:
    if M.shape[0] == 0:
        R, piv = np.zeros((0, n), dtype=np.int64), []
    else:
        R, piv = rref(M, field)
    R.setflags(write=False)
    return LinearCode(field, n, R, provenance, tuple(piv), points)


def from_rows(field: FieldSpec, rows, n: int | None = None, provenance: tuple = ("explicit",)) -> LinearCode:
    """The code spanned by ``rows`` (which need not be independent)."""
    M = np.asarray(rows, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1) if M.size else M.reshape(0, n or 0)
    if n is None:
        n = M.shape[1]
    if M.shape[1] != n:
        raise DimensionMismatch("row length does not match n")
    if np.any((M < 0) | (M >= field.q)):
        raise ValueError("entries must be integer representations in [0, q)")
    return _finish(field, M, n, provenance)


def full_space(field: FieldSpec, n: int) -> LinearCode:
    return from_rows(field, np.eye(n, dtype=np.int64), n, ("full",))


def parse_code_json(text: str) -> LinearCode:
    try:
        obj = json.loads(text)
        F = field_make(int(obj["q"]))
        return from_rows(F, obj["rows"], int(obj["n"]))
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(f"bad code JSON: {exc}") from exc


def evaluation_matrix(X: PointSet, d: int, representatives=None, normalizers=None) -> np.ndarray:
    """Normalised evaluation of the degree-``d`` monomial basis at ``X``.

    Column ``i`` holds ``m(P_i) / f_i(P_i)`` for every monomial ``m``.  By
    default ``P_i`` is the standard-form representative and ``f_i`` is
    ``X_1^d`` (all points with nonzero coordinates) or ``X_j^d`` with ``j``
    the first nonzero coordinate of ``P_i``; both choices make the divisor 1.
    ``representatives`` rescales the points by nonzero scalars and
    ``normalizers`` supplies one form per point, not vanishing there; neither
    changes the code up to coordinate scaling.
    """
    F = X.field
    n = len(X)
    coords = X.coords
    if representatives is not None:
        lam = np.asarray(representatives, dtype=np.int64).reshape(-1)
        if lam.shape[0] != n or np.any(lam == 0):
            raise ValueError("need one nonzero scalar per point")
        coords = F.vmul(coords, lam[:, None])
    M = eval_matrix(monomial_basis(X.s, d), coords, F)
    if normalizers is None:
        if X.all_nonzero:
            div = eval_matrix([(d,) + (0,) * (X.s - 1)], coords, F)[0]
        else:
            first = np.argmax(coords != 0, axis=1)
            lead = coords[np.arange(n), first]
            div = F.vpow(lead, d)
    else:
        if len(normalizers) != n:
            raise DimensionMismatch("need one normalising form per point")
        div = np.empty(n, dtype=np.int64)
        for i, f in enumerate(normalizers):
            if not isinstance(f, HomogPoly) or f.d != d or f.s != X.s:
                raise DimensionMismatch("normalisers must be degree-d forms in s variables")
            if f.field != F:
                raise MixedFields("normaliser over a different field")
            div[i] = f.evaluate_all_coords(coords[i:i + 1])[0]
    if np.any(div == 0):
        raise ValueError("a normalising form vanishes at its point")
    if np.any(div != 1):
        M = F.vmul(M, F.vinv(div)[None, :])
    return M


def build_code(X: PointSet, d: int, representatives=None, normalizers=None) -> LinearCode:
    """The evaluation code of degree-``d`` forms on ``X``."""
    if len(X) == 0:
        raise EmptyPointSet("cannot build a code on an empty point set")
    if d < 0:
        raise ValueError("degree must be non-negative")
    M = evaluation_matrix(X, d, representatives, normalizers)
    M = np.unique(M, axis=0)
    return _finish(X.field, M, len(X), ("evaluation", X.describe(), d), X)


def hilbert_function(X: PointSet, d: int) -> int:
    """Dimension of the evaluation code in degree ``d``."""
    if len(X) == 0:
        return 0
    M = np.unique(evaluation_matrix(X, d), axis=0)
    return rank(M, X.field)


@dataclass(frozen=True)
class HilbertProfile:
    values: dict
    reg: int
    n: int

    @property
    def a_inv(self) -> int:
        return self.reg - 1

    def __getitem__(self, d: int) -> int:
        if d < 0:
            return 0
        return self.values[d] if d <= self.reg else self.n

    def to_dict(self) -> dict:
        return {"n": self.n, "reg": self.reg, "a_inv": self.a_inv,
                "values": [self.values[d] for d in range(self.reg + 1)]}


def hilbert_profile(X: PointSet, max_degree: int | None = None) -> HilbertProfile:
    """Hilbert function values up to the regularity index."""
    n = len(X)
    cap = (X.field.q - 1) * X.s + 8 if max_degree is None else max_degree
    values = {}
    for d in range(cap + 1):
        values[d] = hilbert_function(X, d)
        if values[d] == n:
            return HilbertProfile(values, d, n)
    raise GHWError(f"Hilbert function did not reach |X| = {n} by degree {cap}")


def dual_code(C: LinearCode) -> LinearCode:
    """The orthogonal complement under the standard bilinear form."""
    F = C.field
    if C.k == 0:
        N = np.eye(C.n, dtype=np.int64)
    else:
        N = nullspace(C.gen, F)
    return _finish(F, N, C.n, ("dual", C.provenance), C.points)


def is_degenerate(C: LinearCode) -> bool:
    """True if some coordinate vanishes on every codeword."""
    if C.n == 0:
        return False
    if C.k == 0:
        return True
    return bool(np.any(np.all(C.gen == 0, axis=0)))
