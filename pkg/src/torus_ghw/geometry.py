"""Point configurations in projective space over GF(q).

All points are kept in standard form (first nonzero coordinate equal to 1)
and every :class:`PointSet` is sorted lexicographically by the integer
encoding of its coordinates, so the coordinate order of every code built
from it is reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, ParseError, SizeCap, ZeroVector
from .field import FieldElem, FieldSpec, field_make

DEFAULT_MAX_POINTS = 10**6


@dataclass(frozen=True)
class ProjPoint:
    field: FieldSpec
    coords: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.coords)

    @property
    def elems(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.field, c) for c in self.coords)

    def __str__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def standardize(raw: Sequence, field: FieldSpec) -> ProjPoint:
    """Scale ``raw`` so that its first nonzero coordinate becomes 1."""
    vals = [x.value if isinstance(x, FieldElem) else FieldElem(field, x).value for x in raw]
    for v in vals:
        if v:
            inv = field.inv(v)
            return ProjPoint(field, tuple(field.mul(c, inv) for c in vals))
    raise ZeroVector("the zero vector is not a projective point")


@dataclass(frozen=True)
class PointSet:
    """An ordered, duplicate-free set of standard-form points in P^{s-1}.

    ``provenance`` is a tuple whose first entry is one of ``"torus"``,
    ``"toric"``, ``"bipartite"`` or ``"explicit"``.
    """

    field: FieldSpec
    s: int
    points: tuple[ProjPoint, ...]
    provenance: tuple = ("explicit",)
    _coords: np.ndarray = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        arr = np.array([p.coords for p in self.points], dtype=np.int64).reshape(len(self.points), self.s)
        arr.setflags(write=False)
        object.__setattr__(self, "_coords", arr)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    @property
    def coords(self) -> np.ndarray:
        """``n x s`` integer array of standard-form coordinates."""
        return self._coords

    @property
    def kind(self) -> str:
        return self.provenance[0]

    @property
    def is_toric(self) -> bool:
        return self.kind in ("torus", "toric", "bipartite")

    @property
    def all_nonzero(self) -> bool:
        return bool(np.all(self._coords != 0)) if len(self) else True

    def index(self, point: ProjPoint) -> int:
        return self.points.index(point)

    def describe(self) -> dict:
        kind = self.kind
        out = {"kind": kind, "q": self.field.q, "s": self.s, "n": len(self)}
        if kind == "toric":
            out["exponents"] = [list(row) for row in self.provenance[1]]
        elif kind == "bipartite":
            out["m"], out["n_part"] = self.provenance[1], self.provenance[2]
        return out


def point_set(field: FieldSpec, s: int, points: Iterable, provenance: tuple = ("explicit",),
              max_points: int = DEFAULT_MAX_POINTS) -> PointSet:
    """Standardise, deduplicate and sort ``points`` into a :class:`PointSet`."""
    std = set()
    for raw in points:
        if isinstance(raw, ProjPoint):
            raw = raw.coords
        if len(raw) != s:
            raise DimensionMismatch(f"point {tuple(raw)} does not have {s} coordinates")
        std.add(standardize(raw, field).coords)
        if len(std) > max_points:
            raise SizeCap(f"more than {max_points} points")
    ordered = sorted(std)
    return PointSet(field, s, tuple(ProjPoint(field, c) for c in ordered), provenance)


def torus_points(field: FieldSpec, s: int, max_points: int = DEFAULT_MAX_POINTS) -> PointSet:
    """All points ``[1 : t_2 : ... : t_s]`` with every ``t_i`` nonzero."""
    if s < 1:
        raise DimensionMismatch("s must be positive")
    size = (field.q - 1) ** (s - 1)
    if size > max_points:
        raise SizeCap(f"(q-1)^(s-1) = {size} exceeds the point cap {max_points}")
    nonzero = range(1, field.q)
    pts = tuple(ProjPoint(field, (1,) + t) for t in itertools.product(nonzero, repeat=s - 1))
    return PointSet(field, s, pts, ("torus",))


def toric_points(field: FieldSpec, exponents, max_points: int = DEFAULT_MAX_POINTS) -> PointSet:
    """The toric set parameterised by the monomials whose exponents are the rows.

    ``exponents`` is an ``s x n`` matrix of non-negative integers.  The image
    of ``(K*)^n`` is a subgroup of the torus; working with discrete logs it is
    the subgroup of ``(Z/(q-1))^s`` generated by the standardised columns, so
    it is built by closure from the generators rather than by visiting all of
    ``(K*)^n``.
    """
    A = np.array(exponents, dtype=np.int64)
    if A.ndim != 2 or A.shape[1] < 1:
        raise DimensionMismatch("exponents must be an s x n matrix with n >= 1")
    if np.any(A < 0):
        raise ValueError("exponents must be non-negative")
    s, _ = A.shape
    m = field.q - 1
    gens = {tuple(int(x) for x in (A[:, j] - A[0, j]) % m) for j in range(A.shape[1])}
    gens.discard((0,) * s)
    zero = (0,) * s
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % m for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    if len(seen) > max_points:
                        raise SizeCap(f"toric set exceeds the point cap {max_points}")
        frontier = nxt
    exp = field.exp_table
    coords = sorted(tuple(int(exp[x]) for x in v) for v in seen)
    pts = tuple(ProjPoint(field, c) for c in coords)
    prov = ("toric", tuple(tuple(int(x) for x in row) for row in A))
    return PointSet(field, s, pts, prov)


def bipartite_exponents(m: int, n: int) -> np.ndarray:
    """Exponent matrix of the edge monomials ``z_i z_{m+j}`` of K_{m,n}."""
    A = np.zeros((m * n, m + n), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            A[i * n + j, i] = 1
            A[i * n + j, m + j] = 1
    return A


def bipartite_points(field: FieldSpec, m: int, n: int,
                     max_points: int = DEFAULT_MAX_POINTS) -> PointSet:
    if m < 2 or n < 2:
        raise DimensionMismatch("both parts of K_{m,n} need at least two vertices")
    X = toric_points(field, bipartite_exponents(m, n), max_points=max_points)
    return PointSet(field, X.s, X.points, ("bipartite", m, n))


def multiply(P: ProjPoint, Q: ProjPoint) -> ProjPoint:
    """Coordinate-wise product followed by standardisation."""
    F = P.field
    return standardize([F.mul(a, b) for a, b in zip(P.coords, Q.coords)], F)


# -- plain-text formats -----------------------------------------------------------

def _data_lines(text: str) -> list[list[int]]:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ParseError(f"non-integer token in line {raw!r}") from exc
    return rows


def parse_points(text: str, max_points: int = DEFAULT_MAX_POINTS) -> PointSet:
    """Parse the point-list format: header ``q s`` then one point per line."""
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 2:
        raise ParseError("point file must start with a 'q s' header line")
    q, s = rows[0]
    F = field_make(q)
    for r in rows[1:]:
        if len(r) != s:
            raise ParseError(f"expected {s} coordinates, got {r}")
        if any(not 0 <= c < q for c in r):
            raise ParseError(f"coordinates must lie in [0, {q}): {r}")
    return point_set(F, s, rows[1:], ("explicit",), max_points=max_points)


def format_points(X: PointSet) -> str:
    lines = [f"{X.field.q} {X.s}"]
    lines += [" ".join(str(c) for c in p.coords) for p in X]
    return "\n".join(lines) + "\n"


def load_points(path, max_points: int = DEFAULT_MAX_POINTS) -> PointSet:
    return parse_points(Path(path).read_text(), max_points=max_points)


def dump_points(X: PointSet, path) -> None:
    Path(path).write_text(format_points(X))


def parse_toric(text: str, max_points: int = DEFAULT_MAX_POINTS) -> PointSet:
    """Parse an exponent file: header ``q s n`` then ``s`` rows of ``n`` exponents."""
    rows = _data_lines(text)
    if not rows or len(rows[0]) != 3:
        raise ParseError("toric file must start with a 'q s n' header line")
    q, s, n = rows[0]
    body = rows[1:]
    if len(body) != s or any(len(r) != n for r in body):
        raise ParseError(f"expected {s} rows of {n} exponents")
    return toric_points(field_make(q), body, max_points=max_points)


def load_toric(path, max_points: int = DEFAULT_MAX_POINTS) -> PointSet:
    return parse_toric(Path(path).read_text(), max_points=max_points)
