"""Sparse homogeneous polynomials over GF(q) and their zero sets on point sets."""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import BadParams, DegreeOutOfRange, DimensionMismatch, MixedFields, ParseError
from .field import FieldElem, FieldSpec
from .geometry import PointSet, ProjPoint


class Monomial(tuple):
    """Exponent vector of a monomial ``X1^e1 * ... * Xs^es``."""

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be non-negative")
        return super().__new__(cls, exps)

    @property
    def degree(self) -> int:
        return sum(self)

    def __str__(self):
        parts = [f"X{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(self) if e]
        return "*".join(parts) if parts else "1"


def _compositions(s: int, d: int):
    # exponent vectors of total degree d, lexicographically decreasing
    if s == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(s - 1, d - first):
            yield (first,) + rest


@lru_cache(maxsize=256)
def _basis(s: int, d: int) -> tuple[Monomial, ...]:
    return tuple(Monomial(e) for e in _compositions(s, d))


def monomial_basis(s: int, d: int) -> list[Monomial]:
    """All degree-``d`` monomials in ``s`` variables, graded-lex (X1^d first)."""
    if s < 1 or d < 0:
        raise ValueError("need s >= 1 and d >= 0")
    return list(_basis(s, d))


def eval_matrix(monomials: Sequence[Sequence[int]], coords: np.ndarray, field: FieldSpec) -> np.ndarray:
    """``len(monomials) x n`` matrix of monomial values at the rows of ``coords``."""
    coords = np.asarray(coords, dtype=np.int64)
    n, s = coords.shape
    if not monomials:
        return np.zeros((0, n), dtype=np.int64)
    E = np.array(monomials, dtype=np.int64).reshape(len(monomials), s)
    top = int(E.max()) if E.size else 0
    # powers[j][e] = coords[:, j] ** e
    powers = np.empty((s, top + 1, n), dtype=np.int64)
    for j in range(s):
        powers[j, 0] = 1
        for e in range(1, top + 1):
            powers[j, e] = field.vmul(powers[j, e - 1], coords[:, j])
    out = np.ones((len(monomials), n), dtype=np.int64)
    for j in range(s):
        out = field.vmul(out, powers[j, E[:, j]])
    return out


class HomogPoly:
    """Immutable homogeneous polynomial stored as a sparse map monomial -> coefficient.

    Coefficients are kept as integer representations of field elements and
    zero coefficients are never stored.
    """

    __slots__ = ("field", "s", "d", "_terms")

    def __init__(self, field: FieldSpec, s: int, d: int, terms: Mapping | None = None):
        self.field = field
        self.s = int(s)
        self.d = int(d)
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            mono = Monomial(mono)
            if len(mono) != self.s:
                raise DimensionMismatch(f"monomial {tuple(mono)} has wrong number of variables")
            if mono.degree != self.d:
                raise ValueError(f"monomial {mono} is not of degree {self.d}")
            if isinstance(c, FieldElem):
                if c.field != field:
                    raise MixedFields("coefficient from a different field")
                c = c.value
            c = FieldElem(field, c).value
            if c:
                clean[mono] = field.add(clean.get(mono, 0), c)
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, field: FieldSpec, s: int, d: int = 0) -> "HomogPoly":
        return cls(field, s, d)

    @classmethod
    def monomial(cls, field: FieldSpec, exponents: Sequence[int], coef=1) -> "HomogPoly":
        m = Monomial(exponents)
        return cls(field, len(m), m.degree, {m: coef})

    @classmethod
    def variable(cls, field: FieldSpec, s: int, i: int, coef=1) -> "HomogPoly":
        """``coef * X_i`` with ``i`` counted from 1."""
        e = [0] * s
        e[i - 1] = 1
        return cls.monomial(field, e, coef)

    # -- accessors -------------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient_vector(self) -> np.ndarray:
        """Coefficients in the order of ``monomial_basis(s, d)``."""
        return np.array([self._terms.get(m, 0) for m in _basis(self.s, self.d)], dtype=np.int64)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.field != other.field or self.s != other.s:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.d == other.d and self._terms == other._terms

    def __hash__(self):
        return hash((self.field.q, self.s, self.d, frozenset(self._terms.items())))

    def __repr__(self):
        return f"HomogPoly(q={self.field.q}, s={self.s}, d={self.d}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic ------------------------------------------------------------
    def _check(self, other: "HomogPoly"):
        if not isinstance(other, HomogPoly):
            raise TypeError("expected a HomogPoly")
        if self.field != other.field:
            raise MixedFields("polynomials over different fields")
        if self.s != other.s:
            raise DimensionMismatch("polynomials in different numbers of variables")

    def _combine(self, other: "HomogPoly", sign: int) -> "HomogPoly":
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other if sign > 0 else -other
        if self.d != other.d:
            raise ValueError("cannot add homogeneous polynomials of different degrees")
        F = self.field
        terms = dict(self._terms)
        for m, c in other._terms.items():
            c = c if sign > 0 else F.neg(c)
            terms[m] = F.add(terms.get(m, 0), c)
        return HomogPoly(F, self.s, self.d, terms)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        F = self.field
        return HomogPoly(F, self.s, self.d, {m: F.neg(c) for m, c in self._terms.items()})

    def scale(self, c) -> "HomogPoly":
        F = self.field
        c = c.value if isinstance(c, FieldElem) else FieldElem(F, c).value
        return HomogPoly(F, self.s, self.d, {m: F.mul(v, c) for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElem)):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElem)):
            return self.scale(other)
        return NotImplemented

    # -- evaluation ------------------------------------------------------------
    def __call__(self, point) -> FieldElem:
        return evaluate(self, point)

    def evaluate_all(self, X: PointSet) -> np.ndarray:
        """Values of the polynomial at every point of ``X`` (integer representations)."""
        if X.s != self.s:
            raise DimensionMismatch(f"polynomial in {self.s} variables, points in P^{X.s - 1}")
        if X.field != self.field:
            raise MixedFields("point set over a different field")
        return self.evaluate_all_coords(X.coords)

    def evaluate_all_coords(self, coords: np.ndarray) -> np.ndarray:
        """Values at the rows of an ``n x s`` array of coordinates."""
        F = self.field
        coords = np.asarray(coords, dtype=np.int64)
        if self.is_zero():
            return np.zeros(coords.shape[0], dtype=np.int64)
        monos = list(self._terms)
        M = eval_matrix(monos, coords, F)
        coefs = np.array([self._terms[m] for m in monos], dtype=np.int64)
        terms = F.vmul(coefs[:, None], M)
        if F.e == 1:
            return terms.sum(axis=0) % F.p
        acc = terms[0]
        for row in terms[1:]:
            acc = F.vadd(acc, row)
        return acc


def mul(f: HomogPoly, g: HomogPoly) -> HomogPoly:
    f._check(g)
    F = f.field
    d = f.d + g.d
    terms: dict[tuple, int] = {}
    for m1, c1 in f._terms.items():
        for m2, c2 in g._terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            terms[m] = F.add(terms.get(m, 0), F.mul(c1, c2))
    return HomogPoly(F, f.s, d, terms)


def product(factors: Sequence[HomogPoly]) -> HomogPoly:
    out = factors[0]
    for g in factors[1:]:
        out = mul(out, g)
    return out


def linear_form(field: FieldSpec, coeffs: Sequence) -> HomogPoly:
    """``sum_i coeffs[i] * X_{i+1}``."""
    s = len(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * s
        e[i] = 1
        terms[tuple(e)] = c
    return HomogPoly(field, s, 1, terms)


def evaluate(f: HomogPoly, point) -> FieldElem:
    F = f.field
    if isinstance(point, ProjPoint):
        if point.field != F:
            raise MixedFields("point over a different field")
        coords = point.coords
    else:
        coords = tuple(c.value if isinstance(c, FieldElem) else FieldElem(F, c).value for c in point)
    if len(coords) != f.s:
        raise DimensionMismatch(f"polynomial in {f.s} variables evaluated at a point with {len(coords)} coordinates")
    acc = 0
    for m, c in f._terms.items():
        term = c
        for x, e in zip(coords, m):
            if e:
                term = F.mul(term, F.pow(x, e))
        acc = F.add(acc, term)
    return FieldElem(F, acc)


def zero_set(f: HomogPoly, X: PointSet) -> frozenset[int]:
    """Indices of the points of ``X`` at which ``f`` vanishes."""
    vals = f.evaluate_all(X)
    return frozenset(int(i) for i in np.nonzero(vals == 0)[0])


def substitute_last(f: HomogPoly, a) -> HomogPoly:
    """Replace ``X_s`` by ``a * X_1``; the result still has ``s`` variables."""
    F = f.field
    a = a.value if isinstance(a, FieldElem) else FieldElem(F, a).value
    terms: dict[tuple, int] = {}
    for m, c in f._terms.items():
        e_last = m[-1]
        new = (m[0] + e_last,) + tuple(m[1:-1]) + (0,)
        terms[new] = F.add(terms.get(new, 0), F.mul(c, F.pow(a, e_last)))
    return HomogPoly(F, f.s, f.d, terms)


# -- common-zero maximisers on the torus ----------------------------------------

def degree_split(q: int, d: int) -> tuple[int, int]:
    """Write ``d = k(q-2) + l`` with ``1 <= l <= q-2``."""
    if q < 3:
        raise BadParams("the split d = k(q-2) + l needs q >= 3")
    if d < 1:
        raise DegreeOutOfRange("degree must be at least 1")
    k = (d - 1) // (q - 2)
    return k, d - k * (q - 2)


def construct_zero_maximizers(field: FieldSpec, s: int, d: int) -> tuple[HomogPoly, HomogPoly]:
    """Two independent degree-``d`` forms with the most common zeros on the torus.

    The degree is split as ``d = k(q-2) + l``.  For ``k = 0`` the pair uses the
    first three variables only; for larger ``k`` both forms share the factor
    ``H_k = prod_{j<=k} prod_{i<=q-2} (beta^i X1 - X_{j+1})`` which kills every
    torus point whose coordinates ``2..k+1`` avoid the value ``X1``, and the
    remaining degree ``l`` is spent on the next one (``k <= s-3``) or on the
    last variable (``k = s-2``).
    """
    q = field.q
    if s < 3:
        raise BadParams("the construction needs s >= 3")
    if q < 3:
        raise DegreeOutOfRange("no admissible degree for q = 2")
    top = (q - 2) * (s - 1)
    if not 1 <= d <= top:
        raise DegreeOutOfRange(f"degree {d} outside 1..{top}")
    k, l = degree_split(q, d)
    b = field.beta_pow

    def lin(*pairs):
        c = [0] * s
        for var, coef in pairs:
            c[var - 1] = field.add(c[var - 1], FieldElem(field, coef).value)
        return linear_form(field, c)

    minus1 = field.neg(1)

    def shifted(var, j):
        # beta^j X1 - X_var
        return lin((1, b(j)), (var, minus1))

    if k == 0:
        if d == 1:
            return lin((1, 1), (3, minus1)), lin((2, 1), (3, minus1))
        common = product([shifted(3, j) for j in range(1, d)])
        f1 = mul(shifted(3, q - 2), common)
        f2 = mul(lin((2, 1), (3, minus1)), common)
        return f1, f2

    H = product([shifted(j + 1, i) for j in range(1, k + 1) for i in range(1, q - 1)])
    if k <= s - 3:
        var = k + 2
        tail = [shifted(var, i) for i in range(1, l)]
        f = product([shifted(var, q - 2)] + tail)
        g = product([lin((var, 1), (var + 1, minus1))] + tail)
    else:
        tail = [shifted(s, i) for i in range(1, l)]
        f = product([shifted(s, q - 2)] + tail)
        g = product([lin((1, 1), (s, minus1))] + tail)
    return mul(H, f), mul(H, g)


# -- text format -----------------------------------------------------------------

def format_poly(f: HomogPoly) -> str:
    """Render as ``c*X1^e1*...*Xs^es + ...`` in monomial-basis order."""
    if f.is_zero():
        return "0"
    order = {m: i for i, m in enumerate(_basis(f.s, f.d))}
    parts = []
    for m in sorted(f._terms, key=order.__getitem__):
        c = f._terms[m]
        factors = [f"X{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
        parts.append("*".join([str(c)] + factors))
    return " + ".join(parts)


_FACTOR = re.compile(r"^X(\d+)(?:\^(\d+))?$")


def parse_poly(text: str, field: FieldSpec, s: int) -> HomogPoly:
    """Parse the text grammar produced by :func:`format_poly`.

    A term's coefficient may be omitted (meaning 1) and ``^1`` may be
    omitted.  Repeated terms are summed.
    """
    src = text.strip()
    if not src:
        raise ParseError("empty polynomial")
    if src == "0":
        return HomogPoly(field, s, 0)
    terms: dict[tuple, int] = {}
    degree = None
    for raw in src.split("+"):
        term = raw.strip().replace(" ", "")
        if not term:
            raise ParseError(f"empty term in {text!r}")
        coef = 1
        exps = [0] * s
        for tok in term.split("*"):
            if tok.isdigit():
                c = int(tok)
                if not 0 <= c < field.q:
                    raise ParseError(f"coefficient {c} outside [0, {field.q})")
                coef = field.mul(coef, c)
                continue
            m = _FACTOR.match(tok)
            if not m:
                raise ParseError(f"cannot parse factor {tok!r}")
            var = int(m.group(1))
            if not 1 <= var <= s:
                raise ParseError(f"variable X{var} outside X1..X{s}")
            exps[var - 1] += int(m.group(2) or 1)
        deg = sum(exps)
        if degree is None:
            degree = deg
        elif deg != degree:
            raise ParseError("terms of different degrees")
        key = tuple(exps)
        terms[key] = field.add(terms.get(key, 0), coef)
    return HomogPoly(field, s, degree, terms)
