"""Exact generalized Hamming weights.

The central quantity is, for a ``k``-dimensional code of length ``n``,

    d_r = n - max{ |Y| : Y a set of coordinates, rank(G_Y) <= k - r }

which is computed by enumerating flats (span-closed column sets) of the
generator matrix.  When that search is too large the oracle falls back on
other exact routes:

* the dual code's flats of small rank combined with the duality between the
  hierarchies of a code and its dual,
* for ``r = 1`` and ``r = 2``, enumeration of low-weight codewords (all
  codewords, Brouwer-Zimmermann information sets, or a syndrome
  meet-in-the-middle search) with a pruning bound on the lightest word of a
  two-dimensional subcode.

Every route is exhaustive; if none fits within the configured work budget the
computation raises :class:`~torus_ghw.errors.Infeasible`.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
import os
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels as K
from .errors import DimensionMismatch, Infeasible, NotAPartitionCandidate, OutOfRange
from .evalcode import LinearCode, dual_code, from_rows
from .field import FieldSpec
from .linalg import rank, rref

log = logging.getLogger(__name__)

METHOD_TAGS = ("oracle", "formula", "duality", "singleton-forced")
NOT_COMPUTED = "not-computed"


def _env_cap() -> int:
    raw = os.environ.get("TORUS_GHW_MAX_N")
    return int(raw) if raw else 24


@dataclass(frozen=True)
class OracleConfig:
    """Feasibility limits for the exact oracle.

    ``max_n_exhaustive`` bounds the code length; ``max_codewords`` bounds
    full codeword enumeration; ``max_work`` bounds the number of search nodes
    spent by any single search strategy.
    """

    max_n_exhaustive: int = dc_field(default_factory=_env_cap)
    max_codewords: int = 10**7
    max_work: int = 3 * 10**8


DEFAULT_CONFIG = OracleConfig()


# -- hierarchy container -------------------------------------------------------------


@dataclass(frozen=True)
class WeightHierarchy:
    """Weights ``d_1..d_k`` with one method tag per entry.

    Entries may be ``None`` (tag ``not-computed``) for partial hierarchies.
    """

    n: int
    k: int
    weights: tuple
    methods: tuple

    def __post_init__(self):
        if len(self.weights) != self.k or len(self.methods) != self.k:
            raise DimensionMismatch("a hierarchy needs exactly k weights and k tags")
        for w, m in zip(self.weights, self.methods):
            if (w is None) != (m == NOT_COMPUTED):
                raise ValueError("missing weights must be tagged not-computed")
            if m != NOT_COMPUTED and m not in METHOD_TAGS:
                raise ValueError(f"unknown method tag {m!r}")

    @classmethod
    def uniform(cls, n: int, weights: Sequence[int], tag: str) -> "WeightHierarchy":
        w = tuple(int(x) for x in weights)
        return cls(n, len(w), w, (tag,) * len(w))

    @property
    def complete(self) -> bool:
        return all(w is not None for w in self.weights)

    def __getitem__(self, r: int) -> int | None:
        """``d_r`` with ``r`` counted from 1."""
        if not 1 <= r <= self.k:
            raise OutOfRange(f"r = {r} outside 1..{self.k}")
        return self.weights[r - 1]

    def violations(self) -> list[str]:
        """Broken invariants (monotonicity, ``d_r >= r``, generalized Singleton)."""
        out = []
        known = [(r, w) for r, w in enumerate(self.weights, start=1) if w is not None]
        for r, w in known:
            if w < r:
                out.append(f"d_{r} = {w} < {r}")
            if w > self.n - self.k + r:
                out.append(f"d_{r} = {w} exceeds the Singleton bound {self.n - self.k + r}")
        for (r1, w1), (r2, w2) in zip(known, known[1:]):
            if w2 - w1 < r2 - r1:
                out.append(f"d_{r1} = {w1}, d_{r2} = {w2} not strictly increasing")
        return out

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "weights": list(self.weights), "methods": list(self.methods)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# -- field tables and symmetry -----------------------------------------------------


@lru_cache(maxsize=32)
def _tables(field: FieldSpec):
    if field.q > 1024:
        raise Infeasible(f"the search kernels need q <= 1024, got q = {field.q}")
    addt = np.ascontiguousarray(field.add_table, dtype=np.int64)
    mult = np.ascontiguousarray(field.mul_table, dtype=np.int64)
    invt = np.zeros(field.q, dtype=np.int64)
    for a in range(1, field.q):
        invt[a] = field.inv(a)
    negt = np.array([field.neg(a) for a in range(field.q)], dtype=np.int64)
    return addt, mult, invt, negt


def translation_permutations(points) -> list[np.ndarray] | None:
    """Coordinate permutations induced by multiplying with the points themselves.

    Returns ``None`` unless the point set lies in the torus and is closed
    under coordinate-wise multiplication.
    """
    if points is None or not points.all_nonzero:
        return None
    F = points.field
    index = {p.coords: i for i, p in enumerate(points)}
    coords = points.coords
    perms = []
    for t in points:
        prod = F.vmul(coords, np.asarray(t.coords, dtype=np.int64)[None, :])
        lead = F.vinv(prod[:, 0])
        prod = F.vmul(prod, lead[:, None])
        perm = np.empty(len(points), dtype=np.int64)
        for i, row in enumerate(prod):
            j = index.get(tuple(int(x) for x in row))
            if j is None:
                return None
            perm[i] = j
        perms.append(perm)
    return perms


def is_transitive(C: LinearCode) -> bool:
    """True if translations of the underlying point set are automorphisms of ``C``.

    The translations act transitively on coordinates, so searches for
    maximal flats or light subcodes may assume coordinate 0 is involved.
    Invariance is checked numerically for every translation.
    """
    return _transitive_cached(C)


@lru_cache(maxsize=256)
def _transitive_cached(C: LinearCode) -> bool:
    if C.k == 0 or C.points is None or len(C.points) != C.n:
        return False
    perms = translation_permutations(C.points)
    if perms is None:
        return False
    for perm in perms:
        moved = C.gen[:, np.argsort(perm)]
        if rank(np.vstack([C.gen, moved]), C.field) != C.k:
            return False
    return True


def _check_cap(C: LinearCode, config: OracleConfig) -> None:
    if C.n > config.max_n_exhaustive:
        raise Infeasible(
            f"code length n = {C.n} exceeds the exhaustive cap max_n_exhaustive = "
            f"{config.max_n_exhaustive}")


class _OutOfBudget(Exception):
    pass


# -- flats --------------------------------------------------------------------------


def _flat_levels(G: np.ndarray, field: FieldSpec, cap: int, force_first: bool,
                 limit: int, target_only: bool = False, start=None) -> np.ndarray:
    """``best[j]`` = largest column set of rank ``<= j`` for ``j <= cap``."""
    addt, mult, invt, negt = _tables(field)
    best = np.zeros(cap + 1, dtype=np.int64) if start is None else np.array(start, dtype=np.int64)
    G = np.ascontiguousarray(G, dtype=np.int64)
    work = K.max_flat_sizes(G, cap, force_first, addt, mult, invt, negt, best, target_only, limit)
    if work > limit:
        raise _OutOfBudget(f"flat search exceeded {limit} nodes")
    return best


def _flat_estimate(n: int, cap: int, force_first: bool) -> float:
    # number of column subsets of size <= cap: a crude bound on flats visited
    m = n - 1 if force_first else n
    return float(sum(math.comb(m, j) for j in range(0, cap + 1)))


def _hierarchy_from_levels(n: int, k: int, levels: np.ndarray) -> list[int]:
    return [n - int(levels[k - r]) for r in range(1, k + 1)]


def _wei_complement(n: int, dual_weights: Sequence[int]) -> list[int]:
    taken = {n + 1 - w for w in dual_weights}
    return [x for x in range(1, n + 1) if x not in taken]


# -- codeword searches ---------------------------------------------------------------


def _normalise_rows(V: np.ndarray, field: FieldSpec) -> np.ndarray:
    if V.shape[0] == 0:
        return V
    first = np.argmax(V != 0, axis=1)
    lead = V[np.arange(V.shape[0]), first]
    return field.vmul(V, field.vinv(lead)[:, None])


def _dedupe(V: np.ndarray) -> np.ndarray:
    if V.shape[0] == 0:
        return V
    return np.unique(V, axis=0)


def _disjoint_information_sets(C: LinearCode):
    """Systematic generators on disjoint column groups, with their ranks."""
    F = C.field
    remaining = list(range(C.n))
    out = []
    while remaining:
        order = remaining + [c for c in range(C.n) if c not in set(remaining)]
        R, piv = rref(C.gen[:, order], F)
        piv_cols = [order[p] for p in piv if p < len(remaining)]
        if not piv_cols:
            break
        inv_order = np.argsort(order)
        Gs = R[:, inv_order]
        out.append((np.ascontiguousarray(Gs), len(piv_cols)))
        used = set(piv_cols)
        remaining = [c for c in remaining if c not in used]
    return out


class _LowWeight:
    """Exhaustive low-weight codeword search for one code."""

    def __init__(self, C: LinearCode, config: OracleConfig, anchored: bool):
        self.C = C
        self.config = config
        self.anchored = anchored and is_transitive(C)
        self.F = C.field
        k = C.k
        self.projective = (self.F.q ** k - 1) // (self.F.q - 1)
        self.mode = self._choose_mode()

    def _choose_mode(self) -> str:
        k, n = self.C.k, self.C.n
        if self.projective <= self.config.max_codewords:
            return "all"
        if self.anchored:
            return "orbit"
        if k <= n - k:
            return "bz"
        return "mitm"

    # every codeword, weight-limited ------------------------------------------------
    def _all(self, wmax: int) -> np.ndarray:
        C, F = self.C, self.F
        addt, mult, _, negt = _tables(F)
        weights, _ = K.projective_codewords(np.ascontiguousarray(C.gen), addt, mult, negt, F.q, False)
        sel = np.nonzero(weights <= wmax)[0]
        msgs = _projective_messages(C.k, F.q, sel)
        words = np.zeros((len(sel), C.n), dtype=np.int64)
        for row in range(C.k):
            coef = msgs[:, row]
            nz = coef != 0
            if np.any(nz):
                words[nz] = F.vadd(words[nz], F.vmul(coef[nz, None], C.gen[row][None, :]))
        return words

    # information sets ---------------------------------------------------------------
    def _bz(self, wmax: int, list_mode: bool):
        """Brouwer-Zimmermann over disjoint information sets.

        A word missed after all messages of weight ``<= t`` on every set has
        more than ``t - (k - rank)`` nonzeros on each set.
        """
        sets = _disjoint_information_sets(self.C)
        k = self.C.k
        contrib = [k - r for _, r in sets]
        return self._info_set_search(
            [(Gs, c) for (Gs, _), c in zip(sets, contrib)],
            lambda t: sum(max(0, t + 1 - c) for c in contrib), wmax, list_mode)

    def _orbit(self, wmax: int, list_mode: bool):
        """One information set plus the translation group.

        The translations act regularly, so each word of weight ``w`` has a
        translate with at most ``w k / n`` nonzeros on a fixed information
        set.  The search therefore returns at least one word from every
        translation orbit, which is all that weight and support questions
        need.
        """
        k, n = self.C.k, self.C.n
        return self._info_set_search([(np.ascontiguousarray(self.C.gen), 0)],
                                     lambda t: -((-(t + 1) * n) // k), wmax, list_mode)

    def _info_set_search(self, sets, lower_bound, wmax: int, list_mode: bool):
        C, F = self.C, self.F
        addt, mult, _, _ = _tables(F)
        k = C.k
        best_w = np.array([C.n + 1], dtype=np.int64)
        best_cw = np.zeros(C.n, dtype=np.int64)
        cap_out = 200_000 if list_mode else 1
        out = np.zeros((cap_out, C.n), dtype=np.int64)
        nout = 0
        spent = 0
        for t in range(1, k + 1):
            for Gs, c in sets:
                if t - c <= 0:
                    continue
                nout, work = K.bz_enumerate(Gs, t, addt, mult, F.q, wmax, list_mode, out, nout,
                                            best_w, best_cw, self.config.max_work - spent)
                spent += work
                if spent > self.config.max_work:
                    raise _OutOfBudget("information-set enumeration exceeded the work budget")
                if nout > cap_out:
                    raise _OutOfBudget("too many light codewords to store")
            lower = lower_bound(t)
            if list_mode and lower > wmax:
                break
            if not list_mode and lower >= min(best_w[0], wmax + 1):
                break
        if list_mode:
            return out[:nout]
        return int(best_w[0]), best_cw

    # syndrome meet-in-the-middle --------------------------------------------------
    def _mitm(self, w: int) -> np.ndarray:
        C, F = self.C, self.F
        addt, mult, _, negt = _tables(F)
        if not hasattr(self, "_Hc"):
            self._dual_k = dual_code(C).k
            self._Hc = np.ascontiguousarray(dual_code(C).gen.T)
        D_k, Hc = self._dual_k, self._Hc
        rnd = np.random.default_rng(12345).integers(1, 2**63, size=max(D_k, 1), dtype=np.uint64)
        hi = 1 if self.anchored else C.n
        cap_out = 200_000
        out = np.zeros((cap_out, C.n), dtype=np.int64)
        found, over = K.mitm_weight_exact(Hc, w, 0, hi, addt, mult, negt, F.q, rnd, out,
                                          self.config.max_work)
        if over or found < 0:
            raise _OutOfBudget("syndrome search exceeded the work budget")
        if found > cap_out:
            raise _OutOfBudget("too many light codewords to store")
        return out[:found]

    # public ------------------------------------------------------------------------
    def words_up_to(self, wmax: int) -> np.ndarray:
        """All codewords (leading coefficient 1) of weight ``<= wmax``.

        When anchored, only words whose support contains coordinate 0; in
        ``orbit`` mode, at least one word of every translation orbit.
        """
        if self.mode == "all":
            V = self._all(wmax)
        elif self.mode == "bz":
            V = self._bz(wmax, True)
        elif self.mode == "orbit":
            return _dedupe(_normalise_rows(self._orbit(wmax, True), self.F))
        else:
            parts = [self._mitm(w) for w in range(1, wmax + 1)]
            V = np.vstack(parts) if parts else np.zeros((0, self.C.n), dtype=np.int64)
        V = _dedupe(_normalise_rows(V, self.F))
        if self.anchored and V.shape[0]:
            V = V[V[:, 0] != 0]
        return V

    def words_of_weight(self, w: int) -> np.ndarray:
        if self.mode == "mitm":
            V = _dedupe(_normalise_rows(self._mitm(w), self.F))
            if self.anchored and V.shape[0]:
                V = V[V[:, 0] != 0]
            return V
        V = self.words_up_to(w)
        return V[np.count_nonzero(V, axis=1) == w]

    def min_weight(self, below: int | None = None) -> tuple[int, np.ndarray | None]:
        """Exact minimum weight, or ``(below, None)`` if it is at least ``below``."""
        n = self.C.n
        bound = n + 1 if below is None else below
        if self.mode == "all":
            F = self.F
            addt, mult, _, negt = _tables(F)
            weights, _ = K.projective_codewords(np.ascontiguousarray(self.C.gen), addt, mult, negt, F.q, False)
            i = int(np.argmin(weights))
            w = int(weights[i])
            if w >= bound:
                return bound, None
            msg = _projective_messages(self.C.k, F.q, np.array([i]))[0]
            return w, self.C.codeword(msg)
        if self.mode in ("bz", "orbit"):
            search = self._bz if self.mode == "bz" else self._orbit
            w, cw = search(bound - 1, False)
            if w >= bound:
                return bound, None
            return w, cw
        for w in range(1, bound):
            V = self._mitm(w)
            if V.shape[0]:
                return w, V[0]
        return bound, None


def _projective_messages(k: int, q: int, indices: np.ndarray) -> np.ndarray:
    """Decode enumeration indices of :func:`projective_codewords` into messages."""
    out = np.zeros((len(indices), k), dtype=np.int64)
    blocks = [q ** (k - 1 - p) for p in range(k)]
    starts = np.cumsum([0] + blocks)
    for row, idx in enumerate(indices):
        p = int(np.searchsorted(starts, idx, side="right") - 1)
        off = int(idx - starts[p])
        out[row, p] = 1
        # digits p+1..k-1 in mixed radix, last digit fastest; digit values
        # follow the cyclic order 0,1,...,q-1 used by the kernel
        for j in range(k - 1, p, -1):
            out[row, j] = off % q
            off //= q
    return out


# -- the oracle -------------------------------------------------------------------------


def _require_r(C: LinearCode, r: int) -> None:
    if C.k == 0:
        raise OutOfRange("the zero code has no generalized Hamming weights")
    if not 1 <= r <= C.k:
        raise OutOfRange(f"r = {r} outside 1..{C.k}")


def _zero_columns(C: LinearCode) -> int:
    return int(np.count_nonzero(~np.any(C.gen != 0, axis=0)))


def _primal_target(C: LinearCode, r: int, config: OracleConfig) -> int:
    trans = is_transitive(C)
    cap = C.k - r
    levels = _flat_levels(C.gen, C.field, cap, trans, config.max_work, target_only=True)
    return C.n - int(levels[cap])


def _dual_top(C: LinearCode, r: int, config: OracleConfig) -> int:
    """``d_r(C)`` from the small-rank flats of the dual code."""
    D = dual_code(C)
    n = C.n
    if D.k == 0:
        return r
    trans = is_transitive(D)
    for J in range(1, D.k + 1):
        if _flat_estimate(n, J, trans) > 50 * config.max_work:
            break
        levels = _flat_levels(D.gen, D.field, J, trans, config.max_work)
        top = int(levels[J])
        taken = {int(levels[j]) + 1 for j in range(J + 1)}
        free = [x for x in range(1, top + 2) if x not in taken]
        if len(free) >= r:
            return free[r - 1]
        if J == D.k:
            break
    raise _OutOfBudget("dual flats did not determine the weight within budget")


def _delta(C: LinearCode, c1: np.ndarray, bound: int, config: OracleConfig) -> int:
    """Fewest extra coordinates needed by a second, independent codeword.

    Returns ``min |supp(c2) \\ supp(c1)|`` over codewords ``c2`` outside the
    span of ``c1``, or ``bound`` if that minimum is at least ``bound``.
    """
    if bound <= 0:
        return bound
    zeros = np.nonzero(c1 == 0)[0]
    if len(zeros) == 0:
        return 0 if C.k >= 2 else bound
    sub = C.gen[:, zeros]
    rk = rank(sub, C.field)
    if C.k - rk >= 2:
        return 0
    if rk == 0 or bound == 1:
        return bound
    P = from_rows(C.field, sub, len(zeros))
    w, _ = _LowWeight(P, config, anchored=False).min_weight(below=bound)
    return w


def _second_weight(C: LinearCode, config: OracleConfig) -> int:
    """``d_2`` from light codewords: every two-dimensional subcode with support
    ``w`` contains a codeword of weight at most ``q w / (q + 1)``."""
    q, n = C.field.q, C.n
    search = _LowWeight(C, config, anchored=True)
    d1, first = search.min_weight()
    upper = n - C.k + 2
    if first is not None:
        upper = min(upper, d1 + _delta(C, np.asarray(first), upper - d1, config))

    def need(u):
        return (q * (u - 1)) // (q + 1)

    if need(upper) < d1:
        return upper
    if search.mode != "mitm":
        light = search.words_up_to(need(upper))
        light = light[np.argsort(np.count_nonzero(light, axis=1), kind="stable")]
        for c1 in light:
            w1 = int(np.count_nonzero(c1))
            if w1 > need(upper):
                break
            upper = min(upper, w1 + _delta(C, c1, upper - w1, config))
        return upper
    w = d1
    while w <= need(upper):
        for c1 in search.words_of_weight(w):
            upper = min(upper, w + _delta(C, c1, upper - w, config))
        w += 1
    return upper


def ghw_exact(C: LinearCode, r: int, config: OracleConfig | None = None) -> int:
    """Exact ``d_r(C)``."""
    config = config or DEFAULT_CONFIG
    _require_r(C, r)
    _check_cap(C, config)
    n, k = C.n, C.k
    if r == k:
        return n - _zero_columns(C)
    if k == n:
        return r
    trans = is_transitive(C)
    light = []
    if r == 1:
        light.append(("light codewords", lambda: _LowWeight(C, config, True).min_weight()[0]))
    if r == 2:
        light.append(("light subcodes", lambda: _second_weight(C, config)))
    # codeword searches beat flats unless the rate is high and there is no symmetry
    enumerable = ((C.field.q ** k - 1) // (C.field.q - 1) <= config.max_codewords
                  or trans or k <= n - k)
    primal_cost = _flat_estimate(n, k - r, trans)
    attempts = light[:] if enumerable else []
    if primal_cost <= 4 * config.max_work:
        attempts.append(("flats", lambda: _primal_target(C, r, config)))
    attempts.append(("dual flats", lambda: _dual_top(C, r, config)))
    if not enumerable:
        attempts += light
    if primal_cost > 4 * config.max_work:
        attempts.append(("flats", lambda: _primal_target(C, r, config)))
    reasons = []
    for name, run in attempts:
        try:
            value = run()
            log.debug("d_%d via %s = %d", r, name, value)
            return int(value)
        except _OutOfBudget as exc:
            reasons.append(f"{name}: {exc}")
    raise Infeasible(f"d_{r} of a [{n},{k}] code is beyond the work budget "
                     f"max_work = {config.max_work} ({'; '.join(reasons)})")


def min_distance(C: LinearCode, config: OracleConfig | None = None) -> int:
    """Minimum distance ``d_1``."""
    return ghw_exact(C, 1, config)


def hierarchy_exact(C: LinearCode, config: OracleConfig | None = None) -> WeightHierarchy:
    """All of ``d_1..d_k`` from one flat enumeration.

    The enumeration runs on whichever of ``C`` and its dual has the smaller
    dimension; the other hierarchy follows by duality.
    """
    config = config or DEFAULT_CONFIG
    if C.k == 0:
        raise OutOfRange("the zero code has no generalized Hamming weights")
    _check_cap(C, config)
    n, k = C.n, C.k
    try:
        if k <= n - k:
            levels = _flat_levels(C.gen, C.field, k - 1, is_transitive(C), config.max_work)
            levels = _fix_rank_zero(levels, C)
            weights = _hierarchy_from_levels(n, k, levels)
        else:
            D = dual_code(C)
            if D.k == 0:
                dual_weights = []
            else:
                lv = _flat_levels(D.gen, D.field, D.k - 1, is_transitive(D), config.max_work)
                lv = _fix_rank_zero(lv, D)
                dual_weights = _hierarchy_from_levels(n, D.k, lv)
            weights = _wei_complement(n, dual_weights)
    except _OutOfBudget as exc:
        raise Infeasible(f"hierarchy of a [{n},{k}] code is beyond the work budget "
                         f"max_work = {config.max_work} ({exc})") from None
    return WeightHierarchy.uniform(n, weights, "oracle")


def _fix_rank_zero(levels: np.ndarray, C: LinearCode) -> np.ndarray:
    # rank-0 sets are the zero columns regardless of any symmetry shortcut
    levels = levels.copy()
    levels[0] = _zero_columns(C)
    return levels


def duality_complete(H: WeightHierarchy, n: int | None = None) -> WeightHierarchy:
    """Hierarchy of the dual code: the complement of ``{n + 1 - d_r}`` in ``1..n``."""
    n = H.n if n is None else n
    if not H.complete:
        raise NotAPartitionCandidate("duality needs every weight of the hierarchy")
    if H.k > n or n != H.n:
        raise NotAPartitionCandidate(f"hierarchy of length {H.k} for n = {H.n} used with n = {n}")
    bad = H.violations()
    if any(not 1 <= w <= n for w in H.weights):
        bad.append("weights must lie in 1..n")
    if bad:
        raise NotAPartitionCandidate("; ".join(bad))
    return WeightHierarchy.uniform(n, _wei_complement(n, H.weights), "duality")


def is_r_mds(C: LinearCode, r: int, dr: int) -> bool:
    """True if ``dr`` attains the generalized Singleton bound ``n - k + r``."""
    _require_r(C, r)
    return int(dr) == C.n - C.k + r


# -- reference implementation by subcode enumeration ---------------------------------


def _rref_templates(r: int, k: int, q: int):
    """All ``r x k`` reduced row-echelon matrices of rank ``r`` over integers ``0..q-1``."""
    for pivots in itertools.combinations(range(k), r):
        free = [(i, j) for i in range(r) for j in range(k)
                if j > pivots[i] and j not in pivots]
        for vals in itertools.product(range(q), repeat=len(free)):
            M = np.zeros((r, k), dtype=np.int64)
            for i, p in enumerate(pivots):
                M[i, p] = 1
            for (i, j), v in zip(free, vals):
                M[i, j] = v
            yield M


def ghw_by_subcodes(C: LinearCode, r: int) -> int:
    """``d_r`` as the least support of an ``r``-dimensional subcode (tiny codes only)."""
    _require_r(C, r)
    F = C.field
    best = C.n
    for M in _rref_templates(r, C.k, F.q):
        rows = np.zeros((r, C.n), dtype=np.int64)
        for i in range(r):
            for j in range(C.k):
                if M[i, j]:
                    rows[i] = F.vadd(rows[i], F.vmul(C.gen[j], M[i, j]))
        support = int(np.count_nonzero(np.any(rows != 0, axis=0)))
        best = min(best, support)
    return best


def hierarchy_by_subcodes(C: LinearCode) -> WeightHierarchy:
    return WeightHierarchy.uniform(C.n, [ghw_by_subcodes(C, r) for r in range(1, C.k + 1)], "oracle")
