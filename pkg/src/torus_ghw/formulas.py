"""Closed-form weights and zero counts for codes on projective tori.

Every function is pure integer arithmetic.  Powers of ``q - 1`` with a
negative exponent only ever appear inside a ceiling and are evaluated as an
exact ceiling division, never in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadField, BadParams, FormulaUnavailable, HypothesisViolated
from .ghw import NOT_COMPUTED, WeightHierarchy


@dataclass(frozen=True)
class KLDecomp:
    """``d = k (q - 2) + l`` with ``1 <= l <= q - 2``."""

    k: int
    l: int


@dataclass(frozen=True)
class TorusParams:
    q: int
    s: int
    d: int

    @property
    def eta(self) -> int:
        return (self.q - 2) * (self.s - 2)

    @property
    def r(self) -> int:
        return (self.q - 2) * (self.s - 1)

    @property
    def n(self) -> int:
        return (self.q - 1) ** (self.s - 1)

    @property
    def kl(self) -> KLDecomp:
        return kl_decompose(self.q, self.d)


def _check_q(q: int) -> None:
    if q < 3:
        raise BadField(f"the torus formulas need q >= 3, got q = {q}")


def _check(q: int, s: int, d: int, s_min: int = 2) -> None:
    _check_q(q)
    if s < s_min:
        raise BadParams(f"need s >= {s_min}, got s = {s}")
    if d < 1:
        raise BadParams(f"need d >= 1, got d = {d}")


def ceil_div(a: int, b: int) -> int:
    """``ceil(a / b)`` for integers, ``b > 0``."""
    return -((-a) // b)


def ceil_power_times(base: int, exponent: int, factor: int) -> int:
    """``ceil(base**exponent * factor)`` exactly, for any integer exponent."""
    if exponent >= 0:
        return base ** exponent * factor
    return ceil_div(factor, base ** (-exponent))


def kl_decompose(q: int, d: int) -> KLDecomp:
    _check_q(q)
    if d < 1:
        raise BadParams(f"need d >= 1, got d = {d}")
    k = (d - 1) // (q - 2)
    return KLDecomp(k, d - k * (q - 2))


def d1_torus(q: int, s: int, d: int) -> int:
    """Minimum distance of the degree-``d`` code on the torus in P^{s-1}."""
    return _d1(q, s, d)


# the derived formulas call this copy so that replacing the public name in a
# test fixture corrupts only the checks that use it directly
def _d1(q: int, s: int, d: int) -> int:
    _check(q, s, d)
    if d >= (q - 2) * (s - 1):
        return 1
    kl = kl_decompose(q, d)
    return ceil_power_times(q - 1, s - (kl.k + 2), q - 1 - kl.l)


def z1(q: int, s: int, d: int) -> int:
    """Most zeros on the torus of one degree-``d`` form not vanishing on all of it."""
    return (q - 1) ** (s - 1) - _d1(q, s, d)


def z2(q: int, s: int, d: int) -> int:
    """Most common zeros on the torus of two independent degree-``d`` forms,
    neither vanishing on all of it."""
    _check(q, s, d, s_min=3)
    t = TorusParams(q, s, d)
    if d > t.r:
        raise BadParams(f"need d <= (q-2)(s-1) = {t.r}, got d = {d}")
    k, l = t.kl.k, t.kl.l
    if d <= t.eta:
        return (q - 1) ** (s - (k + 3)) * ((q - 1) ** (k + 2) - (q - 1) * (q - l) + 1)
    return (q - 1) ** (s - 1) - q + l


def d2_unified(q: int, s: int, d: int) -> int:
    """Second weight as ``d_1`` plus a single ceiling term."""
    _check(q, s, d)
    kl = kl_decompose(q, d)
    return _d1(q, s, d) + ceil_power_times(q - 1, s - (kl.k + 3), q - 2)


def d2_branches(q: int, s: int, d: int) -> int:
    """Second weight from the case split on ``d`` (and on ``q`` when ``s = 2``)."""
    _check(q, s, d)
    if s == 2:
        if q == 3:
            return 2
        return q - d if d <= q - 3 else 2
    t = TorusParams(q, s, d)
    k, l = t.kl.k, t.kl.l
    if d <= t.eta:
        return (q - 1) ** (s - (k + 3)) * ((q - 1) * (q - l) - 1)
    if d < t.r:
        return q - l
    return 2


def d2_torus(q: int, s: int, d: int) -> int:
    """Second generalized Hamming weight of the degree-``d`` code on the torus."""
    value = d2_branches(q, s, d)
    other = d2_unified(q, s, d)
    if value != other:
        raise AssertionError(f"second-weight forms disagree at q={q}, s={s}, d={d}: {value} != {other}")
    return value


def max_common_zeros(q: int, s: int, d: int) -> int:
    """Most common torus zeros of two independent degree-``d`` forms."""
    _check(q, s, d, s_min=3)
    if d < q - 1:
        return z2(q, s, d)
    return (q - 1) ** (s - 1)


def d2_bipartite(q: int, m: int, n: int, d: int) -> int:
    """Second weight of the code on the edge set of K_{m,n}."""
    _check_q(q)
    if m < 2 or n < 2:
        raise BadParams("both parts need at least two vertices")
    if d < 1:
        raise BadParams(f"need d >= 1, got d = {d}")
    return min(d1_torus(q, m, d) * d2_torus(q, n, d), d1_torus(q, n, d) * d2_torus(q, m, d))


# -- complete intersections ------------------------------------------------------------


def ci_a_level_hierarchy(n: int) -> WeightHierarchy:
    """Hierarchy ``(2, 3, ..., n)`` of the code in degree equal to the a-invariant."""
    if n < 2:
        raise BadParams("need at least two points")
    return WeightHierarchy.uniform(n, range(2, n + 1), "formula")


def ci_tail_weights(n: int, beta: int, d1_dual: int) -> dict[int, int]:
    """The top weights ``d_{beta - i} = n - i`` for ``i = 0..d1_dual - 2``.

    ``beta`` is the code dimension and ``d1_dual`` the minimum distance of the
    code in the complementary degree ``a - d``; both codes are assumed
    non-degenerate (true for every code on a toric set).
    """
    if d1_dual < 1 or beta < 1 or beta > n:
        raise BadParams("need 1 <= beta <= n and d1_dual >= 1")
    if beta < d1_dual:
        raise HypothesisViolated(f"beta = {beta} is smaller than d1_dual = {d1_dual}")
    return {beta - i: n - i for i in range(d1_dual - 1)}


def ci_mds_range(n: int, beta: int, d1_dual: int) -> tuple[int, dict[int, int]]:
    """First index ``alpha`` from which the code is MDS, with the forced weights."""
    tail = ci_tail_weights(n, beta, d1_dual)
    return beta - d1_dual + 2, dict(sorted(tail.items()))


# -- assembled hierarchy for the torus ---------------------------------------------------


def torus_formula_hierarchy(q: int, s: int, d: int, k: int, a_inv: int) -> WeightHierarchy:
    """Every weight of the torus code that a closed form determines.

    ``k`` is the code dimension and ``a_inv`` the a-invariant of the torus
    (both are computed elsewhere).  Entries without a closed form are
    ``None`` with tag ``not-computed``; entries forced by reaching the
    generalized Singleton bound are tagged ``singleton-forced``.
    """
    _check(q, s, d)
    n = (q - 1) ** (s - 1)
    weights: list = [None] * k
    tags: list = [NOT_COMPUTED] * k
    if d > a_inv:
        return WeightHierarchy.uniform(n, range(1, n + 1), "formula")
    if d == a_inv:
        return ci_a_level_hierarchy(n)
    weights[0] = d1_torus(q, s, d)
    tags[0] = "formula"
    if k >= 2:
        weights[1] = d2_torus(q, s, d)
        tags[1] = "formula"
    d1_dual = d1_torus(q, s, a_inv - d)
    if d1_dual <= k:
        for r, w in ci_tail_weights(n, k, d1_dual).items():
            weights[r - 1] = w
            tags[r - 1] = "formula"
    first_mds = next((r for r in range(1, k + 1)
                      if weights[r - 1] is not None and weights[r - 1] == n - k + r), None)
    if first_mds is not None:
        for r in range(first_mds + 1, k + 1):
            if weights[r - 1] is None:
                weights[r - 1] = n - k + r
                tags[r - 1] = "singleton-forced"
    return WeightHierarchy(n, k, tuple(weights), tuple(tags))


def require_torus(kind: str) -> None:
    if kind != "torus":
        raise FormulaUnavailable(f"no closed forms are available for {kind} point sets")
