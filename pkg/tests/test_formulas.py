from __future__ import annotations

from fractions import Fraction
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torus_ghw import formulas as fm
from torus_ghw.errors import BadField, BadParams, FormulaUnavailable, HypothesisViolated


def _ceil(x: Fraction) -> int:
    return math.ceil(x)


def _d1_rational(q, s, d):
    """Reference minimum distance evaluated with exact fractions."""
    if d >= (q - 2) * (s - 1):
        return 1
    k, l = fm.kl_decompose(q, d).k, fm.kl_decompose(q, d).l
    return _ceil(Fraction(q - 1) ** (s - (k + 2)) * (q - 1 - l))


def test_kl_examples():
    assert fm.kl_decompose(5, 4) == fm.KLDecomp(1, 1)
    assert fm.kl_decompose(5, 3) == fm.KLDecomp(0, 3)
    assert fm.kl_decompose(5, 6) == fm.KLDecomp(1, 3)
    with pytest.raises(BadField):
        fm.kl_decompose(2, 1)
    with pytest.raises(BadParams):
        fm.kl_decompose(5, 0)


def test_torus_params():
    t = fm.TorusParams(5, 4, 3)
    assert (t.eta, t.r, t.n, t.kl) == (6, 9, 64, fm.KLDecomp(0, 3))


def test_z1_examples():
    assert fm.z1(5, 3, 2) == 8
    assert fm.z1(5, 3, 6) == 15
    assert fm.z1(3, 3, 1) == 2


def test_z2_examples():
    assert fm.z2(5, 3, 2) == 5 == 1 + (2 - 1) * (5 - 1)
    assert fm.z2(5, 3, 5) == 13
    assert fm.z2(5, 4, 1) == 4 == 4 ** 2 * 0 + 4
    with pytest.raises(BadParams):
        fm.z2(5, 2, 1)
    with pytest.raises(BadParams):
        fm.z2(5, 3, 7)


def test_d1_examples():
    assert fm.d1_torus(5, 3, 2) == 8
    assert fm.d1_torus(5, 3, 4) == 3
    assert fm.d1_torus(5, 3, 7) == 1
    with pytest.raises(BadParams):
        fm.d1_torus(5, 1, 1)


def test_d2_examples():
    assert fm.d2_torus(5, 3, 1) == 15
    assert fm.d2_torus(5, 3, 4) == 4
    assert fm.d2_torus(5, 2, 2) == 3
    assert all(fm.d2_torus(3, 2, d) == 2 for d in range(1, 6))


def test_known_grid_values():
    assert [fm.d1_torus(5, 4, d) for d in range(1, 10)] == [48, 32, 16, 12, 8, 4, 3, 2, 1]
    assert [fm.d2_torus(5, 4, d) for d in range(1, 10)] == [60, 44, 28, 15, 11, 7, 4, 3, 2]
    assert [fm.d1_torus(4, 4, d) for d in range(1, 7)] == [18, 9, 6, 3, 2, 1]
    assert [fm.d2_torus(4, 4, d) for d in range(1, 7)] == [24, 15, 8, 5, 3, 2]


def test_a_level_hierarchy():
    H = fm.ci_a_level_hierarchy(16)
    assert H.weights == tuple(range(2, 17)) and H.k == 15
    assert fm.ci_a_level_hierarchy(4).weights == (2, 3, 4)
    assert fm.ci_a_level_hierarchy(2).weights == (2,)
    with pytest.raises(BadParams):
        fm.ci_a_level_hierarchy(1)


def test_tail_weights():
    assert fm.ci_tail_weights(90, 35, 7) == {35 - i: 90 - i for i in range(6)}
    assert fm.ci_tail_weights(90, 55, 9) == {55 - i: 90 - i for i in range(8)}
    assert fm.ci_tail_weights(16, 6, 4) == {6: 16, 5: 15, 4: 14}
    with pytest.raises(HypothesisViolated):
        fm.ci_tail_weights(16, 3, 4)
    alpha, forced = fm.ci_mds_range(16, 6, 4)
    assert alpha == 4 and forced == {4: 14, 5: 15, 6: 16}


def test_bipartite_formula():
    assert fm.d2_bipartite(5, 2, 2, 1) == 12
    assert fm.d2_bipartite(3, 2, 2, 1) == 2
    assert fm.d2_bipartite(5, 2, 3, 2) == fm.d2_bipartite(5, 3, 2, 2)


def test_max_common_zeros():
    assert fm.max_common_zeros(5, 3, 2) == 5
    assert fm.max_common_zeros(5, 3, 4) == 16
    assert fm.max_common_zeros(5, 4, 1) == 4


def test_formula_hierarchy_tags():
    H = fm.torus_formula_hierarchy(5, 3, 1, 3, 5)
    assert H.weights == (12, 15, 16)
    H = fm.torus_formula_hierarchy(5, 4, 3, 20, 8)
    assert H.weights[:2] == (16, 28) and H.weights[2] is None
    assert H.methods[2] == "not-computed"
    assert H.weights[13:] == tuple(range(58, 65))
    assert fm.torus_formula_hierarchy(5, 3, 5, 15, 5).weights == tuple(range(2, 17))
    assert fm.torus_formula_hierarchy(5, 3, 6, 16, 5).weights == tuple(range(1, 17))
    with pytest.raises(FormulaUnavailable):
        fm.require_torus("toric")


def test_singleton_forcing_fills_gaps():
    # d = 4 on the plane torus over GF(5): d2 = 4 is already MDS
    H = fm.torus_formula_hierarchy(5, 3, 4, 13, 5)
    assert H.weights == (3, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16)
    assert H.methods[2] == "formula" or H.methods[2] == "singleton-forced"


grid = st.tuples(st.sampled_from([3, 4, 5, 7, 8, 9, 11, 13]), st.integers(2, 7)).flatmap(
    lambda qs: st.tuples(st.just(qs[0]), st.just(qs[1]),
                         st.integers(1, (qs[0] - 2) * (qs[1] - 1) + 3)))


@settings(max_examples=400, deadline=None)
@given(grid)
def test_exact_ceilings(case):
    q, s, d = case
    assert fm.d1_torus(q, s, d) == _d1_rational(q, s, d)
    k = fm.kl_decompose(q, d).k
    unified = _d1_rational(q, s, d) + _ceil(Fraction(q - 1) ** (s - (k + 3)) * (q - 2))
    assert fm.d2_torus(q, s, d) == unified == fm.d2_branches(q, s, d)


@settings(max_examples=400, deadline=None)
@given(grid)
def test_basic_relations(case):
    q, s, d = case
    kl = fm.kl_decompose(q, d)
    assert kl.k * (q - 2) + kl.l == d and 1 <= kl.l <= q - 2
    n = (q - 1) ** (s - 1)
    assert fm.z1(q, s, d) + fm.d1_torus(q, s, d) == n
    assert 1 <= fm.d1_torus(q, s, d) < fm.d2_torus(q, s, d) <= n


@settings(max_examples=300, deadline=None)
@given(grid)
def test_zero_count_inequalities(case):
    q, s, d = case
    if s < 3 or d > (q - 2) * (s - 1):
        return
    for dp in range(1, d):
        assert fm.z1(q, s, dp) <= fm.z1(q, s, d)
        assert fm.z2(q, s, dp) <= fm.z2(q, s, d)
        assert fm.z2(q, s, dp) <= fm.z1(q, s, dp) <= fm.z2(q, s, d) <= fm.z1(q, s, d)
    assert (q - 1) * fm.z1(q, s, d) == fm.z1(q, s + 1, d)
    assert (q - 1) * fm.z2(q, s, d) <= fm.z2(q, s + 1, d)


@pytest.mark.parametrize("q,s", [(q, s) for q in (3, 4, 5, 7, 9) for s in (3, 4, 5)])
def test_second_zero_count_branch_seam(q, s):
    t = fm.TorusParams(q, s, 1)
    n = (q - 1) ** (s - 1)
    for d in (t.eta, t.eta + 1):
        kl = fm.kl_decompose(q, d)
        if d <= t.eta:
            expect = (q - 1) ** (s - (kl.k + 3)) * ((q - 1) ** (kl.k + 2) - (q - 1) * (q - kl.l) + 1)
        else:
            expect = n - q + kl.l
        assert fm.z2(q, s, d) == expect
    assert fm.z2(q, s, t.eta) <= fm.z2(q, s, t.eta + 1)
