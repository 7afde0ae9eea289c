from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torus_ghw import ghw as G
from torus_ghw.errors import Infeasible, NotAPartitionCandidate, OutOfRange
from torus_ghw.evalcode import build_code, from_rows, full_space
from torus_ghw.field import field_make
from torus_ghw.geometry import bipartite_points, toric_points, torus_points
from torus_ghw.ghw import (OracleConfig, WeightHierarchy, duality_complete, ghw_by_subcodes,
                           ghw_exact, hierarchy_by_subcodes, hierarchy_exact, is_r_mds,
                           is_transitive, min_distance)

# hierarchies of the plane torus over GF(5), degrees 1..6
PLANE_TABLE = {
    1: (12, 15, 16),
    2: (8, 11, 12, 14, 15, 16),
    3: (4, 7, 8, 10, 11, 12, 13, 14, 15, 16),
    4: (3, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16),
    5: tuple(range(2, 17)),
    6: tuple(range(1, 17)),
}

CAP64 = OracleConfig(max_n_exhaustive=64)


@pytest.fixture(scope="module")
def T2():
    return torus_points(field_make(5), 3)


def _brute_min_weight(C):
    best = C.n
    for msg in itertools.product(range(C.field.q), repeat=C.k):
        if any(msg):
            best = min(best, int(np.count_nonzero(C.codeword(msg))))
    return best


def test_examples(T2):
    assert ghw_exact(build_code(T2, 2), 1) == 8
    assert ghw_exact(build_code(T2, 3), 4) == 10
    F = field_make(3)
    for r in range(1, 6):
        assert ghw_exact(full_space(F, 5), r) == r


@pytest.mark.parametrize("d", sorted(PLANE_TABLE))
def test_plane_torus_hierarchies(T2, d):
    C = build_code(T2, d)
    H = hierarchy_exact(C)
    assert H.weights == PLANE_TABLE[d]
    assert all(m == "oracle" for m in H.methods)
    assert [ghw_exact(C, r) for r in range(1, C.k + 1)] == list(PLANE_TABLE[d])


def test_min_distance_examples(T2):
    assert min_distance(build_code(T2, 4)) == 3
    line = build_code(torus_points(field_make(5), 2), 1)
    assert (line.n, line.k) == (4, 2)
    assert min_distance(line) == _brute_min_weight(line) == 3
    with pytest.raises(OutOfRange):
        min_distance(from_rows(field_make(3), np.zeros((0, 3), dtype=np.int64), 3))


def test_range_and_cap_errors(T2):
    C = build_code(T2, 2)
    with pytest.raises(OutOfRange):
        ghw_exact(C, 0)
    with pytest.raises(OutOfRange):
        ghw_exact(C, 7)
    big = build_code(torus_points(field_make(4), 4), 2)
    with pytest.raises(Infeasible, match="max_n_exhaustive = 24"):
        ghw_exact(big, 1)
    with pytest.raises(Infeasible):
        hierarchy_exact(big)


def test_is_r_mds(T2):
    C = build_code(T2, 2)
    assert is_r_mds(C, 4, 14)
    assert not is_r_mds(C, 1, 8)
    Fs = full_space(field_make(3), 4)
    assert all(is_r_mds(Fs, r, r) for r in range(1, 5))
    with pytest.raises(OutOfRange):
        is_r_mds(C, 7, 16)


def test_duality_from_degree_three(T2):
    H3 = hierarchy_exact(build_code(T2, 3))
    H2 = duality_complete(H3, 16)
    assert H2.weights == PLANE_TABLE[2]
    assert H2[2] == 11 and H2[3] == 12
    assert all(m == "duality" for m in H2.methods)


def test_duality_edge_cases():
    assert duality_complete(WeightHierarchy.uniform(2, (1, 2), "oracle"), 2).k == 0
    n, k = 7, 3
    mds = WeightHierarchy.uniform(n, range(n - k + 1, n + 1), "oracle")
    dual = duality_complete(mds, n)
    assert dual.weights == tuple(range(k + 1, n + 1))
    assert sorted(set(mds.weights) | {n + 1 - w for w in dual.weights}) == list(range(1, n + 1))
    assert duality_complete(dual, n).weights == mds.weights


def test_duality_rejects_bad_input():
    with pytest.raises(NotAPartitionCandidate):
        duality_complete(WeightHierarchy.uniform(5, (3, 3), "oracle"), 5)
    with pytest.raises(NotAPartitionCandidate):
        duality_complete(WeightHierarchy.uniform(5, (2, 6), "oracle"), 5)
    partial = WeightHierarchy(5, 2, (2, None), ("oracle", "not-computed"))
    with pytest.raises(NotAPartitionCandidate):
        duality_complete(partial, 5)


def test_hierarchy_container_validation():
    with pytest.raises(ValueError):
        WeightHierarchy(3, 1, (None,), ("oracle",))
    with pytest.raises(ValueError):
        WeightHierarchy(3, 1, (2,), ("guess",))
    H = WeightHierarchy.uniform(4, (2, 2, 5), "oracle")
    assert len(H.violations()) == 2
    assert H.to_dict() == {"n": 4, "k": 3, "weights": [2, 2, 5], "methods": ["oracle"] * 3}


@st.composite
def random_codes(draw):
    q = draw(st.sampled_from([2, 3, 4]))
    n = draw(st.integers(2, 8))
    k = draw(st.integers(1, min(4, n)))
    data = draw(st.lists(st.integers(0, q - 1), min_size=k * n, max_size=k * n))
    C = from_rows(field_make(q), np.array(data).reshape(k, n), n)
    return C


@settings(max_examples=60, deadline=None)
@given(random_codes())
def test_routes_agree_with_subcode_enumeration(C):
    if C.k == 0:
        return
    H = hierarchy_exact(C)
    assert H.weights == hierarchy_by_subcodes(C).weights
    assert [ghw_exact(C, r) for r in range(1, C.k + 1)] == list(H.weights)
    assert not H.violations()


def _forced(C, mode, fn):
    orig = G._LowWeight._choose_mode
    G._LowWeight._choose_mode = lambda self: mode
    try:
        return fn()
    finally:
        G._LowWeight._choose_mode = orig


@pytest.mark.parametrize("q,s,d,modes,dual", [
    (5, 3, 1, ("all", "bz", "orbit", "mitm"), True),
    (5, 3, 2, ("all", "bz", "orbit", "mitm"), True),
    (5, 3, 3, ("all", "bz", "orbit", "mitm"), True),
    (4, 3, 2, ("all", "bz", "orbit", "mitm"), True),
    (3, 4, 1, ("all", "bz", "orbit", "mitm"), True),
    (4, 4, 2, ("all", "bz", "orbit"), False),
    (4, 4, 3, ("bz", "orbit", "mitm"), True),
    (4, 4, 4, ("orbit", "mitm"), True),
])
def test_light_word_strategies_agree(q, s, d, modes, dual):
    C = build_code(torus_points(field_make(q), s), d)
    H = hierarchy_exact(C, CAP64)
    for mode in modes:
        lw = _forced(C, mode, lambda: G._LowWeight(C, CAP64, True))
        assert lw.mode == mode
        assert lw.min_weight()[0] == H[1], mode
        assert _forced(C, mode, lambda: G._second_weight(C, CAP64)) == H[2], mode
    if dual:
        assert G._dual_top(C, 1, CAP64) == H[1]
        assert G._dual_top(C, 2, CAP64) == H[2]
        assert G._primal_target(C, 1, CAP64) == H[1]


@pytest.mark.parametrize("q,s,d", [(5, 3, 2), (4, 4, 2), (3, 4, 1)])
def test_orbit_search_reaches_every_orbit(q, s, d):
    # every light word is a translate of a word returned by the orbit search
    C = build_code(torus_points(field_make(q), s), d)
    perms = G.translation_permutations(C.points)
    w = hierarchy_exact(C, CAP64)[1] + 1
    everything = _forced(C, "all", lambda: G._LowWeight(C, CAP64, False)).words_up_to(w)
    reps = _forced(C, "orbit", lambda: G._LowWeight(C, CAP64, True)).words_up_to(w)
    rep_supports = {tuple(np.nonzero(v)[0]) for v in reps}
    orbit_supports = set()
    for supp in rep_supports:
        for p in perms:
            orbit_supports.add(tuple(sorted(int(p[i]) for i in supp)))
    assert {tuple(np.nonzero(v)[0]) for v in everything} <= orbit_supports


def test_transitivity_detection(T2):
    assert is_transitive(build_code(T2, 2))
    assert is_transitive(build_code(bipartite_points(field_make(3), 2, 2), 1))
    assert not is_transitive(from_rows(field_make(3), [[1, 1, 0]]))


@pytest.mark.parametrize("X", [
    torus_points(field_make(5), 3),
    torus_points(field_make(4), 3),
    toric_points(field_make(7), [[1, 0], [0, 2], [2, 1]]),
    toric_points(field_make(5), [[0, 0], [1, 0], [0, 2]]),
    bipartite_points(field_make(3), 2, 2),
], ids=["gf5-plane", "gf4-plane", "gf7-toric", "gf5-degenerate", "bipartite"])
def test_hierarchies_decrease_with_degree(X):
    from torus_ghw.evalcode import hilbert_profile
    prof = hilbert_profile(X)
    hs = [hierarchy_exact(build_code(X, d)) for d in range(1, prof.reg + 2)]
    for H0, H1 in zip(hs, hs[1:]):
        for r in range(1, H0.k + 1):
            if H0[r] == r:
                assert H1[r] == r
            else:
                assert H1[r] < H0[r]
    for H in hs:
        assert not H.violations()
        mds = [H[r] == H.n - H.k + r for r in range(1, H.k + 1)]
        first = mds.index(True) if True in mds else len(mds)
        assert all(mds[first:])
        assert H[H.k] == H.n


def test_subcode_reference_on_a_known_code(T2):
    C = build_code(T2, 1)
    assert [ghw_by_subcodes(C, r) for r in (1, 2, 3)] == [12, 15, 16]
