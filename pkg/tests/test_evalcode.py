from __future__ import annotations

import numpy as np
import pytest

from torus_ghw.errors import EmptyPointSet, ParseError
from torus_ghw.evalcode import (build_code, dual_code, evaluation_matrix, from_rows, full_space,
                                hilbert_function, hilbert_profile, is_degenerate, parse_code_json)
from torus_ghw.field import field_make
from torus_ghw.geometry import PointSet, bipartite_points, point_set, toric_points, torus_points
from torus_ghw.ghw import hierarchy_exact
from torus_ghw.linalg import rank
from torus_ghw.poly import HomogPoly, linear_form

GF181_EXPONENTS = [[0, 0, 0], [90, 0, 0], [0, 36, 0], [0, 0, 20]]


@pytest.fixture(scope="module")
def T2():
    return torus_points(field_make(5), 3)


def test_dimensions_on_the_plane_torus(T2):
    assert (build_code(T2, 2).n, build_code(T2, 2).k) == (16, 6)
    assert build_code(T2, 6).k == 16
    assert [hilbert_function(T2, d) for d in range(8)] == [1, 3, 6, 10, 13, 15, 16, 16]


def test_profile_of_the_plane_torus(T2):
    prof = hilbert_profile(T2)
    assert (prof.reg, prof.a_inv) == (6, 5)
    assert prof[9] == 16 and prof[-1] == 0


def test_profile_of_a_single_point():
    X = point_set(field_make(3), 2, [(1, 1)])
    prof = hilbert_profile(X)
    assert (prof.reg, prof[0]) == (0, 1)


def test_gf181_toric_hilbert_data():
    X = toric_points(field_make(181), GF181_EXPONENTS)
    prof = hilbert_profile(X)
    assert (len(X), prof[5], prof[7], prof.reg, prof.a_inv) == (90, 35, 55, 13, 12)
    assert build_code(X, 5).k == 35


def test_empty_point_set():
    F = field_make(3)
    with pytest.raises(EmptyPointSet):
        build_code(PointSet(F, 2, (), ("explicit",)), 1)


def test_code_contents_match_evaluations(T2):
    F = T2.field
    C = build_code(T2, 1)
    for coeffs in ([1, 0, 4], [2, 3, 1], [0, 1, 0]):
        f = linear_form(F, coeffs)
        assert C.contains(from_rows(F, [f.evaluate_all(T2)]))
    assert C.contains(from_rows(F, [np.ones(16, dtype=np.int64)]))


def test_dual_codes(T2):
    C = build_code(T2, 2)
    D = dual_code(C)
    assert D.k == 10
    assert np.all((C.gen @ D.gen.T) % 5 == 0)
    assert dual_code(D) == C
    F = field_make(3)
    assert dual_code(full_space(F, 4)).k == 0
    rep = from_rows(F, [[1, 1]])
    assert dual_code(rep) == from_rows(F, [[1, 2]])


def test_degeneracy(T2):
    F = field_make(3)
    assert not is_degenerate(build_code(T2, 1))
    assert is_degenerate(from_rows(F, [[1, 0, 1]]))
    assert is_degenerate(from_rows(F, np.zeros((0, 3), dtype=np.int64), 3))


@pytest.mark.parametrize("q,s", [(q, s) for q in (3, 4, 5) for s in (2, 3, 4)])
def test_hilbert_sum_on_tori(q, s):
    X = torus_points(field_make(q), s)
    prof = hilbert_profile(X)
    a = prof.a_inv
    for d in range(1, a):
        assert prof[d] + prof[a - d] == len(X)


@pytest.mark.parametrize("X", [
    torus_points(field_make(4), 3),
    toric_points(field_make(7), [[1, 0], [0, 2], [3, 1]]),
    bipartite_points(field_make(3), 2, 2),
], ids=["torus", "toric", "bipartite"])
def test_codes_are_nested(X):
    prof = hilbert_profile(X)
    for d in range(prof.reg + 1):
        assert build_code(X, d + 1).contains(build_code(X, d))


@pytest.mark.parametrize("q", [3, 4, 5])
def test_normalisation_independence(q):
    F = field_make(q)
    X = torus_points(F, 3)
    rng = np.random.default_rng(q)
    for d in (1, 2):
        ref = build_code(X, d)
        lam = rng.integers(1, q, size=len(X))
        scaled = build_code(X, d, representatives=lam)
        norms = [HomogPoly.monomial(F, m) for m in ([0, d, 0], [0, 0, d])]
        alt = build_code(X, d, normalizers=[norms[i % 2] for i in range(len(X))])
        for C in (scaled, alt):
            assert (C.n, C.k) == (ref.n, ref.k)
            assert hierarchy_exact(C).weights == hierarchy_exact(ref).weights


def test_points_with_zero_coordinates_use_first_nonzero():
    F = field_make(5)
    X = point_set(F, 3, [(0, 1, 2), (0, 0, 1), (1, 3, 4)])
    M = evaluation_matrix(X, 2)
    assert rank(M, F) == build_code(X, 2).k
    # sorted points: (0,0,1), (0,1,2), (1,3,4); each column is divided by the
    # d-th power of its first nonzero coordinate
    assert M[5, 0] == 1 and M[3, 1] == 1 and M[0, 2] == 1


def test_json_round_trip(T2):
    C = build_code(T2, 3)
    back = parse_code_json(C.to_json())
    assert back == C
    assert C.to_text().splitlines()[0] == "5 16 10"
    with pytest.raises(ParseError):
        parse_code_json('{"q": 5}')
