from __future__ import annotations

import itertools

import numpy as np
import pytest

from torus_ghw.errors import DivisionByZero, MixedFields, NotPrimePower, TooLarge
from torus_ghw.field import field_make, order


def test_prime_field_generator():
    F = field_make(5)
    assert (F.p, F.e, F.beta) == (5, 1, 2)


def test_gf2_generator_is_one():
    F = field_make(2)
    assert (F.p, F.e, F.beta) == (2, 1, 1)


def test_not_prime_power():
    with pytest.raises(NotPrimePower):
        field_make(6)


def test_too_large():
    with pytest.raises(TooLarge):
        field_make(2**17)


def test_gf5_examples():
    F = field_make(5)
    assert F.inv(2) == 3
    assert F.pow(2, 4) == 1


def test_gf4_modulus_and_product():
    F = field_make(4)
    assert F.modulus == (1, 1, 1)
    x = 2  # the class of x, digits (0, 1)
    assert F.mul(x, x) == 3  # x + 1


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        field_make(7).inv(0)


def test_mixed_fields():
    a, b = field_make(5)(1), field_make(7)(1)
    with pytest.raises(MixedFields):
        _ = a + b


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 181])
def test_beta_enumerates_units(q):
    F = field_make(q)
    powers = [F.beta_pow(m) for m in range(q - 1)]
    assert sorted(powers) == list(range(1, q))
    assert order(F, F.beta) == q - 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive(q):
    F = field_make(q)
    els = range(q)
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(F.add(a, b), b) == a
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [4, 5, 9])
def test_vectorised_ops_match_scalar(q):
    F = field_make(q)
    a = np.array([x for x in range(q) for _ in range(q)])
    b = np.array([y for _ in range(q) for y in range(q)])
    assert list(F.vadd(a, b)) == [F.add(x, y) for x, y in zip(a, b)]
    assert list(F.vmul(a, b)) == [F.mul(x, y) for x, y in zip(a, b)]
    nz = np.arange(1, q)
    assert list(F.vinv(nz)) == [F.inv(x) for x in nz]
    assert list(F.vpow(nz, 3)) == [F.pow(x, 3) for x in nz]


def test_field_elem_arithmetic():
    F = field_make(9)
    a, b = F(F.beta), F(5)
    assert (a * b) / b == a
    assert a ** 8 == F(1)
    assert -(-a) == a
    assert (a - a) == F(0)


def test_fields_are_cached():
    assert field_make(8) is field_make(8)
