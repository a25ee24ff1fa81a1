from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from whopf.field import GF, Q, DivisionByZero, FieldMismatch, NotEnumerable, Scalar, arith, enumerate_scalars

primes = st.sampled_from([2, 3, 5, 7, 11, 97])
rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)


def gf_triple(p):
    return st.tuples(*[st.integers(0, p - 1)] * 3)


@given(primes.flatmap(lambda p: st.tuples(st.just(p), gf_triple(p))))
def test_gf_ring_axioms(data):
    p, (a, b, c) = data
    F = GF(p)
    x, y, z = (F.scalar(v) for v in (a, b, c))
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0 and x + (-x) == 0


@given(primes.flatmap(lambda p: st.tuples(st.just(p), st.integers(1, p - 1))))
def test_gf_inverse(data):
    p, a = data
    x = GF(p).scalar(a)
    assert x * x.inverse() == 1
    assert arith("/", x, x) == 1


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    x, y, z = Q.scalar(a), Q.scalar(b), Q.scalar(c)
    assert (x + y) * z == x * z + y * z
    assert (x - y) + y == x
    if b != 0:
        assert (x / y) * y == x


def test_rational_parsing():
    assert Q.canon("3/6") == Fraction(1, 2)
    assert Q.format(Fraction(-2, 4)) == "-1/2"


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        GF(5).scalar(0).inverse()
    with pytest.raises(DivisionByZero):
        Q.scalar(0).inverse()


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        GF(3).scalar(1) + GF(5).scalar(1)
    with pytest.raises(FieldMismatch):
        GF(3).scalar(1) * Q.scalar(1)


def test_non_prime_rejected():
    with pytest.raises(Exception):
        GF(4)


def test_enumeration():
    assert [s.value for s in enumerate_scalars(GF(3))] == [0, 1, 2]
    assert GF(5).units() == [1, 2, 3, 4]
    with pytest.raises(NotEnumerable):
        list(enumerate_scalars(Q))


def test_negative_reduction():
    assert GF(7).canon(-1) == 6
    assert GF(7).scalar(3) - 5 == 5


def test_json_round_trip():
    for F in (Q, GF(2), GF(97)):
        assert type(F).from_json(F.to_json()) == F


@given(primes.flatmap(lambda p: st.tuples(st.just(p), st.lists(st.lists(st.integers(-200, 200), min_size=3,
                                                                         max_size=3), min_size=3, max_size=3))))
def test_blas_matmul_is_exact(data):
    import numpy as np
    p, rows = data
    F = GF(p)
    a = F.array(rows)
    ref = np.array([[sum(int(a[i, k]) * int(a[k, j]) for k in range(3)) % p for j in range(3)] for i in range(3)])
    assert (F.matmul(a, a) == ref).all()
