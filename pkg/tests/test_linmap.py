from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from whopf.field import GF, Q
from whopf.linmap import (K, Inconsistent, LinMap, NoFactorization, NotIdempotent, ShapeMismatch, factor_through,
                          identity, image, kernel, make_space, null_space, solve_affine, solve_linear_conditions,
                          split_idempotent, symmetry, tensor, tensor_space)

F = GF(5)


def space(n, tag):
    return make_space([f"{tag}{k}" for k in range(n)], tag)


def maps(dom, cod, field=F):
    n = dom.dim * cod.dim
    if field.kind == "Q":
        frac = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 5))
        vals = st.lists(frac, min_size=n, max_size=n)
    else:
        vals = st.lists(st.integers(0, field.p - 1), min_size=n, max_size=n)
    return vals.map(lambda v: LinMap(dom, cod, field.array(np.array(v, dtype=object).reshape(cod.dim, dom.dim)),
                                     field))


U, V, W, X = space(2, "u"), space(3, "v"), space(2, "w"), space(2, "x")


@given(maps(U, V), maps(V, W), maps(W, X))
def test_composition_associative(f, g, h):
    assert (h @ g) @ f == h @ (g @ f)


@given(maps(U, V), maps(W, X), maps(V, U), maps(X, W))
def test_tensor_is_functorial(f, g, f2, g2):
    assert tensor(f2, g2) @ tensor(f, g) == tensor(f2 @ f, g2 @ g)


@given(maps(U, V), maps(W, X))
def test_symmetry_natural(f, g):
    assert symmetry(V, X, F) @ tensor(f, g) == tensor(g, f) @ symmetry(U, W, F)


def test_symmetry_involutive():
    assert symmetry(V, U, F) @ symmetry(U, V, F) == identity(tensor_space(U, V), F)


def test_unit_object_is_strict():
    assert tensor_space(K, U, K) == U
    f = LinMap.from_rows(K, K, [[2]], F)
    assert tensor(f, identity(U, F)).dom == U


@given(maps(V, U, Q))
def test_null_space_over_rationals(f):
    ns = null_space(f.mat, Q)
    assert ns.shape[1] == V.dim - f.rank()
    assert all(x == 0 for x in (f.mat @ ns).flat)


@given(maps(V, U))
def test_kernel_and_image_dimensions(f):
    ker, im = kernel(f).inj, image(f).inj
    assert ker.dom.dim + im.dom.dim == V.dim
    assert (f @ ker).is_zero()
    assert factor_through(f, im) is not None


@given(maps(U, V))
def test_solve_affine_recovers_solutions(a):
    fam = solve_affine(LinMap(U, V, a.mat, F), a @ identity(U, F))
    assert LinMap(U, V, a.mat, F) @ fam.particular == a
    for h in fam.homogeneous:
        assert (a @ h).is_zero()


def test_inconsistent_system():
    z = LinMap.from_rows(U, V, [[0, 0]] * 3, F)
    rhs = LinMap.from_rows(K, V, [[1], [0], [0]], F)
    with pytest.raises(Inconsistent):
        solve_affine(z, rhs)


def test_split_idempotent():
    q = LinMap.from_rows(V, V, [[1, 1, 0], [0, 0, 0], [0, 0, 1]], F)
    s = split_idempotent(q)
    assert s.inj @ s.proj == q
    assert s.proj @ s.inj == identity(s.space, F)
    with pytest.raises(NotIdempotent):
        split_idempotent(LinMap.from_rows(U, U, [[2, 0], [0, 1]], F))


def test_factor_through_failure():
    emb = LinMap.from_rows(K, U, [[1], [0]], F)
    with pytest.raises(NoFactorization):
        factor_through(LinMap.from_rows(K, U, [[0], [1]], F), emb)


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        identity(U, F) @ identity(V, F)


def test_solve_linear_conditions_commutant():
    # maps commuting with a Jordan block are polynomials in it
    J = LinMap.from_rows(U, U, [[1, 1], [0, 1]], Q)
    fam = solve_linear_conditions(U, U, Q, [(lambda x: J @ x - x @ J, identity(U, Q).scale(0))])
    assert fam.dimension == 2


def test_rational_exactness():
    a = LinMap.from_rows(U, U, [["1/3", 0], [0, "2/7"]], Q)
    inv = LinMap.from_rows(U, U, [[3, 0], [0, "7/2"]], Q)
    assert a @ inv == identity(U, Q)
    assert a.mat[0, 0] == Fraction(1, 3)


def test_repeated_labels_rejected():
    with pytest.raises(ValueError):
        make_space(["a", "a"])
