import pytest
from hypothesis import given, settings, strategies as st

from whopf.catalog import m2_conjugation, weak_smash_k2, z2_trivial
from whopf.cohom import (center_module_structure, classify, cocycle_family, crossed_population, enumerate_cocycles,
                         h2_classes, regular_witnesses, twist, untwist, verify_h2_bijection)
from whopf.cleft2cross import search_equivalence
from whopf.comodule import FactorizationFailure, identity_integral, is_cleft, self_comodule
from whopf.crossed import build_crossed_product, crossed_product_cleft, is_crossed_system
from whopf.field import GF
from whopf.linmap import LinMap
from whopf.structure import cyclic_group, small_groupoids, groupoid_algebra, indiscrete

import oracles


def self_cert(G, p):
    H = groupoid_algebra(G, GF(p))
    return is_cleft(self_comodule(H), *identity_integral(H))


def counts(cert):
    ZM = center_module_structure(cert).module
    classes = h2_classes(ZM)
    return len(classes), len({c.class_id for c in classes})


@pytest.mark.parametrize("n,p", [(1, 2), (1, 3), (2, 2), (2, 3), (2, 5), (2, 7), (3, 2), (3, 3), (4, 2)])
def test_group_h2_matches_oracle(n, p):
    G = cyclic_group(n) if n > 1 else {g.name: g for g in small_groupoids()}["trivial"]
    assert counts(self_cert(G, p)) == oracles.h2_group_cohomology(oracles.cyclic(n), p)


def test_indiscrete_h2_matches_oracle():
    assert counts(self_cert(indiscrete(("x", "y")), 3)) == oracles.h2_group_cohomology(oracles.pair(), 3)


def test_center_module_report():
    for CS in (z2_trivial(3, 1), z2_trivial(3, 2), weak_smash_k2()):
        CM = center_module_structure(crossed_product_cleft(build_crossed_product(CS)))
        assert CM.report.passed, CM.report.first_failure()


def test_center_module_of_conjugation_is_scalars():
    CM = center_module_structure(crossed_product_cleft(build_crossed_product(m2_conjugation())))
    assert CM.report.passed, CM.report.first_failure()
    assert CM.center.algebra.space.dim == 1


def test_twist_of_trivial_class_is_base():
    CM = center_module_structure(crossed_product_cleft(build_crossed_product(z2_trivial(3, 1))))
    assert twist(CM, CM.module.u2).sigma == CM.base.sigma


def test_twist_by_two():
    CM = center_module_structure(crossed_product_cleft(build_crossed_product(z2_trivial(3, 1))))
    tau = LinMap.from_function(CM.module.H.power_space(2), CM.module.A.space,
                               lambda b: {lab: 2 * c for lab, c in CM.module.A.unit.image_of("1").items()}
                               if b == "g⊗g" else CM.module.A.unit.image_of("1"), CM.module.field)
    tw = twist(CM, tau)
    assert tw.sigma == z2_trivial(3, 2).sigma
    assert untwist(CM, tw) == tau


def test_untwist_rejects_non_central():
    CS = m2_conjugation()
    CM = center_module_structure(crossed_product_cleft(build_crossed_product(CS)))
    pop = crossed_population(CM.base.M)
    assert all(twist(CM, untwist(CM, cs)).sigma == cs.sigma for cs in pop)
    bogus = type(CS)(CS.M, CS.M.u2)
    with pytest.raises(FactorizationFailure):
        untwist(CM, bogus)


@pytest.mark.parametrize("p,expect", [(3, "2 = 2"), (2, "1 = 1")])
def test_bijection_over_z2(p, expect):
    rep, summary = verify_h2_bijection(crossed_product_cleft(build_crossed_product(z2_trivial(p, 1))))
    assert rep.passed, rep.first_failure()
    assert rep.get("class counts agree").detail == expect


def test_bijection_over_weak_smash():
    rep, summary = verify_h2_bijection(crossed_product_cleft(build_crossed_product(weak_smash_k2())))
    assert rep.passed, rep.first_failure()
    assert summary.classes == summary.system_classes == 1


def test_population_members_are_crossed_systems():
    M = z2_trivial(5, 1).M
    pop = crossed_population(M)
    assert len(pop) == 4 and all(is_crossed_system(cs) for cs in pop)
    assert len(set(classify(pop))) == 2


def test_regular_witnesses_are_normalized():
    M = z2_trivial(5, 1).M
    ws = regular_witnesses(M)
    assert len(ws) == 4
    assert all(h @ M.H.eta == M.A.unit for h, _ in ws)


@settings(max_examples=20)
@given(st.integers(1, 6), st.integers(1, 6))
def test_classes_are_square_classes(a, b):
    # over GF(7) with Z/2 acting trivially, sigma(g,g) = a and b are
    # equivalent exactly when a/b is a square
    squares = {x * x % 7 for x in range(1, 7)}
    found = search_equivalence(z2_trivial(7, a), z2_trivial(7, b)).equivalent
    assert found == (a * pow(b, -1, 7) % 7 in squares)


def test_family_contains_every_cocycle():
    M = z2_trivial(7, 1).M
    fam = cocycle_family(M)
    assert fam.dimension == 1
    assert {cs.sigma.key() for cs in crossed_population(M)} <= {fam.member([c]).key() for c in range(7)}
    assert len(enumerate_cocycles(M)) == 6
