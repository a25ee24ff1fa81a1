import pytest

from whopf.catalog import m2_conjugation, weak_smash_k2, z2_trivial
from whopf.crossed import (CocycleFail, CrossedSystem, NormalFail, NotRegular, TwistedFail, build_crossed_product,
                           crossed_product_cleft, crossed_product_comodule, is_crossed_system, smash_system,
                           special_case_checks, verify_crossed_system)
from whopf.field import GF
from whopf.linmap import K, LinMap, identity, tensor
from whopf.maction import is_strict

import oracles

SYSTEMS = {"hopf smash": lambda: z2_trivial(3, 1), "weak smash": weak_smash_k2,
           "twisted": lambda: z2_trivial(3, 2), "conjugation": m2_conjugation}


@pytest.fixture(scope="module", params=sorted(SYSTEMS))
def system(request):
    return SYSTEMS[request.param]()


def test_is_crossed_system(system):
    rep = verify_crossed_system(system)
    assert rep.passed, rep.first_failure()


def test_quadruple_and_sigma_forms_agree(system):
    rep = verify_crossed_system(system)
    assert rep.get("(g1)").passed == rep.get("twisted-sigma").passed == rep.get("twis-wcp").passed
    assert rep.get("(g2)").passed == rep.get("2-cocycle-sigma").passed == rep.get("cocy2-wcp").passed


def test_crossed_product_builds(system):
    CP = build_crossed_product(system)
    assert CP.report.passed, CP.report.first_failure()
    assert CP.report.get("associativity").passed
    assert CP.report.get("left unit").passed and CP.report.get("right unit").passed


def test_coinvariants_of_product_are_A(system):
    CP = build_crossed_product(system)
    CA, coinv, rep = crossed_product_comodule(CP)
    assert rep.passed, rep.first_failure()
    assert coinv.space.dim == system.A.space.dim


def test_canonical_integral_is_cleaving(system):
    cert = crossed_product_cleft(build_crossed_product(system))
    assert cert.cleft, cert.report.first_failure()
    assert cert.total


def test_nabla_is_identity_for_hopf():
    for CS in (z2_trivial(3, 1), z2_trivial(3, 2), m2_conjugation()):
        assert CS.nabla == identity(CS.nabla.dom, CS.field)
    k2 = weak_smash_k2()
    assert not k2.nabla == identity(k2.nabla.dom, k2.field)
    assert build_crossed_product(k2).algebra.space.dim == 2


@pytest.mark.parametrize("p,s", [(3, 2), (5, 3), (7, 6)])
def test_twisted_group_algebra_product(p, s):
    CS = z2_trivial(p, s)
    CP = build_crossed_product(CS)
    F = GF(p)

    def elem(h):
        return CP.proj @ LinMap.from_function(K, CP.CS.mult_big.cod, lambda _: {f"1⊗{h}": 1}, F)

    table = oracles.twisted_z2_product(p, s)
    for (x, y), out in table.items():
        prod = CP.algebra.mult @ tensor(elem(x), elem(y))
        expect = elem("e").scale(out.get("e", 0)) + elem("g").scale(out.get("g", 0))
        assert prod == expect


def test_special_cases():
    assert special_case_checks(z2_trivial(3, 1)) == {"smash": True, "twisted": True, "strict": True,
                                                     "centerValued": True}
    assert special_case_checks(z2_trivial(3, 2))["smash"] is False
    assert special_case_checks(weak_smash_k2())["smash"] is True
    c = special_case_checks(m2_conjugation())
    assert c["strict"] is False and c["centerValued"] is False


def test_strict_iff_center_valued(system):
    checks = special_case_checks(system)
    assert checks["strict"] == checks["centerValued"]


def test_smash_system_iff_strict():
    for CS in (z2_trivial(3, 1), weak_smash_k2(), m2_conjugation()):
        assert is_crossed_system(smash_system(CS.M)) == is_strict(CS.M)


def test_non_strict_smash_fails_twisted_condition():
    bad = m2_conjugation(3, strict_sigma=True)
    rep = verify_crossed_system(bad)
    assert not rep.get("(g1)").passed
    with pytest.raises(TwistedFail):
        build_crossed_product(bad)


def test_builder_errors():
    CS = z2_trivial(3, 1)
    M = CS.M
    with pytest.raises(NotRegular):
        build_crossed_product(CrossedSystem(M, CS.sigma.scale(0)))
    unnormalized = LinMap.from_function(M.H.power_space(2), M.A.space, lambda b: {"1": 2}, M.field)
    with pytest.raises((NormalFail, CocycleFail)):
        build_crossed_product(CrossedSystem(M, unnormalized))
    non_cocycle = LinMap.from_function(M.H.power_space(2), M.A.space,
                                       lambda b: {"1": 2 if b == "e⊗g" else 1}, M.field)
    with pytest.raises((CocycleFail, NormalFail)):
        build_crossed_product(CrossedSystem(M, non_cocycle))
