"""Crossed systems (phi, sigma) and the crossed product algebras they define."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .comodule import (ComoduleAlgebra, Coinvariants, CleftCertificate, coinvariants,
                       inverse_conditions, is_cleft, verify_comodule_algebra)
from .field import WhopfError
from .linmap import (K, LinMap, NoFactorization, factor_through, identity, split_idempotent, symmetry,
                     tensor)
from .maction import (WeakModuleAlgebra, is_strict, is_weak_module_algebra, reg_conditions, try_reg,
                      verify_weak_module_algebra, algebra_center)
from .report import Report
from .structure import Algebra, conv, verify_algebra


class CrossedSystemError(WhopfError):
    pass


class TwistedFail(CrossedSystemError):
    pass


class CocycleFail(CrossedSystemError):
    pass


class NormalFail(CrossedSystemError):
    pass


class NotRegular(CrossedSystemError):
    pass


@dataclass
class CrossedSystem:
    """A weak module algebra (A, phi) with sigma: H⊗H -> A."""

    M: WeakModuleAlgebra
    sigma: LinMap
    name: str = ""

    @property
    def H(self):
        return self.M.H

    @property
    def A(self) -> Algebra:
        return self.M.A

    @property
    def phi(self) -> LinMap:
        return self.M.phi

    @property
    def field(self):
        return self.M.field

    @cached_property
    def sigma_inv(self) -> Optional[LinMap]:
        return try_reg(self.M, self.sigma, 2)

    @cached_property
    def psi(self) -> LinMap:
        H = self.H
        return tensor(self.phi, H.I) @ tensor(H.I, self.M.c_HA) @ tensor(H.delta, self.M.IA)

    @cached_property
    def sigmaHA(self) -> LinMap:
        return tensor(self.sigma, self.H.mu) @ self.H.delta2

    @cached_property
    def nabla(self) -> LinMap:
        IA, H = self.M.IA, self.H
        return tensor(self.A.mult, H.I) @ tensor(IA, self.psi) @ tensor(IA, H.I, self.A.unit)

    @cached_property
    def mult_big(self) -> LinMap:
        """The product on A⊗H before restricting to the image of nabla."""
        IA, H = self.M.IA, self.H
        return tensor(self.A.mult, H.I) @ tensor(self.A.mult, self.sigmaHA) @ tensor(IA, self.psi, H.I)


def twisted_report(CS: CrossedSystem) -> Report:
    H, A, phi, s, IA = CS.H, CS.A, CS.phi, CS.sigma, CS.M.IA
    mu, d2 = A.mult, H.delta2
    rep = Report("twisted condition")
    lhs = mu @ tensor(IA, phi) @ tensor(s, H.mu, IA) @ tensor(d2, IA)
    rhs = mu @ tensor(phi @ tensor(H.I, phi), IA) @ tensor(H.I, H.I, CS.M.c_AA) @ tensor(H.I, H.I, s, IA) @ tensor(d2, IA)
    rep.equal("(g1)", lhs, rhs)
    rep.equal("twisted-sigma", mu @ tensor(phi @ tensor(H.I, phi), IA) @ tensor(H.I, H.I, CS.M.c_AA)
              @ tensor(tensor(H.I, H.I, s) @ d2, IA), mu @ tensor(IA, phi) @ tensor(CS.sigmaHA, IA))
    psi, sHA = CS.psi, CS.sigmaHA
    rep.equal("twis-wcp", tensor(mu, H.I) @ tensor(IA, psi) @ tensor(sHA, IA),
              tensor(mu, H.I) @ tensor(IA, sHA) @ tensor(psi, H.I) @ tensor(H.I, psi))
    return rep


def cocycle_report(CS: CrossedSystem) -> Report:
    H, A, phi, s, IA = CS.H, CS.A, CS.phi, CS.sigma, CS.M.IA
    I, mu = H.I, A.mult
    C3 = H.power_coalgebra(3)
    rep = Report("cocycle condition")
    oL = H.omegaL
    lhs = conv(C3, A, phi @ tensor(I, s) @ tensor(oL, I), s @ tensor(I, H.mu))
    rhs = conv(C3, A, tensor(s, H.eps) @ tensor(I, oL), s @ tensor(H.mu, I))
    rep.equal("(g2)", lhs, rhs)
    psi, sHA = CS.psi, CS.sigmaHA
    rep.equal("2-cocycle-sigma", mu @ tensor(IA, s) @ tensor(sHA, I),
              mu @ tensor(IA, s) @ tensor(psi, I) @ tensor(I, sHA))
    rep.equal("cocy2-wcp", tensor(mu, I) @ tensor(IA, sHA) @ tensor(sHA, I),
              tensor(mu, I) @ tensor(IA, sHA) @ tensor(psi, I) @ tensor(I, sHA))
    if H.is_cocommutative():
        rep.equal("new-two-cocycle", conv(C3, A, phi @ tensor(I, s), s @ tensor(I, H.mu)),
                  conv(C3, A, tensor(s, H.eps), s @ tensor(H.mu, I)))
        si = CS.sigma_inv
        if si is not None:
            c = H.c
            rep.equal("new-two-cocycle-2",
                      mu @ tensor(phi @ tensor(I, si), s) @ tensor(I, I, c, I) @ tensor(I, I, I, c) @ tensor(H.delta2, I),
                      mu @ tensor(s, si) @ tensor(I, H.mu, H.mu, I) @ C3.comult)
            rep.equal("new-two-cocycle-3",
                      mu @ tensor(si, phi @ tensor(I, s)) @ tensor(H.delta2, I),
                      conv(C3, A, s @ tensor(H.mu, I), si @ tensor(I, H.mu)))
    return rep


def normal_report(CS: CrossedSystem) -> Report:
    H, s, u1 = CS.H, CS.sigma, CS.M.u1
    rep = Report("normal condition")
    rep.equal("(g3) right", s @ tensor(H.I, H.eta), u1)
    rep.equal("(g3) left", s @ tensor(H.eta, H.I), u1)
    return rep


def verify_twisted(CS: CrossedSystem) -> bool:
    return twisted_report(CS).get("(g1)").passed


def verify_cocycle(CS: CrossedSystem) -> bool:
    return cocycle_report(CS).get("(g2)").passed


def verify_normal(CS: CrossedSystem) -> bool:
    return normal_report(CS).passed


def verify_crossed_system(CS: CrossedSystem) -> Report:
    """Every condition defining a crossed system, plus the equivalent reformulations."""
    rep = Report(f"crossed system {CS.name}")
    wm = verify_weak_module_algebra(CS.M)
    rep.truth("weak module algebra", is_weak_module_algebra(CS.M, wm))
    si = CS.sigma_inv
    rep.truth("sigma regular", si is not None)
    if si is not None:
        rep.extend(reg_conditions(CS.M, CS.sigma, si, 2))
    rep.extend(twisted_report(CS))
    rep.extend(cocycle_report(CS))
    rep.extend(normal_report(CS))
    return rep


CORE_LABELS = ("weak module algebra", "sigma regular", "(g1)", "(g2)", "(g3) right", "(g3) left")


def is_crossed_system(CS: CrossedSystem, rep: Report | None = None) -> bool:
    rep = rep or verify_crossed_system(CS)
    return all(rep.get(l).passed for l in CORE_LABELS)


@dataclass
class CrossedProductData:
    CS: CrossedSystem
    inj: LinMap
    proj: LinMap
    algebra: Algebra
    nu: LinMap
    report: Report

    @property
    def nabla(self) -> LinMap:
        return self.CS.nabla


def crossed_product_identities(CS: CrossedSystem) -> Report:
    """The idempotent nabla and its compatibilities with psi and sigma."""
    H, A, IA = CS.H, CS.A, CS.M.IA
    I, mu, u1 = H.I, A.mult, CS.M.u1
    psi, sHA, nab = CS.psi, CS.sigmaHA, CS.nabla
    rep = Report("crossed product identities")
    rep.equal("wmeas-wcp", tensor(mu, I) @ tensor(IA, psi) @ tensor(psi, IA), psi @ tensor(I, mu))
    rep.equal("nabla idempotent", nab @ nab, nab)
    rep.equal("nabla left A-linear", nab @ tensor(mu, I), tensor(mu, I) @ tensor(IA, nab))
    mp = tensor(mu, I) @ tensor(IA, psi)
    rep.equal("fi-nab first", mp @ tensor(nab, IA), mp)
    rep.equal("fi-nab second", nab @ mp, mp)
    rep.equal("fi-nab-2", nab @ psi, psi)
    rep.equal("nabla-u1", nab, tensor(mu @ tensor(IA, u1), I) @ tensor(IA, H.delta))
    rep.equal("nabla-fi", mu @ tensor(u1, CS.phi) @ tensor(H.delta, IA), CS.phi)
    rep.equal("nabla-fiAH", tensor(mu, I) @ tensor(u1, psi) @ tensor(H.delta, IA), psi)
    rep.equal("eta-psi-varep", tensor(IA, H.eps) @ psi @ tensor(I, A.unit), u1)
    c_HA = CS.M.c_HA
    rep.equal("eta-psi-complex", tensor(mu, I) @ tensor(u1, c_HA) @ tensor(H.delta, IA),
              tensor(mu, I) @ tensor(IA, c_HA) @ tensor(psi @ tensor(I, A.unit), IA))
    rep.equal("nabla-varep", tensor(IA, H.eps) @ nab, mu @ tensor(IA, u1))
    rep.equal("nabla-delta", tensor(IA, H.delta) @ nab, tensor(nab, I) @ tensor(IA, H.delta))
    rep.equal("delta-sigmaHA", tensor(IA, H.delta) @ sHA, tensor(sHA, H.mu) @ H.delta2)
    if H.is_cocommutative():
        rep.equal("sigmaOmega", CS.sigma @ H.omegaL, CS.sigma)
        rep.equal("sigmaOmegaH", sHA @ H.omegaL, sHA)
        rep.equal("Nablasigma", nab @ sHA, sHA)
    rep.equal("varepsilonsigma", tensor(IA, H.eps) @ sHA, CS.sigma)
    ms = tensor(mu, I) @ tensor(IA, sHA) @ tensor(psi, I)
    rep.equal("c1", ms @ tensor(I, nab), nab @ ms)
    mss = tensor(mu, I) @ tensor(IA, sHA)
    rep.equal("aw", nab @ mss @ tensor(nab, I), nab @ mss)
    rep.equal("c11", ms @ tensor(I, nab), ms)
    rep.equal("aw1", mss @ tensor(nab, I), mss)
    big = CS.mult_big
    rep.equal("normalized product", nab @ big, big)
    rep.equal("normalized product inputs", big @ tensor(nab, nab), big)
    nu = nab @ tensor(A.unit, H.eta)
    target = nab @ tensor(A.unit, I)
    rep.equal("pre1-wcp", ms @ tensor(I, nu), target)
    rep.equal("pre2-wcp", mss @ tensor(nu, I), target)
    rep.equal("pre3-wcp", mp @ tensor(nu, IA), tensor(mu, I) @ tensor(IA, nu))
    return rep


def build_crossed_product(CS: CrossedSystem, strict: bool = True) -> CrossedProductData:
    """The algebra A×_σH on the image of nabla.

    With strict=True a failing (g1), (g2) or (g3) raises the matching error.
    """
    rep = verify_crossed_system(CS)
    if strict:
        if not rep.get("weak module algebra").passed:
            raise CrossedSystemError("phi is not a weak module algebra structure")
        if not rep.get("sigma regular").passed:
            raise NotRegular("sigma has no convolution inverse")
        if not rep.get("(g1)").passed:
            raise TwistedFail(rep.get("(g1)").detail)
        if not rep.get("(g2)").passed:
            raise CocycleFail(rep.get("(g2)").detail)
        if not (rep.get("(g3) left").passed and rep.get("(g3) right").passed):
            raise NormalFail("sigma is not normalized")
    rep.extend(crossed_product_identities(CS))
    H, A = CS.H, CS.A
    sp = split_idempotent(CS.nabla, f"{A.name}×{H.name}")
    inj, proj = sp.inj, sp.proj
    mult = proj @ CS.mult_big @ tensor(inj, inj)
    nu = CS.nabla @ tensor(A.unit, H.eta)
    unit = proj @ nu
    alg = Algebra(inj.dom, mult, unit, f"{A.name}×{H.name}")
    verify_algebra(alg, rep)
    if CS.phi == CS.phi @ tensor(H.piL, CS.M.IA):
        twisted = proj @ tensor(A.mult, H.I) @ tensor(A.mult, CS.sigmaHA) @ tensor(CS.M.IA, CS.M.c_HA, H.I) @ tensor(inj, inj)
        rep.equal("twisted product formula", mult, twisted)
    if CS.sigma == CS.M.u2:
        rep.equal("smash-condition", CS.sigmaHA, tensor(CS.M.u1, H.I) @ H.delta @ H.mu)
        rep.equal("productosmash", CS.mult_big,
                  CS.nabla @ tensor(A.mult, H.mu) @ tensor(CS.M.IA, CS.psi, H.I))
    return CrossedProductData(CS, inj, proj, alg, nu, rep)


def crossed_product_comodule(CP: CrossedProductData) -> tuple:
    """The comodule algebra A×_σH and its coinvariants, identified with A.

    Returns (comodule algebra, coinvariants whose embedding is p∘(A⊗η_H), report).
    """
    CS = CP.CS
    H, A, IA = CS.H, CS.A, CS.M.IA
    rho = tensor(CP.proj, H.I) @ tensor(IA, H.delta) @ CP.inj
    CA = ComoduleAlgebra(H, CP.algebra, rho, CP.algebra.name)
    rep = verify_comodule_algebra(CA)
    emb = CP.proj @ tensor(IA, H.eta)
    coinv = coinvariants(CA, emb, A.name)
    rep.equal("coinvariant algebra is A (product)", coinv.algebra.mult, A.mult)
    rep.equal("coinvariant algebra is A (unit)", coinv.algebra.unit, A.unit)
    g = coinvariants(CA).iA
    ig = CP.inj @ g
    rep.equal("propiedadfactorizacion", ig, tensor(IA, H.piL) @ ig)
    rep.equal("newnabla-2", CS.nabla @ tensor(A.mult @ tensor(IA, CS.M.u1), H.eta),
              tensor(IA, H.piL) @ CS.nabla)
    return CA, coinv, rep


def canonical_integral(CP: CrossedProductData, CA: ComoduleAlgebra) -> tuple:
    """f = p∘(η_A⊗H) and its explicit inverse, with the identities behind them."""
    CS = CP.CS
    H, A = CS.H, CS.A
    si = CS.sigma_inv
    if si is None:
        raise NotRegular("sigma has no convolution inverse")
    f = CP.proj @ tensor(A.unit, H.I)
    finv = CP.proj @ tensor(si, H.I) @ tensor(H.I, H.c) @ tensor(H.delta @ H.lam, H.I) @ H.delta
    rep = Report("canonical integral")
    rep.truth("total", f @ H.eta == CP.algebra.unit)
    rep.extend(inverse_conditions(CA, f, finv))
    C3 = H.power_coalgebra(3)
    I = H.I
    rep.equal("igualdadparacociclo",
              conv(C3, A, CS.sigma @ tensor(I, H.mu), si @ tensor(H.mu, I)) @ tensor(I, H.lam, I)
              @ tensor(I, H.delta) @ H.delta, CS.M.u1)
    return f, finv, rep


def crossed_product_cleft(CP: CrossedProductData) -> CleftCertificate:
    """Cleft certificate for A ⊂ A×_σH with the canonical integral."""
    CA, coinv, rep = crossed_product_comodule(CP)
    f, finv, rep2 = canonical_integral(CP, CA)
    cert = is_cleft(CA, f, finv, coinv)
    cert.report.extend(rep, "comodule: ")
    cert.report.extend(rep2, "integral: ")
    return cert


def sigma_in_center(CS: CrossedSystem) -> bool:
    iZ = algebra_center(CS.A).iZ
    try:
        factor_through(CS.sigma, iZ)
        return True
    except NoFactorization:
        return False


def special_case_checks(CS: CrossedSystem) -> dict:
    """Which special shape the crossed system has."""
    H = CS.H
    return {
        "smash": CS.sigmaHA == tensor(CS.M.u1, H.I) @ H.delta @ H.mu,
        "twisted": CS.phi == CS.phi @ tensor(H.piL, CS.M.IA),
        "strict": is_strict(CS.M),
        "centerValued": sigma_in_center(CS),
    }


def smash_system(M: WeakModuleAlgebra) -> CrossedSystem:
    """(phi, u2), a crossed system exactly when phi is strict."""
    return CrossedSystem(M, M.u2, f"{M.name} smash")
