"""Passing between cleft extensions and crossed systems, and equivalences."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .comodule import (CleftCertificate, NotTotal, FactorizationFailure, check_integral, is_cleft,
                       is_total, totalize)
from .crossed import (CrossedProductData, CrossedSystem, build_crossed_product, canonical_integral,
                      crossed_product_comodule)
from .enumerate import DEFAULT_MAX_ENUM, SearchSpaceTooLarge, filter_members
from .field import NotEnumerable, WhopfError
from .linmap import (LinMap, NoFactorization, factor_through, identity, solve_linear_conditions,
                     symmetry, tensor)
from .maction import WeakModuleAlgebra, normalization_report, reg_conditions, try_reg
from .report import Report
from .structure import conv


class NotComparable(WhopfError):
    pass


def _total_cert(cert: CleftCertificate) -> tuple:
    """(f, f⁻¹) with f total, upgrading when needed."""
    if cert.finv is None:
        raise NotTotal("the extension has no convolution invertible integral")
    if is_total(cert.CA, cert.f):
        return cert.f, cert.finv
    h, hinv, rep = totalize(cert.CA, cert.f, cert.finv)
    if not rep.passed:
        raise NotTotal(f"could not upgrade to a total integral: {rep.first_failure()}")
    return h, hinv


def induced_action(cert: CleftCertificate) -> tuple:
    """The weak module algebra structure on the coinvariants and its checks."""
    CA = cert.CA
    H, A = CA.H, CA.A
    f, finv = _total_cert(cert)
    iA, mu = cert.iA, A.mult
    AH = cert.AH
    pA = factor_through(mu @ tensor(CA.IA, finv) @ CA.rho, iA)
    phiA = mu @ tensor(CA.IA, mu @ CA.c_AA) @ tensor(tensor(f, finv) @ H.delta, iA)
    try:
        phi = factor_through(phiA, iA)
    except NoFactorization:
        raise FactorizationFailure("the induced action does not land in the coinvariants") from None
    M = WeakModuleAlgebra(H, AH, phi, f"induced on {AH.name}")
    rep = Report("induced action")
    rep.equal("alternativamodulo", phi, pA @ mu @ tensor(f, iA))
    IZ = identity(AH.space, CA.field)
    c = CA.c_AA
    rep.truth("casotwisted (i)", (phi == phi @ tensor(H.piL_bar, IZ))
              == (mu @ tensor(f, iA) == mu @ c @ tensor(f, iA)))
    rep.truth("casotwisted (ii)", (phi == phi @ tensor(H.piL, IZ))
              == (mu @ tensor(finv, iA) == mu @ c @ tensor(finv, iA)))
    return M, pA, rep


def induced_cocycle(cert: CleftCertificate, M: WeakModuleAlgebra, pA: LinMap) -> tuple:
    """sigma on the coinvariants, its inverse and their checks."""
    CA = cert.CA
    H, A = CA.H, CA.A
    f, finv = _total_cert(cert)
    iA, mu = cert.iA, A.mult
    C2 = H.power_coalgebra(2)
    sA = conv(C2, A, mu @ tensor(f, f), finv @ H.mu)
    sA_inv = conv(C2, A, f @ H.mu, mu @ CA.c_AA @ tensor(finv, finv))
    try:
        s = factor_through(sA, iA)
        s_inv = factor_through(sA_inv, iA)
    except NoFactorization:
        raise FactorizationFailure("the induced cocycle does not land in the coinvariants") from None
    rep = Report("induced cocycle")
    rep.equal("sigma-f", s, pA @ mu @ tensor(f, f))
    rep.extend(reg_conditions(M, s, s_inv, 2))
    rep.truth("casosmash", (s == M.phi @ tensor(H.mu, M.A.unit)) == (mu @ tensor(f, f) == f @ H.mu))
    return s, s_inv, rep


def extract_crossed_system(cert: CleftCertificate) -> tuple:
    """The crossed system (phi, sigma) over the coinvariants of a cleft extension."""
    M, pA, rep = induced_action(cert)
    s, s_inv, rep2 = induced_cocycle(cert, M, pA)
    rep.extend(rep2)
    CS = CrossedSystem(M, s, f"extracted from {cert.CA.name}")
    CS.__dict__["sigma_inv"] = s_inv
    CA = cert.CA
    f, _ = _total_cert(cert)
    rep.equal("psi on coinvariants", CS.psi, tensor(pA, CA.H.I) @ CA.rho @ CA.A.mult @ tensor(f, cert.iA))
    rep.equal("sigmaHA on coinvariants", CS.sigmaHA, tensor(pA, CA.H.I) @ CA.rho @ CA.A.mult @ tensor(f, f))
    return CS, rep


def roundtrip_cleft(cert: CleftCertificate) -> tuple:
    """Comodule algebra isomorphism A -> A_H ×_σ H. Returns (T, T⁻¹, report)."""
    CA = cert.CA
    H, A = CA.H, CA.A
    f, finv = _total_cert(cert)
    CS, rep = extract_crossed_system(cert)
    CP = build_crossed_product(CS)
    rep.extend(CP.report, "crossed product: ")
    CB, coinvB, repB = crossed_product_comodule(CP)
    rep.extend(repB, "comodule: ")
    _, pA, _ = induced_action(cert)
    T = CP.proj @ tensor(pA, H.I) @ CA.rho
    Tinv = A.mult @ tensor(cert.iA, f) @ CP.inj
    rep.equal("newexpressionfornabla", CS.nabla, tensor(pA, H.I) @ CA.rho @ A.mult @ tensor(cert.iA, f))
    rep.equal("T∘T⁻¹", T @ Tinv, identity(CP.algebra.space, CA.field))
    rep.equal("T⁻¹∘T", Tinv @ T, identity(A.space, CA.field))
    rep.equal("T multiplicative", T @ A.mult, CP.algebra.mult @ tensor(T, T))
    rep.equal("T unital", T @ A.unit, CP.algebra.unit)
    rep.equal("T comodule morphism", CB.rho @ T, tensor(T, H.I) @ CA.rho)
    rep.equal("T⁻¹ fixes coinvariants", Tinv @ coinvB.iA, cert.iA)
    return T, Tinv, rep


def roundtrip_crossed(CS: CrossedSystem) -> tuple:
    """Build A×_σH, extract its crossed system and compare with the original.

    Returns (extracted system, report); equality is exact matrix equality.
    """
    CP = build_crossed_product(CS)
    H, A, IA = CS.H, CS.A, CS.M.IA
    rep = Report(f"round trip of {CS.name}")
    rep.extend(CP.report, "crossed product: ")
    CA, coinv, rep2 = crossed_product_comodule(CP)
    rep.extend(rep2, "comodule: ")
    f, finv, rep3 = canonical_integral(CP, CA)
    rep.extend(rep3, "integral: ")
    cert = is_cleft(CA, f, finv, coinv)
    rep.extend(cert.report, "cleft: ")
    si = CS.sigma_inv
    I = H.I
    rep.equal("ecuacion", CS.M.u1,
              A.mult @ tensor(CS.phi @ tensor(I, si), CS.sigma) @ tensor(I, I, tensor(H.c, I) @ tensor(I, H.c))
              @ tensor(H.delta2 @ tensor(I, H.lam) @ H.delta, I) @ H.delta)
    if cert.qA is not None:
        rep.equal("expresionparaq", cert.qA, CP.proj @ tensor(IA, H.piL) @ CP.inj)
        rep.equal("expresionparap", cert.pA, tensor(IA, H.eps) @ CP.inj)
    ext, rep4 = extract_crossed_system(cert)
    rep.extend(rep4, "extraction: ")
    rep.equal("same action", ext.phi, CS.phi)
    rep.equal("same cocycle", ext.sigma, CS.sigma)
    return ext, rep


# equivalence of crossed systems

def transport(CS: CrossedSystem, h: LinMap, hinv: LinMap, name: str = "") -> CrossedSystem:
    """The system related to CS through h by the two equivalence formulas."""
    H, A = CS.H, CS.A
    mu = A.mult
    phi = mu @ tensor(mu, CS.M.IA) @ tensor(h, CS.phi, hinv) @ tensor(H.delta, CS.M.c_HA) @ tensor(H.delta, CS.M.IA)
    sigma = (mu @ tensor(mu, hinv) @ tensor(mu, CS.sigma, H.mu) @ tensor(h, CS.phi, H.delta2)
             @ tensor(H.delta, h, H.I, H.I) @ H.delta2)
    return CrossedSystem(WeakModuleAlgebra(H, A, phi, CS.M.name), sigma, name or f"{CS.name}^h")


def _comparable(lhs: CrossedSystem, rhs: CrossedSystem):
    if lhs.H is not rhs.H and lhs.H.space != rhs.H.space:
        raise NotComparable("crossed systems over different Hopf algebras")
    if lhs.A.space != rhs.A.space or not (lhs.A.mult == rhs.A.mult and lhs.A.unit == rhs.A.unit):
        raise NotComparable("crossed systems over different algebras")


def check_equivalence(lhs: CrossedSystem, rhs: CrossedSystem, h: LinMap) -> Report:
    """Is h a witness that lhs ≈ rhs?"""
    _comparable(lhs, rhs)
    rep = Report("equivalence")
    rep.equal("same u1", lhs.M.u1, rhs.M.u1)
    rep.equal("h normalized", h @ lhs.H.eta, lhs.A.unit)
    hinv = try_reg(lhs.M, h, 1)
    rep.truth("h regular", hinv is not None)
    if hinv is None:
        return rep
    rep.extend(reg_conditions(rhs.M, h, hinv, 1), "for rhs: ")
    t = transport(rhs, h, hinv)
    rep.equal("relacionfis", lhs.phi, t.phi)
    rep.equal("relacionsigmas", lhs.sigma, t.sigma)
    return rep


def normalized_candidates(M: WeakModuleAlgebra):
    """Affine family of h: H -> A with h∘η = η, h∘Π^L = u1 and h∘Π̄^L = u1.

    Every normalized regular map lies in it.
    """
    H, A = M.H, M.A
    conds = [(lambda x: x @ H.eta, A.unit), (lambda x: x @ H.piL, M.u1), (lambda x: x @ H.piL_bar, M.u1)]
    return solve_linear_conditions(H.space, A.space, M.field, conds)


@dataclass
class SearchResult:
    witness: Optional[LinMap]
    candidate_space: int
    normalized_candidates: int
    examined: int

    @property
    def equivalent(self) -> bool:
        return self.witness is not None


def search_equivalence(lhs: CrossedSystem, rhs: CrossedSystem, max_enum: int = DEFAULT_MAX_ENUM,
                       parallel: int = 1) -> SearchResult:
    """Exhaustive search for a witness over GF(p).

    The full candidate space is |A|^{dim H}; only its normalized part is
    actually walked.
    """
    _comparable(lhs, rhs)
    field = lhs.field
    if not field.is_finite:
        raise NotEnumerable("witness search needs a finite field")
    space = field.p ** (lhs.H.dim * lhs.A.space.dim)
    if space > max_enum:
        raise SearchSpaceTooLarge(f"{space} candidate maps exceed the bound {max_enum}")
    if not lhs.M.u1 == rhs.M.u1:
        return SearchResult(None, space, 0, 0)
    fam = normalized_candidates(lhs.M)
    n = field.p ** fam.dimension
    hits = filter_members(fam, field, lambda h: check_equivalence(lhs, rhs, h).passed, max_enum, parallel)
    return SearchResult(hits[0] if hits else None, space, n, n)


def equivalence_to_iso(lhs: CrossedSystem, rhs: CrossedSystem, h: LinMap) -> tuple:
    """The comodule algebra isomorphism A×_lhs H -> A×_rhs H induced by a witness.

    Returns (T, T⁻¹, report).
    """
    rep = check_equivalence(lhs, rhs, h)
    hinv = try_reg(lhs.M, h, 1)
    if not rep.passed:
        return None, None, rep
    CPa, CPb = build_crossed_product(lhs), build_crossed_product(rhs)
    H, A, IA = lhs.H, lhs.A, lhs.M.IA
    mu = A.mult
    rep.equal("same nabla", CPa.nabla, CPb.nabla)
    T = CPb.proj @ tensor(mu, H.I) @ tensor(IA, h, H.I) @ tensor(IA, H.delta) @ CPa.inj
    Tinv = CPa.proj @ tensor(mu, H.I) @ tensor(IA, hinv, H.I) @ tensor(IA, H.delta) @ CPb.inj
    CAa, coa, _ = crossed_product_comodule(CPa)
    CAb, cob, _ = crossed_product_comodule(CPb)
    rep.equal("prin-1-aux", mu @ tensor(IA, h) @ lhs.sigmaHA,
              mu @ tensor(mu @ tensor(h, rhs.phi) @ tensor(H.delta, h), rhs.sigma) @ H.delta2)
    rep.equal("prin-2-aux",
              tensor(CPa.nabla, H.I) @ tensor(mu @ tensor(h, rhs.phi) @ tensor(H.delta, IA), H.delta)
              @ tensor(H.I, lhs.M.c_HA) @ tensor(H.delta, IA),
              tensor(mu, H.delta) @ tensor(h, rhs.psi) @ tensor(H.delta, IA))
    rep.equal("T∘T⁻¹", T @ Tinv, identity(CPb.algebra.space, A.field))
    rep.equal("T⁻¹∘T", Tinv @ T, identity(CPa.algebra.space, A.field))
    rep.equal("T multiplicative", T @ CPa.algebra.mult, CPb.algebra.mult @ tensor(T, T))
    rep.equal("T unital", T @ CPa.algebra.unit, CPb.algebra.unit)
    rep.equal("T comodule morphism", CAb.rho @ T, tensor(T, H.I) @ CAa.rho)
    rep.equal("T fixes A", T @ coa.iA, cob.iA)
    return T, Tinv, rep


def witness_from_integrals(cert: CleftCertificate, g: LinMap, ginv: LinMap) -> LinMap:
    """For two total integrals f, g of one extension, the factorization of f∧g⁻¹."""
    f, _ = _total_cert(cert)
    return factor_through(cert.CA.conv(f, ginv), cert.iA)
