"""Second cohomology with coefficients in the center of the coinvariants.

H² is handled as a classified set: cocycles are enumerated exhaustively
over GF(p) and grouped by the coboundary relation, which is the
equivalence of crossed systems with the action held fixed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cleft2cross import _total_cert, extract_crossed_system, normalized_candidates, search_equivalence, transport
from .comodule import CleftCertificate, FactorizationFailure
from .crossed import CrossedSystem, is_crossed_system
from .enumerate import DEFAULT_MAX_ENUM, affine_members, filter_members
from .linmap import LinMap, NoFactorization, factor_through, solve_linear_conditions, tensor
from .maction import Center, RegCocycle, WeakModuleAlgebra, algebra_center, is_strict, is_weak_module_algebra, try_reg
from .report import Report
from .structure import conv


@dataclass
class CenterModule:
    cert: CleftCertificate
    base: CrossedSystem
    center: Center
    module: WeakModuleAlgebra
    psi: LinMap
    report: Report

    @property
    def iZ(self) -> LinMap:
        return self.center.iZ


def _factors(m: LinMap, emb: LinMap) -> bool:
    try:
        factor_through(m, emb)
        return True
    except NoFactorization:
        return False


def center_module_structure(cert: CleftCertificate) -> CenterModule:
    """The strict module algebra structure on Z(A_H) for cocommutative H."""
    CA = cert.CA
    H, A = CA.H, CA.A
    H.require_cocommutative()
    f, finv = _total_cert(cert)
    base, rep = extract_crossed_system(cert)
    rep.title = "center module structure"
    iA, mu, AH = cert.iA, A.mult, cert.AH
    Z = algebra_center(AH, "Z(A_H)")
    iZ = Z.iZ
    IAH = base.M.IA
    psiA = mu @ tensor(CA.IA, mu @ CA.c_AA) @ tensor(tensor(finv, f) @ H.delta, iA)
    try:
        psi = factor_through(psiA, iA)
    except NoFactorization:
        raise FactorizationFailure("conjugation by the integral leaves the coinvariants") from None
    rep.equal("primeraigualdad", mu @ tensor(finv, iA),
              mu @ tensor(psiA, finv) @ tensor(H.I, base.M.c_HA) @ tensor(H.delta, IAH))
    rep.equal("segundaigualdad", mu @ CA.c_AA @ tensor(f, iA), mu @ tensor(f, psiA) @ tensor(H.delta, IAH))
    rep.equal("varphipsi", base.phi @ tensor(H.I, psi) @ tensor(H.delta, IAH), AH.mult @ tensor(base.M.u1, IAH))
    rep.truth("u1 factors through the center", _factors(base.M.u1, iZ))
    try:
        phiZ = factor_through(base.phi @ tensor(H.I, iZ), iZ)
    except NoFactorization:
        raise FactorizationFailure("the action does not preserve the center") from None
    ZM = WeakModuleAlgebra(H, Z.algebra, phiZ, "Z(A_H)")
    rep.truth("center is a weak module algebra", is_weak_module_algebra(ZM))
    rep.truth("center action strict", is_strict(ZM))
    return CenterModule(cert, base, Z, ZM, psi, rep)


# populations with a fixed action

def _g1_defect(M: WeakModuleAlgebra, s: LinMap) -> LinMap:
    """lhs - rhs of (g1); linear in s."""
    H, A, phi, IA = M.H, M.A, M.phi, M.IA
    mu, d2 = A.mult, H.delta2
    lhs = mu @ tensor(IA, phi) @ tensor(s, H.mu, IA) @ tensor(d2, IA)
    rhs = mu @ tensor(phi @ tensor(H.I, phi), IA) @ tensor(H.I, H.I, M.c_AA) @ tensor(H.I, H.I, s, IA) @ tensor(d2, IA)
    return lhs - rhs


def cocycle_family(M: WeakModuleAlgebra):
    """Affine family cut out by (g1), (g3) and sigma∘Omega = sigma."""
    H, A = M.H, M.A
    zero = _g1_defect(M, M.u2).scale(0)
    conds = [(lambda x: x @ tensor(H.I, H.eta), M.u1), (lambda x: x @ tensor(H.eta, H.I), M.u1),
             (lambda x: x @ H.omegaL - x, M.u2.scale(0)), (lambda x: _g1_defect(M, x), zero)]
    return solve_linear_conditions(H.power_space(2), A.space, M.field, conds)


def crossed_population(M: WeakModuleAlgebra, max_enum: int = DEFAULT_MAX_ENUM, parallel: int = 1) -> list:
    """All crossed systems (M.phi, sigma), in a fixed order.

    The affine family of cocycle_family is filtered by Reg and (g2).
    """
    fam = cocycle_family(M)
    C3 = M.H.power_coalgebra(3)
    sigmas = filter_members(fam, M.field, lambda s: _cheap_cocycle(M, C3, s), max_enum, parallel)
    out = []
    for k, s in enumerate(sigmas):
        cs = CrossedSystem(M, s, f"#{k}")
        if not is_crossed_system(cs):
            raise AssertionError("a survivor of the cheap filter is not a crossed system")
        out.append(cs)
    return out


def _cheap_cocycle(M: WeakModuleAlgebra, C3, s: LinMap) -> bool:
    """(g2), then Reg; the linear conditions already hold."""
    H, I, oL = M.H, M.H.I, M.H.omegaL
    lhs = conv(C3, M.A, M.phi @ tensor(I, s) @ tensor(oL, I), s @ tensor(I, H.mu))
    rhs = conv(C3, M.A, tensor(s, H.eps) @ tensor(I, oL), s @ tensor(H.mu, I))
    return lhs == rhs and try_reg(M, s, 2) is not None


def regular_witnesses(M: WeakModuleAlgebra, max_enum: int = DEFAULT_MAX_ENUM) -> list:
    """Every normalized h: H -> A in Reg, with its inverse."""
    out = []
    for h in affine_members(normalized_candidates(M), M.field, max_enum):
        hinv = try_reg(M, h, 1)
        if hinv is not None and h @ M.H.eta == M.A.unit:
            out.append((h, hinv))
    return out


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        a, b = self.find(i), self.find(j)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def classify(systems: list, max_enum: int = DEFAULT_MAX_ENUM) -> list:
    """Class ids for a population sharing one action, closed under equivalence.

    Orbit method: each system is transported along every regular normalized
    witness and the result is looked up in the population. Ids are numbered
    by the first member of each class.
    """
    if not systems:
        return []
    M = systems[0].M
    index = {cs.sigma.key(): k for k, cs in enumerate(systems)}
    uf = _UnionFind(len(systems))
    for h, hinv in regular_witnesses(M, max_enum):
        for k, cs in enumerate(systems):
            t = transport(cs, h, hinv)
            if not t.phi == M.phi:
                continue
            j = index.get(t.sigma.key())
            if j is None:
                raise AssertionError("population is not closed under equivalence")
            uf.union(k, j)
    roots, ids = {}, []
    for k in range(len(systems)):
        ids.append(roots.setdefault(uf.find(k), len(roots)))
    return ids


# cocycles on the center

@dataclass
class CocycleClass:
    tau: RegCocycle
    class_id: int
    representative: bool


def enumerate_cocycles(ZM: WeakModuleAlgebra, max_enum: int = DEFAULT_MAX_ENUM, parallel: int = 1) -> list:
    """Normalized regular 2-cocycles H⊗H -> Z for a strict action on a commutative Z."""
    return [RegCocycle(cs.sigma, cs.sigma_inv) for cs in crossed_population(ZM, max_enum, parallel)]


def h2_classes(ZM: WeakModuleAlgebra, cocycles: list | None = None, max_enum: int = DEFAULT_MAX_ENUM,
               parallel: int = 1) -> list:
    if cocycles is None:
        cocycles = enumerate_cocycles(ZM, max_enum, parallel)
    ids = classify([CrossedSystem(ZM, t.sigma) for t in cocycles], max_enum)
    seen, out = set(), []
    for t, i in zip(cocycles, ids):
        out.append(CocycleClass(t, i, i not in seen))
        seen.add(i)
    return out


def twist(CM: CenterModule, tau: LinMap) -> CrossedSystem:
    """(phi, sigma ∧ (i_Z∘tau)) over A_H."""
    base = CM.base
    return CrossedSystem(base.M, base.M.conv(2, base.sigma, CM.iZ @ tau), "twisted")


def untwist(CM: CenterModule, CS: CrossedSystem) -> LinMap:
    """The center-valued cocycle sigma⁻¹ ∧ gamma."""
    base = CM.base
    try:
        return factor_through(base.M.conv(2, base.sigma_inv, CS.sigma), CM.iZ)
    except NoFactorization:
        raise FactorizationFailure("sigma⁻¹ ∧ gamma is not center valued") from None


@dataclass
class H2Summary:
    cocycles: int
    classes: int
    systems: int
    system_classes: int
    candidate_space: int
    normalized_candidates: int


def verify_h2_bijection(cert: CleftCertificate, max_enum: int = DEFAULT_MAX_ENUM, parallel: int = 1,
                        cross_check: bool = True) -> tuple:
    """Compare H²(H, Z(A_H)) with the crossed systems having the induced action.

    Returns (report, summary).
    """
    CM = center_module_structure(cert)
    rep = Report("H² bijection")
    rep.extend(CM.report, "center: ")
    ZM, M = CM.module, CM.base.M
    classes = h2_classes(ZM, None, max_enum, parallel)
    pop = crossed_population(M, max_enum, parallel)
    pop_ids = classify(pop, max_enum)
    index = {cs.sigma.key(): k for k, cs in enumerate(pop)}
    image = []
    ok_twist = ok_back = True
    for c in classes:
        t = twist(CM, c.tau.sigma)
        k = index.get(t.sigma.key())
        ok_twist &= k is not None and untwist(CM, t) == c.tau.sigma
        image.append(None if k is None else pop_ids[k])
    for cs in pop:
        try:
            tau = untwist(CM, cs)
        except FactorizationFailure:
            ok_back = False
            continue
        ok_back &= twist(CM, tau).sigma == cs.sigma
    rep.truth("twist lands in the population and untwists back", ok_twist)
    rep.truth("every system untwists to a center-valued cocycle", ok_back)
    pairs = [(c.class_id, i) for c, i in zip(classes, image)]
    fwd = {}
    for a, b in pairs:
        fwd.setdefault(a, set()).add(b)
    rep.truth("well defined", all(len(v) == 1 for v in fwd.values()))
    targets = [next(iter(v)) for v in fwd.values()]
    rep.truth("injective", len(set(targets)) == len(targets))
    rep.truth("surjective", set(targets) == set(pop_ids))
    n_classes = len({c.class_id for c in classes})
    n_sys = len(set(pop_ids))
    rep.truth("class counts agree", n_classes == n_sys, f"{n_classes} = {n_sys}" if n_classes == n_sys
              else f"{n_classes} != {n_sys}")
    space = normalized = 0
    if cross_check and pop:
        reps = [pop[pop_ids.index(i)] for i in sorted(set(pop_ids))]
        distinct = True
        for a in range(len(reps)):
            for b in range(len(reps)):
                r = search_equivalence(reps[a], reps[b], max_enum, parallel)
                space, normalized = r.candidate_space, r.normalized_candidates
                distinct &= r.equivalent == (a == b)
        rep.truth("class representatives pairwise inequivalent by search", distinct)
    return rep, H2Summary(len(classes), n_classes, len(pop), n_sys, space, normalized)
