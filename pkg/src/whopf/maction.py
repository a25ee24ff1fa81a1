"""Weak left module algebras, convolution-regular maps and normalizations."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .comodule import NoInverse
from .enumerate import affine_members
from .linmap import Inconsistent, LinMap, identity, solve_linear_conditions, symmetry, tensor
from .report import Report
from .structure import Algebra, WeakHopfAlgebra, center, conv, verify_algebra


@dataclass
class WeakModuleAlgebra:
    """An algebra A with phi: H⊗A -> A."""

    H: WeakHopfAlgebra
    A: Algebra
    phi: LinMap
    name: str = ""

    @property
    def field(self):
        return self.A.field

    @cached_property
    def IA(self) -> LinMap:
        return identity(self.A.space, self.field)

    @cached_property
    def c_HA(self) -> LinMap:
        return symmetry(self.H.space, self.A.space, self.field)

    @cached_property
    def c_AA(self) -> LinMap:
        return symmetry(self.A.space, self.A.space, self.field)

    @cached_property
    def u1(self) -> LinMap:
        return self.phi @ tensor(self.H.I, self.A.unit)

    @cached_property
    def u2(self) -> LinMap:
        return self.phi @ tensor(self.H.I, self.u1)

    def unit_of_arity(self, n: int) -> LinMap:
        return self.u1 if n == 1 else (self.u2 if n == 2 else self.u1 @ _iterated_mult(self.H, n))

    def conv(self, n: int, *maps: LinMap) -> LinMap:
        """Convolution of maps H^{⊗n} -> A."""
        return conv(self.H.power_coalgebra(n), self.A, *maps)


def _iterated_mult(H: WeakHopfAlgebra, n: int) -> LinMap:
    m = H.I
    for _ in range(n - 1):
        m = H.mu @ tensor(m, H.I)
    return m


def trivial_action(H: WeakHopfAlgebra, A: Algebra) -> WeakModuleAlgebra:
    """phi = eps ⊗ id, a module algebra whenever H is a Hopf algebra."""
    return WeakModuleAlgebra(H, A, tensor(H.eps, identity(A.space, A.field)), "trivial")


def verify_weak_module_algebra(M: WeakModuleAlgebra) -> Report:
    """(d1)-(d9) and (d3-1), each reported separately; see is_weak_module_algebra."""
    H, A, phi, IA = M.H, M.A, M.phi, M.IA
    mu, u1 = A.mult, M.u1
    rep = Report(f"weak module algebra {M.name}")
    rep.equal("(d1)", phi @ tensor(H.eta, IA), IA)
    rep.equal("(d2)", phi @ tensor(H.I, mu),
              mu @ tensor(phi, phi) @ tensor(H.I, M.c_HA, IA) @ tensor(H.delta, IA, IA))
    rep.equal("(d3)", phi @ tensor(H.mu, A.unit), phi @ tensor(H.I, u1))
    rep.equal("(d4)", phi @ tensor(H.piL, IA), mu @ tensor(u1, IA))
    rep.equal("(d5)", phi @ tensor(H.piL_bar, IA), mu @ M.c_AA @ tensor(u1, IA))
    rep.equal("(d6)", phi @ tensor(H.piL, A.unit), u1)
    rep.equal("(d7)", phi @ tensor(H.piL_bar, A.unit), u1)
    rep.equal("(d8)", M.u2, tensor(u1, H.eps_mu) @ tensor(H.delta, H.I))
    rep.equal("(d9)", M.u2, tensor(H.eps_mu, u1) @ tensor(H.I, H.c) @ tensor(H.delta, H.I))
    rep.equal("(d3-1)", phi @ tensor(H.mu, IA), phi @ tensor(H.I, phi))
    rep.equal("u2 = u1∘μ", M.u2, u1 @ H.mu)
    return rep


def is_weak_module_algebra(M: WeakModuleAlgebra, rep: Report | None = None) -> bool:
    rep = rep or verify_weak_module_algebra(M)
    ok = {c.label: c.passed for c in rep.checks}
    return (ok["(d1)"] and ok["(d2)"] and ok["(d3)"]
            and any(ok[f"(d{k})"] for k in range(4, 10)) and verify_algebra(M.A).passed)


def is_strict(M: WeakModuleAlgebra) -> bool:
    """(d3-1): a genuine left module algebra."""
    return M.phi @ tensor(M.H.mu, M.IA) == M.phi @ tensor(M.H.I, M.phi)


# Reg sets

def reg_conditions(M: WeakModuleAlgebra, h: LinMap, hinv: LinMap, arity: int = 1) -> Report:
    u = M.unit_of_arity(arity)
    names = ("(e1)", "(e2)", "(e3)") if arity == 1 else ("(f1)", "(f2)", "(f3)")
    rep = Report(f"Reg arity {arity}")
    rep.equal(names[0] + " left", M.conv(arity, h, hinv), u)
    rep.equal(names[0] + " right", M.conv(arity, hinv, h), u)
    rep.equal(names[1], M.conv(arity, h, hinv, h), h)
    rep.equal(names[2], M.conv(arity, hinv, h, hinv), hinv)
    return rep


def solve_reg(M: WeakModuleAlgebra, h: LinMap, arity: int = 1, method: str = "sandwich",
              max_enum: int = 10 ** 7) -> LinMap:
    """The convolution inverse of h with respect to u1 (arity 1) or u2 (arity 2).

    The first two conditions are linear in the unknown; for any solution y
    the inverse, when it exists, equals y∧h∧y.
    """
    u = M.unit_of_arity(arity)
    dom = M.H.power_space(arity)
    conds = [(lambda x: M.conv(arity, h, x), u), (lambda x: M.conv(arity, x, h), u),
             (lambda x: M.conv(arity, h, x, h), h)]
    try:
        fam = solve_linear_conditions(dom, M.A.space, M.field, conds)
    except Inconsistent:
        raise NoInverse("not convolution invertible") from None
    if method == "sandwich":
        y = fam.particular
        g = M.conv(arity, y, h, y)
        if reg_conditions(M, h, g, arity).passed:
            return g
        raise NoInverse("not convolution invertible: the only candidate fails")
    if method == "enumerate":
        found = [g for g in affine_members(fam, M.field, max_enum) if M.conv(arity, g, h, g) == g]
        if not found:
            raise NoInverse("no member of the linear family is an inverse")
        assert len(found) == 1, "convolution inverse is not unique"
        return found[0]
    raise ValueError(f"unknown method {method!r}")


def try_reg(M: WeakModuleAlgebra, h: LinMap, arity: int = 1):
    try:
        return solve_reg(M, h, arity)
    except NoInverse:
        return None


@dataclass
class RegElement:
    h: LinMap
    hinv: LinMap


@dataclass
class RegCocycle:
    sigma: LinMap
    sigma_inv: LinMap


def normalization_report(M: WeakModuleAlgebra, h: LinMap) -> Report:
    """The normalizations of a regular h: H -> A, which are all equivalent."""
    H, u1 = M.H, M.u1
    rep = Report("normalization")
    rep.equal("heta", h @ H.eta, M.A.unit)
    rep.equal("hPiL", h @ H.piL, u1)
    rep.equal("hbarPiL", h @ H.piL_bar, u1)
    if H.lam_inv is not None:
        rep.equal("hPiR", h @ H.piR, u1 @ H.lam)
        rep.equal("hbarPiR", h @ H.piR_bar, u1 @ H.lam_inv)
    return rep


def sigma_normalization_report(M: WeakModuleAlgebra, s: LinMap) -> Report:
    """Left and right normalizations of s: H⊗H -> A, two equivalence clusters."""
    H, u1, I, c, d = M.H, M.u1, M.H.I, M.H.c, M.H.delta
    rep = Report("cocycle normalization")
    rep.equal("sigma-eta-l", s @ tensor(H.eta, I), u1)
    rep.equal("sigma-PiL-l", s @ tensor(H.piL, I) @ d, u1)
    rep.equal("sigma-PiL-c", s @ c @ tensor(I, H.piL_bar) @ d, u1)
    li = H.lam_inv
    if li is not None:
        rep.equal("sigma-PiR-l", s @ tensor(H.piR, H.lam) @ d, u1 @ H.lam)
        rep.equal("sigma-PiR-c", s @ c @ tensor(li, H.piR_bar) @ d, u1 @ li)
    rep.equal("sigma-eta-r", s @ tensor(I, H.eta), u1)
    rep.equal("sigma-PiR-r", s @ tensor(I, H.piR) @ d, u1)
    rep.equal("sigma-PiR-r-c", s @ c @ tensor(H.piR_bar, I) @ d, u1)
    if li is not None:
        rep.equal("sigma-PiL-r", s @ tensor(H.lam, H.piL) @ d, u1 @ H.lam)
        rep.equal("sigma-PiL-r-c", s @ c @ tensor(H.piL_bar, li) @ d, u1 @ li)
    return rep


LEFT_CLUSTER = ("sigma-eta-l", "sigma-PiL-l", "sigma-PiL-c", "sigma-PiR-l", "sigma-PiR-c")
RIGHT_CLUSTER = ("sigma-eta-r", "sigma-PiR-r", "sigma-PiR-r-c", "sigma-PiL-r", "sigma-PiL-r-c")


def cluster_agrees(rep: Report, labels) -> bool:
    """True when every present label in the cluster has the same outcome."""
    vals = {c.passed for c in rep.checks if c.label in labels}
    return len(vals) <= 1


def omega2(H: WeakHopfAlgebra) -> LinMap:
    """The common value of the two Omega idempotents for cocommutative H."""
    H.require_cocommutative()
    assert H.omegaL == H.omegaR
    return H.omegaL


def omega_report(H: WeakHopfAlgebra) -> Report:
    rep = Report(f"Omega idempotents of {H.name}")
    I, mu = H.I, H.mu
    for name, om in (("L", H.omegaL), ("R", H.omegaR)):
        rep.equal(f"Omega{name} idempotent", om @ om, om)
        rep.equal(f"mu∘Omega{name} = mu", mu @ om, mu)
    rep.equal("omega-L-1 first", H.omegaL, tensor(mu @ tensor(I, H.piL), I) @ tensor(I, H.delta))
    rep.equal("omega-L-1 second", H.omegaL, tensor(I, mu @ tensor(H.piR_bar, I)) @ tensor(H.c @ H.delta, I))
    if H.is_cocommutative():
        om, d2 = H.omegaL, H.delta2
        rep.equal("OmegaL = OmegaR", H.omegaL, H.omegaR)
        rep.equal("Omegadelta left", tensor(om, I, I) @ d2, d2 @ om)
        rep.equal("Omegadelta right", tensor(I, I, om) @ d2, d2 @ om)
    return rep


@dataclass
class Center:
    iZ: LinMap
    algebra: Algebra


def algebra_center(A: Algebra, name: str = "Z") -> Center:
    from .linmap import factor_through
    iZ = center(A, name).inj
    mult = factor_through(A.mult @ tensor(iZ, iZ), iZ)
    unit = factor_through(A.unit, iZ)
    return Center(iZ, Algebra(iZ.dom, mult, unit, name))
