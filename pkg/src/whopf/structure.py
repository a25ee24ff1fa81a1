"""Algebras, coalgebras, weak Hopf algebras and groupoid algebras."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .field import Field, WhopfError
from .linmap import (K, Inconsistent, LinMap, Space, SubspaceEmbedding, identity, kernel, make_space,
                     solve_affine, symmetry, tensor, tensor_space)
from .report import Report


class InvalidGroupoid(WhopfError):
    pass


class NotCocommutative(WhopfError):
    pass


class NotInvertible(WhopfError):
    pass


@dataclass
class Algebra:
    space: Space
    mult: LinMap
    unit: LinMap
    name: str = ""

    @property
    def field(self) -> Field:
        return self.mult.field

    @property
    def I(self) -> LinMap:
        return identity(self.space, self.field)


@dataclass
class Coalgebra:
    space: Space
    comult: LinMap
    counit: LinMap
    name: str = ""

    @property
    def field(self) -> Field:
        return self.comult.field

    @property
    def I(self) -> LinMap:
        return identity(self.space, self.field)


def verify_algebra(A: Algebra, rep: Report | None = None) -> Report:
    rep = rep or Report(f"algebra {A.name}")
    mu, I = A.mult, A.I
    rep.equal("associativity", mu @ tensor(mu, I), mu @ tensor(I, mu))
    rep.equal("left unit", mu @ tensor(A.unit, I), I)
    rep.equal("right unit", mu @ tensor(I, A.unit), I)
    return rep


def verify_coalgebra(C: Coalgebra, rep: Report | None = None) -> Report:
    rep = rep or Report(f"coalgebra {C.name}")
    d, I = C.comult, C.I
    rep.equal("coassociativity", tensor(d, I) @ d, tensor(I, d) @ d)
    rep.equal("left counit", tensor(C.counit, I) @ d, I)
    rep.equal("right counit", tensor(I, C.counit) @ d, I)
    return rep


def base_algebra(field: Field) -> Algebra:
    """The ground field as a one-dimensional algebra with basis vector '1'."""
    V = make_space(["1"], "k")
    mult = LinMap.from_rows(tensor_space(V, V), V, [[1]], field)
    unit = LinMap.from_rows(K, V, [[1]], field)
    return Algebra(V, mult, unit, "k")


def tensor_algebra(A: Algebra, B: Algebra) -> Algebra:
    c = symmetry(B.space, A.space, A.field)
    mult = tensor(A.mult, B.mult) @ tensor(A.I, c, B.I)
    return Algebra(tensor_space(A.space, B.space), mult, tensor(A.unit, B.unit), f"{A.name}⊗{B.name}")


def tensor_coalgebra(C: Coalgebra, D: Coalgebra) -> Coalgebra:
    c = symmetry(C.space, D.space, C.field)
    comult = tensor(C.I, c, D.I) @ tensor(C.comult, D.comult)
    return Coalgebra(tensor_space(C.space, D.space), comult, tensor(C.counit, D.counit), f"{C.name}⊗{D.name}")


def convolution(alpha: LinMap, beta: LinMap, C: Coalgebra, A: Algebra) -> LinMap:
    """alpha ∧ beta = mult ∘ (alpha ⊗ beta) ∘ comult."""
    return A.mult @ tensor(alpha, beta) @ C.comult


def conv(C: Coalgebra, A: Algebra, *maps: LinMap) -> LinMap:
    out = maps[0]
    for m in maps[1:]:
        out = convolution(out, m, C, A)
    return out


class WeakHopfAlgebra:
    def __init__(self, algebra: Algebra, coalgebra: Coalgebra, antipode: LinMap, name: str = ""):
        if algebra.space != coalgebra.space:
            raise ValueError("algebra and coalgebra live on different spaces")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.lam = antipode
        self.name = name or algebra.name

    @property
    def space(self) -> Space:
        return self.algebra.space

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def mu(self) -> LinMap:
        return self.algebra.mult

    @property
    def eta(self) -> LinMap:
        return self.algebra.unit

    @property
    def delta(self) -> LinMap:
        return self.coalgebra.comult

    @property
    def eps(self) -> LinMap:
        return self.coalgebra.counit

    @cached_property
    def I(self) -> LinMap:
        return identity(self.space, self.field)

    @cached_property
    def c(self) -> LinMap:
        return symmetry(self.space, self.space, self.field)

    @cached_property
    def eps_mu(self) -> LinMap:
        return self.eps @ self.mu

    @cached_property
    def delta_eta(self) -> LinMap:
        return self.delta @ self.eta

    @cached_property
    def piL(self) -> LinMap:
        return tensor(self.eps_mu, self.I) @ tensor(self.I, self.c) @ tensor(self.delta_eta, self.I)

    @cached_property
    def piR(self) -> LinMap:
        return tensor(self.I, self.eps_mu) @ tensor(self.c, self.I) @ tensor(self.I, self.delta_eta)

    @cached_property
    def piL_bar(self) -> LinMap:
        return tensor(self.I, self.eps_mu) @ tensor(self.delta_eta, self.I)

    @cached_property
    def piR_bar(self) -> LinMap:
        return tensor(self.eps_mu, self.I) @ tensor(self.I, self.delta_eta)

    @cached_property
    def lam_inv(self):
        """Inverse of the antipode, or None when it is not invertible."""
        try:
            fam = solve_affine(self.lam, self.I)
        except Inconsistent:
            return None
        return fam.particular if fam.dimension == 0 else None

    def require_lam_inv(self) -> LinMap:
        if self.lam_inv is None:
            raise NotInvertible(f"the antipode of {self.name} is not invertible")
        return self.lam_inv

    def power_space(self, n: int) -> Space:
        return tensor_space(*([self.space] * n)) if n else K

    def power_coalgebra(self, n: int) -> Coalgebra:
        """H^{⊗n} with the tensor product coalgebra structure."""
        cache = self.__dict__.setdefault("_pow_coalg", {})
        if n not in cache:
            cache[n] = self.coalgebra if n == 1 else tensor_coalgebra(self.power_coalgebra(n - 1), self.coalgebra)
        return cache[n]

    @cached_property
    def delta2(self) -> LinMap:
        """Comultiplication of H⊗H."""
        return self.power_coalgebra(2).comult

    @cached_property
    def omegaL(self) -> LinMap:
        return tensor(self.eps_mu, self.I, self.I) @ self.delta2

    @cached_property
    def omegaR(self) -> LinMap:
        return tensor(self.I, self.I, self.eps_mu) @ self.delta2

    def is_cocommutative(self) -> bool:
        return self.c @ self.delta == self.delta

    def is_commutative(self) -> bool:
        return self.mu @ self.c == self.mu

    def require_cocommutative(self):
        if not self.is_cocommutative():
            raise NotCocommutative(f"{self.name} is not cocommutative")

    def is_hopf(self) -> bool:
        return self.delta_eta == tensor(self.eta, self.eta)

    def __repr__(self):
        return f"WeakHopfAlgebra({self.name}, dim {self.dim}, {self.field})"


def verify_weak_hopf(H: WeakHopfAlgebra) -> Report:
    """Check the algebra, coalgebra and weak Hopf axioms; failures carry their label."""
    rep = Report(f"weak Hopf algebra {H.name}")
    verify_algebra(H.algebra, rep)
    verify_coalgebra(H.coalgebra, rep)
    I, mu, d, e, c, lam = H.I, H.mu, H.delta, H.eps, H.c, H.lam
    H2 = H.power_coalgebra(2)
    rep.equal("(a1)", d @ mu, tensor(mu, mu) @ H2.comult)
    lhs = H.eps_mu @ tensor(mu, I)
    rep.equal("(a2) first", lhs, tensor(H.eps_mu, H.eps_mu) @ tensor(I, d, I))
    rep.equal("(a2) second", lhs, tensor(H.eps_mu, H.eps_mu) @ tensor(I, c @ d, I))
    lhs = tensor(d, I) @ d @ H.eta
    dd = tensor(d, d) @ tensor(H.eta, H.eta)
    rep.equal("(a3) first", lhs, tensor(I, mu, I) @ dd)
    rep.equal("(a3) second", lhs, tensor(I, mu @ c, I) @ dd)
    C, A = H.coalgebra, H.algebra
    rep.equal("(a4-1)", convolution(I, lam, C, A), H.piL)
    rep.equal("(a4-2)", convolution(lam, I, C, A), H.piR)
    rep.equal("(a4-3)", conv(C, A, lam, I, lam), lam)
    return rep


def antipode_properties(H: WeakHopfAlgebra) -> Report:
    rep = Report(f"antipode of {H.name}")
    lam = H.lam
    rep.equal("antipode anti-multiplicative", lam @ H.mu, H.mu @ tensor(lam, lam) @ H.c)
    rep.equal("antipode anti-comultiplicative", H.delta @ lam, H.c @ tensor(lam, lam) @ H.delta)
    rep.equal("antipode unit", lam @ H.eta, H.eta)
    rep.equal("antipode counit", H.eps @ lam, H.eps)
    return rep


def projection_identities(H: WeakHopfAlgebra) -> list:
    """(label, lhs, rhs) for every catalogued identity between the four projections."""
    I, mu, d, c, lam = H.I, H.mu, H.delta, H.c, H.lam
    pL, pR, bL, bR = H.piL, H.piR, H.piL_bar, H.piR_bar
    C, A = H.coalgebra, H.algebra
    em, de = H.eps_mu, H.delta_eta
    return [
        ("propiedadesgeneralespiLR.1", pL, convolution(I, lam, C, A)),
        ("propiedadesgeneralespiLR.2", pR, convolution(lam, I, C, A)),
        ("id.1", convolution(pL, pL, C, A), pL),
        ("id.2", convolution(pR, pR, C, A), pR),
        ("composiciones1.1", pL @ bL, pL),
        ("composiciones1.2", pL @ bR, bR),
        ("composiciones1.3", pR @ bL, bL),
        ("composiciones1.4", pR @ bR, pR),
        ("composiciones2.1", bL @ pL, bL),
        ("composiciones2.2", bL @ pR, pR),
        ("composiciones2.3", bR @ pL, pL),
        ("composiciones2.4", bR @ pR, bR),
        ("composiciones.1", pL, bR @ lam),
        ("composiciones.2", pL, lam @ bL),
        ("composiciones.3", pR, bL @ lam),
        ("composiciones.4", pR, lam @ bR),
        ("antipode-projections.1", pL @ lam, pL @ pR),
        ("antipode-projections.2", pL @ lam, lam @ pR),
        ("antipode-projections.3", pR @ lam, pR @ pL),
        ("antipode-projections.4", pR @ lam, lam @ pL),
        ("PiLmu", mu @ tensor(I, pL), tensor(em, I) @ tensor(I, c) @ tensor(d, I)),
        ("PiRmu", mu @ tensor(pR, I), tensor(I, em) @ tensor(c, I) @ tensor(I, d)),
        ("PiLbarramu", mu @ tensor(I, bL), tensor(I, em) @ tensor(d, I)),
        ("PiRbarramu", mu @ tensor(bR, I), tensor(em, I) @ tensor(I, d)),
        ("deltaPIL", tensor(I, pL) @ d, tensor(mu, I) @ tensor(I, c) @ tensor(de, I)),
        ("deltaPIR", tensor(pR, I) @ d, tensor(I, mu) @ tensor(c, I) @ tensor(I, de)),
        ("deltaPILbarra", tensor(bL, I) @ d, tensor(I, mu) @ tensor(de, I)),
        ("deltaPIRbarra", tensor(I, bR) @ d, tensor(mu, I) @ tensor(I, de)),
        ("PiLmuPiL", pL @ mu @ tensor(I, pL), pL @ mu),
        ("PiRmuPiR", pR @ mu @ tensor(pR, I), pR @ mu),
        ("PiLdeltaPiL", tensor(I, pL) @ d @ pL, d @ pL),
        ("PiRdeltaPiR", tensor(pR, I) @ d @ pR, d @ pR),
    ]


def verify_projection_identities(H: WeakHopfAlgebra) -> Report:
    rep = Report(f"projection identities of {H.name}")
    for label, lhs, rhs in projection_identities(H):
        rep.equal(label, lhs, rhs)
    return rep


# groupoids

@dataclass
class Groupoid:
    """A finite groupoid. Morphisms are (label, source, target); comp[(g, f)] = g∘f."""

    name: str
    objects: tuple
    morphisms: tuple
    comp: dict
    inv: dict

    def __post_init__(self):
        self.objects = tuple(self.objects)
        self.morphisms = tuple(sorted((tuple(m) for m in self.morphisms), key=lambda m: (m[1], m[2], m[0])))
        self._src = {m[0]: m[1] for m in self.morphisms}
        self._tgt = {m[0]: m[2] for m in self.morphisms}
        self.validate()

    @property
    def labels(self) -> list:
        return [m[0] for m in self.morphisms]

    def source(self, g):
        return self._src[g]

    def target(self, g):
        return self._tgt[g]

    def validate(self):
        labels = [m[0] for m in self.morphisms]
        if len(set(labels)) != len(labels):
            raise InvalidGroupoid("repeated morphism labels")
        if len(set(self.objects)) != len(self.objects):
            raise InvalidGroupoid("repeated objects")
        for g, s, t in self.morphisms:
            if s not in self.objects or t not in self.objects:
                raise InvalidGroupoid(f"{g} has an unknown endpoint")
        for g in labels:
            for f in labels:
                composable = self.source(g) == self.target(f)
                if composable != ((g, f) in self.comp):
                    raise InvalidGroupoid(f"composition of {g} after {f} is {'missing' if composable else 'not allowed'}")
                if composable:
                    gf = self.comp[(g, f)]
                    if gf not in self._src:
                        raise InvalidGroupoid(f"{g}∘{f} = {gf} is not a morphism")
                    if self.source(gf) != self.source(f) or self.target(gf) != self.target(g):
                        raise InvalidGroupoid(f"{g}∘{f} has the wrong endpoints")
        for (g, f), gf in self.comp.items():
            for h in labels:
                if self.source(h) == self.target(g):
                    if self.comp[(h, gf)] != self.comp[(self.comp[(h, g)], f)]:
                        raise InvalidGroupoid(f"composition is not associative at {h}, {g}, {f}")
        self._id = {}
        for x in self.objects:
            cands = [g for g in labels if self.source(g) == x and self.target(g) == x
                     and all(self.comp[(g, f)] == f for f in labels if self.target(f) == x)
                     and all(self.comp[(f, g)] == f for f in labels if self.source(f) == x)]
            if len(cands) != 1:
                raise InvalidGroupoid(f"object {x} has no identity")
            self._id[x] = cands[0]
        for g in labels:
            gi = self.inv.get(g)
            if gi not in self._src:
                raise InvalidGroupoid(f"{g} has no inverse")
            if self.comp.get((gi, g)) != self._id[self.source(g)] or self.comp.get((g, gi)) != self._id[self.target(g)]:
                raise InvalidGroupoid(f"{gi} is not inverse to {g}")

    def identity_of(self, x):
        return self._id[x]

    def to_json(self) -> dict:
        return {
            "objects": list(self.objects),
            "morphisms": [{"id": g, "src": s, "tgt": t} for g, s, t in self.morphisms],
            "comp": [[g, f, gf] for (g, f), gf in sorted(self.comp.items())],
            "inv": [[g, gi] for g, gi in sorted(self.inv.items())],
        }

    @classmethod
    def from_json(cls, name: str, d: dict) -> "Groupoid":
        try:
            morphisms = [(m["id"], m["src"], m["tgt"]) for m in d["morphisms"]]
            comp = {(g, f): gf for g, f, gf in d["comp"]}
            inv = {g: gi for g, gi in d["inv"]}
            return cls(name, tuple(d["objects"]), tuple(morphisms), comp, inv)
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidGroupoid(f"malformed groupoid {name}: {e}") from None


def group_groupoid(name: str, elements: Sequence[str], mul, obj: str = "*") -> Groupoid:
    """One-object groupoid from a group given by its multiplication function."""
    morphisms = [(g, obj, obj) for g in elements]
    comp = {(g, f): mul(g, f) for g in elements for f in elements}
    e = next(x for x in elements if all(mul(x, y) == y for y in elements))
    inv = {g: next(h for h in elements if mul(h, g) == e) for g in elements}
    return Groupoid(name, (obj,), tuple(morphisms), comp, inv)


def cyclic_group(n: int, gen: str = "g", obj: str = "*", name: str = "") -> Groupoid:
    def lab(k):
        return "e" if k == 0 else (gen if k == 1 else f"{gen}^{k}")
    elems = [lab(k) for k in range(n)]
    idx = {lab(k): k for k in range(n)}
    return group_groupoid(name or f"Z{n}", elems, lambda a, b: lab((idx[a] + idx[b]) % n), obj)


def klein_four(obj: str = "*") -> Groupoid:
    elems = ["e", "a", "b", "ab"]
    vec = {"e": (0, 0), "a": (1, 0), "b": (0, 1), "ab": (1, 1)}
    back = {v: k for k, v in vec.items()}
    return group_groupoid("Z2xZ2", elems, lambda x, y: back[((vec[x][0] + vec[y][0]) % 2, (vec[x][1] + vec[y][1]) % 2)], obj)


def discrete(objects: Sequence[str], name: str = "") -> Groupoid:
    morphisms = [(f"1_{x}", x, x) for x in objects]
    comp = {(f"1_{x}", f"1_{x}"): f"1_{x}" for x in objects}
    inv = {f"1_{x}": f"1_{x}" for x in objects}
    return Groupoid(name or f"disc{len(objects)}", tuple(objects), tuple(morphisms), comp, inv)


def indiscrete(objects: Sequence[str], name: str = "") -> Groupoid:
    """Exactly one arrow between any two objects."""
    def lab(s, t):
        return f"1_{s}" if s == t else f"{s}>{t}"
    morphisms = [(lab(s, t), s, t) for s in objects for t in objects]
    comp = {(lab(t, u), lab(s, t)): lab(s, u) for s in objects for t in objects for u in objects}
    inv = {lab(s, t): lab(t, s) for s in objects for t in objects}
    return Groupoid(name or f"indisc{len(objects)}", tuple(objects), tuple(morphisms), comp, inv)


def disjoint_union(name: str, *parts: Groupoid) -> Groupoid:
    objects, morphisms, comp, inv = [], [], {}, {}
    for G in parts:
        if set(objects) & set(G.objects):
            raise InvalidGroupoid("disjoint union of groupoids sharing objects")
        objects += G.objects
        morphisms += G.morphisms
        comp.update(G.comp)
        inv.update(G.inv)
    return Groupoid(name, tuple(objects), tuple(morphisms), comp, inv)


def small_groupoids() -> list:
    """Every groupoid with at most two objects and four morphisms, up to isomorphism."""
    def vertex(n, obj):
        if n == 1:
            return discrete([obj])
        G = cyclic_group(n, gen=f"g{obj}", obj=obj)
        ren = {g: (f"1_{obj}" if g == "e" else g) for g in G.labels}
        return Groupoid(G.name, G.objects, tuple((ren[g], s, t) for g, s, t in G.morphisms),
                        {(ren[g], ren[f]): ren[h] for (g, f), h in G.comp.items()},
                        {ren[g]: ren[h] for g, h in G.inv.items()})
    out = [
        cyclic_group(1, name="trivial"), cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four(),
        disjoint_union("disc2", vertex(1, "x"), vertex(1, "y")),
        disjoint_union("1+Z2", vertex(1, "x"), vertex(2, "y")),
        disjoint_union("1+Z3", vertex(1, "x"), vertex(3, "y")),
        disjoint_union("Z2+Z2", vertex(2, "x"), vertex(2, "y")),
        indiscrete(["x", "y"], "indisc2"),
    ]
    return out


def groupoid_algebra(G: Groupoid, field: Field) -> WeakHopfAlgebra:
    """k[G]: product is composition (or 0), every morphism group-like, antipode inverts."""
    V = make_space(G.labels, f"k[{G.name}]")
    VV = tensor_space(V, V)
    labels = G.labels
    mult = LinMap.from_function(
        VV, V, lambda gf: {G.comp[tuple(gf.split("⊗"))]: 1} if tuple(gf.split("⊗")) in G.comp else {}, field)
    unit = LinMap.from_function(K, V, lambda _: {G.identity_of(x): 1 for x in G.objects}, field)
    comult = LinMap.from_function(V, VV, lambda g: {f"{g}⊗{g}": 1}, field)
    counit = LinMap.from_function(V, K, lambda g: {"1": 1}, field)
    lam = LinMap.from_function(V, V, lambda g: {G.inv[g]: 1}, field)
    assert len(labels) == V.dim
    name = f"{field}[{G.name}]"
    return WeakHopfAlgebra(Algebra(V, mult, unit, name), Coalgebra(V, comult, counit, name), lam, name)


def weak_hopf_from_constants(name: str, field: Field, basis: Sequence[str], mult, unit, comult, counit,
                             antipode) -> WeakHopfAlgebra:
    """Build from sparse structure constants.

    mult: [x, y, z, c] meaning x·y has coefficient c on z; unit: [z, c];
    comult: [x, y, z, c] meaning δ(x) has coefficient c on y⊗z; counit: [x, c];
    antipode: [x, y, c].
    """
    V = make_space(basis, name)
    VV = tensor_space(V, V)
    sep = "⊗"
    m = LinMap.from_entries(VV, V, [(f"{x}{sep}{y}", z, c) for x, y, z, c in mult], field)
    u = LinMap.from_entries(K, V, [("1", z, c) for z, c in unit], field)
    d = LinMap.from_entries(V, VV, [(x, f"{y}{sep}{z}", c) for x, y, z, c in comult], field)
    e = LinMap.from_entries(V, K, [(x, "1", c) for x, c in counit], field)
    s = LinMap.from_entries(V, V, [(x, y, c) for x, y, c in antipode], field)
    return WeakHopfAlgebra(Algebra(V, m, u, name), Coalgebra(V, d, e, name), s, name)


def algebra_from_constants(name: str, field: Field, basis: Sequence[str], mult, unit) -> Algebra:
    V = make_space(basis, name)
    VV = tensor_space(V, V)
    m = LinMap.from_entries(VV, V, [(f"{x}⊗{y}", z, c) for x, y, z, c in mult], field)
    u = LinMap.from_entries(K, V, [("1", z, c) for z, c in unit], field)
    return Algebra(V, m, u, name)


def matrix_algebra(n: int, field: Field) -> Algebra:
    """M_n(k) on the matrix units E{i}{j}."""
    labels = [f"E{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    mult = [(f"E{i}{j}", f"E{j}{l}", f"E{i}{l}", 1)
            for i in range(1, n + 1) for j in range(1, n + 1) for l in range(1, n + 1)]
    unit = [(f"E{i}{i}", 1) for i in range(1, n + 1)]
    return algebra_from_constants(f"M{n}", field, labels, mult, unit)


def center(A: Algebra, name: str = "Z") -> SubspaceEmbedding:
    """Embedding of {z : z a = a z for every a}."""
    comm = A.mult - A.mult @ symmetry(A.space, A.space, A.field)
    blocks = []
    for a in A.space.basis:
        ea = LinMap.from_function(K, A.space, lambda _, a=a: {a: 1}, A.field)
        blocks.append((comm @ tensor(A.I, ea)).mat)
    stacked = np.concatenate(blocks, axis=0)
    rows = make_space([f"r{k}" for k in range(stacked.shape[0])])
    return kernel(LinMap(A.space, rows, stacked, A.field), name)
