"""Small named examples used by the CLI, the tests and the demos."""
from __future__ import annotations

import numpy as np

from .crossed import CrossedSystem
from .field import GF, Field
from .linmap import LinMap, tensor_space
from .maction import WeakModuleAlgebra, trivial_action
from .structure import (Algebra, WeakHopfAlgebra, algebra_from_constants, base_algebra, cyclic_group, discrete,
                        groupoid_algebra, matrix_algebra)


def action_from_function(H: WeakHopfAlgebra, A: Algebra, fn, name: str = "") -> WeakModuleAlgebra:
    """fn(h, a) returns {label: coefficient} for the action of basis h on basis a."""
    dom = tensor_space(H.space, A.space)
    phi = LinMap.from_function(dom, A.space, lambda b: fn(*b.split("⊗", 1)), A.field)
    return WeakModuleAlgebra(H, A, phi, name)


def cocycle_from_function(M: WeakModuleAlgebra, fn, name: str = "") -> CrossedSystem:
    """fn(x, y) returns {label: coefficient} for sigma on basis x⊗y."""
    dom = M.H.power_space(2)
    s = LinMap.from_function(dom, M.A.space, lambda b: fn(*b.split("⊗")), M.field)
    return CrossedSystem(M, s, name)


def group_cocycle(M: WeakModuleAlgebra, values: dict, name: str = "") -> CrossedSystem:
    """sigma equal to the unit except on the listed pairs of group elements."""
    one = {lab: c for lab, c in M.A.unit.image_of("1").items()}
    return cocycle_from_function(M, lambda x, y: values.get((x, y), one), name)


def z2_trivial(p: int = 3, value: int = 1) -> CrossedSystem:
    """GF(p)[Z/2] acting trivially on GF(p), sigma(g, g) = value."""
    F = GF(p)
    H = groupoid_algebra(cyclic_group(2), F)
    M = trivial_action(H, base_algebra(F))
    return group_cocycle(M, {("g", "g"): {"1": value}}, f"Z2 over GF({p}), sigma(g,g)={value}")


def weak_smash_k2(p: int = 3) -> CrossedSystem:
    """k² = GF(p)[disc2] acting on k² by multiplication, sigma = u2."""
    F = GF(p)
    H = groupoid_algebra(discrete(("x", "y")), F)
    A = algebra_from_constants("k2", F, ["1_x", "1_y"],
                               [("1_x", "1_x", "1_x", 1), ("1_y", "1_y", "1_y", 1)], [("1_x", 1), ("1_y", 1)])
    M = action_from_function(H, A, lambda h, a: {a: 1} if h == a else {}, "multiplication")
    return CrossedSystem(M, M.u2, "k2 over k2")


def _matrix_labels(m: np.ndarray) -> dict:
    return {f"E{i + 1}{j + 1}": int(m[i, j]) for i in range(2) for j in range(2) if m[i, j]}


def m2_conjugation(p: int = 3, strict_sigma: bool = False) -> CrossedSystem:
    """GF(p)[Z/2] on M_2(GF(p)) by conjugation with u = [[1,1],[0,1]].

    For p != 2 the action is not strict, since u² is not central; the
    cocycle sigma(g, g) = u² repairs it. With strict_sigma the cocycle is
    u2 instead, which is not a crossed system.
    """
    F = GF(p)
    H = groupoid_algebra(cyclic_group(2), F)
    A = matrix_algebra(2, F)
    u = np.array([[1, 1], [0, 1]])
    uinv = np.array([[1, p - 1], [0, 1]])

    def act(h, a):
        if h == "e":
            return {a: 1}
        i, j = int(a[1]) - 1, int(a[2]) - 1
        e = np.zeros((2, 2), dtype=int)
        e[i, j] = 1
        return _matrix_labels((u @ e @ uinv) % p)

    M = action_from_function(H, A, act, "conjugation")
    if strict_sigma:
        return CrossedSystem(M, M.u2, "M2 conjugation, sigma = u2")
    return group_cocycle(M, {("g", "g"): _matrix_labels((u @ u) % p)}, "M2 conjugation")


EXAMPLES = {
    "z2-smash": lambda: z2_trivial(3, 1),
    "z2-twisted": lambda: z2_trivial(3, 2),
    "k2-smash": weak_smash_k2,
    "m2-conjugation": m2_conjugation,
}
