"""Dense exact linear maps between finite-dimensional spaces with named bases.

Column j of a matrix is the image of the j-th domain basis vector. Tensor
products use the Kronecker convention with the second factor varying fastest,
and the unit object K is dropped from tensor products, so the monoidal
structure is strict.
"""
from __future__ import annotations

from functools import lru_cache
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .field import Field, WhopfError


class ShapeMismatch(WhopfError):
    pass


class Inconsistent(WhopfError):
    pass


class NotIdempotent(WhopfError):
    pass


class NoFactorization(WhopfError):
    pass


TENSOR_SEP = "⊗"


@dataclass(frozen=True)
class Space:
    basis: tuple
    name: str = dc_field(default="", compare=False)
    is_unit: bool = False

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        try:
            return _positions(self.basis)[label]
        except KeyError:
            raise KeyError(f"{label!r} is not a basis vector of {self.name or self.basis}") from None

    def __str__(self):
        return self.name or "<" + ", ".join(self.basis) + ">"


K = Space(("1",), "K", is_unit=True)


@lru_cache(maxsize=4096)
def _positions(basis: tuple) -> dict:
    return {b: k for k, b in enumerate(basis)}


def make_space(labels: Iterable[str], name: str = "") -> Space:
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != len(labels):
        raise ValueError(f"repeated basis labels in {labels}")
    return Space(labels, name)


@lru_cache(maxsize=4096)
def _tensor_pair(a: tuple, a_name: str, b: tuple, b_name: str) -> Space:
    basis = tuple(f"{x}{TENSOR_SEP}{y}" for x in a for y in b)
    return Space(basis, f"{a_name}{TENSOR_SEP}{b_name}" if a_name and b_name else "")


def tensor_space(*spaces: Space) -> Space:
    out = K
    for s in spaces:
        if s.is_unit:
            continue
        if out.is_unit:
            out = s
            continue
        out = _tensor_pair(out.basis, out.name, s.basis, s.name)
    return out


class LinMap:
    """A linear map dom -> cod over an exact field."""

    __slots__ = ("dom", "cod", "mat", "field")

    def __init__(self, dom: Space, cod: Space, mat: np.ndarray, field: Field):
        if mat.shape != (cod.dim, dom.dim):
            raise ShapeMismatch(f"matrix {mat.shape} does not fit {dom.dim} -> {cod.dim}")
        self.dom = dom
        self.cod = cod
        self.mat = mat
        self.field = field

    # construction

    @classmethod
    def from_rows(cls, dom: Space, cod: Space, rows, field: Field) -> "LinMap":
        return cls(dom, cod, field.array(rows).reshape(cod.dim, dom.dim), field)

    @classmethod
    def from_function(cls, dom: Space, cod: Space, fn: Callable[[str], Mapping], field: Field) -> "LinMap":
        """fn(domain label) returns {codomain label: coefficient}."""
        m = field.zeros((cod.dim, dom.dim))
        for j, b in enumerate(dom.basis):
            for lab, c in fn(b).items():
                i = cod.index(lab)
                m[i, j] = field.canon(m[i, j] + field.canon(c))
        return cls(dom, cod, m, field)

    @classmethod
    def from_entries(cls, dom: Space, cod: Space, entries: Iterable, field: Field) -> "LinMap":
        """entries are (domain label, codomain label, coefficient) triples."""
        m = field.zeros((cod.dim, dom.dim))
        for d, c, x in entries:
            i, j = cod.index(c), dom.index(d)
            m[i, j] = field.canon(m[i, j] + field.canon(x))
        return cls(dom, cod, m, field)

    # algebra of maps

    def _check_field(self, other: "LinMap"):
        if other.field != self.field:
            from .field import FieldMismatch
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "LinMap") -> "LinMap":
        """self ∘ other."""
        self._check_field(other)
        if other.cod != self.dom:
            raise ShapeMismatch(f"cannot compose: {other.cod} is not {self.dom}")
        return LinMap(other.dom, self.cod, self.field.matmul(self.mat, other.mat), self.field)

    def __add__(self, other: "LinMap") -> "LinMap":
        self._check_same(other)
        return LinMap(self.dom, self.cod, self.field.reduce(self.mat + other.mat), self.field)

    def __sub__(self, other: "LinMap") -> "LinMap":
        self._check_same(other)
        return LinMap(self.dom, self.cod, self.field.reduce(self.mat - other.mat), self.field)

    def __neg__(self) -> "LinMap":
        return LinMap(self.dom, self.cod, self.field.reduce(-self.mat), self.field)

    def scale(self, c) -> "LinMap":
        c = self.field.canon(c.value if hasattr(c, "value") else c)
        return LinMap(self.dom, self.cod, self.field.reduce(self.mat * c), self.field)

    def _check_same(self, other: "LinMap"):
        self._check_field(other)
        if other.dom != self.dom or other.cod != self.cod:
            raise ShapeMismatch(f"{self.dom}->{self.cod} vs {other.dom}->{other.cod}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field == other.field and self.dom == other.dom and self.cod == other.cod
                and bool(np.array_equal(self.mat, other.mat)))

    __hash__ = None

    def key(self) -> bytes:
        """Hashable fingerprint of the matrix (use within one pair of spaces)."""
        if self.field.kind == "Q":
            return repr([[str(x) for x in row] for row in self.mat.tolist()]).encode()
        return self.mat.astype(np.int8).tobytes()

    def is_zero(self) -> bool:
        return not np.any(self.mat != 0)

    def rank(self) -> int:
        return len(rref(self.mat, self.field)[1])

    def image_of(self, label: str) -> dict:
        j = self.dom.index(label)
        return {self.cod.basis[i]: self.field.canon(self.mat[i, j]) for i in range(self.cod.dim) if self.mat[i, j] != 0}

    def differing_column(self, other: "LinMap"):
        """First domain basis vector on which two maps disagree, or None."""
        for j in range(self.dom.dim):
            if not np.array_equal(self.mat[:, j], other.mat[:, j]):
                return self.dom.basis[j]
        return None

    def to_json(self) -> dict:
        entries = []
        for j, d in enumerate(self.dom.basis):
            for i, c in enumerate(self.cod.basis):
                if self.mat[i, j] != 0:
                    entries.append([d, c, self.field.format(self.mat[i, j])])
        return {"dom": list(self.dom.basis), "cod": list(self.cod.basis), "entries": entries}

    def __repr__(self):
        return f"LinMap({self.dom} -> {self.cod}, {self.field})"

    def pretty(self) -> str:
        lines = []
        for d in self.dom.basis:
            img = self.image_of(d)
            terms = " + ".join(f"{self.field.format(c)}·{lab}" for lab, c in img.items()) or "0"
            lines.append(f"{d} ↦ {terms}")
        return "\n".join(lines)


def identity(V: Space, field: Field) -> LinMap:
    return LinMap(V, V, field.eye(V.dim), field)


def zero_map(dom: Space, cod: Space, field: Field) -> LinMap:
    return LinMap(dom, cod, field.zeros((cod.dim, dom.dim)), field)


def tensor(*maps: LinMap) -> LinMap:
    if not maps:
        raise ValueError("tensor needs at least one map")
    out = maps[0]
    for g in maps[1:]:
        out._check_field(g)
        out = LinMap(tensor_space(out.dom, g.dom), tensor_space(out.cod, g.cod),
                     out.field.kron(out.mat, g.mat), out.field)
    return out


def compose(*maps: LinMap) -> LinMap:
    """compose(f, g, h) = f ∘ g ∘ h."""
    out = maps[-1]
    for f in reversed(maps[:-1]):
        out = f @ out
    return out


def symmetry(V: Space, W: Space, field: Field) -> LinMap:
    """The flip V⊗W -> W⊗V."""
    m = field.zeros((V.dim * W.dim, V.dim * W.dim))
    for i in range(V.dim):
        for j in range(W.dim):
            m[j * V.dim + i, i * W.dim + j] = field.one
    return LinMap(tensor_space(V, W), tensor_space(W, V), m, field)


# Gaussian elimination

def rref(a: np.ndarray, field: Field):
    """Reduced row echelon form and pivot columns."""
    m = a.copy()
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c] != 0)[0]
        if len(nz) == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = field.reduce(m[r] * field.inv(m[r, c]))
        others = np.nonzero(m[:, c] != 0)[0]
        for i in others:
            if i != r:
                m[i] = field.reduce(m[i] - m[i, c] * m[r])
        pivots.append(c)
        r += 1
    return m, pivots


def null_space(a: np.ndarray, field: Field) -> np.ndarray:
    """Columns form a basis of {x : a x = 0}."""
    cols = a.shape[1]
    r, piv = rref(a, field)
    free = [c for c in range(cols) if c not in piv]
    out = field.zeros((cols, len(free)))
    for k, f in enumerate(free):
        out[f, k] = field.one
        for i, p in enumerate(piv):
            out[p, k] = field.reduce(-r[i, f]) if field.kind == "GF" else -r[i, f]
    return out


def solve_matrix(a: np.ndarray, b: np.ndarray, field: Field):
    """Particular solution x of a x = b (free variables zero) and a null-space basis."""
    n = a.shape[1]
    aug = np.concatenate([a, b], axis=1) if b.shape[1] else a.copy()
    r, piv = rref(aug, field)
    if any(p >= n for p in piv):
        raise Inconsistent("the linear system has no solution")
    x = field.zeros((n, b.shape[1]))
    for i, p in enumerate(piv):
        x[p, :] = r[i, n:]
    return x, null_space(a, field)


@dataclass
class SubspaceEmbedding:
    """An injective map into a larger space."""

    inj: LinMap

    @property
    def space(self) -> Space:
        return self.inj.dom


@dataclass
class SplitIdempotent:
    inj: LinMap
    proj: LinMap

    @property
    def space(self) -> Space:
        return self.inj.dom


@dataclass
class AffineFamily:
    particular: LinMap
    homogeneous: list

    @property
    def dimension(self) -> int:
        return len(self.homogeneous)

    def member(self, coeffs: Sequence) -> LinMap:
        out = self.particular
        for c, h in zip(coeffs, self.homogeneous):
            if c:
                out = out + h.scale(c)
        return out


def _subspace(cols: np.ndarray, cod: Space, field: Field, name: str) -> LinMap:
    labels = tuple(f"{name}[{k}]" for k in range(cols.shape[1]))
    return LinMap(Space(labels, name), cod, cols, field)


def kernel(f: LinMap, name: str = "ker") -> SubspaceEmbedding:
    return SubspaceEmbedding(_subspace(null_space(f.mat, f.field), f.dom, f.field, name))


def equalizer(f: LinMap, g: LinMap, name: str = "eq") -> SubspaceEmbedding:
    return kernel(f - g, name)


def image(f: LinMap, name: str = "im") -> SubspaceEmbedding:
    _, piv = rref(f.mat, f.field)
    return SubspaceEmbedding(_subspace(f.mat[:, piv], f.cod, f.field, name))


def solve_affine(L: LinMap, M: LinMap) -> AffineFamily:
    """All X with L ∘ X = M, as a particular solution plus a homogeneous basis."""
    L._check_field(M)
    if L.cod != M.cod:
        raise ShapeMismatch(f"{L.cod} vs {M.cod}")
    x, ns = solve_matrix(L.mat, M.mat, L.field)
    field = L.field
    part = LinMap(M.dom, L.dom, x, field)
    hom = []
    for k in range(ns.shape[1]):
        for j in range(M.dom.dim):
            m = field.zeros((L.dom.dim, M.dom.dim))
            m[:, j] = ns[:, k]
            hom.append(LinMap(M.dom, L.dom, m, field))
    return AffineFamily(part, hom)


def split_idempotent(q: LinMap, name: str = "im") -> SplitIdempotent:
    """Factor an idempotent endomorphism as inj ∘ proj with proj ∘ inj = id."""
    if q.dom != q.cod:
        raise ShapeMismatch("an idempotent must be an endomorphism")
    if not q @ q == q:
        raise NotIdempotent(f"map on {q.dom} is not idempotent")
    r, piv = rref(q.mat, q.field)
    inj = _subspace(q.mat[:, piv], q.cod, q.field, name)
    proj = LinMap(q.dom, inj.dom, r[: len(piv), :], q.field)
    assert proj @ inj == identity(inj.dom, q.field)
    return SplitIdempotent(inj, proj)


def factor_through(m: LinMap, emb: LinMap) -> LinMap:
    """The unique X with emb ∘ X = m, for an injective emb."""
    try:
        x, ns = solve_matrix(emb.mat, m.mat, m.field)
    except Inconsistent:
        raise NoFactorization(f"map does not land in the image of {emb.dom}") from None
    if ns.shape[1]:
        raise NoFactorization("the embedding is not injective")
    return LinMap(m.dom, emb.dom, x, m.field)


def elementary_maps(dom: Space, cod: Space, field: Field):
    """The standard basis of Hom(dom, cod), ordered by column then row."""
    for j in range(dom.dim):
        for i in range(cod.dim):
            m = field.zeros((cod.dim, dom.dim))
            m[i, j] = field.one
            yield LinMap(dom, cod, m, field)


def solve_linear_conditions(dom: Space, cod: Space, field: Field, conditions) -> AffineFamily:
    """All maps X: dom -> cod satisfying every affine condition op(X) = rhs.

    conditions is a list of (op, rhs) with op linear in X. Each op is
    evaluated on the elementary maps to build one stacked linear system.
    """
    n = dom.dim * cod.dim
    unknown = Space(tuple(f"x{k}" for k in range(n)), "unknowns")
    blocks, rhs_blocks = [], []
    basis = list(elementary_maps(dom, cod, field))
    for op, rhs in conditions:
        cols = [op(e).mat.reshape(-1, order="F") for e in basis]
        blocks.append(np.stack(cols, axis=1) if cols else field.zeros((rhs.mat.size, 0)))
        rhs_blocks.append(rhs.mat.reshape(-1, 1, order="F"))
    if blocks:
        A = np.concatenate(blocks, axis=0)
        b = np.concatenate(rhs_blocks, axis=0)
    else:
        A, b = field.zeros((0, n)), field.zeros((0, 1))
    eqs = Space(tuple(f"e{k}" for k in range(A.shape[0])), "equations")
    fam = solve_affine(LinMap(unknown, eqs, A, field), LinMap(K, eqs, b, field))

    def unvec(v: LinMap) -> LinMap:
        return LinMap(dom, cod, v.mat.reshape(cod.dim, dom.dim, order="F"), field)

    return AffineFamily(unvec(fam.particular), [unvec(h) for h in fam.homogeneous])
