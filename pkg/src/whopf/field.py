"""Exact scalar fields: the rationals and prime fields GF(p) with p <= 97."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np


class WhopfError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(WhopfError):
    pass


class FieldMismatch(WhopfError):
    pass


class NotEnumerable(WhopfError):
    pass


MAX_PRIME = 97


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class Field:
    """Either the rationals (kind 'Q') or GF(p) (kind 'GF')."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind == "Q":
            if self.p != 0:
                raise ValueError("the rationals take no modulus")
        elif self.kind == "GF":
            if not _is_prime(self.p) or self.p > MAX_PRIME:
                raise ValueError(f"GF(p) needs a prime p <= {MAX_PRIME}, got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "GF"

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.p})"

    def to_json(self) -> dict:
        return {"field": "Q"} if self.kind == "Q" else {"field": "GF", "p": self.p}

    @classmethod
    def from_json(cls, d: dict) -> "Field":
        if d.get("field") == "Q":
            return Q
        if d.get("field") == "GF":
            return GF(int(d["p"]))
        raise ValueError(f"bad field description {d!r}")

    # raw values: Fraction for Q, int in [0, p) for GF(p)

    def canon(self, x):
        if self.kind == "Q":
            if isinstance(x, str):
                return Fraction(x)
            if isinstance(x, (int, Fraction, np.integer)):
                return Fraction(int(x)) if not isinstance(x, Fraction) else x
            raise TypeError(f"cannot read {x!r} as a rational")
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"{x} has no image in {self}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, str):
            return self.canon(Fraction(x))
        return int(x) % self.p

    def inv(self, x):
        x = self.canon(x)
        if x == 0:
            raise DivisionByZero(f"zero has no inverse in {self}")
        if self.kind == "Q":
            return 1 / x
        return pow(x, -1, self.p)

    def format(self, x) -> str:
        x = self.canon(x)
        if self.kind == "Q":
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x)

    def elements(self) -> Iterator[int]:
        if self.kind == "Q":
            raise NotEnumerable("the rationals cannot be enumerated")
        return iter(range(self.p))

    def units(self) -> list:
        return [x for x in self.elements() if x]

    # arrays

    @property
    def dtype(self):
        return object if self.kind == "Q" else np.int64

    def zeros(self, shape) -> np.ndarray:
        if self.kind == "Q":
            a = np.empty(shape, dtype=object)
            a.fill(Fraction(0))
            return a
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i] = self.one
        return a

    def array(self, rows) -> np.ndarray:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        a = self.zeros((len(rows), ncols))
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            for j, x in enumerate(r):
                a[i, j] = self.canon(x)
        return a

    def reduce(self, a: np.ndarray) -> np.ndarray:
        if self.kind == "Q":
            return a
        return np.mod(a, self.p)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] == 0:
            return self.zeros((a.shape[0], b.shape[1]))
        if self.kind == "Q":
            return _rational_matmul(a, b)
        if a.shape[1] * (self.p - 1) ** 2 < 2 ** 52:
            # BLAS in double precision; every partial sum is an exact integer
            return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64) % self.p
        return np.mod(a @ b, self.p)

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(np.kron(a, b))

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    def scalar(self, x) -> "Scalar":
        return Scalar(self, self.canon(x))


Q = Field("Q")


def _clear_denominators(a: np.ndarray):
    """(integer object array, common denominator) with a = ints / den."""
    den = 1
    for x in a.flat:
        den = math.lcm(den, x.denominator)
    ints = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        ints[idx] = x.numerator * (den // x.denominator)
    return ints, den


def _rational_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ia, da = _clear_denominators(a)
    ib, db = _clear_denominators(b)
    bound = max((abs(x) for x in ia.flat), default=0) * max((abs(x) for x in ib.flat), default=0) * a.shape[1]
    if bound < 2 ** 52:
        prod = np.rint(ia.astype(np.float64) @ ib.astype(np.float64)).astype(np.int64)
    else:
        prod = ia @ ib
    den = da * db
    out = np.empty(prod.shape, dtype=object)
    for idx, x in np.ndenumerate(prod):
        out[idx] = Fraction(int(x), den)
    return out


def GF(p: int) -> Field:
    return Field("GF", p)


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field, so mixed arithmetic is caught."""

    field: Field
    value: object

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.canon(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.canon(self.value + self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.canon(self.value - self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.canon(self._other(other) - self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.canon(self.value * self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, self.field.canon(-self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return self * Scalar(self.field, self._other(other)).inverse()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.canon(other)
        except (TypeError, ValueError, DivisionByZero):
            return False

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"Scalar({self.field}, {self.field.format(self.value)})"

    def __str__(self):
        return self.field.format(self.value)


def arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Apply op in {'+', '-', '*', '/', 'neg', 'inv'} to scalars of one field."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def enumerate_scalars(field: Field) -> Iterator[Scalar]:
    for x in field.elements():
        yield Scalar(field, x)
