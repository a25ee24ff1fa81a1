"""Exhaustive enumeration of affine families of maps over GF(p)."""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor

from .field import Field, NotEnumerable, WhopfError
from .linmap import AffineFamily


class SearchSpaceTooLarge(WhopfError):
    pass


DEFAULT_MAX_ENUM = 10 ** 7


def family_size(fam: AffineFamily, field: Field) -> int:
    if not field.is_finite:
        raise NotEnumerable("cannot enumerate a family over the rationals")
    return field.p ** fam.dimension


def affine_members(fam: AffineFamily, field: Field, max_enum: int = DEFAULT_MAX_ENUM):
    """Every member of the family, in a fixed order."""
    if fam.dimension == 0:
        yield fam.particular
        return
    size = family_size(fam, field)
    if size > max_enum:
        raise SearchSpaceTooLarge(f"{size} candidates exceed the bound {max_enum}")
    for coeffs in itertools.product(range(field.p), repeat=fam.dimension):
        yield fam.member(coeffs)


def filter_members(fam: AffineFamily, field: Field, keep, max_enum: int = DEFAULT_MAX_ENUM,
                   parallel: int = 1) -> list:
    """Members x with keep(x) truthy, in enumeration order."""
    members = affine_members(fam, field, max_enum)
    if parallel <= 1:
        return [x for x in members if keep(x)]
    with ThreadPoolExecutor(parallel) as pool:
        flags = pool.map(lambda x: (x, keep(x)), members, chunksize=64)
        return [x for x, ok in flags if ok]
