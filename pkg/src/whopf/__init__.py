"""Exact computations with weak Hopf algebras, cleft extensions and crossed products."""
from .field import GF, Q, Field, Scalar, arith, enumerate_scalars
from .linmap import K, LinMap, Space, compose, identity, symmetry, tensor
from .structure import (Groupoid, WeakHopfAlgebra, groupoid_algebra, small_groupoids,
                        verify_projection_identities, verify_weak_hopf)

__version__ = "0.1.0"
