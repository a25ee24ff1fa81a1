"""
Crossed products
================

A weak action plus a cocycle builds an algebra on a piece of A⊗H. We build
three of them and look at the twisted one closely.
"""
from whopf.catalog import m2_conjugation, weak_smash_k2, z2_trivial
from whopf.crossed import build_crossed_product, crossed_product_cleft, special_case_checks, verify_crossed_system
from whopf.linmap import K, LinMap, tensor

for CS in (z2_trivial(3, 1), weak_smash_k2(), z2_trivial(3, 2), m2_conjugation()):
    CP = build_crossed_product(CS)
    cert = crossed_product_cleft(CP)
    print(f"{CS.name}")
    print(f"  dim A⊗H = {CS.nabla.dom.dim}, crossed product dim = {CP.algebra.space.dim}, cleft: {cert.cleft}")
    print(f"  {special_case_checks(CS)}")

# in the twisted group algebra g·g is sigma(g, g) = 2 times the unit
CS = z2_trivial(3, 2)
CP = build_crossed_product(CS)


def elem(h):
    return CP.proj @ LinMap.from_function(K, CS.mult_big.cod, lambda _: {f"1⊗{h}": 1}, CS.field)


# basis vectors of the crossed product are labelled k×GF(3)[Z2][i]
g = elem("g")
print()
print("g·g:", (CP.algebra.mult @ tensor(g, g)).pretty())
print("unit:", CP.algebra.unit.pretty())

# conjugation on 2x2 matrices is not a strict action; u2 fails the twisted condition
bad = m2_conjugation(3, strict_sigma=True)
print()
bad_check = verify_crossed_system(bad).first_failure()
print(f"with sigma = u2, {bad_check.label} fails: {bad_check.detail}")
