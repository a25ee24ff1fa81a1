"""
Groupoid algebras as weak Hopf algebras
=======================================

Every small groupoid gives a weak Hopf algebra. Here we check the axioms,
look at the target and source maps, and see where the Hopf laws break.
"""
from whopf import GF, groupoid_algebra, small_groupoids, verify_projection_identities, verify_weak_hopf
from whopf.structure import indiscrete

F = GF(3)

# all ten groupoids with at most two objects and four arrows
for G in small_groupoids():
    H = groupoid_algebra(G, F)
    ok = verify_weak_hopf(H).passed and verify_projection_identities(H).passed
    print(f"{G.name:8s} dim {H.dim}  objects {len(G.objects)}  weak Hopf: {ok}  Hopf: {H.is_hopf()}")

# the indiscrete groupoid on two objects: one arrow each way
H = groupoid_algebra(indiscrete(("x", "y")), F)
print()
print("basis:", H.space.basis)

# the target map sends an arrow to the identity at its target
for b in H.space.basis:
    print(f"  {b}: target {list(H.piL.image_of(b))}, source {list(H.piR.image_of(b))}")

# comultiplication no longer preserves the unit
print((H.delta @ H.eta).pretty())
