"""
Second cohomology and crossed systems
=====================================

With the action fixed, classes of crossed systems match classes of
center-valued cocycles. We count both sides for a few small cases.
"""
import time

from whopf.catalog import weak_smash_k2, z2_trivial
from whopf.cohom import verify_h2_bijection
from whopf.crossed import build_crossed_product, crossed_product_cleft

cases = [("Z/2 over GF(2)", z2_trivial(2, 1)), ("Z/2 over GF(3)", z2_trivial(3, 1)),
         ("Z/2 over GF(5)", z2_trivial(5, 1)), ("Z/2 over GF(7)", z2_trivial(7, 1)),
         ("k² over k², GF(3)", weak_smash_k2(3))]

for name, CS in cases:
    t0 = time.perf_counter()
    rep, s = verify_h2_bijection(crossed_product_cleft(build_crossed_product(CS)))
    print(f"{name:18s} cocycles {s.cocycles:2d}  classes {s.classes}  "
          f"systems {s.systems:2d} in {s.system_classes} classes  "
          f"bijection: {rep.passed}  ({time.perf_counter() - t0:.1f} s)")

# over GF(p) with trivial action the classes are GF(p)^* modulo squares
