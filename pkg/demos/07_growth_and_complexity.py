# Growth, curvature and complexity.
#
# Functor powers produce a sequence of radii; its polynomial growth rate and
# its exponential curvature are estimated from the last half of a finite
# window.  The complexity of an algebra is the same kind of limit over the
# Ext dimensions of its semisimple quotient, and the fp-complexity is always
# bounded by it (equality under the averaging growth condition).

import math

from fproot import (complexity_estimate, dual_numbers_algebra,
                    fpc_vs_cx_check, growth_analyze, path_algebra,
                    path_quiver, sqrt2_algebra)

print("== synthetic windows ==")
poly = growth_analyze([math.floor(n ** 1.5) for n in range(1, 201)])
expo = growth_analyze([math.floor(1.3 ** n) for n in range(1, 61)])
print(f"floor(n^1.5):  growth estimate {poly.fpg:.4f}  (target 1.5)")
print(f"floor(1.3^n):  curvature estimate {expo.fpv:.4f}  (target 1.3)")

print()
print("== algebras ==")
for name, alg, depth in [("glued 5-dim algebra", sqrt2_algebra(), 10),
                         ("dual numbers", dual_numbers_algebra(), 10),
                         ("linear 2-vertex path algebra",
                          path_algebra(path_quiver(2)), 8)]:
    comp = complexity_estimate(alg, depth)
    chk = fpc_vs_cx_check(alg, depth=depth)
    print(f"{name:30s} Ext window {comp.sequence[1:6]} ...")
    print(f"{'':30s} cx = {comp.cx_estimate}, curvature = "
          f"{comp.fpv_estimate:.4f}, AGC holds = {comp.agc.holds}")
    print(f"{'':30s} fpc = {chk.fpc_estimate}  <=  cx = {chk.cx_estimate}: "
          f"{chk.holds}")
