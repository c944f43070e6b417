# The fp engine: brick sets, adjacency matrices, and the sqrt(2) scan.
#
# A brick set is a family with Hom dimensions forming an identity matrix.
# The fp dimension at size n is the sup of the spectral radius of the Ext
# adjacency over all n-element brick sets.  On the five-dimensional glued
# algebra the pair of simples attains sqrt(2), every other set stays at 1,
# and the running maximum stabilizes at set size 2.

import math

from fproot import (FpBudgets, adjacency_of, ext_assignment, fp_report,
                    simples, sqrt2_algebra, sqrt2_brick_catalogue,
                    verify_brick_set)

alg = sqrt2_algebra()
asn = ext_assignment(alg)

cat = sqrt2_brick_catalogue(alg, lambda_count=8, family_depth=3)
print("candidate bricks:", [m.name for m in cat])

s1, s2 = simples(alg)
phi = verify_brick_set([s1, s2], asn)
print("\n{S1, S2} Hom certificate:", phi.certificate.to_lists())
print("{S1, S2} Ext adjacency:   ", adjacency_of(phi, asn, 1).to_lists())

report = fp_report(cat, asn, FpBudgets(max_set_size=4, max_power=1))
print()
print("fp dimensions by set size (functor power 1):")
for n in range(1, 5):
    cell = report.cells[(n, 1)]
    print(f"  n={n}:  {cell.value.value:.10f}   witness {cell.witness}")
print("fpdim =", report.fpdim, " vs sqrt(2) =", math.sqrt(2))
print("stabilization index =", report.stabilization_index)
