# The Dynkin frontier: radius 2 separates finite from infinite type.
#
# Connected simple graphs with spectral radius < 2 are exactly the ADE
# diagrams, and radius exactly 2 picks out their extended versions.  The
# positive roots of the ADE root systems, generated by reflection closure,
# enumerate the indecomposable representations of any orientation.

from fproot import (classify_underlying_graph, dynkin_quiver,
                    extended_dynkin_quiver, positive_roots, rho,
                    underlying_adjacency)

print("family  rank   radius      classification")
for fam, ranks in (("A", (2, 5, 8)), ("D", (4, 6)), ("E", (6, 7, 8))):
    for r in ranks:
        q = dynkin_quiver(fam, r)
        val = rho(underlying_adjacency(q)).value
        print(f"  {fam}     {r}    {val:.6f}    {classify_underlying_graph(q)}")
for fam, ranks in (("A", (3, 7)), ("D", (4, 8)), ("E", (6, 7, 8))):
    for r in ranks:
        q = extended_dynkin_quiver(fam, r)
        val = rho(underlying_adjacency(q)).value
        print(f" ~{fam}     {r}    {val:.6f}    {classify_underlying_graph(q)}")

print()
print("positive roots of the linear 3-vertex graph:")
for root in positive_roots(dynkin_quiver("A", 3)):
    print("  ", root)
print("root counts:",
      {f"{fam}{r}": len(positive_roots(dynkin_quiver(fam, r)))
       for fam, r in (("A", 4), ("D", 4), ("D", 5), ("E", 6))})
