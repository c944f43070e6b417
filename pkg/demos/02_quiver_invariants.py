# Quivers: adjacency, fp dimension, cycle numbers, the trichotomy.
#
# fpdim of a quiver is the Perron root of its arrow-count matrix.  The cycle
# number counts first-return cycles per vertex, saturated at 2, and the two
# invariants are locked together: radius 0 <-> no cycles, radius 1 <-> every
# vertex sees at most one cycle, radius > 1 <-> two cycles interact.

from fproot import (Quiver, adjacency, cycle_number, cycle_quiver,
                    fpdim_trichotomy_check, kronecker_quiver, path_quiver,
                    quiver_fpdim, quiver_to_dot, simple_cycles)

examples = {
    "path on 4 vertices": path_quiver(4),
    "oriented 5-cycle": cycle_quiver(5),
    "Kronecker quiver": kronecker_quiver(),
    "two loops on one vertex": Quiver(["v"], [("l1", "v", "v"),
                                              ("l2", "v", "v")]),
    "figure eight": Quiver(["u", "v"], [("p", "u", "v"), ("q", "v", "u"),
                                        ("r", "v", "v")]),
}

for name, q in examples.items():
    cn = cycle_number(q)
    rep = fpdim_trichotomy_check(q)
    print(f"{name:26s} fpdim = {rep.fpdim.value:8.5f}   "
          f"theta = {cn.describe():>3s}   consistent = {rep.consistent}")

print()
print("adjacency of the Kronecker quiver:", adjacency(kronecker_quiver()).to_lists())
print("simple cycles of the figure eight:",
      [[a.label for a in c] for c in simple_cycles(examples["figure eight"])])

print()
print(quiver_to_dot(kronecker_quiver()))
