# Bound quiver algebras: path bases, projectives, minimal resolutions, Ext.
#
# The showcase algebra is five dimensional: two vertices, one arrow one way,
# two arrows back, all compositions zero.  Its simples have periodic-doubling
# resolutions, which is what later produces an irrational fp dimension.

from fproot import (dual_numbers_algebra, ext, ext_simple_table,
                    local_two_loop_algebra, minimal_resolution, opposite,
                    projective, simple, simples, sqrt2_algebra)

alg = sqrt2_algebra()
print("basis of the glued algebra:", [str(p) for p in alg.basis])
print("dimension:", alg.dim)

for v in alg.quiver.vertices:
    p = projective(alg, v)
    print(f"P{v} has dimension vector {p.dimvec}")

print()
s1 = simple(alg, "1")
res = minimal_resolution(s1, 8)
print("minimal resolution of S1, projective multiplicities per step:")
print("  ", [res.multiplicities(i) for i in range(9)])

print()
print("Ext table (rows: degree 0..8):")
t = ext_simple_table(alg, 8)
for pair in (("1", "1"), ("1", "2"), ("2", "1"), ("2", "2")):
    print(f"  Ext^i(S{pair[0]}, S{pair[1]}) =", t[pair])

print()
print("== other algebras ==")
d = dual_numbers_algebra()
print("dual numbers: dim", d.dim, "and Ext^i(S,S) =",
      [ext(i, simple(d, "1"), simple(d, "1")) for i in range(6)],
      "(periodic resolution)")

a23 = local_two_loop_algebra(2, 3)
print("two truncated loops with one mixed product killed: dim", a23.dim)
print("its opposite has dim", opposite(a23).dim, "(the roles of the loops swap)")
