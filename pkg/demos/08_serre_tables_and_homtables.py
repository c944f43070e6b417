# Closed-form tables and hom-table categories.
#
# Two table families with suspension/Serre parameters: the projective line
# (twist form and Serre form, related by a substitution) and the linear
# two-vertex quiver.  The latter is driven by a one-dimensional hom table
# under index shift, scanned here directly.

from fproot import (FpBudgets, a2_surface, dual_numbers_shift_table,
                    homtable_fp, p1_serre_surface, p1_twist_surface,
                    surface_grid_csv)

print("the Serre table is the twist table after (a, b) -> (a+b, -2b):")
bad = [(a, b) for a in range(-6, 7) for b in range(-6, 7)
       if p1_serre_surface(a, b) != p1_twist_surface(a + b, -2 * b)]
print("  disagreements on the 13x13 window:", bad)

print()
print(surface_grid_csv("p1-serre", radius=4))
print(surface_grid_csv("a2", radius=4))

print("hom-table scan (window -20..20, set sizes up to 5):")
tbl = dual_numbers_shift_table(-20, 20)
for power in range(-3, 5):
    rep = homtable_fp(tbl, power, FpBudgets(max_set_size=5, max_power=1))
    vals = [rep.value(n, 1).value for n in range(1, 6)]
    print(f"  shift power {power:+d}: {vals}")

print()
print("the same reduction identifies the two-vertex table with shift powers:")
print("  fp(1,0) =", a2_surface(1, 0), " matches shift power 3 -> 0")
print("  fp(0,1) =", a2_surface(0, 1), " matches shift power 1 -> 1")
