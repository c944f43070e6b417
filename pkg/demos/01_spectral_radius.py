# Spectral radii, exact and extended.
#
# The library computes Perron roots two ways: a certified path for small
# matrices (exact characteristic polynomial, Sturm isolation) and a LAPACK
# path with a declared 1e-9 tolerance.  Matrices may also carry +inf / -inf
# entries; those reduce over strongly connected components of the support.

import math

from fproot import (ExtendedMatrix, RatMatrix, characteristic_polynomial,
                    matrix_from_json, rho, rho_block_lower_triangular,
                    rho_extended, zplus_fpdim)

print("== certified Perron roots ==")
m = [[0, 2], [1, 0]]
r = rho(m)
print(f"rho({m}) = {r.value}  (certified={r.certified})")
print("char poly:", characteristic_polynomial(RatMatrix(m)))
print("against math.sqrt(2):", r.value - math.sqrt(2))

print()
print("== infinite entries ==")
a = ExtendedMatrix([[1, -math.inf], [0, 2]])
print("upper -inf never feeds a cycle:", rho_extended(a))
print("a +inf loop blows up:         ", rho_extended(ExtendedMatrix([[math.inf]])))
print("nilpotent support stays at 0: ",
      rho_extended(ExtendedMatrix([[0, math.inf], [0, 0]])))

print()
print("== block lower triangular ==")
blocks = [[[2]], [[0, 1], [1, 0]], [[3]]]
print("max over blocks:", rho_block_lower_triangular(blocks).value)

print()
print("== multiplication matrices of based rings ==")
print("swap basis elements -> 1:   ", zplus_fpdim([[0, 1], [1, 0]]).value)
print("all-ones 2x2 -> 2:          ", zplus_fpdim([[1, 1], [1, 1]]).value)

print()
print("== the JSON matrix format ==")
m = matrix_from_json('[["1/2", "inf"], [0, "3/4"]]')
print("parsed entries:", m.entries)
