"""
Waring rank of binary forms, step by step
=========================================

A degree-d binary form is a sum of r d-th powers of linear forms; the least
such r is its rank.  Everything below is exact rational arithmetic.
"""

from rankloci import BinaryForm, binary_rank, gcd_binary, squarefree_decompose
from rankloci.apolarity import apolar_theta, power_sum_binary

# The workhorse: homogeneous gcds that see the roots at [1:0] and [0:1].
f = BinaryForm.monomial(3, 1)          # s^2 t
g = BinaryForm.monomial(3, 2)          # s t^2
print("gcd(s^2 t, s t^2) =", gcd_binary(f, g))

dec = squarefree_decompose(BinaryForm([1, -1]) * BinaryForm([1, -1]) * BinaryForm([1, 1]))
print("(s-t)^2 (s+t) splits as", [(str(e), j) for e, j in dec.parts])

# Sylvester's method: the first catalecticant kernel gives the minimal
# annihilator Theta; distinct roots of Theta mean rank = deg Theta, a
# repeated root pushes the rank up to d + 2 - deg Theta.
F = BinaryForm.monomial(5, 1)          # x^4 y
r, theta, kdim = apolar_theta(F)
print("\nx^4 y: border rank", r, "with annihilator", theta)
report = binary_rank(F)
print("rank:", report.rank, "  stratum:", report.locus_label)

# A three-term power sum of degree 7 comes back with rank exactly 3.
F = power_sum_binary([(1, 1, 0), (1, 1, 2), (1, 1, -1)], 7)
report = binary_rank(F)
print("\n(x)^7 + (x+2y)^7 + (x-y)^7:")
print("rank:", report.rank, " border rank:", report.border_rank,
      " generic rank for d=7:", report.generic_rank)

# Walking down the monomial strata x^a y^b: rank is max(a, b) + 1.
print("\nmonomial strata of degree 6:")
for b in range(1, 3):
    rep = binary_rank(BinaryForm.monomial(6, b))
    print(f"  x^{6-b} y^{b}: rank {rep.rank:>2}  {rep.locus_label}")
