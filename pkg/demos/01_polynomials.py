"""
Exact graded polynomials and Groebner bases
===========================================

The ring QQ[x, y][chi] puts x, y in degree 0 and chi in degree -2.
Everything is exact: coefficients are Fractions.
"""

from kcs.exact_poly import GradedRing, Ideal, hilbert_series, radical_member, saturation

R = GradedRing(["x", "y", ("chi", -2)])
x, y, chi = R.gens()

# generators must be homogeneous; x*chi and y^2*chi both sit in degree -2
I = Ideal(R, [x * chi, y ** 2 * chi, x * y])
print("ideal:", I)
print("reduced Groebner basis:", list(I.groebner()))

# membership, radical membership and saturation
print("x*y^2*chi in I:", I.contains(x * y ** 2 * chi))
print("y*chi in rad(I):", radical_member(y * chi, I))
print("I : chi^oo =", saturation(I, chi))

# Hilbert series of QQ[chi] / (chi^3): a polynomial, so no pole at t = 1
S = GradedRing([("chi", -2)])
H = hilbert_series(S, [0], [[S.var("chi") ** 3]])
print("Hilbert series:", H, " pole order:", H.pole_order())
