"""
From dg modules over a Koszul complex to supports
=================================================

E is the Koszul complex on f = x over QQ[x].  Its curved BGG image lives
over A = QQ[x][chi1] with curvature x*chi1.
"""

from kcs.exact_poly import GradedRing, Ideal
from kcs.koszul import KoszulData, bgg, dg_cone_scalar, koszul_algebra
from kcs.support import (cohomological_support, koszul_cut, supp_global, supp_point,
                         supp_total, support, thick_member)

R = GradedRing(["x"])
kd = KoszulData(R, [R.var("x")])
A = kd.ring
x, chi = A.gens()

E = koszul_algebra(kd)
P = bgg(E)
print("bgg(E) differential:", [[str(e) for e in row] for row in P.differential])

# the support is computed from the annihilator of id, with homotopy witnesses
cert = supp_global(P)
print("annihilator:", cert.annihilator, "certificate verifies:", cert.verify())
print("support:", support(P))

# pointwise: the fiber at p is nonzero only at the closed point (x, chi1)
for gens in ([x, chi], [x], [x - 1, chi]):
    print("  p =", Ideal(A, gens), "->", supp_point(P, Ideal(A, gens)))

# the same locus from the homology of Hom(P, P)
print("cohomological support:", cohomological_support(E, E))

# total support of the curvature: the Jacobian locus
print("supp_total(A, x*chi1):", supp_total(A, x * chi))
print("supp_total(A, x^2*chi1):", supp_total(A, x ** 2 * chi))

# cutting bgg(E) down to a closed set, and thick membership
K = koszul_cut([x, chi], P)
print("support of the Koszul cut:", support(K))
print("cut in thick(bgg E):", thick_member(K, P))
C = bgg(dg_cone_scalar(E, 1))
print("acyclic cone has support:", support(C))
