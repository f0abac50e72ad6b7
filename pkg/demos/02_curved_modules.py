"""
Curved modules and null-homotopies
==================================

A curved module over A is a graded free module with an odd operator D
whose square is multiplication by the curvature w.
"""

from kcs.curved import (cone, dual, is_zero_object, make_curved, shift, solve_null_homotopy,
                        tensor, unit_object, verify_homotopy)
from kcs.exact_poly import GradedRing

A = GradedRing(["x", ("chi", -2)])
x, chi = A.gens()

# D = [[0, x], [chi, 0]] on generators of degree 0 and 1, so D^2 = x*chi
P = make_curved(A, x * chi, [0, 1], [[0, x], [chi, 0]])
print(P, "curvature", P.curvature)

# x*id_P is null-homotopic; the homotopy is an explicit matrix we can check
f = P.scalar(x)
beta = solve_null_homotopy(f)
print("homotopy for x*id:", [[str(e) for e in row] for row in beta.matrix], "verified:", verify_homotopy(beta, f))

# the identity is not null-homotopic, so P is not zero
print("P is zero:", is_zero_object(P))

# the cone on an identity always is
print("cone(id) is zero:", is_zero_object(cone(unit_object(A).identity())))

# the usual constructions
print(shift(P), dual(P), tensor(P, P))
print("tensor curvature:", tensor(P, P).curvature)
