"""
Tensor nilpotence and complexity
================================

Over the exterior algebra (f = 0) the scalar chi1 kills bgg(E) after one
tensor power.  Over Lambda(e1, e2) on QQ the residue field has complexity 2.
"""

from kcs.curved import unit_object
from kcs.exact_poly import GradedRing
from kcs.koszul import KoszulData, bgg, koszul_algebra, residue_module
from kcs.support import complexity, tensor_nilpotence_search

Q = GradedRing([])
kd1 = KoszulData(Q, [0])
A = kd1.ring
P = bgg(koszul_algebra(kd1))

alpha = unit_object(A).scalar(A.var("chi1"))
res = tensor_nilpotence_search(alpha, P)
print("exponent:", res.exponent, "witness verifies:", res.verify())

# the identity is never nilpotent; the search stops at the bound
res = tensor_nilpotence_search(unit_object(A).identity(), P, n_max=3)
print("identity found:", res.found, "searched up to", res.bound)

kd2 = KoszulData(Q, [0, 0])
k, E = residue_module(kd2), koszul_algebra(kd2)
print("cx(k, k) =", complexity(k, k))
print("cx(E, k) =", complexity(E, k), " cx(k, E) =", complexity(k, E))
