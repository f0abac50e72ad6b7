import random

import pytest

from kcs.curved import (CurvedModule, CurvedMorphism, cone, direct_sum, dual, hom_complex,
                        homology_presentation, is_zero_object, make_curved, morphism_from_vec,
                        shift, solve_null_homotopy, tensor, tensor_morphisms, unit_object,
                        verify_homotopy)
from kcs.errors import CurvatureError, DegreeError, NotACycleError, RingMismatchError
from kcs.exact_poly import GradedRing
from kcs.exact_poly.linalg import identity, matmul

from corpus import fixed_curved_examples, random_block, small_curved_corpus
from oracles import null_homotopy_exists

A = GradedRing(["x", ("chi", -2)])
X, CHI = A.gens()
A1 = GradedRing(["x", ("chi1", -2)])


def square_is_curvature(P):
    return matmul(P.differential, P.differential, P.ring) == identity(P.ring, P.rank, P.curvature)


def mf_block():
    z = A.zero()
    return make_curved(A, X * CHI, [0, 1], [[z, X], [CHI, z]])


def test_make_curved_validates():
    P = mf_block()
    assert square_is_curvature(P)
    z = A.zero()
    with pytest.raises(CurvatureError):
        make_curved(A, X ** 2 * CHI, [0, 1], [[z, X], [CHI, z]])
    # x sends g_1 (degree 1) to g_0: fine; chi there would have degree -2
    assert make_curved(A, z, [0, 1], [[z, X], [z, z]]).rank == 2
    with pytest.raises(DegreeError):
        make_curved(A, z, [0, 1], [[z, CHI], [z, z]])
    with pytest.raises(DegreeError):
        make_curved(A, X + CHI, [0], [[z]])


def test_constructions_are_valid():
    P = mf_block()
    Q = unit_object(A)
    for M in (shift(P), shift(P, 2), direct_sum(P, shift(P)), tensor(P, Q), tensor(P, P),
              dual(P), cone(P.identity()), hom_complex(P, P)):
        assert square_is_curvature(M)
    assert tensor(P, P).curvature == 2 * X * CHI
    assert dual(P).curvature == -X * CHI
    assert hom_complex(P, P).curvature == 0
    assert tensor(unit_object(A), P) == P
    assert tensor(P, unit_object(A)) == P


def test_curvature_mismatch_errors():
    P = mf_block()
    with pytest.raises(CurvatureError):
        direct_sum(P, unit_object(A))
    with pytest.raises(RingMismatchError):
        tensor(P, unit_object(A1))


def test_morphism_boundary_squares_to_zero():
    P = mf_block()
    z, one = A.zero(), A.one()
    H = hom_complex(P, P)
    rng = random.Random(3)
    for _ in range(10):
        # random degree-1 maps: only the (1,0) entry may be nonzero, of degree 0
        c = rng.choice([one, X, X ** 2 - 3, z])
        beta = CurvedMorphism(P, P, 1, [[z, z], [c, z]])
        assert beta.boundary_map().boundary_map().is_zero()
        assert morphism_from_vec(P, P, 1, beta.vec()) == beta
    f = CurvedMorphism(P, P, 0, [[X, z], [z, X]])
    assert f.is_cycle()
    assert H.rank == 4


def test_leibniz_for_composition():
    P = mf_block()
    z, one = A.zero(), A.one()
    f = CurvedMorphism(P, P, 1, [[z, z], [one, z]])
    g = CurvedMorphism(P, P, -1, [[z, X], [CHI, z]])
    lhs = g.compose(f).boundary_map()
    rhs_a = g.boundary_map().compose(f)
    rhs_b = g.compose(f.boundary_map())
    sign = -1 if g.degree % 2 else 1
    total = [[a + sign * b for a, b in zip(r1, r2)] for r1, r2 in zip(rhs_a.matrix, rhs_b.matrix)]
    assert [list(r) for r in lhs.matrix] == total


def test_null_homotopy_examples():
    C = cone(unit_object(A).identity())
    beta = solve_null_homotopy(C.identity())
    assert beta is not None and verify_homotopy(beta, C.identity())
    assert is_zero_object(C)
    assert solve_null_homotopy(unit_object(A).identity()) is None
    assert not is_zero_object(unit_object(A))
    P = mf_block()
    for a in (X, CHI):
        beta = solve_null_homotopy(P.scalar(a))
        assert beta is not None and verify_homotopy(beta, P.scalar(a))
    assert solve_null_homotopy(P.identity()) is None
    with pytest.raises(NotACycleError):
        solve_null_homotopy(CurvedMorphism(P, P, 1, [[A.zero(), A.zero()], [A.one(), A.zero()]]))


def test_null_homotopy_agrees_with_linear_algebra_oracle():
    # the oracle searches homotopies with entries of bounded degree
    for P in fixed_curved_examples()[:6]:
        for a in P.ring.gens()[:2] + [P.ring.one()]:
            f = P.scalar(a)
            mine = solve_null_homotopy(f) is not None
            assert mine == null_homotopy_exists(f, max_poly_degree=2), (P, a)


def test_tensor_of_cycles_is_cycle():
    rng = random.Random(11)
    for _ in range(5):
        P, Q = random_block(rng, A1), random_block(rng, A1)
        f = P.scalar(A1.var("x"))
        g = Q.scalar(A1.var("chi1"))
        h = tensor_morphisms(f, g)
        assert h.is_cycle()
        assert h.source == tensor(P, Q)


def test_homology_presentation_verifies():
    for P in small_curved_corpus(5, 4) + fixed_curved_examples()[:4]:
        Q = P
        H = homology_presentation(P, Q)
        assert H.verify(hom_complex(P, Q).differential)


def test_cone_of_unit_identity_is_zero_but_cone_of_zero_is_not():
    U = unit_object(A)
    z = CurvedMorphism(U, U, 0, [[A.zero()]])
    assert not is_zero_object(cone(z))


def test_equality_and_hash():
    assert mf_block() == mf_block()
    assert hash(mf_block()) == hash(mf_block())
    assert mf_block() != shift(mf_block())
    assert isinstance(mf_block(), CurvedModule)
