import random
from math import comb

import pytest

from kcs.errors import DegreeError, InvariantError, ValidationError
from kcs.exact_poly import GradedRing
from kcs.exact_poly.linalg import identity, matmul
from kcs.koszul import (KoszulData, bgg, conjugate, dg_cone_scalar, dg_direct_sum, dg_module,
                        dg_shift, induced_module, koszul_algebra, residue_module)

from corpus import RX, RXY, dg_corpus, random_dg_module, random_koszul

x = RX.var("x")


def test_koszul_data_ring_and_curvature():
    kd = KoszulData(RXY, [RXY.var("x"), RXY.var("y") ** 2])
    assert kd.ring.names == ("x", "y", "chi1", "chi2")
    assert kd.ring.degrees == (0, 0, -2, -2)
    assert str(kd.curvature) == "y^2*chi2 + x*chi1"  # degrevlex, higher total degree first
    with pytest.raises(ValidationError):
        KoszulData(GradedRing([("chi", -2)]), [])


def test_koszul_algebra_shape():
    for n in range(4):
        kd = KoszulData(RX, [x] * n)
        E = koszul_algebra(kd)
        assert E.rank == 2 ** n
        for k in range(n + 1):
            assert E.degrees.count(k) == comb(n, k)


def test_bgg_of_koszul_algebra():
    kd = KoszulData(RX, [x])
    P = bgg(koszul_algebra(kd))
    chi = kd.ring.var("chi1")
    assert P.differential == ((kd.ring.zero(), x.map_to(kd.ring)), (chi, kd.ring.zero()))
    assert P.curvature == x.map_to(kd.ring) * chi
    assert P.degrees == (0, 1)


def test_residue_module_needs_f_zero():
    assert residue_module(KoszulData(RX, [RX.zero()])).rank == 1
    with pytest.raises(InvariantError) as info:
        residue_module(KoszulData(RX, [x]))
    assert info.value.invariant == "leibniz"


def test_invariant_errors_name_the_identity():
    kd = KoszulData(RX, [RX.zero(), RX.zero()])
    z, one = RX.zero(), RX.one()
    e = [[z, z], [one, z]]
    f = [[z, z], [one, z]]
    dg_module(kd, [0, 1], [[z, z], [z, z]], [e, [[z, z], [z, z]]])
    # e1 = e2 with e1^2 != 0 breaks anticommutation
    with pytest.raises(InvariantError) as info:
        dg_module(kd, [0, 1, 2], [[z] * 3] * 3,
                  [[[z, z, z], [one, z, z], [z, one, z]], [[z, z, z], [one, z, z], [z, one, z]]])
    assert info.value.invariant == "anticommute"
    with pytest.raises(InvariantError) as info:
        dg_module(kd, [1, 0, -1], [[z, z, z], [one, z, z], [z, one, z]], [[[z] * 3] * 3] * 2)
    assert info.value.invariant == "d^2=0"
    with pytest.raises(DegreeError):
        dg_module(kd, [0, 0], [[z, z], [z, z]], [f, [[z, z], [z, z]]])


def test_constructions_validate():
    kd = KoszulData(RX, [x])
    E = koszul_algebra(kd)
    for M in (dg_shift(E), dg_direct_sum(E, dg_shift(E)), dg_cone_scalar(E, x + 1),
              induced_module(kd, [1, 0], [[RX.zero(), RX.zero()], [x, RX.zero()]])):
        M.validate()
    g = [[RX.one(), RX.zero()], [RX.zero(), RX.const(2)]]
    g_inv = identity(RX, 2)
    with pytest.raises(ValidationError):
        conjugate(E, g, g_inv)


def test_mismatched_koszul_rejected():
    E1 = koszul_algebra(KoszulData(RX, [x]))
    E2 = koszul_algebra(KoszulData(RX, [x ** 2]))
    with pytest.raises(ValidationError):
        dg_direct_sum(E1, E2)


def test_bgg_squares_to_curvature_on_corpus():
    # independent check: multiply the matrices out, compare with w * Id
    for M in dg_corpus(7, 25):
        P = bgg(M)
        assert matmul(P.differential, P.differential, P.ring) == \
            identity(P.ring, P.rank, M.koszul.curvature)


def test_random_modules_respect_size_bounds():
    rng = random.Random(2)
    for _ in range(20):
        kd = random_koszul(rng)
        M = random_dg_module(rng, kd, max_rank=8)
        assert M.rank <= 8
        assert kd.n <= 3
