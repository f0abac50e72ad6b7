"""Seeded random generators for valid dg E-modules and curved modules."""

import random

from kcs.curved import cone, direct_sum, shift, tensor, unit_object
from kcs.exact_poly import GradedRing
from kcs.koszul import (KoszulData, bgg, conjugate, dg_cone_scalar, dg_direct_sum, dg_module,
                        dg_shift, induced_module, koszul_algebra, residue_module)
from kcs.support import koszul_block, square_witness

RX = GradedRing(["x"])
RXY = GradedRing(["x", "y"])


def random_poly(rng, ring, max_degree=2, zero_ok=True):
    """Small random polynomial in the degree-0 variables of ``ring``."""
    names = [n for n, d in ring.variables if d == 0]
    while True:
        p = ring.zero()
        for _ in range(rng.randint(1, 3)):
            c = rng.choice([-2, -1, 1, 1, 2, 3])
            m = ring.const(c)
            for _ in range(rng.randint(0, max_degree)):
                if names:
                    m = m * ring.var(rng.choice(names))
            p = p + m
        if p or zero_ok:
            return p


def random_koszul(rng, n_max=3, base=None):
    R = base or rng.choice([RX, RXY])
    n = rng.randint(1, n_max)
    f = [random_poly(rng, R) if rng.random() < 0.8 else R.zero() for _ in range(n)]
    return KoszulData(R, f)


def _complex(rng, R):
    """A small complex of free R-modules: R itself or K(g) = (R --g--> R)."""
    if rng.random() < 0.5:
        return [0], [[R.zero()]]
    g = random_poly(rng, R, zero_ok=False)
    return [1, 0], [[R.zero(), R.zero()], [g, R.zero()]]


def _unipotent(rng, M):
    """g = I + c*E_ij with d_i = d_j, i != j (so g^-1 = I - c*E_ij), or None."""
    R = M.koszul.base
    pairs = [(i, j) for i in range(M.rank) for j in range(M.rank)
             if i != j and M.degrees[i] == M.degrees[j]]
    if not pairs:
        return None
    i, j = rng.choice(pairs)
    c = random_poly(rng, R, max_degree=1, zero_ok=False)
    g = [[R.one() if a == b else R.zero() for b in range(M.rank)] for a in range(M.rank)]
    h = [row[:] for row in g]
    g[i][j], h[i][j] = c, -c
    return g, h


def random_dg_module(rng, kd, max_rank=8):
    """A validated dg module: E (x) C, possibly coned and conjugated."""
    R = kd.base
    while True:
        degrees, d = _complex(rng, R)
        M = induced_module(kd, degrees, d)
        if M.rank > max_rank:
            M = koszul_algebra(kd)
        if M.rank * 2 <= max_rank and rng.random() < 0.3:
            M = dg_cone_scalar(M, random_poly(rng, R, max_degree=1))
        if rng.random() < 0.5:
            u = _unipotent(rng, M)
            if u:
                M = conjugate(M, *u)
        if M.rank <= max_rank:
            return M


def dg_corpus(seed, count, n_max=3, max_rank=8):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kd = random_koszul(rng, n_max)
        if 2 ** kd.n > max_rank:
            continue
        out.append(random_dg_module(rng, kd, max_rank))
    return out


def small_curved_corpus(seed, count):
    """Modules of rank <= 4 over Q[x][chi1] or Q[x,y][chi1] for support tests."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kd = random_koszul(rng, n_max=1)
        M = random_dg_module(rng, kd, max_rank=4)
        out.append(bgg(M))
    return out


def random_block(rng, A):
    """Rank-2 curved module over A = R[chi1]: a matrix-factorization square or K(x)."""
    chi = A.var("chi1")
    base = GradedRing([(n, d) for n, d in A.variables if d == 0])
    a = random_poly(rng, base, max_degree=1, zero_ok=False).map_to(A)
    b = random_poly(rng, base, max_degree=1, zero_ok=False).map_to(A)
    kind = rng.randrange(3)
    if kind == 0:
        return square_witness([a], [b * chi])
    if kind == 1:
        return square_witness([a * chi], [b])
    return koszul_block(rng.choice([a, chi, a * chi]))


def fixed_curved_examples():
    """Hand-picked curved modules covering the edge cases of the support tests."""
    kd = KoszulData(RX, [RX.var("x")])
    A = kd.ring
    x, chi = A.gens()
    E = bgg(koszul_algebra(kd))
    kd0 = KoszulData(RX, [RX.zero()])
    A0 = kd0.ring
    out = [
        E,
        shift(E),
        direct_sum(E, shift(E)),
        square_witness([x], [x * chi]),
        koszul_block(x),
        unit_object(A),
        cone(unit_object(A).identity()),
        bgg(residue_module(kd0)),
        bgg(koszul_algebra(kd0)),
        tensor(koszul_block(A0.var("x")), bgg(koszul_algebra(kd0))),
    ]
    return out


def exterior_pool(seed, count):
    """dg modules over E = Lambda(e1, e2) on QQ (f = 0).

    Besides k and E: L_c = Lambda(e1) with e2 acting as c*e1, whose
    cohomological support is a line, plus sums and shifts of these.
    """
    Q = GradedRing([])
    kd = KoszulData(Q, [Q.zero(), Q.zero()])
    z, one = Q.zero(), Q.one()

    def line(c):
        e1 = [[z, z], [one, z]]
        e2 = [[z, z], [Q.const(c), z]]
        return dg_module(kd, [0, 1], [[z, z], [z, z]], [e1, e2])

    rng = random.Random(seed)
    base = [residue_module(kd), koszul_algebra(kd)] + [line(c) for c in (0, 1, -2, 3)]
    out = []
    while len(out) < count:
        M = rng.choice(base)
        r = rng.random()
        if r < 0.3:
            M = dg_direct_sum(M, rng.choice(base))
        elif r < 0.5:
            M = dg_shift(M)
        out.append(M)
    return kd, out
