"""Perfect curved dg modules over a graded polynomial ring A.

A curved module is a free graded A-module with basis g_1..g_r in degrees
d_1..d_r and a degree -1 differential D (column j is the image of g_j) with
D^2 = w*Id.  A is concentrated in even degrees, so every sign is a parity of
generator degrees.
"""

from functools import lru_cache

from .errors import CurvatureError, DegreeError, NotACycleError, RingMismatchError, ValidationError
from .exact_poly import FreeModuleMap, Submodule, kernel_generators, Locus
from .exact_poly.linalg import (block, first_difference, identity, is_zero_matrix, kron,
                                matadd, matmul, matscale, zeros)


def _sign(d):
    return -1 if d % 2 else 1


def _check_homogeneous(ring, src, tgt, M, degree):
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            if x and x.homogeneous_degrees() != {src[j] + degree - tgt[i]}:
                raise DegreeError(
                    f"entry ({i},{j}) = {x} is not homogeneous of degree "
                    f"{src[j] + degree - tgt[i]}", index=(i, j))


class CurvedModule:
    """(A(d_1..d_r), D) with D^2 = curvature * Id, checked on construction."""

    __slots__ = ("ring", "curvature", "degrees", "differential", "_hash")

    def __init__(self, ring, curvature, degrees, differential, check=True):
        self.ring = ring
        self.curvature = ring.coerce(curvature)
        self.degrees = tuple(int(d) for d in degrees)
        r = len(self.degrees)
        D = tuple(tuple(ring.coerce(x) for x in row) for row in differential)
        if len(D) != r or any(len(row) != r for row in D):
            raise ValidationError(f"differential must be {r}x{r}")
        self.differential = D
        self._hash = None
        if check:
            self.validate()

    def validate(self):
        w = self.curvature
        if w and w.homogeneous_degrees() != {-2}:
            raise DegreeError(f"curvature {w} must be homogeneous of degree -2")
        _check_homogeneous(self.ring, self.degrees, self.degrees, self.differential, -1)
        D2 = matmul(self.differential, self.differential, self.ring)
        target = identity(self.ring, self.rank, w)
        bad = first_difference(D2, target)
        if bad is not None:
            i, j = bad
            raise CurvatureError(
                f"D^2 - w*Id is nonzero at entry ({i},{j}): "
                f"{D2[i][j] - target[i][j]}", index=bad)

    @property
    def rank(self):
        return len(self.degrees)

    def differential_map(self):
        return FreeModuleMap(self.ring, self.degrees, self.degrees, self.differential,
                             degree=-1, check=False)

    def identity(self):
        return CurvedMorphism(self, self, 0, identity(self.ring, self.rank), check=False)

    def scalar(self, a):
        """The endomorphism a*id, of degree |a|."""
        a = self.ring.coerce(a)
        deg = a.degree if a else 0
        return CurvedMorphism(self, self, deg, identity(self.ring, self.rank, a))

    def _key(self):
        return (self.ring, self.curvature, self.degrees, self.differential)

    def __eq__(self, other):
        return isinstance(other, CurvedModule) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        rows = "; ".join(", ".join(str(x) for x in row) for row in self.differential)
        return f"CurvedModule(w={self.curvature}, degrees={list(self.degrees)}, D=[{rows}])"


def make_curved(ring, w, degrees, D):
    return CurvedModule(ring, w, degrees, D)


def unit_object(ring):
    """A itself: one generator in degree 0, zero differential, curvature 0."""
    return CurvedModule(ring, ring.zero(), (0,), ((ring.zero(),),))


def _same_ring(P, Q):
    if P.ring != Q.ring:
        raise RingMismatchError(f"{P.ring!r} vs {Q.ring!r}")


def _same_curvature(P, Q):
    _same_ring(P, Q)
    if P.curvature != Q.curvature:
        raise CurvatureError(f"curvatures differ: {P.curvature} vs {Q.curvature}")


class CurvedMorphism:
    """Homogeneous A-linear map of degree k between curved modules, as a matrix.

    The Hom differential is ``D' F - (-1)^k F D``; a cycle is a map it kills.
    """

    __slots__ = ("source", "target", "degree", "matrix")

    def __init__(self, source, target, degree, matrix, check=True):
        _same_curvature(source, target)
        ring = source.ring
        M = tuple(tuple(ring.coerce(x) for x in row) for row in matrix)
        if len(M) != target.rank or any(len(row) != source.rank for row in M):
            raise ValidationError(f"matrix must be {target.rank}x{source.rank}")
        self.source, self.target, self.degree, self.matrix = source, target, int(degree), M
        if check:
            _check_homogeneous(ring, source.degrees, target.degrees, M, self.degree)

    @property
    def ring(self):
        return self.source.ring

    def boundary(self):
        """Matrix of d(f) = D' F - (-1)^k F D."""
        ring = self.ring
        left = matmul(self.target.differential, self.matrix, ring)
        right = matmul(self.matrix, self.source.differential, ring)
        return matadd(left, matscale(right, -_sign(self.degree)))

    def boundary_map(self):
        """d(f) as a morphism of degree k - 1."""
        return CurvedMorphism(self.source, self.target, self.degree - 1, self.boundary(),
                              check=False)

    def is_cycle(self):
        return is_zero_matrix(self.boundary())

    def compose(self, other):
        """self o other (other first)."""
        if other.target != self.source:
            raise ValidationError("morphisms are not composable")
        return CurvedMorphism(other.source, self.target, self.degree + other.degree,
                              matmul(self.matrix, other.matrix, self.ring), check=False)

    def vec(self):
        """Coordinates in the basis e_{ki} of hom_complex(source, target)."""
        return tuple(x for row in self.matrix for x in row)

    def is_zero(self):
        return is_zero_matrix(self.matrix)

    def __eq__(self, other):
        return (isinstance(other, CurvedMorphism) and self.source == other.source
                and self.target == other.target and self.degree == other.degree
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.source, self.target, self.degree, self.matrix))

    def __repr__(self):
        rows = "; ".join(", ".join(str(x) for x in row) for row in self.matrix)
        return f"CurvedMorphism(degree={self.degree}, [{rows}])"


def shift(P, times=1):
    """Suspension: degrees +1 and differential -D (times may be negative)."""
    D = P.differential if times % 2 == 0 else matscale(P.differential, -1)
    return CurvedModule(P.ring, P.curvature, [d + times for d in P.degrees], D)


def direct_sum(P, Q):
    _same_curvature(P, Q)
    ring = P.ring
    D = block([[P.differential, zeros(ring, P.rank, Q.rank)],
               [zeros(ring, Q.rank, P.rank), Q.differential]], ring) if P.rank and Q.rank \
        else (P.differential or Q.differential)
    return CurvedModule(ring, P.curvature, P.degrees + Q.degrees, D)


def cone(f):
    """cone(f) = shift(source) + target with differential [[-D_s, 0], [F, D_t]]."""
    if f.degree != 0 or not f.is_cycle():
        raise NotACycleError("cone needs a degree-0 cycle")
    P, Q = f.source, f.target
    ring = P.ring
    D = block([[matscale(P.differential, -1), zeros(ring, P.rank, Q.rank)],
               [f.matrix, Q.differential]], ring)
    return CurvedModule(ring, P.curvature, [d + 1 for d in P.degrees] + list(Q.degrees), D)


def _parity_sign_matrix(P):
    ring = P.ring
    z = ring.zero()
    return tuple(tuple(ring.const(_sign(d)) if i == j else z for j in range(P.rank))
                 for i, d in enumerate(P.degrees))


def tensor(P, Q):
    """P (x) Q with generators g_i (x) g'_k at index i*rank(Q) + k.

    d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy, i.e. D (x) Id + S (x) D'.
    """
    _same_ring(P, Q)
    ring = P.ring
    D = matadd(kron(P.differential, identity(ring, Q.rank), ring),
               kron(_parity_sign_matrix(P), Q.differential, ring))
    degrees = [a + b for a in P.degrees for b in Q.degrees]
    return CurvedModule(ring, P.curvature + Q.curvature, degrees, D)


def tensor_morphisms(f, g):
    """(f (x) g)(x (x) y) = (-1)^{|g||x|} f(x) (x) g(y)."""
    _same_ring(f.source, g.source)
    ring = f.ring
    src = tensor(f.source, g.source)
    tgt = tensor(f.target, g.target)
    M = kron(f.matrix, g.matrix, ring)
    if g.degree % 2:
        rb = g.source.rank
        M = tuple(tuple(x * _sign(f.source.degrees[c // rb]) for c, x in enumerate(row))
                  for row in M)
    return CurvedMorphism(src, tgt, f.degree + g.degree, M, check=False)


def hom_complex(P, Q):
    """Hom_A(P, Q) as a curved module of curvature w_Q - w_P.

    Basis e_{ki} (g_i -> g'_k) at index k*rank(P) + i, degree d'_k - d_i.
    """
    _same_ring(P, Q)
    ring = P.ring
    r, s = P.rank, Q.rank
    N = r * s
    z = ring.zero()
    H = [[z] * N for _ in range(N)]
    DP, DQ = P.differential, Q.differential
    for k in range(s):
        for i in range(r):
            col = k * r + i
            sgn = -_sign(Q.degrees[k] - P.degrees[i])
            for l in range(s):
                if DQ[l][k]:
                    H[l * r + i][col] = H[l * r + i][col] + DQ[l][k]
            for j in range(r):
                if DP[i][j]:
                    H[k * r + j][col] = H[k * r + j][col] + DP[i][j] * sgn
    degrees = [Q.degrees[k] - P.degrees[i] for k in range(s) for i in range(r)]
    return CurvedModule(ring, Q.curvature - P.curvature, degrees, H)


def morphism_from_vec(P, Q, degree, vec):
    r = P.rank
    rows = [tuple(vec[k * r:(k + 1) * r]) for k in range(Q.rank)]
    return CurvedMorphism(P, Q, degree, rows, check=False)


def dual(P):
    """P^v = Hom_A(P, A): degrees -d_i, entries D^v_{ji} = -(-1)^{d_i} D_{ij}."""
    ring = P.ring
    r = P.rank
    D = [[ring.zero()] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            if P.differential[i][j]:
                D[j][i] = P.differential[i][j] * (-_sign(P.degrees[i]))
    return CurvedModule(ring, -P.curvature, [-d for d in P.degrees], D)


@lru_cache(maxsize=256)
def _boundary_span(P, Q):
    H = hom_complex(P, Q)
    return H, Submodule(P.ring, H.degrees, FreeModuleMap(
        P.ring, H.degrees, H.degrees, H.differential, -1, check=False).columns())


def solve_null_homotopy(f):
    """A degree k+1 map b with d(b) = f, or None when f is not a boundary."""
    if not f.is_cycle():
        raise NotACycleError("solve_null_homotopy needs a cycle")
    P, Q = f.source, f.target
    if f.is_zero():
        return CurvedMorphism(P, Q, f.degree + 1, zeros(P.ring, Q.rank, P.rank), check=False)
    H, span = _boundary_span(P, Q)
    coeffs = span.lift(f.vec())
    if coeffs is None:
        return None
    want = f.degree + 1
    coeffs = [c.homogeneous_part(want - d) for c, d in zip(coeffs, H.degrees)]
    beta = morphism_from_vec(P, Q, want, coeffs)
    if beta.boundary() != f.matrix:
        raise AssertionError("null-homotopy witness failed verification")
    return beta


def verify_homotopy(beta, f):
    """Exact check that d(beta) equals f."""
    return beta.degree == f.degree + 1 and beta.boundary() == f.matrix


def is_zero_object(P):
    return solve_null_homotopy(P.identity()) is not None


class HomologyPresentation:
    """H(Hom_A(P, Q)) = cycles / boundaries inside the free module Hom_A(P, Q)."""

    def __init__(self, ring, degrees, cycles, boundaries):
        self.ring = ring
        self.degrees = tuple(degrees)
        self.cycles = tuple(cycles)
        self.boundaries = boundaries

    def annihilator(self, index):
        return self.boundaries.quotient(self.cycles[index])

    def cycle_annihilators(self):
        return [self.annihilator(i) for i in range(len(self.cycles))]

    def support(self):
        """Union over cycle generators of V(boundaries : k_i); empty and repeated parts dropped."""
        comps, seen = [], set()
        for I in self.cycle_annihilators():
            key = tuple(sorted(str(g) for g in I.groebner()))
            if not I.is_unit() and key not in seen:
                seen.add(key)
                comps.append(I)
        return Locus(comps, self.ring)

    def is_zero(self):
        return all(self.boundaries.contains(k) for k in self.cycles)

    def verify(self, differential):
        D = FreeModuleMap(self.ring, self.degrees, self.degrees, differential, -1, check=False)
        cycles_ok = all(not any(D.apply(k)) for k in self.cycles)
        Z = Submodule(self.ring, self.degrees, self.cycles)
        return cycles_ok and all(Z.contains(b) for b in self.boundaries.generators)

    def hilbert_series(self):
        from .exact_poly import hilbert_series
        return hilbert_series(self.ring, self.degrees, self.boundaries,
                              Submodule(self.ring, self.degrees, self.cycles))


def homology_presentation(P, Q):
    if P.curvature != Q.curvature:
        raise CurvatureError("Hom complex is curved; homology is undefined")
    H, span = _boundary_span(P, Q)
    cycles = kernel_generators(H.differential_map())
    return HomologyPresentation(P.ring, H.degrees, cycles, span)
