"""Koszul complexes E on f_1..f_n over R and the curved BGG transform.

A dg E-module that is finite free over R is stored as its R-complex (F, dF)
together with the matrices of the odd generators e_1..e_n.  ``bgg`` sends it to
A (x)_R F with differential dF + sum chi_i e_i, a curved A-module of curvature
w = sum f_i chi_i, where A = R[chi_1..chi_n], |chi_i| = -2.
"""

from itertools import combinations

from .curved import CurvedModule
from .errors import DegreeError, InvariantError, RingMismatchError, ValidationError
from .exact_poly.linalg import (block, first_difference, identity, is_zero_matrix, kron,
                                matadd, matmul, matscale, zeros)


class KoszulData:
    """Base ring R (degree-0 variables only), elements f, and derived (A, w)."""

    def __init__(self, base, f, chi_names=None):
        if any(d != 0 for d in base.degrees):
            raise ValidationError("the base ring may only have degree-0 variables")
        f = tuple(base.coerce(x) for x in f)
        for i, x in enumerate(f):
            if x.ring != base:
                raise RingMismatchError(f"f{i + 1} lives in another ring")
        self.base = base
        self.f = f
        n = len(f)
        if chi_names is None:
            chi_names = [base.fresh_name(f"chi{i + 1}") for i in range(n)]
        if len(chi_names) != n:
            raise ValidationError("need one name per element of f")
        self.chi_names = tuple(chi_names)
        self.ring = base.extend([(c, -2) for c in self.chi_names])
        self.curvature = sum((fi.map_to(self.ring) * self.ring.var(c)
                              for fi, c in zip(f, self.chi_names)), self.ring.zero())

    @property
    def n(self):
        return len(self.f)

    def chis(self):
        return [self.ring.var(c) for c in self.chi_names]

    def __eq__(self, other):
        return (isinstance(other, KoszulData) and self.base == other.base
                and self.f == other.f and self.chi_names == other.chi_names)

    def __hash__(self):
        return hash((self.base, self.f, self.chi_names))

    def __repr__(self):
        return f"KoszulData({self.base!r}; {', '.join(map(str, self.f))})"


def _matrix(ring, M):
    return tuple(tuple(ring.coerce(x) for x in row) for row in M)


class DgEModule:
    """Bounded complex of finite free R-modules with an action of E.

    Invariants (checked exactly): dF^2 = 0, e_i e_j + e_j e_i = 0 for all
    i <= j, and dF e_i + e_i dF = f_i * Id.
    """

    def __init__(self, koszul, degrees, differential, operators, check=True):
        R = koszul.base
        self.koszul = koszul
        self.degrees = tuple(int(d) for d in degrees)
        r = len(self.degrees)
        self.differential = _matrix(R, differential)
        self.operators = tuple(_matrix(R, e) for e in operators)
        if len(self.operators) != koszul.n:
            raise ValidationError(f"need {koszul.n} operators, got {len(self.operators)}")
        for M in (self.differential,) + self.operators:
            if len(M) != r or any(len(row) != r for row in M):
                raise ValidationError(f"matrices must be {r}x{r}")
        if check:
            self.validate()

    @property
    def rank(self):
        return len(self.degrees)

    def validate(self):
        R = self.koszul.base
        self._check_degrees("differential", self.differential, -1)
        for i, e in enumerate(self.operators):
            self._check_degrees(f"e{i + 1}", e, +1)
        dF = self.differential
        bad = first_difference(matmul(dF, dF, R), zeros(R, self.rank, self.rank))
        if bad is not None:
            raise InvariantError(f"dF^2 != 0 at entry {bad}", "d^2=0", bad)
        ops = self.operators
        for i in range(len(ops)):
            for j in range(i, len(ops)):
                ac = matadd(matmul(ops[i], ops[j], R), matmul(ops[j], ops[i], R))
                bad = first_difference(ac, zeros(R, self.rank, self.rank))
                if bad is not None:
                    raise InvariantError(
                        f"anticommutation fails for (e{i + 1}, e{j + 1}) at entry {bad}",
                        "anticommute", (i, j, bad))
        for i, (e, fi) in enumerate(zip(ops, self.koszul.f)):
            lhs = matadd(matmul(dF, e, R), matmul(e, dF, R))
            bad = first_difference(lhs, identity(R, self.rank, fi))
            if bad is not None:
                raise InvariantError(
                    f"d e{i + 1} + e{i + 1} d != f{i + 1}*Id at entry {bad}", "leibniz", (i, bad))

    def _check_degrees(self, name, M, degree):
        # R sits in degree 0, so a nonzero entry forces d_i = d_j + degree
        for i, row in enumerate(M):
            for j, x in enumerate(row):
                if x and self.degrees[i] != self.degrees[j] + degree:
                    raise DegreeError(
                        f"{name} entry ({i},{j}) joins degrees {self.degrees[j]} -> "
                        f"{self.degrees[i]}, expected a change of {degree}", index=(i, j))

    def _key(self):
        return (self.koszul, self.degrees, self.differential, self.operators)

    def __eq__(self, other):
        return isinstance(other, DgEModule) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"DgEModule(rank={self.rank}, degrees={list(self.degrees)})"


def dg_module(koszul, degrees, differential, operators):
    return DgEModule(koszul, degrees, differential, operators)


def _subsets(n):
    return [S for k in range(n + 1) for S in combinations(range(n), k)]


def koszul_algebra(base, f=None):
    """E as a dg module over itself, basis e_S for subsets S in increasing order."""
    koszul = base if isinstance(base, KoszulData) else KoszulData(base, f)
    R, n = koszul.base, koszul.n
    subsets = _subsets(n)
    index = {S: k for k, S in enumerate(subsets)}
    N = len(subsets)
    z = R.zero()
    dF = [[z] * N for _ in range(N)]
    ops = [[[z] * N for _ in range(N)] for _ in range(n)]
    for S in subsets:
        col = index[S]
        for t, i in enumerate(S):
            if koszul.f[i]:
                rest = S[:t] + S[t + 1:]
                dF[index[rest]][col] = koszul.f[i] * (-1) ** t
        for i in range(n):
            if i in S:
                continue
            sign = (-1) ** sum(1 for j in S if j < i)
            T = tuple(sorted(S + (i,)))
            ops[i][index[T]][col] = R.const(sign)
    return DgEModule(koszul, [len(S) for S in subsets], dF, ops)


def residue_module(koszul):
    """R with zero differential and zero e-action; a dg E-module iff f = 0."""
    R = koszul.base
    z = ((R.zero(),),)
    return DgEModule(koszul, (0,), z, [z] * koszul.n)


def dg_shift(M):
    """Suspension: degrees +1, differential -dF, operators -e_i."""
    return DgEModule(M.koszul, [d + 1 for d in M.degrees], matscale(M.differential, -1),
                     [matscale(e, -1) for e in M.operators])


def dg_direct_sum(M, N):
    if M.koszul != N.koszul:
        raise ValidationError("dg modules over different Koszul complexes")
    R = M.koszul.base

    def diag(a, b):
        return block([[a, zeros(R, M.rank, N.rank)], [zeros(R, N.rank, M.rank), b]], R)

    return DgEModule(M.koszul, M.degrees + N.degrees, diag(M.differential, N.differential),
                     [diag(a, b) for a, b in zip(M.operators, N.operators)])


def dg_cone_scalar(M, r):
    """Mapping cone of r*id_M: shift(M) + M, operators diag(-e_i, e_i)."""
    R = M.koszul.base
    r = R.coerce(r)
    if r and r.degree != 0:
        raise DegreeError("the scalar must have degree 0")
    k = M.rank
    dF = block([[matscale(M.differential, -1), zeros(R, k, k)],
                [identity(R, k, r), M.differential]], R)
    ops = [block([[matscale(e, -1), zeros(R, k, k)], [zeros(R, k, k), e]], R)
           for e in M.operators]
    return DgEModule(M.koszul, [d + 1 for d in M.degrees] + list(M.degrees), dF, ops)


def induced_module(koszul, degrees, d):
    """E (x)_R C for a complex of free R-modules (C, d); E acts on the left."""
    R = koszul.base
    C_deg = tuple(degrees)
    d = _matrix(R, d)
    c = len(C_deg)
    if not is_zero_matrix(matmul(d, d, R)):
        raise InvariantError("the complex C does not square to zero", "d^2=0")
    E = koszul_algebra(koszul)
    sign = tuple(tuple(R.const((-1) ** E.degrees[i]) if i == j else R.zero()
                       for j in range(E.rank)) for i in range(E.rank))
    dF = matadd(kron(E.differential, identity(R, c), R), kron(sign, d, R))
    ops = [kron(e, identity(R, c), R) for e in E.operators]
    degs = [a + b for a in E.degrees for b in C_deg]
    return DgEModule(koszul, degs, dF, ops)


def conjugate(M, g, g_inv):
    """The isomorphic module g M g^{-1} (g degree-preserving and invertible over R)."""
    R = M.koszul.base
    g, g_inv = _matrix(R, g), _matrix(R, g_inv)
    if matmul(g, g_inv, R) != identity(R, M.rank):
        raise ValidationError("g_inv is not the inverse of g")

    def conj(X):
        return matmul(matmul(g, X, R), g_inv, R)

    return DgEModule(M.koszul, M.degrees, conj(M.differential), [conj(e) for e in M.operators])


def bgg(M):
    """The curved module A (x)_R F with D = dF + sum_i chi_i e_i, curvature w."""
    kd = M.koszul
    A = kd.ring
    D = tuple(tuple(x.map_to(A) for x in row) for row in M.differential)
    for chi, e in zip(kd.chis(), M.operators):
        D = matadd(D, tuple(tuple(x.map_to(A) * chi for x in row) for row in e))
    return CurvedModule(A, kd.curvature, M.degrees, D)

