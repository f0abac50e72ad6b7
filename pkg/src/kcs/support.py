"""Supports of curved modules and the decision procedures built on them.

The support of P is V(ann), where ann = {a : a*id_P is null-homotopic}; it is
computed as the module quotient (boundaries of Hom(P, P)) : vec(id_P).
"""

from dataclasses import dataclass, field

from .curved import (CurvedModule, CurvedMorphism, _boundary_span, homology_presentation,
                     solve_null_homotopy, tensor, tensor_morphisms, unit_object,
                     verify_homotopy)
from .errors import (CurvatureError, DegreeError, NotACycleError, RingMismatchError,
                     UnsupportedError, ValidationError)
from .exact_poly import Ideal, Locus, locus_contained, rank_over_domain
from .exact_poly.linalg import block, first_difference, identity, matmul, zeros
from .koszul import KoszulData, bgg

DEFAULT_NILPOTENCE_CAP = 6


@dataclass
class SupportCertificate:
    """ann(P) together with, for each generator a, a homotopy b with d(b) = a*id."""

    subject: CurvedModule
    annihilator: Ideal
    witnesses: list = field(default_factory=list)   # (generator, CurvedMorphism)

    @property
    def locus(self):
        return Locus([self.annihilator], self.subject.ring)

    def verify(self):
        if len(self.witnesses) != len(self.annihilator.generators):
            return False
        for a, beta in self.witnesses:
            if not verify_homotopy(beta, self.subject.scalar(a)):
                return False
        return True


@dataclass
class NilpotenceResult:
    morphism: CurvedMorphism
    exponent: object            # int, or None when not found up to the bound
    witness: object = None      # CurvedMorphism null-homotopy of the power
    power: object = None        # the morphism that was shown null-homotopic
    bound: int = DEFAULT_NILPOTENCE_CAP

    @property
    def found(self):
        return self.exponent is not None

    def verify(self):
        if not self.found:
            return True
        return verify_homotopy(self.witness, self.power)


def annihilator(P):
    """{a in A : a*id_P is a boundary in Hom(P, P)}."""
    _, span = _boundary_span(P, P)
    return span.quotient(P.identity().vec())


def supp_global(P):
    ann = annihilator(P)
    witnesses = []
    for a in ann.generators:
        beta = solve_null_homotopy(P.scalar(a))
        if beta is None:
            raise AssertionError(f"annihilator generator {a} has no homotopy")
        witnesses.append((a, beta))
    return SupportCertificate(P, ann, witnesses)


def support(P):
    return Locus([annihilator(P)], P.ring)


def supp_point(P, prime):
    """Is P(p) nonzero in perf(kappa(p), w(p))?  Primality of p is trusted."""
    if prime.ring != P.ring:
        raise RingMismatchError("prime and module live in different rings")
    if prime.is_unit():
        raise ValidationError("not a prime: the ideal is the unit ideal")
    if not prime.contains(P.curvature):
        return False
    # the fiber is a complex over a graded field: zero iff acyclic iff 2*rank = #generators
    return 2 * rank_over_domain(P.differential, prime) != P.rank


def thick_member(Q, P):
    """Q in thick(P) iff supp(Q) is inside supp(P)."""
    if Q.ring != P.ring:
        raise RingMismatchError("modules live in different rings")
    if Q.curvature != P.curvature:
        raise CurvatureError(f"curvatures differ: {Q.curvature} vs {P.curvature}")
    return locus_contained(support(Q), support(P))


def supp_total(ring, w):
    """supp(A, w) for A = QQ[...] regular: V(w, dw/dv for every variable v)."""
    w = ring.coerce(w)
    if w and w.homogeneous_degrees() != {-2}:
        raise DegreeError("w must be homogeneous of degree -2")
    gens = [w] + [w.diff(v) for v in ring.names]
    return Locus([Ideal(ring, [g for g in gens if g])], ring)


def is_generator(P):
    """thick(P) = perf(A, w) iff supp(A, w) is inside supp(P)."""
    return locus_contained(supp_total(P.ring, P.curvature), support(P))


def _pair_degrees(a, b):
    if a and b:
        da, db = a.degree, b.degree
        if da + db != -2:
            raise DegreeError(f"|{a}| + |{b}| = {da + db}, expected -2")
        return da
    if a:
        return a.degree
    if b:
        return -2 - b.degree
    raise DegreeError("a block needs a nonzero entry to fix its grading")


def square_witness(a_list, b_list, ring=None):
    """P(1) (x) ... (x) P(n) with P(i) = A + S^{|a_i|+1} A, D = [[0, a_i], [b_i, 0]]."""
    if len(a_list) != len(b_list):
        raise ValidationError("a and b lists differ in length")
    if ring is None:
        if not a_list:
            raise ValidationError("an empty witness needs the ring")
        ring = next((p.ring for p in list(a_list) + list(b_list) if hasattr(p, "ring")), None)
    z = ring.zero()
    result = unit_object(ring)
    for a, b in zip(a_list, b_list):
        a, b = ring.coerce(a), ring.coerce(b)
        da = _pair_degrees(a, b)
        result = tensor(result, CurvedModule(ring, a * b, (0, da + 1), ((z, a), (b, z))))
    return result


def koszul_block(x):
    """K(x) = cone(x : S^{|x|} A -> A): degrees (|x|+1, 0), D = [[0, 0], [x, 0]]."""
    ring = x.ring
    d = x.degree if x else 0
    z = ring.zero()
    return CurvedModule(ring, z, (d + 1, 0), ((z, z), (x, z)))


def koszul_cut(x_list, P):
    """K(x_1) (x) ... (x) K(x_n) (x) P, supported on V(x_1..x_n) meet supp(P)."""
    ring = P.ring
    blocks = [koszul_block(ring.coerce(x)) for x in x_list]
    if not blocks:
        return P
    K = blocks[0]
    for B in blocks[1:]:
        K = tensor(K, B)
    return tensor(K, P)


def mf_to_curved(koszul_or_base, f, d0, d1):
    """Matrix factorization (d0: P0 -> P1, d1: P1 -> P0) as a curved module over R[chi].

    Generators: P0 in degree 1, then P1 in degree 0; D = [[0, chi*d1], [d0, 0]].
    """
    kd = koszul_or_base if isinstance(koszul_or_base, KoszulData) else KoszulData(koszul_or_base, [f])
    R = kd.base
    f = R.coerce(f)
    d0 = tuple(tuple(R.coerce(x) for x in row) for row in d0)
    d1 = tuple(tuple(R.coerce(x) for x in row) for row in d1)
    n1, n0 = len(d0), len(d1)
    if any(len(r) != n0 for r in d0) or any(len(r) != n1 for r in d1):
        raise ValidationError("d0 must be rank(P1) x rank(P0) and d1 rank(P0) x rank(P1)")
    for name, prod, n in (("d0*d1", matmul(d0, d1, R), n1), ("d1*d0", matmul(d1, d0, R), n0)):
        bad = first_difference(prod, identity(R, n, f))
        if bad is not None:
            raise ValidationError(f"{name} != f*Id at entry {bad}")
    A = kd.ring
    chi = kd.chis()[0]
    up = tuple(tuple(x.map_to(A) * chi for x in row) for row in d1)
    down = tuple(tuple(x.map_to(A) for x in row) for row in d0)
    D = block([[zeros(A, n0, n0), up], [down, zeros(A, n1, n1)]], A)
    return CurvedModule(A, f.map_to(A) * chi, [1] * n0 + [0] * n1, D)


def tensor_power(alpha, n):
    out = alpha
    for _ in range(n - 1):
        out = tensor_morphisms(out, alpha)
    return out


def tensor_nilpotence_search(alpha, P=None, n_max=DEFAULT_NILPOTENCE_CAP):
    """Smallest n <= n_max with alpha^{(x)n} (or alpha^{(x)n} (x) id_P) null-homotopic."""
    if not alpha.is_cycle():
        raise NotACycleError("tensor_nilpotence_search needs a cycle")
    for n in range(1, n_max + 1):
        power = tensor_power(alpha, n)
        if P is not None:
            power = tensor_morphisms(power, P.identity())
        beta = solve_null_homotopy(power)
        if beta is not None:
            return NilpotenceResult(alpha, n, beta, power, n_max)
    return NilpotenceResult(alpha, None, None, None, n_max)


def cohomological_support(M, N):
    """V_E(M, N) = support of H(Hom_A(bgg M, bgg N))."""
    if M.koszul != N.koszul:
        raise ValidationError("dg modules over different Koszul complexes")
    return homology_presentation(bgg(M), bgg(N)).support()


def complexity(M, N):
    """Pole order at t = 1 of the Hilbert series of Ext_E(M, N); base ring must be QQ."""
    if M.koszul != N.koszul:
        raise ValidationError("dg modules over different Koszul complexes")
    if M.koszul.base.nvars:
        raise UnsupportedError("complexity needs a base field (no base variables)")
    return homology_presentation(bgg(M), bgg(N)).hilbert_series().pole_order()
