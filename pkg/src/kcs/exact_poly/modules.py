"""Graded free modules: maps between them, submodules, syzygies, quotients.

Columns are tuples of Polynomial.  The constructions here all reduce to one
Groebner basis of an augmented module: with position-over-term order the first
block of positions is eliminated first, so basis elements vanishing there
describe relations among the generators.
"""

from fractions import Fraction

from ..errors import DegreeError, RingMismatchError, ValidationError
from . import groebner as gb
from .ideal import Ideal
from .ring import Polynomial


def column_to_vec(col, offset=0):
    vec = {}
    for i, p in enumerate(col):
        for e, c in p.terms.items():
            vec[(i + offset, e)] = c
    return vec


def vec_to_column(ring, vec, rank, offset=0):
    parts = [dict() for _ in range(rank)]
    for (pos, e), c in vec.items():
        parts[pos - offset][e] = c
    return tuple(Polynomial(ring, t) for t in parts)


def basis_column(ring, rank, j):
    return tuple(ring.one() if i == j else ring.zero() for i in range(rank))


class FreeModuleMap:
    """Homogeneous A-linear map A(src) -> A(tgt) of a fixed degree.

    ``entries[i][j]`` is the coefficient of target generator i in the image of
    source generator j; it must be homogeneous of degree
    ``source_degrees[j] + degree - target_degrees[i]`` or zero.
    """

    def __init__(self, ring, source_degrees, target_degrees, entries, degree=0, check=True):
        self.ring = ring
        self.source_degrees = tuple(source_degrees)
        self.target_degrees = tuple(target_degrees)
        self.degree = degree
        rows = tuple(tuple(ring.coerce(x) for x in row) for row in entries)
        if len(rows) != len(self.target_degrees) or any(
                len(r) != len(self.source_degrees) for r in rows):
            raise ValidationError(
                f"matrix shape does not match {len(self.target_degrees)}x{len(self.source_degrees)}")
        self.entries = rows
        if check:
            for i, row in enumerate(rows):
                for j, x in enumerate(row):
                    if not x:
                        continue
                    want = self.source_degrees[j] + degree - self.target_degrees[i]
                    if x.homogeneous_degrees() != {want}:
                        raise DegreeError(
                            f"entry ({i},{j}) = {x} should be homogeneous of degree {want}",
                            index=(i, j))

    @property
    def shape(self):
        return len(self.target_degrees), len(self.source_degrees)

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def columns(self):
        return [self.column(j) for j in range(len(self.source_degrees))]

    def apply(self, v):
        out = []
        for row in self.entries:
            acc = self.ring.zero()
            for x, y in zip(row, v):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def image(self):
        return Submodule(self.ring, self.target_degrees, self.columns())


class Submodule:
    """Submodule of A(degrees) spanned by the given columns."""

    def __init__(self, ring, degrees, generators):
        self.ring = ring
        self.degrees = tuple(degrees)
        self.rank = len(self.degrees)
        gens = []
        for col in generators:
            col = tuple(ring.coerce(x) for x in col)
            if len(col) != self.rank:
                raise ValidationError("generator has the wrong length")
            if any(x.ring != ring for x in col):
                raise RingMismatchError("generator lives in another ring")
            gens.append(col)
        self.generators = tuple(gens)
        self._gb = None
        self._lift_gb = None
        self._key = gb.term_key(ring.order)

    def groebner(self):
        if self._gb is None:
            vecs = [column_to_vec(c) for c in self.generators]
            self._gb = gb.groebner([v for v in vecs if v], self.ring.order)
        return self._gb

    def groebner_columns(self):
        return [vec_to_column(self.ring, v, self.rank) for v in self.groebner()]

    def normal_form(self, v):
        rem = gb.reduce_vector(column_to_vec(v), self.groebner(), self._key)
        return vec_to_column(self.ring, rem, self.rank)

    def contains(self, v):
        return not gb.reduce_vector(column_to_vec(v), self.groebner(), self._key)

    def _lifting_basis(self):
        if self._lift_gb is None:
            r = self.rank
            vecs = []
            for j, col in enumerate(self.generators):
                vec = column_to_vec(col)
                vec[(r + j, (0,) * self.ring.nvars)] = Fraction(1)
                vecs.append(vec)
            self._lift_gb = gb.groebner(vecs, self.ring.order)
        return self._lift_gb

    def lift(self, v):
        """Coefficients c with sum_j c_j * gen_j = v, or None if v is not in the span."""
        rem = gb.reduce_vector(column_to_vec(v), self._lifting_basis(), self._key)
        if any(pos < self.rank for pos, _ in rem):
            return None
        coeffs = vec_to_column(self.ring, rem, len(self.generators), offset=self.rank)
        return tuple(-c for c in coeffs)

    def quotient(self, v):
        """The ideal {a : a*v in U}."""
        v = tuple(self.ring.coerce(x) for x in v)
        r = self.rank
        aug = column_to_vec(v)
        aug[(r, (0,) * self.ring.nvars)] = Fraction(1)
        vecs = [dict(g) for g in self.groebner()] + [aug]
        basis = gb.groebner(vecs, self.ring.order)
        gens = [Polynomial(self.ring, {e: c for (_, e), c in vec.items()})
                for vec in basis if all(pos == r for pos, _ in vec)]
        return Ideal(self.ring, gens, check=False)

    def syzygies(self):
        """Generators of the relation module {c : sum_j c_j * gen_j = 0}."""
        r, m = self.rank, len(self.generators)
        return [vec_to_column(self.ring, vec, m, offset=r)
                for vec in self._lifting_basis()
                if all(pos >= r for pos, _ in vec)]


def kernel_generators(D):
    """Columns generating {v : D v = 0} for a FreeModuleMap D."""
    rows, cols = D.shape
    if cols == 0:
        return []
    U = Submodule(D.ring, D.target_degrees, D.columns())
    syz = U.syzygies()
    return [s for s in syz if any(s)]


def module_quotient(U, v):
    """{a in A : a*v in U} for a Submodule U (or FreeModuleMap whose image is U)."""
    if isinstance(U, FreeModuleMap):
        U = U.image()
    return U.quotient(v)
