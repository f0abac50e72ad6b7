"""Homogeneous ideals, closed loci, and the membership tests built on them."""

from fractions import Fraction

from ..errors import RingMismatchError, ValidationError
from . import groebner as gb
from .ring import Polynomial


def _raw(p):
    return {(0, e): c for e, c in p.terms.items()}


def _cook(ring, vec):
    return Polynomial(ring, {e: c for (_, e), c in vec.items()})


class Ideal:
    """Ideal of a GradedRing given by homogeneous generators.

    The reduced Groebner basis is computed on first use and cached (once per
    monomial order).
    """

    def __init__(self, ring, generators=(), check=True):
        gens = tuple(ring.coerce(g) for g in generators)
        if check:
            for g in gens:
                if not g.is_homogeneous():
                    raise ValidationError(f"generator {g} is not homogeneous")
        self.ring = ring
        self.generators = gens
        self._gb = {}

    def __repr__(self):
        return "(" + (", ".join(str(g) for g in self.generators) or "0") + ")"

    def groebner(self, order=None):
        order = order or self.ring.order
        if order not in self._gb:
            vecs = gb.groebner([_raw(g) for g in self.generators if g], order,
                               rank_one=True)
            self._gb[order] = tuple(_cook(self.ring, v) for v in vecs)
        return self._gb[order]

    @property
    def basis(self):
        return self.groebner()

    def normal_form(self, p):
        p = self._own(p)
        if not p:
            return p
        key = gb.term_key(self.ring.order)
        basis = [_raw(g) for g in self.basis]
        return _cook(self.ring, gb.reduce_vector(_raw(p), basis, key))

    def contains(self, p):
        return self.normal_form(p).is_zero()

    __contains__ = contains

    def is_unit(self):
        return any(g.is_constant() and g for g in self.basis)

    def is_zero(self):
        return not self.basis

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def equals(self, other):
        return self.contains_ideal(other) and other.contains_ideal(self)

    def __add__(self, other):
        if isinstance(other, Ideal):
            self._same_ring(other)
            return Ideal(self.ring, self.generators + other.generators, check=False)
        return Ideal(self.ring, self.generators + (self.ring.coerce(other),), check=False)

    def radical_contains(self, p):
        return radical_member(p, self)

    def saturate(self, g):
        return saturation(self, g)

    def _own(self, p):
        p = self.ring.coerce(p)
        if p.ring != self.ring:
            raise RingMismatchError(f"{p.ring!r} vs {self.ring!r}")
        return p

    def _same_ring(self, other):
        if other.ring != self.ring:
            raise RingMismatchError(f"{other.ring!r} vs {self.ring!r}")


def groebner_basis(ideal, order="degrevlex"):
    """Return an Ideal whose generators are the reduced Groebner basis of ``ideal``."""
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise ValidationError(f"generator {g} is not homogeneous")
    ring = ideal.ring.with_order(order) if order != ideal.ring.order else ideal.ring
    src = ideal if ring is ideal.ring else Ideal(ring, [g.map_to(ring) for g in ideal.generators])
    basis = src.groebner(order)
    out = Ideal(ring, basis, check=False)
    out._gb[order] = basis
    return out


def normal_form(p, ideal):
    if p.ring != ideal.ring:
        raise RingMismatchError(f"{p.ring!r} vs {ideal.ring!r}")
    return ideal.normal_form(p)


def _prefix(vec, k=1):
    z = (0,) * k
    return {(pos, z + e): c for (pos, e), c in vec.items()}


def radical_member(p, ideal):
    """p in sqrt(I) iff 1 in I + (1 - t*p) over QQ[t, ...] (Rabinowitsch)."""
    p = ideal.ring.coerce(p)
    if p.ring != ideal.ring:
        raise RingMismatchError(f"{p.ring!r} vs {ideal.ring!r}")
    if not p or ideal.contains(p):
        return True
    if ideal.is_zero():
        return False
    n = ideal.ring.nvars
    gens = [_prefix(_raw(g)) for g in ideal.basis]
    t = (0, (1,) + (0,) * n)
    rab = {(0, (0,) * (n + 1)): Fraction(1)}
    for (pos, e), c in _prefix(_raw(p)).items():
        term = (pos, (1,) + e[1:])
        rab[term] = rab.get(term, 0) - c
    basis = gb.groebner(gens + [rab], ideal.ring.order, rank_one=True)
    one = (0, (0,) * (n + 1))
    return any(len(v) == 1 and one in v for v in basis)


def saturation(ideal, g):
    """I : g^infinity, by eliminating t from I + (1 - t*g)."""
    g = ideal.ring.coerce(g)
    n = ideal.ring.nvars
    if not g:
        return Ideal(ideal.ring, [ideal.ring.one()], check=False)
    gens = [_prefix(_raw(h)) for h in ideal.basis]
    rab = {(0, (0,) * (n + 1)): Fraction(1)}
    for (pos, e), c in _prefix(_raw(g)).items():
        term = (pos, (1,) + e[1:])
        rab[term] = rab.get(term, 0) - c
    order = ("elim", 1, ideal.ring.order)
    basis = gb.groebner(gens + [rab], order, rank_one=True)
    kept = [{(pos, e[1:]): c for (pos, e), c in v.items()}
            for v in basis if all(e[0] == 0 for (_, e) in v)]
    return Ideal(ideal.ring, [_cook(ideal.ring, v) for v in kept], check=False)


class Locus:
    """Finite union of vanishing sets V(I_1) u ... u V(I_k) in Spec of a ring."""

    def __init__(self, components, ring=None):
        comps = tuple(components)
        if ring is None:
            if not comps:
                raise ValidationError("empty locus needs an explicit ring")
            ring = comps[0].ring
        for c in comps:
            if c.ring != ring:
                raise RingMismatchError("locus components live in different rings")
        self.ring = ring
        self.components = comps

    @classmethod
    def empty(cls, ring):
        return cls((), ring)

    @classmethod
    def everything(cls, ring):
        return cls((Ideal(ring, ()),), ring)

    @classmethod
    def of(cls, ring, *generator_lists):
        return cls([Ideal(ring, gens) for gens in generator_lists], ring)

    def is_empty(self):
        return all(c.is_unit() for c in self.components)

    def union(self, other):
        return Locus(self.components + other.components, self.ring)

    def pruned(self):
        """Drop empty components (unit ideals)."""
        return Locus([c for c in self.components if not c.is_unit()], self.ring)

    def contains_prime(self, prime):
        """p in V(I) for some component, i.e. I inside p."""
        return any(prime.contains_ideal(c) for c in self.components)

    def __repr__(self):
        if not self.components:
            return "Locus(empty)"
        return " u ".join(f"V{c!r}" for c in self.components)


def _contained(ideal, targets):
    if ideal.is_unit():
        return True
    if not targets:
        return False
    for J in targets:
        if all(radical_member(g, ideal) for g in J.generators):
            return True
    first, rest = targets[0], targets[1:]
    if not rest:
        return all(radical_member(g, ideal) for g in first.generators)
    # V(I) \ V(J) is the union over g in J of V(I) \ V(g), whose closure is V(I : g^oo).
    for g in first.generators:
        if not g or radical_member(g, ideal):
            continue
        if not _contained(saturation(ideal, g), rest):
            return False
    return True


def locus_contained(V, W):
    """Decide V subset of W for loci given as finite unions of V(I)."""
    if V.ring != W.ring:
        raise RingMismatchError("loci live in different rings")
    targets = [c for c in W.components if not c.is_unit()]
    # a component V(0) covers everything
    if any(c.is_zero() for c in targets):
        return True
    return all(_contained(c, targets) for c in V.components)


def loci_equal(V, W):
    return locus_contained(V, W) and locus_contained(W, V)
