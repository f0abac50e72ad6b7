"""Hilbert series of graded subquotients over QQ[chi_1..chi_n] (all |chi| = -2).

Series are in t with coefficient of t^m equal to dim of the degree -m piece,
written q(t) / (1 - t^2)^n with q a Laurent polynomial.
"""

from math import comb

from ..errors import UnsupportedError, ValidationError
from .modules import Submodule


def _poly_sub(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) - c
    return {e: c for e, c in out.items() if c}


def _poly_add(p, q):
    return _poly_sub(p, {e: -c for e, c in q.items()})


def _poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _divide_linear(q, root_sign):
    """Divide q by (1 - root_sign*t) if exact; returns quotient or None."""
    if not q:
        return {}
    lo, hi = min(q), max(q)
    # q = (1 - s t) * r  with r having exponents lo..hi-1
    r = {}
    carry = 0
    for e in range(lo, hi):
        c = q.get(e, 0) + carry
        r[e] = c
        carry = root_sign * c
    if q.get(hi, 0) + carry != 0:
        return None
    return {e: c for e, c in r.items() if c}


class HilbertSeries:
    __slots__ = ("numerator", "power")

    def __init__(self, numerator, power):
        q = {int(e): c for e, c in numerator.items() if c}
        n = power
        while n > 0 and q:
            a = _divide_linear(q, 1)
            b = _divide_linear(a, -1) if a is not None else None
            if b is None:
                break
            q, n = b, n - 1
        if not q:
            n = 0
        self.numerator = q
        self.power = n

    def _lift(self, n):
        q = dict(self.numerator)
        for _ in range(n - self.power):
            q = _poly_mul(q, {0: 1, 2: -1})
        return q

    def __add__(self, other):
        n = max(self.power, other.power)
        return HilbertSeries(_poly_add(self._lift(n), other._lift(n)), n)

    def __sub__(self, other):
        n = max(self.power, other.power)
        return HilbertSeries(_poly_sub(self._lift(n), other._lift(n)), n)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.power == other.power and self.numerator == other.numerator

    def __hash__(self):
        return hash((self.power, frozenset(self.numerator.items())))

    def is_zero(self):
        return not self.numerator

    def coefficient(self, m):
        n = self.power
        total = 0
        for e, c in self.numerator.items():
            j = m - e
            if j < 0 or j % 2:
                continue
            k = j // 2
            total += c * (comb(n + k - 1, k) if n else (1 if k == 0 else 0))
        return total

    def coefficients(self, upto, start=0):
        return [self.coefficient(m) for m in range(start, upto + 1)]

    def pole_order(self):
        """Order of the pole at t = 1 (0 when the series is a Laurent polynomial)."""
        if not self.numerator:
            return 0
        q, mult = dict(self.numerator), 0
        while mult < self.power:
            q2 = _divide_linear(q, 1)
            if q2 is None:
                break
            q, mult = q2, mult + 1
        return max(self.power - mult, 0)

    def __repr__(self):
        terms = " + ".join(f"{c}*t^{e}" for e, c in sorted(self.numerator.items())) or "0"
        return f"({terms})/(1-t^2)^{self.power}"


def _monomial_numerator(gens):
    """Numerator of QQ[chi]/(monomials), each variable weighted t^2."""
    gens = list(set(gens))
    if any(not any(g) for g in gens):
        return {}
    gens = [g for g in gens if not any(
        h != g and all(a <= b for a, b in zip(h, g)) for h in gens)]
    gens.sort()
    if not gens:
        return {0: 1}
    m, rest = gens[-1], gens[:-1]
    colon = [tuple(max(a - b, 0) for a, b in zip(g, m)) for g in rest]
    shift = 2 * sum(m)
    tail = {e + shift: c for e, c in _monomial_numerator(colon).items()}
    return _poly_sub(_monomial_numerator(rest), tail)


def _check_ring(ring):
    if any(d != -2 for d in ring.degrees):
        raise UnsupportedError(
            "Hilbert series need a base field: every variable must have degree -2")


def _quotient_series(ring, degrees, submodule):
    n = ring.nvars
    by_pos = {}
    key = submodule._key
    for vec in submodule.groebner():
        pos, e = max(vec, key=key)
        by_pos.setdefault(pos, []).append(e)
    num = {}
    for k, d in enumerate(degrees):
        part = _monomial_numerator(by_pos.get(k, []))
        num = _poly_add(num, {e - d: c for e, c in part.items()})
    return HilbertSeries(num, n)


def hilbert_series(ring, degrees, relations=(), generators=None):
    """Hilbert series of span(generators) / span(relations) inside A(degrees).

    ``generators=None`` means the whole free module.  The relations must lie in
    the span of the generators; both sets must be homogeneous.
    """
    _check_ring(ring)
    degrees = tuple(degrees)
    B = relations if isinstance(relations, Submodule) else Submodule(ring, degrees, relations)
    outer = _quotient_series(ring, degrees, B)
    if generators is None:
        return outer
    Z = generators if isinstance(generators, Submodule) else Submodule(ring, degrees, generators)
    for g in B.generators:
        if not Z.contains(g):
            raise ValidationError("relation outside the span of the generators")
    return outer - _quotient_series(ring, degrees, Z)
