"""Graded polynomial rings over QQ and their elements.

A ring is an ordered list of variables, each carrying an even, non-positive
homological degree.  Base variables (degree 0) come first by convention and
curvature variables (degree -2) after them, so that degrevlex prefers the base
variables.  Elements are immutable maps ``exponent tuple -> Fraction``.
"""

import re
from fractions import Fraction

from ..errors import RingMismatchError, ValidationError

ORDERS = ("degrevlex", "deglex", "lex")

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def monomial_key(order, nvars=None):
    """Return a sort key on exponent tuples; larger key means larger monomial.

    ``order`` is one of ``ORDERS`` or ``("elim", k, base)`` which eliminates the
    first ``k`` variables (block order, each block ordered by ``base``).
    """
    if isinstance(order, tuple):
        _, k, base = order
        inner = monomial_key(base)
        return lambda e: (inner(e[:k]), inner(e[k:]))
    if order == "degrevlex":
        return lambda e: (sum(e), tuple(-a for a in reversed(e)))
    if order == "deglex":
        return lambda e: (sum(e), e)
    if order == "lex":
        return lambda e: e
    raise ValidationError(f"unknown monomial order {order!r}")


class GradedRing:
    """QQ[v1, ..., vn] with homological degrees attached to the variables."""

    __slots__ = ("names", "degrees", "order", "_index", "_key")

    def __init__(self, variables, order="degrevlex"):
        names, degrees = [], []
        for v in variables:
            if isinstance(v, str):
                name, deg = v, 0
            else:
                name, deg = v
            if not _NAME_RE.match(name):
                raise ValidationError(f"bad variable name {name!r}")
            deg = int(deg)
            if deg > 0 or deg % 2:
                raise ValidationError(
                    f"variable {name} has degree {deg}; degrees must be even and <= 0")
            names.append(name)
            degrees.append(deg)
        if len(set(names)) != len(names):
            raise ValidationError(f"duplicate variable names in {names}")
        if order not in ORDERS:
            raise ValidationError(f"unknown monomial order {order!r}")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.order = order
        self._index = {n: i for i, n in enumerate(names)}
        self._key = monomial_key(order)

    @property
    def nvars(self):
        return len(self.names)

    @property
    def variables(self):
        return list(zip(self.names, self.degrees))

    def key(self, exp):
        return self._key(exp)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValidationError(f"ring has no variable {name!r}") from None

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return (isinstance(other, GradedRing) and self.names == other.names
                and self.degrees == other.degrees and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.degrees, self.order))

    def __repr__(self):
        inner = ", ".join(n if d == 0 else f"{n}:{d}" for n, d in self.variables)
        return f"QQ[{inner}]"

    def with_order(self, order):
        return GradedRing(self.variables, order)

    def extend(self, variables):
        """Ring with ``variables`` appended after the existing ones."""
        return GradedRing(self.variables + list(variables), self.order)

    def fresh_name(self, stem="t"):
        name, i = stem, 0
        while name in self._index:
            i += 1
            name = f"{stem}{i}"
        return name

    # element constructors

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name):
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self):
        return [self.var(n) for n in self.names]

    def parse(self, text):
        from .parse import parse_polynomial
        return parse_polynomial(self, text)

    def coerce(self, value):
        """Accept a Polynomial of this ring, a number, or polynomial text."""
        if isinstance(value, Polynomial):
            if value.ring != self:
                return value.map_to(self)
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.const(value)

    def exp_degree(self, exp):
        return sum(a * d for a, d in zip(exp, self.degrees))


def _fmt_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Polynomial:
    """Immutable element of a GradedRing with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}
        self._hash = None

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{other.ring!r} vs {self.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def homogeneous_degrees(self):
        return {self.ring.exp_degree(e) for e in self.terms}

    def is_homogeneous(self):
        return len(self.homogeneous_degrees()) <= 1

    @property
    def degree(self):
        """Homological degree; None for zero, ValidationError if inhomogeneous."""
        degs = self.homogeneous_degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValidationError(f"{self} is not homogeneous")
        return degs.pop()

    def homogeneous_part(self, degree):
        ring = self.ring
        return Polynomial(ring, {e: c for e, c in self.terms.items()
                                 if ring.exp_degree(e) == degree})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            return None
        e = max(self.terms, key=self.ring.key)
        return e, self.terms[e]

    def diff(self, name):
        i = self.ring.index(name)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                t[e2] = t.get(e2, 0) + c * e[i]
        return Polynomial(self.ring, t)

    def variables_used(self):
        return {self.ring.names[i] for e in self.terms for i, a in enumerate(e) if a}

    def map_to(self, ring):
        """Re-express in ``ring`` by variable name (e.g. R into R[chi])."""
        if ring == self.ring:
            return self
        idx = [ring.index(n) for n in self.ring.names]
        t = {}
        for e, c in self.terms.items():
            e2 = [0] * ring.nvars
            for i, a in zip(idx, e):
                e2[i] = a
            t[tuple(e2)] = c
        return Polynomial(ring, t)

    # printing

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(n if a == 1 else f"{n}^{a}"
                            for n, a in zip(self.ring.names, e) if a)
            mag = abs(c)
            if not mono:
                body = _fmt_coeff(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_fmt_coeff(mag)}*{mono}"
            if k == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append((" + " if c > 0 else " - ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"
