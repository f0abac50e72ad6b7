"""Buchberger's algorithm for submodules of free modules over QQ[v1..vn].

Everything here works on raw vectors: dicts mapping a term ``(position,
exponents)`` to a nonzero Fraction.  An ideal is the rank-one case (position
always 0).  Terms are compared position-over-term, lower position first, then
by the monomial order; this is what makes the "augment and eliminate"
constructions in ``modules`` (syzygies, lifts, quotients) work.
"""

import contextvars
import heapq
from fractions import Fraction

from ..errors import GroebnerLimitError
from .ring import monomial_key

_STEP_LIMIT = contextvars.ContextVar("kcs_gb_step_limit", default=None)


def set_step_limit(limit):
    """Cap the number of S-pair reductions per basis computation (None = no cap).

    Returns a token usable with ``reset_step_limit``; the setting is local to
    the current context (thread / task).
    """
    return _STEP_LIMIT.set(limit)


def reset_step_limit(token):
    _STEP_LIMIT.reset(token)


def term_key(order):
    mkey = monomial_key(order)
    return lambda t: (-t[0], mkey(t[1]))


def lead(vec, key):
    return max(vec, key=key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def add_multiple(f, g, c, shift, skip=None):
    """In place ``f -= c * x^shift * g`` (terms of g equal to ``skip`` ignored)."""
    for (p, e), cg in g.items():
        if (p, e) == skip:
            continue
        t = (p, tuple(a + b for a, b in zip(e, shift)))
        v = f.get(t, 0) - c * cg
        if v:
            f[t] = v
        else:
            f.pop(t, None)


def monic(vec, key):
    lt = lead(vec, key)
    c = vec[lt]
    if c == 1:
        return vec
    inv = 1 / c
    return {t: v * inv for t, v in vec.items()}


class _Basis:
    """Monic vectors with cached leading terms, indexed by position."""

    def __init__(self, key):
        self.key = key
        self.items = []          # (lead term, vec)
        self.by_pos = {}         # position -> list of indices

    def add(self, vec):
        lt = lead(vec, self.key)
        self.items.append((lt, vec))
        self.by_pos.setdefault(lt[0], []).append(len(self.items) - 1)
        return len(self.items) - 1

    def reducer(self, term, active=None):
        for i in self.by_pos.get(term[0], ()):
            if active is not None and i not in active:
                continue
            lt = self.items[i][0]
            if _divides(lt[1], term[1]):
                return self.items[i]
        return None


def reduce_vector(f, basis, key, active=None):
    """Fully reduce ``f`` modulo the vectors of ``basis``; returns the remainder."""
    if not isinstance(basis, _Basis):
        b = _Basis(key)
        for g in basis:
            b.add(monic(g, key))
        basis = b
    f = dict(f)
    rem = {}
    while f:
        t = max(f, key=key)
        c = f[t]
        hit = basis.reducer(t, active)
        if hit is None:
            rem[t] = c
            del f[t]
            continue
        lt, g = hit
        shift = tuple(a - b for a, b in zip(t[1], lt[1]))
        del f[t]
        add_multiple(f, g, c, shift, skip=lt)
    return rem


def _spoly(a, b):
    (lta, va), (ltb, vb) = a, b
    L = _lcm(lta[1], ltb[1])
    sa = tuple(x - y for x, y in zip(L, lta[1]))
    sb = tuple(x - y for x, y in zip(L, ltb[1]))
    s = {}
    add_multiple(s, va, Fraction(-1), sa)
    add_multiple(s, vb, Fraction(1), sb)
    return s


def groebner(gens, order="degrevlex", rank_one=False, limit=None):
    """Reduced Groebner basis of the submodule generated by ``gens``.

    ``rank_one`` enables the coprime-leading-monomial criterion, which is only
    valid for ideals.  ``limit`` (or the context setting) bounds the number of
    S-pair reductions.
    """
    key = term_key(order)
    if limit is None:
        limit = _STEP_LIMIT.get()
    basis = _Basis(key)
    heap = []
    pending = set()
    steps = 0

    def insert(vec):
        vec = monic(vec, key)
        n = basis.add(vec)
        lt_n = basis.items[n][0]
        for i in basis.by_pos[lt_n[0]]:
            if i == n:
                continue
            lt_i = basis.items[i][0]
            if rank_one and _coprime(lt_i[1], lt_n[1]):
                continue
            L = _lcm(lt_i[1], lt_n[1])
            heapq.heappush(heap, (key((lt_n[0], L)), i, n))
            pending.add((i, n))

    for g in gens:
        r = reduce_vector(g, basis, key)
        if r:
            insert(r)

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lti, ltj = basis.items[i][0], basis.items[j][0]
        L = _lcm(lti[1], ltj[1])
        skip = False
        for k in basis.by_pos[lti[0]]:
            if k in (i, j):
                continue
            if _divides(basis.items[k][0][1], L):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        steps += 1
        if limit is not None and steps > limit:
            raise GroebnerLimitError(f"Groebner step limit {limit} exceeded")
        r = reduce_vector(_spoly(basis.items[i], basis.items[j]), basis, key)
        if r:
            insert(r)

    return _interreduce(basis, key)


def _interreduce(basis, key):
    items = basis.items
    keep = []
    for i, (lt, _) in enumerate(items):
        redundant = False
        for j, (lt2, _) in enumerate(items):
            if j == i or lt2[0] != lt[0] or not _divides(lt2[1], lt[1]):
                continue
            if lt2 != lt or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(i)
    final = _Basis(key)
    for i in keep:
        final.add(items[i][1])
    out = []
    for idx, (lt, vec) in enumerate(final.items):
        tail = {t: c for t, c in vec.items() if t != lt}
        others = set(range(len(final.items))) - {idx}
        red = reduce_vector(tail, final, key, active=others)
        red[lt] = vec[lt]
        out.append(red)
    out.sort(key=lambda v: key(lead(v, key)), reverse=True)
    return out


def is_groebner(vecs, order="degrevlex"):
    """Check Buchberger's criterion directly (every S-vector reduces to 0)."""
    key = term_key(order)
    b = _Basis(key)
    for v in vecs:
        b.add(monic(v, key))
    for i in range(len(b.items)):
        for j in range(i + 1, len(b.items)):
            if b.items[i][0][0] != b.items[j][0][0]:
                continue
            if reduce_vector(_spoly(b.items[i], b.items[j]), b, key):
                return False
    return True
