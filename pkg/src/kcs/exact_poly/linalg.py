"""Matrices of Polynomials, and rank over the domain A/p."""

from ..errors import ValidationError
from .modules import FreeModuleMap


def zeros(ring, m, n):
    z = ring.zero()
    return tuple(tuple(z for _ in range(n)) for _ in range(m))


def identity(ring, n, scalar=None):
    one = ring.one() if scalar is None else ring.coerce(scalar)
    z = ring.zero()
    return tuple(tuple(one if i == j else z for j in range(n)) for i in range(n))


def matmul(A, B, ring):
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [ring.zero()] * n
        for k, a in enumerate(row):
            if not a:
                continue
            for j, b in enumerate(B[k]):
                if b:
                    acc[j] = acc[j] + a * b
        out.append(tuple(acc))
    return tuple(out)


def matadd(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def matscale(A, s):
    return tuple(tuple(a * s for a in row) for row in A)


def is_zero_matrix(A):
    return all(not a for row in A for a in row)


def first_difference(A, B):
    """Index of the first entry where A and B differ, or None."""
    for i, (ra, rb) in enumerate(zip(A, B)):
        for j, (a, b) in enumerate(zip(ra, rb)):
            if a != b:
                return i, j
    return None


def kron(A, B, ring):
    """Kronecker product; row (i, k) -> i*len(B) + k."""
    rb = len(B)
    cb = len(B[0]) if B else 0
    z = ring.zero()
    out = [[z] * (len(A[0]) * cb if A else 0) for _ in range(len(A) * rb)]
    for i, row in enumerate(A):
        for j, a in enumerate(row):
            if not a:
                continue
            for k in range(rb):
                for l in range(cb):
                    b = B[k][l]
                    if b:
                        out[i * rb + k][j * cb + l] = a * b
    return tuple(tuple(r) for r in out)


def block(blocks, ring):
    """Assemble a block matrix from a 2-d list of matrices (no empty blocks rows)."""
    out = []
    for brow in blocks:
        height = len(brow[0])
        for r in range(height):
            row = []
            for B in brow:
                row.extend(B[r])
            out.append(tuple(row))
    return tuple(out)


def transpose(A):
    return tuple(zip(*A)) if A else ()


def rank_over_domain(D, prime):
    """Rank of D over Frac(A/p): fraction-free elimination, zero test = normal form mod p.

    ``prime`` is trusted to be prime; only the unit ideal is rejected.
    """
    if isinstance(D, FreeModuleMap):
        D = D.entries
    if prime.is_unit():
        raise ValidationError("not a prime: the ideal is the unit ideal")
    nf = prime.normal_form
    rows = [[nf(x) for x in row] for row in D]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        cands = [i for i in range(r, len(rows)) if rows[i][c]]
        if not cands:
            continue
        p = min(cands, key=lambda i: len(rows[i][c].terms))
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            a = rows[i][c]
            if not a:
                continue
            rows[i] = [nf(pv * rows[i][k] - a * rows[r][k]) if k > c else rows[i][k].ring.zero()
                       for k in range(ncols)]
        r += 1
        if r == len(rows):
            break
    return r
