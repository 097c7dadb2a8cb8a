"""Exact dense linear algebra over F_p (numpy int64) and Q (Fractions)."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from .field import PRIME, FieldSpec


def rref_mod_p(A, p: int):
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    A = np.array(A, dtype=np.int64) % p
    if A.ndim != 2:
        A = A.reshape(len(A), -1)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rref_qq(A):
    """Reduced row echelon form over Q on lists of Fractions."""
    M = [[Fraction(x) for x in row] for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        i = next((k for k in range(r, rows) if M[k][c]), None)
        if i is None:
            continue
        M[r], M[i] = M[i], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for k in range(rows):
            if k != r and M[k][c]:
                f = M[k][c]
                M[k] = [a - f * b for a, b in zip(M[k], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _rref(A, field: FieldSpec):
    if field.kind == PRIME:
        return rref_mod_p(A, field.p)
    return rref_qq(A)


def rank(A, field: FieldSpec) -> int:
    if len(A) == 0:
        return 0
    return len(_rref(A, field)[1])


def nullspace(A, field: FieldSpec, ncols: int) -> list:
    """Basis of {v : A v = 0} as a list of coefficient lists (field elements)."""
    if len(A) == 0:
        one = field(1)
        zero = field(0)
        return [[one if j == i else zero for j in range(ncols)] for i in range(ncols)]
    R, piv = _rref(A, field)
    pset = set(piv)
    free = [c for c in range(ncols) if c not in pset]
    out = []
    for f in free:
        v = [field(0)] * ncols
        v[f] = field(1)
        for row, c in enumerate(piv):
            v[c] = field(-R[row][f])
        out.append(v)
    return out


def row_space_basis(A, field: FieldSpec) -> list:
    if len(A) == 0:
        return []
    R, _ = _rref(A, field)
    return [[field(x) for x in row] for row in R]


def integer_kernel_basis(rows, ncols: int) -> list:
    """Basis of the rational kernel of an integer matrix, scaled to integer vectors."""
    basis = nullspace(rows, FieldSpec.qq(), ncols)
    out = []
    for v in basis:
        den = lcm(*(x.denominator for x in v))
        out.append([int(x * den) for x in v])
    return out

