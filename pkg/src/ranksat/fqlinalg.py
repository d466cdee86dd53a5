"""Dense linear algebra over the base field F_q.

Matrices are numpy integer arrays of F_q element codes; row operations
go through the SmallField tables, so everything here works for any
prime power q, not just q = 2.  Reduced row echelon form is the
canonical representative of a row space: equal subspaces produce equal
arrays.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .gftower import SmallField


def rref(M, field: SmallField):
    """Reduced row echelon form over F_q.

    Returns (R, pivot_cols).  R has leading ones, zeros above and below
    each pivot, and zero rows removed, so it is canonical for the row
    space.
    """
    R = np.array(M, dtype=np.int16, copy=True)
    if R.ndim != 2:
        R = np.atleast_2d(R)
    rows, cols = R.shape
    add, mul, neg, inv = field._add, field._mul, field._neg, field._inv
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        pv = R[r, c]
        if pv != 1:
            R[r] = mul[R[r], inv[pv]]
        # eliminate in all other rows
        others = np.nonzero(R[:, c])[0]
        for i in others:
            if i == r:
                continue
            f = R[i, c]
            R[i] = add[R[i], mul[neg[f], R[r]]]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(M, field: SmallField) -> int:
    return len(rref(M, field)[1])


def kernel(M, field: SmallField) -> np.ndarray:
    """Canonical basis (RREF rows) of {x : M x = 0}, x a column vector."""
    M = np.atleast_2d(np.asarray(M, dtype=np.int16))
    rows, cols = M.shape
    R, pivots = rref(M, field)
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return np.zeros((0, cols), dtype=np.int16)
    neg = field._neg
    basis = np.zeros((len(free), cols), dtype=np.int16)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = neg[R[r, fc]]
    B, _ = rref(basis, field)
    return B


def matvec(M, v, field: SmallField) -> np.ndarray:
    M = np.asarray(M, dtype=np.int16)
    v = np.asarray(v, dtype=np.int16)
    prods = field._mul[M, v[None, :]]
    acc = prods[:, 0].copy()
    for j in range(1, M.shape[1]):
        acc = field._add[acc, prods[:, j]]
    return acc


def matmul(A, B, field: SmallField) -> np.ndarray:
    A = np.asarray(A, dtype=np.int16)
    B = np.asarray(B, dtype=np.int16)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int16)
    for j in range(B.shape[1]):
        out[:, j] = matvec(A, B[:, j], field)
    return out


def inv(M, field: SmallField):
    """Inverse of a square matrix, or None if singular."""
    M = np.asarray(M, dtype=np.int16)
    n = M.shape[0]
    aug = np.concatenate([M, np.eye(n, dtype=np.int16)], axis=1)
    R, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return R[:, n:]


def solve(M, b, field: SmallField):
    """One solution x of M x = b (column convention), or None."""
    M = np.atleast_2d(np.asarray(M, dtype=np.int16))
    b = np.asarray(b, dtype=np.int16)
    rows, cols = M.shape
    aug = np.concatenate([M, b.reshape(-1, 1)], axis=1)
    R, pivots = rref(aug, field)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int16)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, cols]
    return x


def all_vectors(n: int, field: SmallField) -> np.ndarray:
    """(q^n, n) array of all coordinate vectors, code order ascending."""
    q = field.q
    total = q ** n
    out = np.zeros((total, n), dtype=np.int16)
    r = np.arange(total)
    for i in range(n):
        out[:, i] = (r // (q ** i)) % q
    return out


def rref_subspaces(n: int, w: int, field: SmallField):
    """Yield all w-dimensional subspaces of F_q^n, one RREF basis each.

    Yields (pivot_cols, batch) where batch has shape (count, w, n) and
    collects every RREF matrix with that pivot set.  The total number of
    matrices over all batches is the Gaussian binomial [n choose w]_q.
    """
    q = field.q
    if w == 0:
        yield (), np.zeros((1, 0, n), dtype=np.int16)
        return
    if w > n:
        return
    for pivots in combinations(range(n), w):
        free_slots = []
        for r in range(w):
            for c in range(pivots[r] + 1, n):
                if c not in pivots:
                    free_slots.append((r, c))
        nf = len(free_slots)
        count = q ** nf
        batch = np.zeros((count, w, n), dtype=np.int16)
        for r in range(w):
            batch[:, r, pivots[r]] = 1
        vals = np.arange(count)
        for s, (r, c) in enumerate(free_slots):
            batch[:, r, c] = (vals // (q ** s)) % q
        yield pivots, batch


def count_subspaces(n: int, w: int, q: int) -> int:
    from .bounds import gaussian_binomial
    return gaussian_binomial(n, w, q)
