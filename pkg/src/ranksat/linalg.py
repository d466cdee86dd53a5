"""Matrices, subspaces and rank-metric codes over F_{q^m}.

Entries are packed element codes (see gftower); matrices are numpy
int64 arrays.  Exhaustive codeword sweeps take an explicit budget and
refuse beyond it rather than sampling.
"""

from __future__ import annotations

import numpy as np

from . import fqlinalg
from .gftower import FieldTower, expand

DEFAULT_BUDGET = 1 << 26


class BudgetExceeded(RuntimeError):
    """An exhaustive sweep would exceed the declared budget."""

    def __init__(self, message: str, completed_level: int | None = None,
                 coverage: float | None = None):
        super().__init__(message)
        self.completed_level = completed_level
        self.coverage = coverage


class MatrixExt:
    """A rows x cols matrix over the extension field of `tower`."""

    def __init__(self, tower: FieldTower, entries):
        A = np.asarray(entries, dtype=np.int64)
        if A.ndim != 2:
            raise ValueError("matrix entries must be 2-dimensional")
        if A.size and (A.min() < 0 or A.max() >= tower.order):
            raise ValueError("entry outside the extension field")
        self.tower = tower
        self.A = A
        self.rows, self.cols = A.shape

    def __eq__(self, other):
        return (isinstance(other, MatrixExt) and self.tower == other.tower
                and self.A.shape == other.A.shape
                and bool(np.all(self.A == other.A)))

    def __repr__(self):
        return f"MatrixExt({self.rows}x{self.cols} over q^m={self.tower.order})"


def as_matrix(tower: FieldTower, entries) -> np.ndarray:
    if isinstance(entries, MatrixExt):
        return entries.A
    return MatrixExt(tower, entries).A


# ----------------------------------------------------------------------
# Gaussian elimination over F_{q^m}
# ----------------------------------------------------------------------

def ext_rref(A, tower: FieldTower):
    """Reduced row echelon form over F_{q^m}; returns (R, pivot_cols)."""
    R = np.array(A, dtype=np.int64, copy=True)
    R = np.atleast_2d(R)
    rows, cols = R.shape
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
        pv = int(R[r, c])
        if pv != 1:
            R[r] = tower.mul_scalar(tower.inv(pv), R[r])
        for i in np.nonzero(R[:, c])[0]:
            if i == r:
                continue
            f = int(R[i, c])
            R[i] = tower.sub_arr(R[i], tower.mul_scalar(f, R[r]))
        pivots.append(c)
        r += 1
    return R[:r], pivots


def ext_rank(A, tower: FieldTower) -> int:
    return len(ext_rref(A, tower)[1])


def ext_kernel(A, tower: FieldTower) -> np.ndarray:
    """Canonical basis (RREF rows) of {x : A x = 0} over F_{q^m}."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    rows, cols = A.shape
    R, pivots = ext_rref(A, tower)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = tower.neg(int(R[r, fc]))
    if len(free) == 0:
        return basis
    B, _ = ext_rref(basis, tower)
    return B


def ext_solve(A, b, tower: FieldTower):
    """One solution x of A x = b, or None when inconsistent."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    b = np.asarray(b, dtype=np.int64)
    cols = A.shape[1]
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    R, pivots = ext_rref(aug, tower)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, cols]
    return x


def ext_matmul(A, B, tower: FieldTower) -> np.ndarray:
    """A @ B over F_{q^m} (small matrices; loops over the inner axis)."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    B = np.atleast_2d(np.asarray(B, dtype=np.int64))
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[1]):
        # outer contribution A[:, i] * B[i, :]
        contrib = tower.mul_arr(A[:, i][:, None], B[i, :][None, :])
        out = tower.add_arr(out, contrib)
    return out


# ----------------------------------------------------------------------
# Rank weight and rank supports
# ----------------------------------------------------------------------

def rank_weight(v, tower: FieldTower) -> int:
    """F_q-dimension of the span of the coordinates of v."""
    v = np.asarray(v, dtype=np.int64).ravel()
    if not v.size or not v.any():
        return 0
    return fqlinalg.rank(expand(v, tower), tower.base)


def rank_weight_batch(V, tower: FieldTower) -> np.ndarray:
    """Rank weights of each row of V (N x n), as an int array."""
    V = np.atleast_2d(np.asarray(V, dtype=np.int64))
    N, n = V.shape
    out = np.zeros(N, dtype=np.int16)
    if tower.base.p == 2 and tower.base.e == 1:
        # coordinates are already bit rows of the expansion
        for i in range(N):
            rows = sorted((int(x) for x in V[i] if x), reverse=True)
            r = 0
            while rows:
                pivot = rows[0]
                r += 1
                mask = 1 << (pivot.bit_length() - 1)
                rows = [x ^ pivot if x & mask else x for x in rows[1:]]
                rows = sorted((x for x in rows if x), reverse=True)
            out[i] = r
        return out
    dig = tower.digit_table()
    for i in range(N):
        out[i] = fqlinalg.rank(dig[V[i]], tower.base)
    return out


class SubspaceFq:
    """A subspace of F_q^N in canonical RREF form (hashable, comparable)."""

    def __init__(self, q: int, N: int, basis):
        self.q = q
        self.N = N
        self.basis = np.asarray(basis, dtype=np.int16).reshape(-1, N)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains(self, other: "SubspaceFq", field) -> bool:
        if other.dim > self.dim:
            return False
        stacked = np.concatenate([self.basis, other.basis], axis=0)
        return fqlinalg.rank(stacked, field) == self.dim

    def __eq__(self, other):
        return (isinstance(other, SubspaceFq) and self.q == other.q
                and self.N == other.N
                and self.basis.shape == other.basis.shape
                and bool(np.all(self.basis == other.basis)))

    def __hash__(self):
        return hash((self.q, self.N, self.basis.shape, self.basis.tobytes()))

    def __repr__(self):
        return f"SubspaceFq(dim={self.dim}, N={self.N}, q={self.q})"


def rank_support(v, tower: FieldTower) -> SubspaceFq:
    """Column space of the expansion of v, as a subspace of F_q^n."""
    v = np.asarray(v, dtype=np.int64).ravel()
    n = v.size
    mat = expand(v, tower)          # n x m over F_q
    R, _ = fqlinalg.rref(mat.T, tower.base)
    return SubspaceFq(tower.base.q, n, R)


# ----------------------------------------------------------------------
# Rank-metric codes
# ----------------------------------------------------------------------

class RankCode:
    """An F_{q^m}-linear [n, k] code given by a full-rank generator matrix."""

    def __init__(self, tower: FieldTower, generator):
        G = as_matrix(tower, generator)
        if G.shape[0] and ext_rank(G, tower) != G.shape[0]:
            raise ValueError("generator rows are not independent over F_{q^m}")
        self.tower = tower
        self.generator = G
        self.k, self.n = G.shape
        self._parity = None

    @property
    def parity_check(self) -> np.ndarray:
        if self._parity is None:
            H = ext_kernel(self.generator, self.tower) if self.k else \
                np.eye(self.n, dtype=np.int64)
            self._parity = H
            if self.k and H.shape[0]:
                prod = ext_matmul(self.generator, H.T, self.tower)
                assert not prod.any(), "generator * parity^T != 0"
        return self._parity

    def dual(self) -> "RankCode":
        """The [n, n-k] dual under the standard inner product."""
        return RankCode(self.tower, self.parity_check)

    def codewords(self, budget: int = DEFAULT_BUDGET) -> np.ndarray:
        total = self.tower.order ** self.k
        if total > budget:
            raise BudgetExceeded(
                f"codeword sweep needs {total} > budget {budget}")
        return span_vectors(self.generator, self.tower)

    def __repr__(self):
        return (f"RankCode([{self.n},{self.k}] over "
                f"q^m={self.tower.order})")


def span_vectors(rows, tower: FieldTower) -> np.ndarray:
    """All F_{q^m}-combinations of the given rows ((Q^k, n) array).

    Built row by row so each level reuses the partial sums of the
    previous one.
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=np.int64))
    k, n = rows.shape
    acc = np.zeros((1, n), dtype=np.int64)
    coeffs = np.arange(tower.order, dtype=np.int64)
    for i in range(k):
        scaled = tower.mul_arr(coeffs[:, None], rows[i][None, :])
        acc = tower.add_arr(acc[None, :, :], scaled[:, None, :]).reshape(-1, n)
    return acc


def fq_span_vectors(cols, tower: FieldTower, budget: int = DEFAULT_BUDGET
                    ) -> np.ndarray:
    """All F_q-combinations of the given columns ((q^n, k) array)."""
    C = np.atleast_2d(np.asarray(cols, dtype=np.int64))  # k x n, combine cols
    k, n = C.shape
    if tower.base.q ** n > budget:
        raise BudgetExceeded(
            f"F_q-span sweep needs {tower.base.q ** n} > budget {budget}")
    acc = np.zeros((1, k), dtype=np.int64)
    coeffs = np.arange(tower.base.q, dtype=np.int64)
    for j in range(n):
        scaled = tower.mul_arr(coeffs[:, None], C[:, j][None, :])
        acc = tower.add_arr(acc[None, :, :], scaled[:, None, :]).reshape(-1, k)
    return acc


def min_rank_distance(code: RankCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum rank weight over nonzero codewords (exhaustive)."""
    if code.k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    words = code.codewords(budget)
    weights = rank_weight_batch(words, code.tower)
    nz = weights[np.any(words != 0, axis=1)]
    return int(nz.min())


def weight_spectrum(code: RankCode, budget: int = DEFAULT_BUDGET) -> set[int]:
    """Set of rank weights of nonzero codewords; |result| = s_rk(C)."""
    if code.k == 0:
        return set()
    words = code.codewords(budget)
    weights = rank_weight_batch(words, code.tower)
    nz = weights[np.any(words != 0, axis=1)]
    return {int(w) for w in np.unique(nz)}


def dual(code: RankCode) -> RankCode:
    return code.dual()
