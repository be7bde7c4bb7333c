"""Dense exact linear algebra mod p, vectorized with int64 numpy arrays.

Entries stay reduced in [0, p); p is capped at 2^31 - 1 so products fit in
64 bits.  Pivots are chosen first-come, so every routine is deterministic.
"""

from __future__ import annotations

import numpy as np


def as_matrix(rows, ncols, p):
    A = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, r in enumerate(rows):
        A[i, :] = r
    return A % p


def row_echelon_mod(A, p, reduced=True):
    """Row echelon form mod p: returns (R, pivot_cols), R has rank many rows.

    With ``reduced`` the pivot columns are cleared above as well (RREF).
    Reduction mod p is deferred: each entry receives at most one update per
    pivot, bounded by p^2, so with word-sized p nothing overflows int64 and
    a single final ``% p`` pass suffices.  Only the pivot row and the pivot
    column are reduced eagerly.  Updates touch only rows with a nonzero
    factor, which keeps the sparse monomial matrices here cheap.
    """
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    if (p - 1) * (p - 1) * (max(rows, cols) + 2) >= 2**62:
        raise ValueError("modulus too large for deferred reduction")
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        R[r:, c] %= p
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] %= p
        inv = pow(int(R[r, c]), p - 2, p)
        R[r] = R[r] * inv % p
        below = np.nonzero(R[r + 1 :, c])[0]
        if below.size:
            idx = r + 1 + below
            R[idx] -= R[idx, c, None] * R[r]
        pivots.append(c)
        r += 1
    R = R[:r] % p
    if reduced:
        for k in range(r - 1, -1, -1):
            c = pivots[k]
            R[k] %= p  # keep the subtrahend row reduced: bounds stay linear
            R[:k, c] %= p
            above = np.nonzero(R[:k, c])[0]
            if above.size:
                R[above] -= R[above, c, None] * R[k]
        R %= p
    return R, pivots


def rank_mod(A, p) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    _, pivots = row_echelon_mod(A, p, reduced=False)
    return len(pivots)


def kernel_mod(A, p):
    """Basis of the right kernel of A mod p, as rows of the returned matrix.

    Basis vectors are indexed by the free columns, each with a 1 in its free
    position, which makes the result deterministic.
    """
    A = np.asarray(A, dtype=np.int64)
    rows, cols = A.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = row_echelon_mod(A, p, reduced=True)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-int(R[r, fc])) % p
    return basis


class RowSpan:
    """Incremental row-space tracker mod p (membership tests, small scale)."""

    def __init__(self, ncols, p):
        self.p = p
        self.ncols = ncols
        self.rows = np.zeros((0, ncols), dtype=np.int64)
        self.pivots = []

    def reduce(self, vec):
        v = np.array(vec, dtype=np.int64) % self.p
        for r, pc in enumerate(self.pivots):
            c = int(v[pc])
            if c:
                v = (v - c * self.rows[r]) % self.p
        return v

    def add(self, vec) -> bool:
        """Insert the vector; True if it enlarged the span."""
        v = self.reduce(vec)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        pc = int(nz[0])
        v = v * pow(int(v[pc]), self.p - 2, self.p) % self.p
        if len(self.pivots):
            col = self.rows[:, pc].copy()
            hit = np.nonzero(col)[0]
            if hit.size:
                self.rows[hit] = (self.rows[hit] - np.outer(col[hit], v)) % self.p
        self.rows = np.vstack([self.rows, v])
        self.pivots.append(pc)
        return True

    def add_many(self, mat):
        for row in np.asarray(mat, dtype=np.int64):
            self.add(row)

    def contains(self, vec) -> bool:
        return not np.any(self.reduce(vec))

    @property
    def rank(self):
        return len(self.pivots)


def span_basis(vectors, p):
    """Echelon basis of the row space: (rows, pivot columns)."""
    A = np.asarray(vectors, dtype=np.int64)
    if A.size == 0:
        return A.reshape(0, A.shape[1] if A.ndim > 1 else 0), []
    return row_echelon_mod(A, p, reduced=False)
