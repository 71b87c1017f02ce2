"""Exact dense linear algebra over a :class:`~repwild.fields.Field`.

Prime fields run on int64 numpy arrays with vectorised row operations; every
other field runs on object arrays of exact scalars.  Pivoting is deterministic
(first nonzero column, smallest row index) so computed bases are reproducible.
"""

from __future__ import annotations

import numpy as np


def as_array(F, M, shape=None):
    if isinstance(M, np.ndarray) and (M.dtype == F.dtype or (F.dtype is object and M.dtype == object)):
        return M
    arr = F.array(M) if len(M) else F.zeros(shape if shape is not None else (0, 0))
    return arr


def matmul(F, A, B):
    if A.shape[1] == 0:
        return F.zeros((A.shape[0], B.shape[1]))
    if F.is_prime_field:
        return (A @ B) % F.p
    return A.dot(B)


def matvec(F, A, v):
    if A.shape[1] == 0:
        return F.zeros((A.shape[0],))
    if F.is_prime_field:
        return (A @ v) % F.p
    return A.dot(v)


def add(F, A, B):
    return (A + B) % F.p if F.is_prime_field else A + B


def sub(F, A, B):
    return (A - B) % F.p if F.is_prime_field else A - B


def scale(F, c, A):
    if F.is_prime_field:
        return (F.encode(c) * A) % F.p
    return A * F(c)


def is_zero(F, A):
    if F.is_prime_field:
        return not A.any()
    return not any(bool(x) for x in A.flat)


def rref(F, M):
    """Reduced row echelon form.  Returns (R, pivots) with R of shape (rank, ncols)."""
    M = np.array(M, dtype=F.dtype, copy=True)
    if M.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    rows, cols = M.shape
    if F.is_prime_field:
        return _rref_modp(M % F.p, F.p)
    return _rref_object(M)


def _rref_modp(M, p):
    rows, cols = M.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        if inv != 1:
            M[r, c:] = (M[r, c:] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            M[others, c:] = (M[others, c:] - np.outer(col[others], M[r, c:])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _rref_object(M):
    rows, cols = M.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for i in range(r, rows):
            if M[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        lead = M[r, c]
        if lead != 1:
            inv = 1 / lead
            M[r, c:] = M[r, c:] * inv
        prow = M[r, c:]
        for i in range(rows):
            if i != r:
                f = M[i, c]
                if f:
                    M[i, c:] = M[i, c:] - prow * f
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(F, M):
    if M.shape[0] == 0 or M.shape[1] == 0:
        return 0
    return len(rref(F, M)[1])


class Subspace:
    """Row-space basis with identity columns at ``pivots``.

    Coordinates of a member vector w are simply ``w[pivots]``.
    """

    def __init__(self, F, basis, pivots, ambient):
        self.F = F
        self.basis = basis
        self.pivots = list(pivots)
        self.ambient = ambient

    @classmethod
    def from_rows(cls, F, rows, ambient):
        rows = np.asarray(rows, dtype=F.dtype) if not isinstance(rows, np.ndarray) else rows
        if rows.size == 0:
            return cls(F, F.zeros((0, ambient)), [], ambient)
        R, piv = rref(F, rows.reshape(-1, ambient))
        return cls(F, R, piv, ambient)

    @classmethod
    def zero(cls, F, ambient):
        return cls(F, F.zeros((0, ambient)), [], ambient)

    @classmethod
    def full(cls, F, ambient):
        return cls(F, F.eye(ambient), list(range(ambient)), ambient)

    @property
    def dim(self):
        return self.basis.shape[0]

    def coords(self, w):
        """Coordinates of ``w`` (vector or matrix of column vectors) in this basis."""
        return w[self.pivots] if w.ndim == 1 else w[self.pivots, :]

    def contains(self, w):
        F = self.F
        if w.ndim == 1:
            back = matvec(F, self.basis.T, self.coords(w)) if self.dim else F.zeros((self.ambient,))
            return is_zero(F, sub(F, back, w))
        back = matmul(F, self.basis.T, self.coords(w)) if self.dim else F.zeros(w.shape)
        return is_zero(F, sub(F, back, w))

    def __repr__(self):
        return f"<Subspace dim={self.dim} of {self.ambient}>"


def nullspace(F, M, ncols=None):
    """Right null space {x : M x = 0} as a :class:`Subspace`."""
    if ncols is None:
        ncols = M.shape[1]
    if M.shape[0] == 0:
        return Subspace.full(F, ncols)
    R, piv = rref(F, M)
    free = [j for j in range(ncols) if j not in set(piv)]
    basis = F.zeros((len(free), ncols))
    if F.is_prime_field:
        for t, j in enumerate(free):
            basis[t, j] = 1
            for i, pc in enumerate(piv):
                basis[t, pc] = (-R[i, j]) % F.p
    else:
        one = F.one
        for t, j in enumerate(free):
            basis[t, j] = one
            for i, pc in enumerate(piv):
                basis[t, pc] = -R[i, j]
    return Subspace(F, basis, free, ncols)


def left_nullspace(F, M):
    """{y : y M = 0}."""
    return nullspace(F, M.T.copy(), M.shape[0])


def solve(F, M, b):
    """One solution x of M x = b, or None if the system is inconsistent."""
    rows, cols = M.shape
    if cols == 0:
        return F.zeros((0,)) if is_zero(F, b) else None
    aug = np.concatenate([M, b.reshape(-1, 1)], axis=1) if rows else F.zeros((0, cols + 1))
    if rows == 0:
        return F.zeros((cols,))
    R, piv = rref(F, aug)
    if piv and piv[-1] == cols:
        return None
    x = F.zeros((cols,))
    for i, pc in enumerate(piv):
        x[pc] = R[i, cols]
    return x


def solve_many(F, M, B):
    """X with M X = B (columns solved simultaneously); None if any column fails."""
    rows, cols = M.shape
    k = B.shape[1]
    if cols == 0:
        return F.zeros((0, k)) if is_zero(F, B) else None
    if rows == 0:
        return F.zeros((cols, k))
    R, piv = rref(F, np.concatenate([M, B], axis=1))
    if any(pc >= cols for pc in piv):
        return None
    X = F.zeros((cols, k))
    for i, pc in enumerate(piv):
        X[pc, :] = R[i, cols:]
    return X


def complement_basis(F, sub_rows, candidates, ambient):
    """Pick rows of ``candidates`` extending span(sub_rows), greedily in order.

    Returns the list of chosen candidate indices.
    """
    base = Subspace.from_rows(F, sub_rows, ambient) if len(sub_rows) else Subspace.zero(F, ambient)
    chosen = []
    cur_rows = base.basis
    cur_rank = base.dim
    # one rref over [sub; candidates] tells which candidates raise the rank
    if candidates.shape[0] == 0:
        return chosen
    stacked = np.concatenate([cur_rows, candidates], axis=0)
    # pivots of the transpose identify independent rows in order
    _, piv = rref(F, stacked.T.copy())
    for pc in piv:
        if pc >= cur_rank:
            chosen.append(pc - cur_rank)
    return chosen


def independent_rows(F, M):
    """Indices of a maximal set of independent rows of M chosen greedily in order."""
    if M.shape[0] == 0:
        return []
    _, piv = rref(F, M.T.copy())
    return piv


def inverse(F, M):
    n = M.shape[0]
    X = solve_many(F, M, F.eye(n))
    if X is None:
        raise ZeroDivisionError("singular matrix")
    return X
