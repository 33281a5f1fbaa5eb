"""Gauss-Jordan kernels over prime fields, pure Python.

Fallback twin of flagbound._fastcore; see flagbound.linalg for the
backend selection logic.
"""

import numpy as np

BACKEND = "pure"


def _rref_rows(rows, p):
    # rows: list of lists, consumed destructively; returns (rref rows, rank)
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        if rows[r][c] != 1:
            inv = pow(rows[r][c], p - 2, p)
            rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f:
                ri, rr = rows[i], rows[r]
                rows[i] = [(x - f * y) % p for x, y in zip(ri, rr)]
        r += 1
    return rows[:r], r


def rref(mat, p):
    """Return (canonical RREF array with zero rows dropped, rank)."""
    a = np.asarray(mat, dtype=np.int64)
    reduced, rank = _rref_rows([list(map(int, row)) for row in a], p)
    out = np.array(reduced, dtype=np.int64).reshape(rank, a.shape[1] if a.ndim == 2 else 0)
    return out, rank


def rank(mat, p):
    """Rank of an integer matrix mod p."""
    a = np.asarray(mat, dtype=np.int64)
    if a.size == 0:
        return 0
    return _rref_rows([list(map(int, row)) for row in a], p)[1]


def pairwise_distance_table(bases, p):
    """All-pairs subspace distances for equal-dimensional RREF bases.

    bases: int64 array of shape (N, k, n). Returns an int16 (N, N) array
    with entry 2*(rank(stack of bases i and j) - k).
    """
    b = np.asarray(bases, dtype=np.int64)
    N, k, _ = b.shape
    rows_of = [[list(map(int, row)) for row in b[i]] for i in range(N)]
    out = np.zeros((N, N), dtype=np.int16)
    for i in range(N):
        for j in range(i + 1, N):
            stacked = [row[:] for row in rows_of[i]] + [row[:] for row in rows_of[j]]
            d = 2 * (_rref_rows(stacked, p)[1] - k)
            out[i, j] = d
            out[j, i] = d
    return out
