# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Gauss-Jordan kernels over prime fields, compiled.

Same contract as flagbound._purecore; see flagbound.linalg for the
backend selection logic.
"""

import numpy as np

BACKEND = "compiled"


cdef inline long _inv_mod(long a, long p):
    # Fermat inverse, p prime, 0 < a < p.
    cdef long result = 1
    cdef long base = a % p
    cdef long e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


cdef long _rref_inplace(long[:, ::1] m, long nrows, long ncols, long p):
    # Reduce m to reduced row echelon form in place; returns the rank.
    cdef long r = 0
    cdef long c, i, j, piv, f, inv, v
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                v = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = v
        if m[r, c] != 1:
            inv = _inv_mod(m[r, c], p)
            for j in range(c, ncols):
                m[r, j] = (m[r, j] * inv) % p
        for i in range(nrows):
            if i != r and m[i, c] != 0:
                f = m[i, c]
                for j in range(c, ncols):
                    v = (m[i, j] - f * m[r, j]) % p
                    if v < 0:
                        v += p
                    m[i, j] = v
        r += 1
    return r


def rref(mat, long p):
    """Return (canonical RREF array with zero rows dropped, rank)."""
    a = np.array(mat, dtype=np.int64, order="C", copy=True)
    if a.ndim != 2:
        a = a.reshape(0, 0) if a.size == 0 else a.reshape(1, -1)
    cdef long[:, ::1] mv = a
    cdef long rank = _rref_inplace(mv, a.shape[0], a.shape[1], p)
    return a[:rank].copy(), rank


def rank(mat, long p):
    """Rank of an integer matrix mod p."""
    a = np.array(mat, dtype=np.int64, order="C", copy=True)
    if a.ndim != 2 or a.shape[0] == 0:
        return 0
    cdef long[:, ::1] mv = a
    return _rref_inplace(mv, a.shape[0], a.shape[1], p)


def pairwise_distance_table(bases, long p):
    """All-pairs subspace distances for equal-dimensional RREF bases.

    bases: int64 array of shape (N, k, n). Returns an int16 (N, N) array
    with entry 2*(rank(stack of bases i and j) - k).
    """
    b = np.ascontiguousarray(bases, dtype=np.int64)
    cdef long[:, :, ::1] bv = b
    cdef long N = b.shape[0]
    cdef long k = b.shape[1]
    cdef long n = b.shape[2]
    out = np.zeros((N, N), dtype=np.int16)
    cdef short[:, ::1] ov = out
    scratch = np.empty((2 * k, n), dtype=np.int64)
    cdef long[:, ::1] sv = scratch
    cdef long i, j, r, c, d
    for i in range(N):
        for j in range(i + 1, N):
            for r in range(k):
                for c in range(n):
                    sv[r, c] = bv[i, r, c]
                    sv[k + r, c] = bv[j, r, c]
            d = 2 * (_rref_inplace(sv, 2 * k, n, p) - k)
            ov[i, j] = d
            ov[j, i] = d
    return out
