"""Linear algebra over prime fields F_p, with backend selection.

Two interchangeable kernels provide row reduction: a compiled one
(flagbound._fastcore, built from Cython) and a pure-Python one
(flagbound._purecore). The compiled kernel is preferred when it
imported cleanly; setting the environment variable FLAGBOUND_PURE=1
forces the pure backend, which is handy for debugging and for timing
comparisons (see benchmarks/).

The wrappers below work on immutable row tuples so callers can keep
subspace bases hashable.
"""

import os

if os.environ.get("FLAGBOUND_PURE") == "1":
    from flagbound import _purecore as _core
else:
    try:
        from flagbound import _fastcore as _core  # type: ignore[attr-defined]
    except ImportError:
        from flagbound import _purecore as _core


def backend() -> str:
    """Name of the active kernel: 'compiled' or 'pure'."""
    return _core.BACKEND


def rref_rows(rows, p: int):
    """Canonical RREF of a matrix given as a tuple of row tuples.

    Returns (rows, rank) where rows is a tuple of row tuples with zero
    rows dropped. The result is canonical: two row spaces are equal iff
    their rref_rows outputs are equal.
    """
    if not rows:
        return (), 0
    mat, rank = _core.rref([list(r) for r in rows], p)
    return tuple(tuple(int(x) for x in row) for row in mat), rank


def rank_of_rows(rows, p: int) -> int:
    """Rank over F_p of a matrix given as a sequence of row tuples."""
    if not rows:
        return 0
    return int(_core.rank([list(r) for r in rows], p))


def stacked_rank(rows_a, rows_b, p: int) -> int:
    """Rank of the span of two row collections taken together."""
    return rank_of_rows(tuple(rows_a) + tuple(rows_b), p)


def pairwise_distance_table(bases, p: int):
    """All-pairs subspace distance matrix; see the backend docstrings."""
    return _core.pairwise_distance_table(bases, p)
