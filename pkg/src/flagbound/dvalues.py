"""Maximum flag distances when some subspaces are shared.

Fixing the positions i_1 < ... < i_M at which two flags of type t must
agree forces zeros there; the largest distance then attainable is
written D(i_1, ..., i_M)^(t, n). Its vector has the closed form

    j-th component = min(2 t_j, 2 (n - t_j), 2 |t_j - t_{i_1}|, ...,
                         2 |t_j - t_{i_M}|)

and the value splits additively: cutting the type at the shared
dimensions leaves M+1 independent subtypes, each contributing its own
unconstrained maximum. On the full type, patterns with the same
multiset of consecutive differences {i_1, i_2 - i_1, ..., n - i_M}
give the same value (the converse fails: D(3)^8 = 16 = D(4)^8 with
different multisets), which is how the tables deduplicate their rows.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple, Sequence

from flagbound.distvec import (
    DistanceVector,
    TypeVector,
    full_type,
    max_flag_distance,
)

ZeroPattern = tuple


def check_pattern(t: TypeVector, pattern: Sequence[int]) -> ZeroPattern:
    """Validate a 1-based strictly increasing pattern of positions."""
    pattern = tuple(int(i) for i in pattern)
    if any(not 1 <= i <= t.r for i in pattern) or any(
        a >= b for a, b in zip(pattern, pattern[1:])
    ):
        raise ValueError(f"pattern {pattern} must be strictly increasing within 1..{t.r}")
    return pattern


def max_distance_with_zeros(t: TypeVector, pattern: Sequence[int] = ()):
    """The vector and value of D(i_1, ..., i_M)^(t, n).

    The empty pattern gives the global maximum vector, whose components
    are the caps min(2 t_j, 2 (n - t_j)); the all-positions pattern
    forces the zero vector.
    """
    pattern = check_pattern(t, pattern)
    shared = [t.dims[i - 1] for i in pattern]
    comps = []
    for j, tj in enumerate(t.dims, start=1):
        c = t.component_cap(j)
        for z in shared:
            c = min(c, 2 * abs(tj - z))
        comps.append(c)
    vector = DistanceVector(comps, t)
    return vector, vector.total


class SplitDecomposition(NamedTuple):
    """The M+1 independent subtypes left after cutting at shared dims.

    Each part is a (subtype, ambient) pair with the subtype living in
    its own ambient dimension; parts between adjacent shared positions
    are empty types contributing 0.
    """

    parts: tuple

    @property
    def value(self) -> int:
        return sum(max_flag_distance(part) for part, _ in self.parts)


def split_decomposition(t: TypeVector, pattern: Sequence[int]) -> SplitDecomposition:
    """Cut the type at the pattern's dimensions into M+1 subtypes.

    Part k collects the dimensions strictly between t_{i_k} and
    t_{i_{k+1}}, rebased by t_{i_k}, inside ambient t_{i_{k+1}} - t_{i_k}
    (with t_{i_0} = 0 and t_{i_{M+1}} = n). The part maxima add up to
    the value of max_distance_with_zeros.
    """
    pattern = check_pattern(t, pattern)
    if not pattern:
        raise ValueError("split_decomposition needs at least one shared position")
    cuts = [0] + [t.dims[i - 1] for i in pattern] + [t.n]
    boundary_positions = [0] + list(pattern) + [t.r + 1]
    parts = []
    for k in range(len(cuts) - 1):
        lo_pos, hi_pos = boundary_positions[k], boundary_positions[k + 1]
        dims = tuple(t.dims[j - 1] - cuts[k] for j in range(lo_pos + 1, hi_pos))
        parts.append((TypeVector(dims, cuts[k + 1] - cuts[k]), cuts[k + 1] - cuts[k]))
    return SplitDecomposition(tuple(parts))


def canonical_difference_multiset(n: int, pattern: Sequence[int]) -> tuple:
    """Sorted multiset {i_1, i_2 - i_1, ..., n - i_M} on the full type.

    Equal multisets imply equal D(i_1, ..., i_M)^n values; the tables
    use this to list one representative pattern per class. The converse
    implication does not hold.
    """
    pattern = check_pattern(full_type(n), pattern)
    edges = [0] + list(pattern) + [n]
    return tuple(sorted(b - a for a, b in zip(edges, edges[1:])))


def explicit_Di_full(n: int, i: int) -> int:
    """Closed form of D(i)^n on the full type.

    (i^2 + (n-i)^2)/2 when n and i are both even, one less when n is
    even and i odd, and (i^2 + (n-i)^2 - 1)/2 when n is odd.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"position i={i} out of range 1..{n - 1}")
    s = i * i + (n - i) * (n - i)
    if n % 2 == 1:
        return (s - 1) // 2
    return s // 2 if i % 2 == 0 else (s - 2) // 2


def max_over_patterns(t: TypeVector, M: int):
    """Largest D value over all patterns of M shared positions.

    Returns (pattern, value) with the lexicographically smallest
    achieving pattern. On the full type the answer is D^(n-M), achieved
    by (1, ..., M), without enumeration.
    """
    if not 1 <= M <= t.r:
        raise ValueError(f"M={M} out of range 1..{t.r}")
    if t.is_full:
        return tuple(range(1, M + 1)), max_flag_distance(full_type(t.n - M))
    best_pattern, best = None, -1
    for pattern in itertools.combinations(range(1, t.r + 1), M):
        _, value = max_distance_with_zeros(t, pattern)
        if value > best:
            best_pattern, best = pattern, value
    return best_pattern, best


def achieving_patterns(t: TypeVector, M: int) -> list:
    """All size-M patterns attaining the max_over_patterns value."""
    _, best = max_over_patterns(t, M)
    return [
        pattern
        for pattern in itertools.combinations(range(1, t.r + 1), M)
        if max_distance_with_zeros(t, pattern)[1] == best
    ]
