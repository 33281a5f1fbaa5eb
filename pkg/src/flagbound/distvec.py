"""Distance vectors of flag pairs: characterization and enumeration.

Two flags of type t = (t_1, ..., t_r) on F_q^n are compared level by
level with the subspace distance, giving a distance vector
v = (v_1, ..., v_r). The realizable vectors are exactly the integer
vectors satisfying three structural conditions:

  * every component is even;
  * 0 <= v_i <= min(2*t_i, 2*(n - t_i));
  * |v_{i+1} - v_i| <= 2*(t_{i+1} - t_i) for consecutive positions.

The set D(d, t, n) of vectors realizable at flag distance d consists of
the structural vectors with component sum d. This module enumerates
those sets, computes the extremal vectors with a prescribed component
(the vectors written d(i; v) and D(i; v)), and the feasible range of a
single component at a fixed distance.

Positions are 1-based throughout, following the bar-d_i / D(i; v)
notation; q never appears — all of this is independent of the field.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence


@dataclass(frozen=True)
class TypeVector:
    """A flag type: strictly increasing dimensions inside F_q^n.

    The empty type (no dimensions) is allowed and describes the
    degenerate flag; it shows up as a part in split decompositions.
    """

    dims: tuple
    n: int

    def __init__(self, dims: Sequence[int], n: int):
        dims = tuple(int(d) for d in dims)
        n = int(n)
        if n < 1:
            raise ValueError(f"ambient dimension n={n} must be >= 1")
        if any(d < 1 or d > n - 1 for d in dims):
            raise ValueError(f"dimensions {dims} not within 1..{n - 1}")
        if any(a >= b for a, b in zip(dims, dims[1:])):
            raise ValueError(f"dimensions {dims} not strictly increasing")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "n", n)

    @property
    def r(self) -> int:
        """Number of flag levels."""
        return len(self.dims)

    @property
    def is_full(self) -> bool:
        return self.dims == tuple(range(1, self.n))

    def component_cap(self, i: int) -> int:
        """Largest possible i-th distance component (1-based i)."""
        t = self.dims[i - 1]
        return 2 * min(t, self.n - t)

    @property
    def caps(self) -> tuple:
        return tuple(self.component_cap(i) for i in range(1, self.r + 1))

    def __str__(self):
        dims = ",".join(map(str, self.dims))
        return f"({dims}) in dim {self.n}"


def full_type(n: int) -> TypeVector:
    """The full flag type (1, 2, ..., n-1) on F_q^n."""
    return TypeVector(tuple(range(1, n)), n)


@dataclass(frozen=True)
class DistanceVector:
    """A per-level distance vector together with the type it lives on."""

    components: tuple
    type: TypeVector

    def __init__(self, components: Sequence[int], type: TypeVector):
        components = tuple(int(v) for v in components)
        if len(components) != type.r:
            raise ValueError(
                f"vector {components} has {len(components)} components, type has {type.r}"
            )
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "type", type)

    @property
    def total(self) -> int:
        """The flag distance: sum of the components."""
        return sum(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.components)) + ")"


class ComponentRange(NamedTuple):
    """Feasible values of one component at a fixed flag distance."""

    lo: int
    hi: int


def max_flag_distance(t: TypeVector) -> int:
    """Largest possible flag distance for the type: sum of the caps.

    For the full type this is n^2/2 for even n and (n^2 - 1)/2 for odd
    n; a one-dimensional ambient space admits only the empty flag, so
    the maximum is 0.
    """
    return sum(t.caps)


def is_distance_vector(components: Sequence[int], t: TypeVector) -> bool:
    """Whether the vector is realizable by some flag pair of type t.

    Checks the three structural conditions (evenness, per-component
    range, bounded consecutive jumps); such a vector belongs to
    D(sum(components), t, n).
    """
    v = tuple(components)
    if len(v) != t.r:
        return False
    if any(x % 2 != 0 for x in v):
        return False
    if any(not 0 <= x <= t.component_cap(i + 1) for i, x in enumerate(v)):
        return False
    gaps = tuple(b - a for a, b in zip(t.dims, t.dims[1:]))
    return all(abs(b - a) <= 2 * g for a, b, g in zip(v, v[1:], gaps))


def _suffix_bounds(t: TypeVector):
    # minsum/maxsum of positions i.. given the value at position i-1
    # (prev=None at the start, where there is no jump constraint).
    caps = t.caps
    dims = t.dims
    r = t.r

    def feasible_values(i, prev):
        if prev is None:
            lo, hi = 0, caps[i]
        else:
            gap = 2 * (dims[i] - dims[i - 1])
            lo, hi = max(0, prev - gap), min(caps[i], prev + gap)
        return range(lo + (lo % 2), hi + 1, 2)

    @functools.cache
    def minsum(i, prev):
        if i == r:
            return 0
        # the feasible range is never empty: caps shrink by at most the
        # dimension gap, so a valid prev always has a valid successor
        return min(v + minsum(i + 1, v) for v in feasible_values(i, prev))

    @functools.cache
    def maxsum(i, prev):
        if i == r:
            return 0
        return max(v + maxsum(i + 1, v) for v in feasible_values(i, prev))

    return feasible_values, minsum, maxsum


def enumerate_distance_vectors(d: int, t: TypeVector) -> list:
    """All vectors of D(d, t, n) in ascending lexicographic order.

    d must be an even non-negative integer; distances above the type's
    maximum yield an empty list. The search prunes on exact suffix-sum
    bounds, so every explored branch produces a vector.
    """
    if d < 0 or d % 2 != 0:
        raise ValueError(f"flag distance d={d} must be even and >= 0")
    r = t.r
    if d > max_flag_distance(t):
        return []
    feasible_values, minsum, maxsum = _suffix_bounds(t)
    out = []
    acc = [0] * r

    def rec(i, prev, remaining):
        if i == r:
            assert remaining == 0  # guaranteed by the suffix-sum pruning
            out.append(DistanceVector(tuple(acc), t))
            return
        for v in feasible_values(i, prev):
            rest = remaining - v
            if minsum(i + 1, v) <= rest <= maxsum(i + 1, v):
                acc[i] = v
                rec(i + 1, v, rest)

    rec(0, None, d)
    return out


def project_type(t: TypeVector, pattern: Sequence[int]) -> TypeVector:
    """Sub-type picked out by 1-based positions (i_1 < ... < i_M)."""
    pattern = tuple(int(i) for i in pattern)
    if any(not 1 <= i <= t.r for i in pattern) or any(
        a >= b for a, b in zip(pattern, pattern[1:])
    ):
        raise ValueError(f"pattern {pattern} must be strictly increasing within 1..{t.r}")
    return TypeVector(tuple(t.dims[i - 1] for i in pattern), t.n)


def extremal_vector_with_component(t: TypeVector, i: int, v: int, kind: str) -> DistanceVector:
    """The minimal or maximal distance vector with i-th component v.

    kind="min" gives the vector d(i; v) with components
    max(0, v - 2|t_i - t_j|); kind="max" gives D(i; v) with components
    min(cap_j, v + 2|t_i - t_j|). Both are themselves realizable, and
    their sums bound the flag distances at which component i can take
    the value v.
    """
    if not 1 <= i <= t.r:
        raise ValueError(f"position i={i} out of range 1..{t.r}")
    if v % 2 != 0 or not 0 <= v <= t.component_cap(i):
        raise ValueError(f"component value {v} infeasible at position {i}")
    ti = t.dims[i - 1]
    if kind == "min":
        comps = tuple(max(0, v - 2 * abs(ti - tj)) for tj in t.dims)
    elif kind == "max":
        comps = tuple(
            min(t.component_cap(j + 1), v + 2 * abs(ti - tj))
            for j, tj in enumerate(t.dims)
        )
    else:
        raise ValueError(f"kind must be 'min' or 'max', not {kind!r}")
    return DistanceVector(comps, t)


def component_range(d: int, t: TypeVector, i: int) -> ComponentRange:
    """Range (bar-d_i, bar-D_i) of component i over D(d, t, n).

    A value v is feasible at distance d exactly when d lies between the
    sums of the extremal vectors d(i; v) and D(i; v).
    """
    if d < 0 or d % 2 != 0:
        raise ValueError(f"flag distance d={d} must be even and >= 0")
    if not 1 <= i <= t.r:
        raise ValueError(f"position i={i} out of range 1..{t.r}")
    feasible = [
        v
        for v in range(0, t.component_cap(i) + 1, 2)
        if extremal_vector_with_component(t, i, v, "min").total
        <= d
        <= extremal_vector_with_component(t, i, v, "max").total
    ]
    if not feasible:
        raise ValueError(f"no distance vector at distance {d} for type {t}")
    return ComponentRange(min(feasible), max(feasible))
