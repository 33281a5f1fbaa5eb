"""Upper bounds on flag codes with prescribed minimum distance.

Two families of certificates are produced. The variety family exploits
forced disagreement: if the minimum distance d exceeds the largest
distance compatible with agreement at positions (i_1, ..., i_M), the
projection onto those positions is injective, so the code is no larger
than the flag variety of the projected type. The refined family pushes
further for a single position i: when d forces inequality at i, every
pair of i-th subspaces is at subspace distance at least bar-d_i (the
smallest feasible i-th component), so the projection is a constant
dimension code and any upper bound A_q(n, bar-d_i, t_i) applies.

Bounds are q-polynomials, compared symbolically: coefficient-wise
dominance decides when it can, otherwise evaluation at q = 2 picks the
winner and incomparable alternatives are reported as rivals. Known
values of A_q(n, d, k) come from a small built-in table of exact
results (spreads and partial spreads), a user override file, and a
generic Singleton-type fallback.

The override file is line oriented: ``n,d,k,<polynomial>,<source>``,
with ``#`` comments and blank lines ignored.
"""

from __future__ import annotations

import enum
import itertools
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from flagbound.distvec import (
    TypeVector,
    component_range,
    max_flag_distance,
    project_type,
)
from flagbound.dvalues import (
    check_pattern,
    max_distance_with_zeros,
    max_over_patterns,
)
from flagbound.qcalc import (
    QPolynomial,
    flag_variety_size,
    gaussian_binomial,
    parse_polynomial,
)


class Theorem(enum.Enum):
    """Which argument produced a bound certificate."""

    VARIETY = "variety"
    GRASSMANNIAN = "grassmannian"
    REFINED = "refined"
    REFINED_FULL = "refined-full"


@dataclass(frozen=True)
class SubspaceBoundEntry:
    """One known upper bound A_q(n, d, k) with its source."""

    n: int
    d: int
    k: int
    bound: QPolynomial
    source: str


@dataclass(frozen=True)
class BoundCertificate:
    """An upper bound together with the argument that proves it.

    ``pattern`` is the achieving zero pattern for the variety family
    and the achieving component index for the refined family.
    ``rivals`` lists alternatives that lose at q = 2 but are eventually
    smaller, i.e. cross below the winner at some larger q.
    """

    bound: QPolynomial
    theorem: Theorem
    pattern: Union[tuple, int]
    provenance: tuple = ()
    rivals: tuple = ()


_SHIPPED_EXACT = (
    SubspaceBoundEntry(7, 6, 3, parse_polynomial("q^4+1"),
                       "maximum partial 3-spread of F_q^7 (exact)"),
    SubspaceBoundEntry(6, 4, 2, parse_polynomial("q^4+q^2+1"),
                       "line spread of F_q^6 (exact)"),
    SubspaceBoundEntry(7, 4, 2, parse_polynomial("q^5+q^3+q"),
                       "maximum partial line spread of F_q^7 (exact)"),
)


def _validate_subspace_key(n: int, d: int, k: int):
    if not 1 <= k <= n - 1:
        raise ValueError(f"dimension k={k} out of range 1..{n - 1}")
    if d % 2 or not 2 <= d <= 2 * min(k, n - k):
        raise ValueError(
            f"subspace distance d={d} must be even with 2 <= d <= {2 * min(k, n - k)}"
        )


class SubspaceBoundProvider:
    """Best-known upper bounds A_q(n, d, k) for constant dimension codes.

    Candidates are gathered from user overrides, the built-in exact
    table, the full Grassmannian at d = 2, and the Singleton-type
    fallback; the smallest at q = 2 wins. Lookups are symmetric under
    k <-> n - k.
    """

    def __init__(self, overrides: Sequence[SubspaceBoundEntry] = ()):
        self.overrides = tuple(overrides)

    def lookup(self, n: int, d: int, k: int):
        """The best bound and the entry recording where it came from."""
        _validate_subspace_key(n, d, k)
        key = (n, d, min(k, n - k))
        candidates = [
            entry
            for entry in self.overrides + _SHIPPED_EXACT
            if (entry.n, entry.d, min(entry.k, entry.n - entry.k)) == key
        ]
        if d == 2:
            candidates.append(
                SubspaceBoundEntry(
                    n, d, k, gaussian_binomial(n, k),
                    "exact: distinct subspaces of one dimension are at distance >= 2",
                )
            )
        half = d // 2
        candidates.append(
            SubspaceBoundEntry(
                n, d, k,
                gaussian_binomial(n - half + 1, max(k, n - k) - half + 1),
                "Singleton-type upper bound for constant dimension codes",
            )
        )
        best = min(candidates, key=lambda entry: entry.bound.evaluate(2))
        return best.bound, best


def provider_lookup(n: int, d: int, k: int, provider: Optional[SubspaceBoundProvider] = None) -> QPolynomial:
    """The best available upper bound A_q(n, d, k) as a q-polynomial."""
    return (provider or SubspaceBoundProvider()).lookup(n, d, k)[0]


def load_bounds_file(path) -> tuple:
    """Read override entries from ``n,d,k,<polynomial>,<source>`` lines.

    Duplicate keys (up to k <-> n - k) keep the bound that is smaller
    at q = 2, with a warning.
    """
    entries: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            content = raw.split("#", 1)[0].strip()
            if not content:
                continue
            parts = content.split(",", 4)
            if len(parts) != 5 or not parts[4].strip():
                raise ValueError(
                    f"{path}:{lineno}: expected 'n,d,k,<polynomial>,<source>'"
                )
            try:
                n, d, k = (int(p) for p in parts[:3])
                bound = parse_polynomial(parts[3])
                _validate_subspace_key(n, d, k)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
            if bound.evaluate(2) <= 0:
                raise ValueError(f"{path}:{lineno}: bound must be positive at q=2")
            entry = SubspaceBoundEntry(n, d, k, bound, parts[4].strip())
            key = (n, d, min(k, n - k))
            if key in entries:
                kept = min(entries[key], entry, key=lambda e: e.bound.evaluate(2))
                warnings.warn(
                    f"{path}:{lineno}: duplicate bound for (n,d,k)={key}; "
                    f"keeping the smaller value at q=2"
                )
                entries[key] = kept
            else:
                entries[key] = entry
    return tuple(entries.values())


def _check_distance(d: int, t: TypeVector):
    top = max_flag_distance(t)
    if d % 2 or not 2 <= d <= top:
        raise ValueError(f"distance d={d} must be even with 2 <= d <= {top} for type {t}")


def _crosses_below(poly: QPolynomial, winner: QPolynomial) -> bool:
    # A candidate that loses at q=2 but is eventually smaller (negative
    # leading coefficient of the difference) crosses the winner at some
    # larger q and is worth reporting.
    diff = poly - winner
    return bool(diff) and diff.coefficients[-1] < 0


def _select(candidates):
    # candidates: [(QPolynomial, key)] with orderable keys. Winner is the
    # smallest at q=2 (ties to the smallest key); candidates that later
    # drop below the winner are reported as rivals.
    ranked = sorted(candidates, key=lambda c: (c[0].evaluate(2), c[1]))
    winner = ranked[0]
    rivals = []
    seen = {winner[0]}
    for poly, key in ranked[1:]:
        if poly in seen:
            continue
        seen.add(poly)
        if _crosses_below(poly, winner[0]):
            rivals.append((poly, key))
    return winner, tuple(rivals)


def disjointness_implied(d: int, t: TypeVector, pattern: Sequence[int]) -> bool:
    """Whether minimum distance d forces disagreement at the pattern.

    Sufficient condition only: codes below the threshold may still be
    disjoint at the pattern.
    """
    pattern = check_pattern(t, pattern)
    return d > max_distance_with_zeros(t, pattern)[1]


def m_disjointness_implied(d: int, t: TypeVector, M: int) -> bool:
    """Whether minimum distance d forces disagreement at every M-pattern."""
    return d > max_over_patterns(t, M)[1]


def variety_bound(d: int, t: TypeVector) -> BoundCertificate:
    """Best projection bound |F_q(projected type)| over forced patterns.

    A pattern qualifies when d exceeds the largest distance compatible
    with agreement there; the certificate reports the lexicographically
    first pattern achieving the smallest variety size. Tagged
    GRASSMANNIAN when a single-position pattern wins.
    """
    _check_distance(d, t)
    candidates = []
    for M in range(1, t.r + 1):
        for pattern in itertools.combinations(range(1, t.r + 1), M):
            if d > max_distance_with_zeros(t, pattern)[1]:
                dims = project_type(t, pattern).dims
                candidates.append((flag_variety_size(dims, t.n), pattern))
    if not candidates:
        # Unreachable for d >= 2: the all-positions pattern always
        # qualifies. Kept as the documented trivial fallback.
        return BoundCertificate(flag_variety_size(t.dims, t.n), Theorem.VARIETY, ())
    (bound, pattern), rivals = _select(candidates)
    theorem = Theorem.GRASSMANNIAN if len(pattern) == 1 else Theorem.VARIETY
    return BoundCertificate(bound, theorem, pattern, (), rivals)


def refined_bound(d: int, t: TypeVector, provider: Optional[SubspaceBoundProvider] = None) -> BoundCertificate:
    """Best constant-dimension bound over components forced to differ.

    For each qualifying index i (d exceeds the maximum distance with a
    zero at i), every pair of i-th subspaces is at distance at least
    bar-d_i, so A_q(n, bar-d_i, t_i) bounds the code. For the full
    type the qualifying indices form the symmetric window [i, n-i], so
    scanning them covers the whole window.
    """
    _check_distance(d, t)
    provider = provider or SubspaceBoundProvider()
    qualifying = [
        i
        for i in range(1, t.r + 1)
        if d > max_distance_with_zeros(t, (i,))[1]
    ]
    if not qualifying:
        raise ValueError(
            f"no component is forced to differ at distance {d} for type {t}"
        )
    candidates = []
    used = {}
    for i in qualifying:
        bar_d = component_range(d, t, i).lo
        assert bar_d >= 2  # a zero at i would contradict d > D(i)
        bound, entry = provider.lookup(t.n, bar_d, t.dims[i - 1])
        candidates.append((bound, i))
        used[i] = entry
    (bound, index), rivals = _select(candidates)
    theorem = Theorem.REFINED_FULL if t.is_full else Theorem.REFINED
    return BoundCertificate(bound, theorem, index, (used[index],), rivals)


def best_bound(d: int, t: TypeVector, provider: Optional[SubspaceBoundProvider] = None) -> BoundCertificate:
    """The smaller of the variety and refined certificates at q = 2.

    Ties go to the variety family, whose certificates are self
    contained.
    """
    variety = variety_bound(d, t)
    try:
        refined = refined_bound(d, t, provider)
    except ValueError:
        return variety
    if refined.bound.evaluate(2) < variety.bound.evaluate(2):
        if _crosses_below(variety.bound, refined.bound):
            refined = BoundCertificate(
                refined.bound, refined.theorem, refined.pattern,
                refined.provenance,
                refined.rivals + ((variety.bound, variety.pattern),),
            )
        return refined
    return variety


def min_distance_lower_bound_for_disjoint(projected_dists: Sequence[int], M: int) -> int:
    """Least minimum distance an M-disjoint code can certify.

    A flag pair in an M-disjoint code has at most M - 1 zero
    components, so at least r - M + 1 of the given per-component
    distances contribute; the bound is the smallest such subset sum.
    When fewer than r - M + 1 of the entries are nonzero, falls back
    to counting each forced component at the minimum distance 2.
    """
    dists = tuple(int(x) for x in projected_dists)
    if any(x < 0 or x % 2 for x in dists):
        raise ValueError("projected distances must be even and nonnegative")
    r = len(dists)
    if not 1 <= M <= r:
        raise ValueError(f"M={M} out of range 1..{r}")
    need = r - M + 1
    nonzero = sorted(x for x in dists if x)
    if len(nonzero) < need:
        return 2 * need
    return sum(nonzero[:need])
