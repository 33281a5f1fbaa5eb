"""Flags over prime fields: the computational ground truth.

Everything the rest of the package claims about distance vectors can be
checked here by explicit linear algebra over F_p: enumerate whole flag
varieties, measure per-level subspace distances, analyze user-supplied
codes, and construct a flag pair realizing any valid distance vector.

Subspaces are held in reduced row echelon form, the unique canonical
representative of a row space, so equality and hashing are structural.
Only prime fields are supported (q = p < 2^16); the theory is q-generic
and primes suffice for every verification done here.

The flag-code file format is line oriented::

    q=2
    n=4
    type=1,2,3
    flag
    1 0 0 0
    0 1 0 0
    0 0 0 1
    flag
    ...

Each ``flag`` block carries a t_r x n nested-basis matrix: the i-th
subspace is the row span of its first t_i rows. Blank lines and ``#``
comments are ignored; parse errors report line numbers.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

import numpy as np

from flagbound import linalg
from flagbound.distvec import (
    DistanceVector,
    TypeVector,
    is_distance_vector,
)
from flagbound.dvalues import check_pattern
from flagbound.qcalc import flag_variety_size, gaussian_binomial

DEFAULT_ENUMERATION_LIMIT = 10**7


class EnumerationLimitError(RuntimeError):
    """Raised when a requested enumeration would be too large."""


@functools.lru_cache(maxsize=None)
def _require_prime(q: int):
    if q < 2 or q >= 2**16:
        raise ValueError(f"modulus q={q} must be a prime below 2^16")
    if any(q % f == 0 for f in range(2, int(q**0.5) + 1)):
        raise ValueError(f"modulus q={q} is not prime (extension fields unsupported)")


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^n, stored as its reduced row echelon basis."""

    rows: tuple
    n: int
    q: int

    def __init__(self, rows: Sequence[Sequence[int]], n: int, q: int):
        _require_prime(q)
        if n < 1:
            raise ValueError(f"ambient dimension n={n} must be >= 1")
        reduced_input = tuple(tuple(int(x) % q for x in row) for row in rows)
        if any(len(row) != n for row in reduced_input):
            raise ValueError(f"rows must have length n={n}")
        canonical, _ = linalg.rref_rows(reduced_input, q)
        object.__setattr__(self, "rows", canonical)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", q)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return linalg.stacked_rank(self.rows, other.rows, self.q) == self.dim

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace(self.rows + other.rows, self.n, self.q)

    def _check_compatible(self, other: "Subspace"):
        if self.n != other.n or self.q != other.q:
            raise ValueError(
                f"subspaces live in different spaces: "
                f"F_{self.q}^{self.n} vs F_{other.q}^{other.n}"
            )

    def __str__(self):
        return "<" + "; ".join(" ".join(map(str, row)) for row in self.rows) + ">"


def _canonical_subspace(rows: tuple, n: int, q: int) -> Subspace:
    # Enumeration fast path: rows must already be a canonical RREF basis
    # over F_q (tuple of row tuples); skips re-reduction and validation.
    sub = object.__new__(Subspace)
    object.__setattr__(sub, "rows", rows)
    object.__setattr__(sub, "n", n)
    object.__setattr__(sub, "q", q)
    return sub


def subspace_distance(U: Subspace, V: Subspace) -> int:
    """dim(U+V) - dim(U∩V) for equal-dimensional subspaces."""
    U._check_compatible(V)
    if U.dim != V.dim:
        raise ValueError(f"dimensions differ: {U.dim} vs {V.dim}")
    return 2 * (linalg.stacked_rank(U.rows, V.rows, U.q) - U.dim)


@dataclass(frozen=True)
class Flag:
    """A nested chain of subspaces of prescribed dimensions."""

    subspaces: tuple
    n: int
    q: int

    def __init__(self, subspaces: Sequence[Subspace], n: int, q: int):
        _require_prime(q)
        subspaces = tuple(subspaces)
        for sub in subspaces:
            if sub.n != n or sub.q != q:
                raise ValueError("all subspaces must live in the same F_q^n")
        for a, b in zip(subspaces, subspaces[1:]):
            if not (a.dim < b.dim and b.contains(a)):
                raise ValueError(
                    f"subspaces of dimensions {a.dim} and {b.dim} are not strictly nested"
                )
        if subspaces and not 1 <= subspaces[0].dim <= subspaces[-1].dim <= n - 1:
            raise ValueError("flag dimensions must lie within 1..n-1")
        object.__setattr__(self, "subspaces", subspaces)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "q", q)

    @property
    def type(self) -> TypeVector:
        return TypeVector(tuple(sub.dim for sub in self.subspaces), self.n)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]], t: TypeVector, q: int) -> "Flag":
        """Build a flag from a t_r x n nested-basis matrix.

        The i-th subspace is the row span of the first t_i rows; every
        prefix must have full rank.
        """
        rows = [tuple(int(x) for x in row) for row in rows]
        if t.r == 0:
            if rows:
                raise ValueError("empty type takes no basis rows")
            return cls((), t.n, q)
        if len(rows) != t.dims[-1]:
            raise ValueError(f"expected {t.dims[-1]} rows for type {t}, got {len(rows)}")
        subspaces = []
        for ti in t.dims:
            sub = Subspace(rows[:ti], t.n, q)
            if sub.dim != ti:
                raise ValueError(f"first {ti} rows have rank {sub.dim}, need {ti}")
            subspaces.append(sub)
        return cls(tuple(subspaces), t.n, q)

    def nested_basis(self) -> tuple:
        """A t_r x n matrix whose first t_i rows span the i-th subspace.

        Deterministic: each level is completed greedily from the RREF
        rows of its subspace.
        """
        rows: list = []
        for sub in self.subspaces:
            for row in sub.rows:
                if linalg.stacked_rank(rows, (row,), self.q) > len(rows):
                    rows.append(row)
            assert len(rows) == sub.dim
        return tuple(rows)


def _nested_flag(subspaces: tuple, n: int, q: int) -> Flag:
    # Enumeration fast path: the chain must already be strictly nested
    # with dimensions within 1..n-1; skips the containment checks.
    flag = object.__new__(Flag)
    object.__setattr__(flag, "subspaces", subspaces)
    object.__setattr__(flag, "n", n)
    object.__setattr__(flag, "q", q)
    return flag


def distance_vector_of_pair(F: Flag, G: Flag) -> DistanceVector:
    """Component-wise subspace distances of two flags of one type."""
    if F.type != G.type or F.q != G.q:
        raise ValueError("flags must share type and field")
    comps = tuple(subspace_distance(u, v) for u, v in zip(F.subspaces, G.subspaces))
    return DistanceVector(comps, F.type)


@dataclass(frozen=True)
class FlagCode:
    """A nonempty collection of distinct flags of one type."""

    flags: tuple

    def __init__(self, flags: Sequence[Flag]):
        flags = tuple(flags)
        if not flags:
            raise ValueError("a flag code needs at least one flag")
        first = flags[0]
        for f in flags:
            if f.type != first.type or f.q != first.q:
                raise ValueError("all flags must share type and field")
        if len(set(flags)) != len(flags):
            raise ValueError("duplicate flags in code")
        object.__setattr__(self, "flags", flags)

    @property
    def q(self) -> int:
        return self.flags[0].q

    @property
    def type(self) -> TypeVector:
        return self.flags[0].type

    def __len__(self):
        return len(self.flags)

    def __iter__(self):
        return iter(self.flags)


class CodeCensus(NamedTuple):
    """Distance statistics of a code's distinct flag pairs."""

    min_distance: int
    vectors_at_min: frozenset
    all_pairs: Counter


def code_census(code: FlagCode) -> CodeCensus:
    """Minimum distance, its vector set D(C), and the full pair census.

    A single-flag code has minimum distance 0 and empty censuses.
    """
    pairs = Counter()
    for F, G in itertools.combinations(code.flags, 2):
        v = distance_vector_of_pair(F, G)
        pairs[(v.total, v)] += 1
    if not pairs:
        return CodeCensus(0, frozenset(), Counter())
    dmin = min(d for d, _ in pairs)
    at_min = frozenset(v for (d, v) in pairs if d == dmin)
    return CodeCensus(dmin, at_min, pairs)


def is_disjoint(code: FlagCode, pattern: Sequence[int]):
    """Whether no two flags agree at all the pattern positions at once.

    Returns (True, None) or (False, witness_pair).
    """
    pattern = check_pattern(code.type, pattern)
    for F, G in itertools.combinations(code.flags, 2):
        if all(F.subspaces[i - 1] == G.subspaces[i - 1] for i in pattern):
            return False, (F, G)
    return True, None


def is_m_disjoint(code: FlagCode, M: int):
    """Whether the code is disjoint for every pattern of M positions.

    Returns (True, None) or (False, (pattern, witness_pair)).
    """
    r = code.type.r
    if not 1 <= M <= r:
        raise ValueError(f"M={M} out of range 1..{r}")
    for pattern in itertools.combinations(range(1, r + 1), M):
        ok, witness = is_disjoint(code, pattern)
        if not ok:
            return False, (pattern, witness)
    return True, None


def enumerate_grassmannian(q: int, n: int, k: int, limit: Optional[int] = DEFAULT_ENUMERATION_LIMIT) -> Iterator[Subspace]:
    """All k-dimensional subspaces of F_q^n, each exactly once.

    Streams RREF matrices directly: choose pivot columns, then run an
    odometer over the free entries. Refuses when the predicted count
    exceeds the limit (pass limit=None to lift the guard).
    """
    _require_prime(q)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    predicted = gaussian_binomial(n, k).evaluate(q)
    if limit is not None and predicted > limit:
        raise EnumerationLimitError(
            f"Grassmannian G_{q}({k},{n}) has {predicted} elements, over the limit {limit}"
        )
    for pivots in itertools.combinations(range(n), k):
        free = [
            (i, j)
            for i in range(k)
            for j in range(n)
            if j > pivots[i] and j not in pivots
        ]
        for values in itertools.product(range(q), repeat=len(free)):
            mat = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                mat[i][p] = 1
            for (i, j), x in zip(free, values):
                mat[i][j] = x
            # by construction mat is already in canonical RREF
            yield _canonical_subspace(tuple(map(tuple, mat)), n, q)


def _superspaces(base: Optional[Subspace], k: int, n: int, q: int) -> Iterator[Subspace]:
    # Superspaces of dimension k containing base, via the bijection with
    # (k - dim base)-subspaces of the quotient, whose coordinates are the
    # non-pivot columns of base.
    base_rows = base.rows if base is not None else ()
    base_dim = len(base_rows)
    pivot_cols = {next(j for j, x in enumerate(row) if x) for row in base_rows}
    complement = [j for j in range(n) if j not in pivot_cols]
    for quotient_sub in enumerate_grassmannian(q, n - base_dim, k - base_dim, limit=None):
        lifted = []
        for qrow in quotient_sub.rows:
            row = [0] * n
            for col, x in zip(complement, qrow):
                row[col] = x
            lifted.append(row)
        # The lifted rows sit at non-pivot columns of the base and are in
        # RREF among themselves, so the union only needs the base rows
        # cleared above the lifted pivots and a resort by pivot column to
        # be the canonical RREF of the sum.
        cleared = [list(row) for row in base_rows]
        for lrow in lifted:
            piv = next(j for j, x in enumerate(lrow) if x)
            for brow in cleared:
                x = brow[piv]
                if x:
                    for j in range(piv, n):
                        brow[j] = (brow[j] - x * lrow[j]) % q
        merged = sorted(cleared + lifted, key=lambda row: next(j for j, x in enumerate(row) if x))
        yield _canonical_subspace(tuple(tuple(row) for row in merged), n, q)


def enumerate_flag_variety(q: int, t: TypeVector, limit: Optional[int] = DEFAULT_ENUMERATION_LIMIT) -> Iterator[Flag]:
    """All flags of type t over F_q, each exactly once.

    Depth-first lifts through the dimension chain; the guard compares
    the exact predicted variety size against the limit.
    """
    _require_prime(q)
    predicted = flag_variety_size(t.dims, t.n).evaluate(q)
    if limit is not None and predicted > limit:
        raise EnumerationLimitError(
            f"flag variety of type {t} over F_{q} has {predicted} elements, over the limit {limit}"
        )

    def extend(chain, dims_left):
        if not dims_left:
            yield _nested_flag(chain, t.n, q)
            return
        prev = chain[-1] if chain else None
        for sup in _superspaces(prev, dims_left[0], t.n, q):
            yield from extend(chain + (sup,), dims_left[1:])

    yield from extend((), t.dims)


def _fresh_standard_columns(S: Subspace) -> list:
    # Standard basis vectors at the non-pivot columns of S are jointly
    # independent modulo S, in ascending column order.
    pivot_cols = {next(j for j, x in enumerate(row) if x) for row in S.rows}
    return [j for j in range(S.n) if j not in pivot_cols]


def _standard_rows(cols: Sequence[int], n: int) -> list:
    return [tuple(1 if j == c else 0 for j in range(n)) for c in cols]


def _greedy_extension(base_rows: tuple, pool_rows: tuple, count: int, q: int) -> list:
    # First `count` pool rows that are independent of base_rows, scanned
    # in order: the lexicographically earliest valid choice.
    rows = list(base_rows)
    added = []
    for row in pool_rows:
        if len(added) == count:
            break
        if linalg.stacked_rank(rows, (row,), q) > len(rows):
            rows.append(row)
            added.append(row)
    assert len(added) == count
    return added


def realize_distance_vector(v: DistanceVector, q: int):
    """A flag pair (F, F') of v's type with distance vector exactly v.

    Constructive induction on the levels. Writing v = 2w: the first
    subspaces share t_1 - w_1 standard vectors and differ in w_1; at
    each later step with jump l_i = w_{i+1} - w_i, either both flags
    grow by fresh directions (l_i >= 0: l_i private to each side plus
    t_{i+1} - t_i - l_i shared), or they first absorb part of each
    other's span (l_i < 0) and then grow by a shared complement. All
    choices take the lowest-index candidates, so the output is
    deterministic.
    """
    _require_prime(q)
    t = v.type
    if not is_distance_vector(v.components, t):
        raise ValueError(f"{v} is not a distance vector for type {t}")
    n = t.n
    if t.r == 0:
        return Flag((), n, q), Flag((), n, q)
    w = [c // 2 for c in v.components]
    t1, w1 = t.dims[0], w[0]
    F = [Subspace(_standard_rows(range(t1), n), n, q)]
    Fp = [
        Subspace(
            _standard_rows(list(range(t1 - w1)) + list(range(t1, t1 + w1)), n), n, q
        )
    ]
    for i in range(t.r - 1):
        delta = t.dims[i + 1] - t.dims[i]
        l = w[i + 1] - w[i]
        S = F[i].sum_with(Fp[i])
        fresh = _fresh_standard_columns(S)
        if l >= 0:
            m = delta - l
            a_rows = _standard_rows(fresh[:l], n)
            b_rows = _standard_rows(fresh[l : 2 * l], n)
            c_rows = _standard_rows(fresh[2 * l : 2 * l + m], n)
            F.append(Subspace(F[i].rows + tuple(a_rows + c_rows), n, q))
            Fp.append(Subspace(Fp[i].rows + tuple(b_rows + c_rows), n, q))
        else:
            v_rows = _greedy_extension(F[i].rows, S.rows, -l, q)
            vp_rows = _greedy_extension(Fp[i].rows, S.rows, -l, q)
            w_rows = _standard_rows(fresh[: delta + l], n)
            F.append(Subspace(F[i].rows + tuple(v_rows + w_rows), n, q))
            Fp.append(Subspace(Fp[i].rows + tuple(vp_rows + w_rows), n, q))
    pair = Flag(tuple(F), n, q), Flag(tuple(Fp), n, q)
    assert distance_vector_of_pair(*pair) == v
    return pair


def variety_pair_census(
    t: TypeVector,
    q: int,
    *,
    sample_pairs: Optional[int] = None,
    seed: int = 0,
    limit: Optional[int] = DEFAULT_ENUMERATION_LIMIT,
) -> dict:
    """Distance vectors of flag pairs across the whole variety, by d.

    Returns {flag distance: set of component tuples}. With sample_pairs
    set, measures that many random pairs (seeded) instead of all; the
    diagonal pair is always included, so 0 maps to the zero vector.
    """
    flags = list(enumerate_flag_variety(q, t, limit=limit))
    r = t.r
    if r == 0:
        return {0: {()}}
    N = len(flags)
    ids = np.empty((N, r), dtype=np.int64)
    tables = []
    for level in range(r):
        index: dict = {}
        for fi, flag in enumerate(flags):
            ids[fi, level] = index.setdefault(flag.subspaces[level], len(index))
        bases = np.array([[list(row) for row in sub.rows] for sub in index], dtype=np.int64)
        tables.append(linalg.pairwise_distance_table(bases, q))
    census: dict = {0: {(0,) * r}}

    def absorb(vectors):
        sums = vectors.sum(axis=1)
        stacked = np.concatenate([sums[:, None], vectors], axis=1)
        for row in np.unique(stacked, axis=0):
            census.setdefault(int(row[0]), set()).add(tuple(int(x) for x in row[1:]))

    if sample_pairs is None:
        for i in range(N):
            absorb(
                np.stack([tables[l][ids[i, l], ids[:, l]] for l in range(r)], axis=1)
            )
    else:
        rng = np.random.default_rng(seed)
        a = rng.integers(0, N, size=sample_pairs)
        b = rng.integers(0, N, size=sample_pairs)
        absorb(np.stack([tables[l][ids[a, l], ids[b, l]] for l in range(r)], axis=1))
    return census


def brute_force_distance_vector_set(
    d: int,
    t: TypeVector,
    q: int,
    *,
    sample_pairs: Optional[int] = None,
    seed: int = 0,
    limit: Optional[int] = DEFAULT_ENUMERATION_LIMIT,
) -> set:
    """{distance vectors of variety pairs at flag distance d}, measured.

    The pair (F, F) counts, so d=0 yields exactly the zero vector.
    """
    census = variety_pair_census(t, q, sample_pairs=sample_pairs, seed=seed, limit=limit)
    return {DistanceVector(comps, t) for comps in census.get(d, set())}


def brute_force_max_with_zeros(
    t: TypeVector,
    q: int,
    pattern: Sequence[int],
    *,
    limit: Optional[int] = DEFAULT_ENUMERATION_LIMIT,
) -> int:
    """Largest measured distance among pairs agreeing at the pattern."""
    pattern = check_pattern(t, pattern)
    census = variety_pair_census(t, q, limit=limit)
    return max(
        d
        for d, vecs in census.items()
        if any(all(v[i - 1] == 0 for i in pattern) for v in vecs)
    )


def parse_flag_code(text: str) -> FlagCode:
    """Parse the flag-code file format; errors carry line numbers."""
    lines = text.splitlines()
    stripped = []
    for lineno, raw in enumerate(lines, 1):
        content = raw.split("#", 1)[0].strip()
        if content:
            stripped.append((lineno, content))
    cursor = 0

    def take(expect: str):
        nonlocal cursor
        if cursor >= len(stripped):
            raise ValueError(f"line {len(lines) + 1}: missing '{expect}' line")
        lineno, content = stripped[cursor]
        if not content.startswith(expect):
            raise ValueError(f"line {lineno}: expected '{expect}...', got {content!r}")
        cursor += 1
        return lineno, content[len(expect):]

    def parse_int(text_value: str, lineno: int, what: str) -> int:
        try:
            return int(text_value)
        except ValueError:
            raise ValueError(f"line {lineno}: bad {what}: {text_value!r}") from None

    q_lineno, q_text = take("q=")
    q = parse_int(q_text, q_lineno, "modulus")
    try:
        _require_prime(q)
    except ValueError as exc:
        raise ValueError(f"line {q_lineno}: {exc}") from None
    n_lineno, n_text = take("n=")
    n = parse_int(n_text, n_lineno, "ambient dimension")
    type_lineno, type_text = take("type=")
    try:
        dims = tuple(int(x) for x in type_text.split(","))
        t = TypeVector(dims, n)
    except ValueError as exc:
        raise ValueError(f"line {type_lineno}: {exc}") from None

    flags = []
    seen = {}
    while cursor < len(stripped):
        lineno, content = stripped[cursor]
        if content != "flag":
            raise ValueError(f"line {lineno}: expected 'flag', got {content!r}")
        cursor += 1
        block_start = lineno
        rows = []
        for _ in range(t.dims[-1]):
            if cursor >= len(stripped):
                raise ValueError(
                    f"line {len(lines) + 1}: flag at line {block_start} needs "
                    f"{t.dims[-1]} basis rows"
                )
            row_lineno, row_text = stripped[cursor]
            parts = row_text.split()
            if len(parts) != n or not all(
                p.lstrip("-").isdigit() for p in parts
            ):
                raise ValueError(f"line {row_lineno}: expected {n} integers, got {row_text!r}")
            rows.append([int(p) for p in parts])
            cursor += 1
        try:
            flag = Flag.from_matrix(rows, t, q)
        except ValueError as exc:
            raise ValueError(f"line {block_start}: {exc}") from None
        if flag in seen:
            raise ValueError(
                f"line {block_start}: duplicate of the flag at line {seen[flag]}"
            )
        seen[flag] = block_start
        flags.append(flag)
    if not flags:
        raise ValueError(f"line {len(lines) + 1}: no flag blocks found")
    return FlagCode(tuple(flags))


def format_flag_code(code: FlagCode) -> str:
    """Render a code in the file format; inverse of parse_flag_code."""
    t = code.type
    out = [f"q={code.q}", f"n={t.n}", "type=" + ",".join(map(str, t.dims))]
    for flag in code.flags:
        out.append("flag")
        for row in flag.nested_basis():
            out.append(" ".join(map(str, row)))
    return "\n".join(out) + "\n"
