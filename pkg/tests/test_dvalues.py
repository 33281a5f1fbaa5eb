import itertools

import pytest

from flagbound.distvec import (
    TypeVector,
    full_type,
    is_distance_vector,
    max_flag_distance,
    project_type,
)
from flagbound.dvalues import (
    achieving_patterns,
    canonical_difference_multiset,
    explicit_Di_full,
    max_distance_with_zeros,
    max_over_patterns,
    split_decomposition,
)

# The deduplicated full-type table for n=7: one row per difference
# multiset, keyed by its lexicographically first pattern.
TABLE_FULL_7 = {
    (1,): ((0, 2, 4, 6, 4, 2), 18),
    (2,): ((2, 0, 2, 4, 4, 2), 14),
    (3,): ((2, 2, 0, 2, 4, 2), 12),
    (1, 2): ((0, 0, 2, 4, 4, 2), 12),
    (1, 3): ((0, 2, 0, 2, 4, 2), 10),
    (1, 4): ((0, 2, 2, 0, 2, 2), 8),
    (2, 4): ((2, 0, 2, 0, 2, 2), 8),
    (1, 2, 3): ((0, 0, 0, 2, 4, 2), 8),
    (1, 2, 4): ((0, 0, 2, 0, 2, 2), 6),
    (1, 3, 5): ((0, 2, 0, 2, 0, 2), 6),
    (1, 2, 3, 4): ((0, 0, 0, 0, 2, 2), 4),
    (1, 2, 3, 5): ((0, 0, 0, 2, 0, 2), 4),
    (1, 2, 3, 4, 5): ((0, 0, 0, 0, 0, 2), 2),
    (1, 2, 3, 4, 5, 6): ((0, 0, 0, 0, 0, 0), 0),
}

# The 15-row table for t=(1,3,5,6), n=7: all patterns, no dedup.
TABLE_SUBTYPE_7 = {
    (1,): ((0, 4, 4, 2), 10),
    (2,): ((2, 0, 4, 2), 8),
    (3,): ((2, 4, 0, 2), 8),
    (4,): ((2, 6, 2, 0), 10),
    (1, 2): ((0, 0, 4, 2), 6),
    (1, 3): ((0, 4, 0, 2), 6),
    (1, 4): ((0, 4, 2, 0), 6),
    (2, 3): ((2, 0, 0, 2), 4),
    (2, 4): ((2, 0, 2, 0), 4),
    (3, 4): ((2, 4, 0, 0), 6),
    (1, 2, 3): ((0, 0, 0, 2), 2),
    (1, 2, 4): ((0, 0, 2, 0), 2),
    (1, 3, 4): ((0, 4, 0, 0), 4),
    (2, 3, 4): ((2, 0, 0, 0), 2),
    (1, 2, 3, 4): ((0, 0, 0, 0), 0),
}


def brute_max_with_zeros(t, pattern):
    # Independent oracle: scan every structural vector with zeros at the
    # pattern positions and take the largest component sum.
    axes = [range(0, cap + 1, 2) for cap in t.caps]
    for i in pattern:
        axes[i - 1] = range(0, 1)
    gaps = [2 * (b - a) for a, b in zip(t.dims, t.dims[1:])]
    best = -1
    for v in itertools.product(*axes):
        if all(abs(b - a) <= g for a, b, g in zip(v, v[1:], gaps)):
            best = max(best, sum(v))
    return best


def all_subtypes(n):
    for r in range(1, n):
        for dims in itertools.combinations(range(1, n), r):
            yield TypeVector(dims, n)


def test_table_full_type_7():
    t = full_type(7)
    for pattern, (vector, value) in TABLE_FULL_7.items():
        got_vector, got_value = max_distance_with_zeros(t, pattern)
        assert got_vector.components == vector, pattern
        assert got_value == value, pattern


def test_table_subtype_7():
    t = TypeVector((1, 3, 5, 6), 7)
    for pattern, (vector, value) in TABLE_SUBTYPE_7.items():
        got_vector, got_value = max_distance_with_zeros(t, pattern)
        assert got_vector.components == vector, pattern
        assert got_value == value, pattern


def test_dedup_of_full_table_by_difference_multiset():
    # Keeping the lexicographically first pattern of each multiset class
    # must reproduce exactly the rows of the n=7 table.
    seen = {}
    for M in range(1, 7):
        for pattern in itertools.combinations(range(1, 7), M):
            key = canonical_difference_multiset(7, pattern)
            seen.setdefault(key, pattern)
    assert sorted(seen.values()) == sorted(TABLE_FULL_7)
    # and equal multisets really do give equal values
    for M in range(1, 7):
        for pattern in itertools.combinations(range(1, 7), M):
            rep = seen[canonical_difference_multiset(7, pattern)]
            assert (
                max_distance_with_zeros(full_type(7), pattern)[1]
                == max_distance_with_zeros(full_type(7), rep)[1]
            )


def test_value_matches_brute_force_oracle():
    for n in range(2, 8):
        for t in [full_type(n), *all_subtypes(n)]:
            for M in range(0, t.r + 1):
                for pattern in itertools.combinations(range(1, t.r + 1), M):
                    vector, value = max_distance_with_zeros(t, pattern)
                    assert value == brute_max_with_zeros(t, pattern), (t, pattern)
                    assert is_distance_vector(vector, t)
                    assert all(vector[i - 1] == 0 for i in pattern)


def test_split_example_n12():
    t = TypeVector((1, 3, 5, 6, 8, 10, 11), 12)
    split = split_decomposition(t, (3, 5))
    assert [(p.dims, a) for p, a in split.parts] == [
        ((1, 3), 5),
        ((1,), 3),
        ((2, 3), 4),
    ]
    vector, value = max_distance_with_zeros(t, (3, 5))
    assert vector.components == (2, 4, 0, 2, 0, 4, 2) and value == 14
    assert split.value == 14


def test_split_additivity_exhaustive():
    for n in range(2, 13):
        for t in [full_type(n)] if n > 9 else [full_type(n), *all_subtypes(n)]:
            for M in range(1, t.r + 1):
                for pattern in itertools.combinations(range(1, t.r + 1), M):
                    split = split_decomposition(t, pattern)
                    assert len(split.parts) == M + 1
                    assert all(part.n == ambient for part, ambient in split.parts)
                    assert split.value == max_distance_with_zeros(t, pattern)[1], (t, pattern)


def test_split_adjacent_zeros_give_empty_parts():
    split = split_decomposition(full_type(7), (1, 2))
    assert split.parts[0][0].dims == () and split.parts[1][0].dims == ()
    assert max_flag_distance(split.parts[0][0]) == 0
    with pytest.raises(ValueError):
        split_decomposition(full_type(7), ())


def test_difference_multisets():
    assert canonical_difference_multiset(7, (1, 3, 6)) == (1, 1, 2, 3)
    assert canonical_difference_multiset(7, ()) == (7,)
    assert canonical_difference_multiset(8, (3,)) == (3, 5)
    assert canonical_difference_multiset(8, (4,)) == (4, 4)
    # different multisets, same value: the converse implication fails
    assert max_distance_with_zeros(full_type(8), (3,))[1] == 16
    assert max_distance_with_zeros(full_type(8), (4,))[1] == 16


def test_explicit_single_zero_closed_form():
    for n in range(2, 41):
        for i in range(1, n):
            assert explicit_Di_full(n, i) == max_distance_with_zeros(full_type(n), (i,))[1]
    assert explicit_Di_full(7, 1) == 18
    assert explicit_Di_full(7, 2) == 14
    assert explicit_Di_full(8, 4) == 16
    with pytest.raises(ValueError):
        explicit_Di_full(7, 7)


def test_reversal_symmetry():
    for n in range(2, 41):
        t = full_type(n)
        for i in range(1, n):
            v_i = max_distance_with_zeros(t, (i,))[0].components
            v_rev = max_distance_with_zeros(t, (n - i,))[0].components
            assert v_rev == v_i[::-1], (n, i)


def test_single_zero_splits_into_two_full_types():
    for n in range(2, 13):
        for i in range(1, n):
            split = split_decomposition(full_type(n), (i,))
            (p1, a1), (p2, a2) = split.parts
            assert p1 == full_type(i) and a1 == i
            assert p2 == full_type(n - i) and a2 == n - i
            assert split.value == max_flag_distance(full_type(i)) + max_flag_distance(
                full_type(n - i)
            )


def test_strict_ordering_chain():
    # D^n > D(1)^n > ... > D(m-1)^n >= D(m)^n at m = n//2, the last
    # comparison collapsing to equality exactly when 4 divides n.
    for n in range(4, 61):
        t = full_type(n)
        chain = [max_flag_distance(t)] + [
            max_distance_with_zeros(t, (i,))[1] for i in range(1, n // 2 + 1)
        ]
        for a, b in zip(chain, chain[1:-1]):
            assert a > b, n
        if n % 4 == 0:
            assert chain[-2] == chain[-1], n
        else:
            assert chain[-2] > chain[-1], n


def test_projection_consistency():
    for n in range(2, 11):
        for t in all_subtypes(n):
            tf = full_type(n)
            for M in range(1, t.r + 1):
                for pattern in itertools.combinations(range(1, t.r + 1), M):
                    full_pattern = tuple(t.dims[i - 1] for i in pattern)
                    vec_full = max_distance_with_zeros(tf, full_pattern)[0]
                    projected = tuple(vec_full[d - 1] for d in t.dims)
                    assert max_distance_with_zeros(t, pattern)[0].components == projected


def test_max_over_patterns():
    t7 = full_type(7)
    assert max_over_patterns(t7, 2) == ((1, 2), 12)
    assert max_over_patterns(t7, 6) == ((1, 2, 3, 4, 5, 6), 0)
    t = TypeVector((1, 3, 5, 6), 7)
    pattern, value = max_over_patterns(t, 1)
    assert value == 10 and pattern == (1,)
    assert achieving_patterns(t, 1) == [(1,), (4,)]
    with pytest.raises(ValueError):
        max_over_patterns(t, 5)
    with pytest.raises(ValueError):
        max_over_patterns(t, 0)


def test_full_type_shortcut_matches_enumeration():
    for n in range(2, 13):
        t = full_type(n)
        for M in range(1, n):
            pattern, value = max_over_patterns(t, M)
            assert pattern == tuple(range(1, M + 1))
            assert value == max_flag_distance(full_type(n - M))
            # spot-check against explicit enumeration over all patterns
            brute = max(
                max_distance_with_zeros(t, z)[1]
                for z in itertools.combinations(range(1, n), M)
            )
            assert value == brute, (n, M)


def test_empty_pattern_gives_global_maximum():
    for n in range(2, 9):
        for t in all_subtypes(n):
            vector, value = max_distance_with_zeros(t, ())
            assert value == max_flag_distance(t)
            assert vector.components == t.caps
