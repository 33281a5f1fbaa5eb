"""Bound certificates: the variety and refined families."""

import itertools
import warnings

import pytest

from flagbound.bounds import (
    BoundCertificate,
    SubspaceBoundEntry,
    SubspaceBoundProvider,
    Theorem,
    best_bound,
    disjointness_implied,
    load_bounds_file,
    m_disjointness_implied,
    min_distance_lower_bound_for_disjoint,
    provider_lookup,
    refined_bound,
    variety_bound,
)
from flagbound.distvec import TypeVector, full_type, max_flag_distance
from flagbound.dvalues import max_distance_with_zeros
from flagbound.qcalc import (
    flag_variety_size,
    gaussian_binomial,
    parse_polynomial,
)

FULL7 = full_type(7)
T7 = TypeVector((1, 3, 5, 6), 7)


# Expected variety-family winners for the full type in dimension 7:
# d -> (pattern, projected dims).
VARIETY_TABLE_FULL7 = {
    2: ((1, 2, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6)),
    4: ((1, 2, 3, 4, 5), (1, 2, 3, 4, 5)),
    6: ((1, 2, 3, 4), (1, 2, 3, 4)),
    8: ((1, 2, 4), (1, 2, 4)),
    10: ((1, 4), (1, 4)),
    12: ((1, 3), (1, 3)),
    14: ((1, 2), (1, 2)),
    16: ((2,), (2,)),
    18: ((2,), (2,)),
    20: ((1,), (1,)),
    22: ((1,), (1,)),
    24: ((1,), (1,)),
}

# Same for type (1, 3, 5, 6): pattern positions project to dimensions.
VARIETY_TABLE_T7 = {
    2: ((1, 2, 3, 4), (1, 3, 5, 6)),
    4: ((1, 2, 4), (1, 3, 6)),
    6: ((2, 4), (3, 6)),
    # (1, 4) ties |F((5,6),7)| with the same polynomial and wins by lex
    8: ((1, 4), (1, 6)),
    10: ((3,), (5,)),
    12: ((1,), (1,)),
    14: ((1,), (1,)),
}

# Refined-family winners: d -> (index, (n, bar_d, k), bound string or None
# for a Grassmannian-sized value).
REFINED_TABLE_FULL7 = {
    14: (3, (7, 2, 3), None),
    16: (2, (7, 2, 2), None),
    18: (2, (7, 2, 2), None),
    20: (1, (7, 2, 1), None),
    22: (2, (7, 4, 2), "q^5+q^3+q"),
    24: (3, (7, 6, 3), "q^4+1"),
}

REFINED_TABLE_T7 = {
    10: (3, (7, 2, 5), None),
    12: (1, (7, 2, 1), None),
    14: (2, (7, 6, 3), "q^4+1"),
}


def test_variety_table_full7():
    for d, (pattern, dims) in VARIETY_TABLE_FULL7.items():
        cert = variety_bound(d, FULL7)
        assert cert.pattern == pattern, d
        assert cert.bound == flag_variety_size(dims, 7), d
        expected = Theorem.GRASSMANNIAN if len(pattern) == 1 else Theorem.VARIETY
        assert cert.theorem is expected
        assert cert.rivals == ()
        assert cert.provenance == ()


def test_variety_table_t7():
    for d, (pattern, dims) in VARIETY_TABLE_T7.items():
        cert = variety_bound(d, T7)
        assert cert.pattern == pattern, d
        assert cert.bound == flag_variety_size(dims, 7), d
        assert cert.rivals == ()


def test_variety_bound_matches_direct_scan():
    # Oracle: recompute the minimum over qualifying patterns at several q.
    for t in (FULL7, T7, TypeVector((2, 4), 6)):
        for d in range(2, max_flag_distance(t) + 1, 2):
            cert = variety_bound(d, t)
            for q in (2, 3, 4, 5):
                best = min(
                    flag_variety_size(
                        tuple(t.dims[i - 1] for i in pattern), t.n
                    ).evaluate(q)
                    for m in range(1, t.r + 1)
                    for pattern in itertools.combinations(range(1, t.r + 1), m)
                    if d > max_distance_with_zeros(t, pattern)[1]
                )
                assert cert.bound.evaluate(q) == best, (t, d, q)


def test_refined_table_full7():
    for d, (index, (n, bar_d, k), poly) in REFINED_TABLE_FULL7.items():
        cert = refined_bound(d, FULL7)
        assert cert.theorem is Theorem.REFINED_FULL
        assert cert.pattern == index, d
        entry = cert.provenance[0]
        assert (entry.n, entry.d, min(entry.k, entry.n - entry.k)) == (
            n,
            bar_d,
            min(k, n - k),
        )
        if poly is None:
            assert cert.bound == gaussian_binomial(n, k)
        else:
            assert cert.bound == parse_polynomial(poly)


def test_refined_table_t7():
    for d, (index, (n, bar_d, k), poly) in REFINED_TABLE_T7.items():
        cert = refined_bound(d, T7)
        assert cert.theorem is Theorem.REFINED
        assert cert.pattern == index, d
        if poly is None:
            assert cert.bound == gaussian_binomial(n, k)
        else:
            assert cert.bound == parse_polynomial(poly)


def test_refined_requires_a_forced_component():
    for d in (2, 4, 6, 8, 10, 12):
        with pytest.raises(ValueError):
            refined_bound(d, FULL7)
    for d in (2, 4, 6, 8):
        with pytest.raises(ValueError):
            refined_bound(d, T7)


def test_best_bound_merged_tables():
    # Ties go to the variety family; the refined family wins only where
    # it is strictly smaller at q = 2.
    for d in range(2, 21, 2):
        assert best_bound(d, FULL7).theorem in (Theorem.VARIETY, Theorem.GRASSMANNIAN), d
    assert best_bound(22, FULL7).theorem is Theorem.REFINED_FULL
    assert best_bound(22, FULL7).bound == parse_polynomial("q^5+q^3+q")
    assert best_bound(24, FULL7).theorem is Theorem.REFINED_FULL
    assert best_bound(24, FULL7).bound == parse_polynomial("q^4+1")
    for d in (2, 4, 6, 8, 10, 12):
        assert best_bound(d, T7).theorem in (Theorem.VARIETY, Theorem.GRASSMANNIAN), d
    cert = best_bound(14, T7)
    assert cert.theorem is Theorem.REFINED
    assert cert.bound == parse_polynomial("q^4+1")
    # |G(1,7)| stays above q^4+1 for every q, so it is not a rival
    assert cert.rivals == ()


def test_bounds_are_even_distance_only():
    for bad in (-2, 0, 1, 3, 26):
        with pytest.raises(ValueError):
            variety_bound(bad, FULL7)
    with pytest.raises(ValueError):
        refined_bound(7, FULL7)


def test_variety_monotone_in_d():
    for n in range(3, 9):
        for t in (full_type(n), TypeVector((1, n - 1), n)):
            values = [
                variety_bound(d, t).bound.evaluate(2)
                for d in range(2, max_flag_distance(t) + 1, 2)
            ]
            assert values == sorted(values, reverse=True), t


def test_refined_never_beaten_by_single_position_varieties():
    for t in (FULL7, T7, full_type(5), full_type(6), TypeVector((2, 3, 4), 6)):
        for d in range(2, max_flag_distance(t) + 1, 2):
            try:
                refined = refined_bound(d, t)
            except ValueError:
                continue
            single = min(
                flag_variety_size((t.dims[i - 1],), t.n).evaluate(2)
                for i in range(1, t.r + 1)
                if d > max_distance_with_zeros(t, (i,))[1]
            )
            assert refined.bound.evaluate(2) <= single, (t, d)


def test_provider_lookup_values():
    assert provider_lookup(7, 2, 2) == gaussian_binomial(7, 2)
    assert provider_lookup(7, 6, 3) == parse_polynomial("q^4+1")
    assert provider_lookup(7, 6, 4) == parse_polynomial("q^4+1")  # k <-> n-k
    assert provider_lookup(6, 4, 2) == parse_polynomial("q^4+q^2+1")
    assert provider_lookup(7, 4, 2) == parse_polynomial("q^5+q^3+q")
    # generic fallback: no table entry for (7, 4, 3)
    assert provider_lookup(7, 4, 3) == gaussian_binomial(6, 3)
    assert provider_lookup(5, 4, 2) == gaussian_binomial(4, 2)


def test_provider_validation():
    with pytest.raises(ValueError):
        provider_lookup(7, 3, 2)
    with pytest.raises(ValueError):
        provider_lookup(7, 0, 2)
    with pytest.raises(ValueError):
        provider_lookup(7, 6, 2)  # d exceeds 2*min(k, n-k)
    with pytest.raises(ValueError):
        provider_lookup(7, 2, 0)
    with pytest.raises(ValueError):
        provider_lookup(7, 2, 7)


def test_override_file(tmp_path):
    path = tmp_path / "bounds.csv"
    path.write_text(
        "# improved values\n"
        "7,6,3,q^2+1,made-up table\n"
        "\n"
        "9,4,2,q^7+q^5+q^3+q, partial line spreads, odd ambient\n"
    )
    entries = load_bounds_file(path)
    assert len(entries) == 2
    provider = SubspaceBoundProvider(entries)
    assert provider_lookup(7, 6, 3, provider) == parse_polynomial("q^2+1")
    poly, entry = provider.lookup(9, 4, 2)
    assert poly == parse_polynomial("q^7+q^5+q^3+q")
    assert entry.source == "partial line spreads, odd ambient"
    # shipped values still serve other keys
    assert provider_lookup(6, 4, 2, provider) == parse_polynomial("q^4+q^2+1")
    # a larger override loses to the shipped exact value
    path.write_text("7,6,3,q^6,weak table\n")
    provider = SubspaceBoundProvider(load_bounds_file(path))
    assert provider_lookup(7, 6, 3, provider) == parse_polynomial("q^4+1")


def test_override_file_duplicate_keys_warn(tmp_path):
    path = tmp_path / "dup.csv"
    path.write_text("7,6,3,q^3+1,a\n7,6,4,q^2+1,b\n")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        entries = load_bounds_file(path)
    assert len(caught) == 1 and "duplicate" in str(caught[0].message)
    assert len(entries) == 1
    assert entries[0].bound == parse_polynomial("q^2+1")


def test_override_file_errors(tmp_path):
    cases = [
        "7,6,3,q^4+1\n",  # missing source
        "7,6,3,totally bogus,src\n",
        "7,5,3,q^4+1,src\n",  # odd distance
        "x,6,3,q^4+1,src\n",
        "7,6,3,q^4+1,\n",  # empty source
        "ok\n",
    ]
    for text in cases:
        path = tmp_path / "bad.csv"
        path.write_text(text)
        with pytest.raises(ValueError, match=r"bad\.csv:1"):
            load_bounds_file(path)
    path = tmp_path / "second.csv"
    path.write_text("7,6,3,q^4+1,fine\nnope\n")
    with pytest.raises(ValueError, match=":2"):
        load_bounds_file(path)


def test_crossover_rivals_are_reported():
    entries = (
        SubspaceBoundEntry(5, 2, 1, parse_polynomial("q^4+1"), "synthetic"),
        SubspaceBoundEntry(5, 2, 2, parse_polynomial("30"), "synthetic"),
    )
    provider = SubspaceBoundProvider(entries)
    cert = refined_bound(4, TypeVector((1, 2), 5), provider)
    assert cert.bound == parse_polynomial("q^4+1")
    assert cert.pattern == 1
    assert cert.rivals == ((parse_polynomial("30"), 2),)


def test_disjointness_implied():
    assert disjointness_implied(8, FULL7, (1, 2, 4))
    assert not disjointness_implied(6, FULL7, (1, 2, 4))
    assert disjointness_implied(20, FULL7, (1,))
    assert not disjointness_implied(18, FULL7, (1,))
    assert m_disjointness_implied(14, FULL7, 2)
    assert not m_disjointness_implied(12, FULL7, 2)
    assert m_disjointness_implied(12, T7, 1)
    assert not m_disjointness_implied(10, T7, 1)


def test_min_distance_lower_bound_for_disjoint():
    assert min_distance_lower_bound_for_disjoint((2, 2, 2, 2, 2, 2), 1) == 12
    assert min_distance_lower_bound_for_disjoint((2, 4, 4, 2), 2) == 8
    assert min_distance_lower_bound_for_disjoint((2, 4, 4, 2), 4) == 2
    assert min_distance_lower_bound_for_disjoint((0, 0, 0), 1) == 6
    assert min_distance_lower_bound_for_disjoint((4, 0, 0), 1) == 6
    assert min_distance_lower_bound_for_disjoint((4, 6), 2) == 4
    assert min_distance_lower_bound_for_disjoint((2, 0, 4), 2) == 6
    with pytest.raises(ValueError):
        min_distance_lower_bound_for_disjoint((2, 3), 1)
    with pytest.raises(ValueError):
        min_distance_lower_bound_for_disjoint((2, 2), 3)


def test_certificate_polynomials_positive_and_even_spot():
    for t in (FULL7, T7):
        for d in range(2, max_flag_distance(t) + 1, 2):
            cert = best_bound(d, t)
            for q in (2, 3, 4, 5):
                assert cert.bound.evaluate(q) > 0
