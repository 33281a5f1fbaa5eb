"""flagbound: distance-vector calculus and cardinality bounds for flag codes.

A flag of type (t_1, ..., t_r) in F_q^n is a nested chain of subspaces
with those dimensions. Comparing two flags level by level with the
subspace distance yields a distance vector; this package characterizes
and enumerates the distance vectors attainable at a given flag distance,
computes maximum values under prescribed shared subspaces, certifies
distance properties of explicit codes by brute force, and derives upper
bounds on the cardinality of flag codes with a given minimum distance.
"""

from flagbound.qcalc import (
    QPolynomial,
    gaussian_binomial,
    flag_variety_size,
    parse_polynomial,
)
from flagbound.distvec import (
    TypeVector,
    DistanceVector,
    ComponentRange,
    full_type,
    max_flag_distance,
    is_distance_vector,
    enumerate_distance_vectors,
    project_type,
    extremal_vector_with_component,
    component_range,
)
from flagbound.dvalues import (
    check_pattern,
    max_distance_with_zeros,
    split_decomposition,
    canonical_difference_multiset,
    explicit_Di_full,
    max_over_patterns,
    achieving_patterns,
)
from flagbound.flagalg import (
    EnumerationLimitError,
    Subspace,
    Flag,
    FlagCode,
    CodeCensus,
    subspace_distance,
    distance_vector_of_pair,
    code_census,
    is_disjoint,
    is_m_disjoint,
    realize_distance_vector,
    enumerate_grassmannian,
    enumerate_flag_variety,
    variety_pair_census,
    brute_force_distance_vector_set,
    brute_force_max_with_zeros,
    parse_flag_code,
    format_flag_code,
)
from flagbound.bounds import (
    Theorem,
    BoundCertificate,
    SubspaceBoundEntry,
    SubspaceBoundProvider,
    provider_lookup,
    load_bounds_file,
    variety_bound,
    refined_bound,
    best_bound,
    disjointness_implied,
    m_disjointness_implied,
    min_distance_lower_bound_for_disjoint,
)

__version__ = "0.1.0"

__all__ = [
    "QPolynomial",
    "gaussian_binomial",
    "flag_variety_size",
    "parse_polynomial",
    "TypeVector",
    "DistanceVector",
    "ComponentRange",
    "full_type",
    "max_flag_distance",
    "is_distance_vector",
    "enumerate_distance_vectors",
    "project_type",
    "extremal_vector_with_component",
    "component_range",
    "check_pattern",
    "max_distance_with_zeros",
    "split_decomposition",
    "canonical_difference_multiset",
    "explicit_Di_full",
    "max_over_patterns",
    "achieving_patterns",
    "EnumerationLimitError",
    "Subspace",
    "Flag",
    "FlagCode",
    "CodeCensus",
    "subspace_distance",
    "distance_vector_of_pair",
    "code_census",
    "is_disjoint",
    "is_m_disjoint",
    "realize_distance_vector",
    "enumerate_grassmannian",
    "enumerate_flag_variety",
    "variety_pair_census",
    "brute_force_distance_vector_set",
    "brute_force_max_with_zeros",
    "parse_flag_code",
    "format_flag_code",
    "Theorem",
    "BoundCertificate",
    "SubspaceBoundEntry",
    "SubspaceBoundProvider",
    "provider_lookup",
    "load_bounds_file",
    "variety_bound",
    "refined_bound",
    "best_bound",
    "disjointness_implied",
    "m_disjointness_implied",
    "min_distance_lower_bound_for_disjoint",
    "__version__",
]
