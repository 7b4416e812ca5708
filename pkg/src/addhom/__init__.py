"""Exact-arithmetic toolkit for probing additivity (A) and homogeneity (H)
of maps between vector spaces over Q, Z_p, and simple extension fields."""

from .fields import (
    ExtensionField,
    Field,
    PrimeField,
    Rationals,
    find_irreducible,
    gf,
    is_irreducible,
    parse_field,
)
from .maps import (
    EXHAUSTIVE,
    CheckReport,
    IndicatorMap,
    KLinearExtensionMap,
    OrbitTableMap,
    RatioMap,
    Sampled,
    TableMap,
    Witness,
    build_char2_indicator,
    build_ratio_map,
    build_theorem1_counterexample,
    check_additive,
    check_homogeneous,
    check_linear,
    map_from_json,
    map_to_json,
    rational_proof_trace,
)
from .search import (
    SearchConfig,
    SearchResult,
    TableScanReport,
    count_homogeneous,
    count_linear,
    scan_additive_tables,
    search_homogeneous_nonadditive,
    verify_theorem1_prime,
)
from .spaces import Orbit, VectorSpace

__all__ = [
    "EXHAUSTIVE",
    "CheckReport",
    "ExtensionField",
    "Field",
    "IndicatorMap",
    "KLinearExtensionMap",
    "Orbit",
    "OrbitTableMap",
    "PrimeField",
    "RatioMap",
    "Rationals",
    "Sampled",
    "SearchConfig",
    "SearchResult",
    "TableMap",
    "TableScanReport",
    "VectorSpace",
    "Witness",
    "build_char2_indicator",
    "build_ratio_map",
    "build_theorem1_counterexample",
    "check_additive",
    "check_homogeneous",
    "check_linear",
    "count_homogeneous",
    "count_linear",
    "find_irreducible",
    "gf",
    "is_irreducible",
    "map_from_json",
    "map_to_json",
    "parse_field",
    "rational_proof_trace",
    "scan_additive_tables",
    "search_homogeneous_nonadditive",
    "verify_theorem1_prime",
]

__version__ = "0.1.0"
