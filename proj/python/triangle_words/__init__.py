"""Python bindings for the triangle_words library."""

from ._core import (
    Error,
    Group,
    burnside_count_check,
    classify_burnside,
    classify_honda,
    classify_honda_via_burnside,
    crt_star,
    fiber_count,
    lemma42_check,
    multiplier_set,
    multiplier_set_finite,
    numeric_triple_solvable,
    orevkov_solvable,
    reduce_word,
    region_of,
    universal_witness,
)

__all__ = [
    "Error",
    "Group",
    "burnside_count_check",
    "classify_burnside",
    "classify_honda",
    "classify_honda_via_burnside",
    "crt_star",
    "fiber_count",
    "lemma42_check",
    "multiplier_set",
    "multiplier_set_finite",
    "numeric_triple_solvable",
    "orevkov_solvable",
    "reduce_word",
    "region_of",
    "universal_witness",
]
