"""Finite-ring laboratory for strongly 2-nil-clean and Zhou nil-clean rings."""

from ._core import (
    ParseError,
    RingError,
    RingTable,
    all_squares,
    characteristic,
    check_characterization,
    classify,
    commute,
    corner_ring,
    cross_check,
    decompose_constructively,
    find_decomposition,
    generated_subring,
    get_ring,
    int_embed,
    is_nilpotent,
    is_strongly_2_nil_clean,
    is_zhou_nil_clean,
    lift_idempotent,
    lift_tripotent,
    make_gf,
    make_matrix_ring,
    make_product,
    make_zn,
    parse_ring,
    primary_decomposition,
    ring_from_json,
    survey,
    tripotent_split,
    validate_ring,
)

__all__ = [
    "ParseError",
    "RingError",
    "RingTable",
    "all_squares",
    "characteristic",
    "check_characterization",
    "classify",
    "commute",
    "corner_ring",
    "cross_check",
    "decompose_constructively",
    "find_decomposition",
    "generated_subring",
    "get_ring",
    "int_embed",
    "is_nilpotent",
    "is_strongly_2_nil_clean",
    "is_zhou_nil_clean",
    "lift_idempotent",
    "lift_tripotent",
    "make_gf",
    "make_matrix_ring",
    "make_product",
    "make_zn",
    "parse_ring",
    "primary_decomposition",
    "ring_from_json",
    "survey",
    "tripotent_split",
    "validate_ring",
]
