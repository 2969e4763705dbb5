"""Exact Ratliff-Rush filtration kernel for numerical semigroup rings."""

from ._core import (
    GuardError,
    NormalizedIdeal,
    NumericalSemigroup,
    OracleReport,
    QuasiHilbertReport,
    RRIndices,
    ReductionIndex,
    StableWindow,
    ValidationError,
    colon_in,
    colon_z,
    compare_suite,
    depth_positive,
    e_series,
    hilbert_fn_mod_x,
    ideal_sum,
    indices,
    integral_closure_power,
    intersect,
    minimal_generators,
    power,
    product,
    quotient_length,
    reduction_index,
    rr_closure,
    rr_ideal,
    rr_module_closure,
    shift,
    stable_window,
    verdict,
    __version__,
)

__all__ = [
    "GuardError",
    "NormalizedIdeal",
    "NumericalSemigroup",
    "OracleReport",
    "QuasiHilbertReport",
    "RRIndices",
    "ReductionIndex",
    "StableWindow",
    "ValidationError",
    "colon_in",
    "colon_z",
    "compare_suite",
    "depth_positive",
    "e_series",
    "hilbert_fn_mod_x",
    "ideal_sum",
    "indices",
    "integral_closure_power",
    "intersect",
    "minimal_generators",
    "power",
    "product",
    "quotient_length",
    "reduction_index",
    "rr_closure",
    "rr_ideal",
    "rr_module_closure",
    "shift",
    "stable_window",
    "verdict",
    "__version__",
]
