"""Divisible CSS codes: quadratic-residue constructions, doubling, and certified distances."""

from .catalog import build_catalog
from .classical import ClassicalCode, build_qr, dual, extend_parity, puncture
from .css import CssCode, css_from_self_dual, validate_css
from .distance import DistanceReport, classical_min_distance, coset_min_weight, css_distance, isd_upper_bound
from .divisibility import is_doubly_even_span, is_triply_even_span, logical_overlap_divisibility
from .doubling import build_table_chain, double, seam_search
from .gates import check_transversal_diagonal, check_transversal_hadamard, statevector_oracle
from .gf2 import BitMatrix, BitVector
from .seeds import seed_color17, seed_trivial

__all__ = [
    "BitMatrix",
    "BitVector",
    "ClassicalCode",
    "CssCode",
    "DistanceReport",
    "build_catalog",
    "build_qr",
    "build_table_chain",
    "check_transversal_diagonal",
    "check_transversal_hadamard",
    "classical_min_distance",
    "coset_min_weight",
    "css_distance",
    "css_from_self_dual",
    "double",
    "dual",
    "extend_parity",
    "is_doubly_even_span",
    "is_triply_even_span",
    "isd_upper_bound",
    "logical_overlap_divisibility",
    "puncture",
    "seam_search",
    "seed_color17",
    "seed_trivial",
    "statevector_oracle",
    "validate_css",
]
