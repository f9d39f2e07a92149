"""Seed codes that start or fill in the doubling chain."""

from __future__ import annotations

from functools import lru_cache

from .css import CssCode, trivial_code, validate_css
from .divisibility import is_doubly_even_span
from .gf2 import BitMatrix, BitVector, rank

# Square-octagon color code on 17 qubits: one octagon and seven squares.
_COLOR17_ROWS = (
    "11011000000000000",
    "00100101010000000",
    "00011111101100000",
    "00000010100011000",
    "00000000000011011",
    "01110100000000000",
    "00000001011000100",
    "00000000100110010",
)


def seed_trivial() -> CssCode:
    """The [[1,1,1]] code: no stabilizers, X and Z on the single qubit."""
    return trivial_code()


@lru_cache(maxsize=1)
def seed_color17() -> CssCode:
    """The [[17,1,5]] square-octagon color code, checked when first loaded."""
    from .distance import css_distance

    S = BitMatrix(list(_COLOR17_ROWS))
    ones = BitVector.ones(17)
    Q = CssCode(S, S, ones, ones, label="color17", claimed_distance=5)
    if rank(S) != 8 or not validate_css(Q):
        raise AssertionError("embedded color code data is not a valid k=1 CSS code")
    if not is_doubly_even_span(S):
        raise AssertionError("embedded color code is not doubly even")
    d = css_distance(Q)
    if not (d.certified and d.upper == 5):
        raise AssertionError(f"embedded color code has distance {d.upper}, expected 5")
    return Q
