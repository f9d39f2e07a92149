"""CSS codes and the self-dual -> doubly even CSS pipeline."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .classical import ClassicalCode, dual, is_doubly_even_classical, is_self_dual, puncture
from .gf2 import BitMatrix, BitVector, overlap2, rank, rowspace_contains


@dataclass(frozen=True, eq=False)
class CssCode:
    """X/Z stabilizer generators plus one logical X/Z representative each.

    Only shapes are checked on construction so that broken inputs can still
    be diagnosed by :func:`validate_css`; ``k`` is always recomputed from ranks.
    """

    sx: BitMatrix
    sz: BitMatrix
    lx: BitVector
    lz: BitVector
    label: str = ""
    claimed_distance: int | None = field(default=None)

    def __post_init__(self):
        n = self.sx.ncols
        if self.sz.ncols != n or len(self.lx) != n or len(self.lz) != n:
            raise ValueError("stabilizer and logical lengths disagree")

    @property
    def n(self) -> int:
        return self.sx.ncols

    @cached_property
    def rank_x(self) -> int:
        return rank(self.sx)

    @cached_property
    def rank_z(self) -> int:
        return rank(self.sz)

    @property
    def k(self) -> int:
        return self.n - self.rank_x - self.rank_z

    def __repr__(self) -> str:
        return f"CssCode([[{self.n},{self.k}]] {self.label})"


@dataclass(frozen=True)
class CssValidation:
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]

    def __bool__(self) -> bool:
        return self.passed


def _orthogonal(A: BitMatrix, B: BitMatrix) -> bool:
    if A.nrows == 0 or B.nrows == 0:
        return True
    for row in A.data:
        if (np.bitwise_count(B.data & row).sum(axis=1) & 1).any():
            return False
    return True


def validate_css(Q: CssCode, expected_k: int | None = 1) -> CssValidation:
    """Check every CSS invariant; never raises on a malformed code."""
    checks = {
        "sx_full_rank": Q.rank_x == Q.sx.nrows,
        "sz_full_rank": Q.rank_z == Q.sz.nrows,
        "stabilizers_commute": _orthogonal(Q.sx, Q.sz),
        "lx_commutes_with_sz": not Q.sz.mul_vec(Q.lx).weight if Q.sz.nrows else True,
        "lz_commutes_with_sx": not Q.sx.mul_vec(Q.lz).weight if Q.sx.nrows else True,
        "logicals_anticommute": overlap2(Q.lx, Q.lz) % 2 == 1,
        "lx_not_in_stabilizer_span": not rowspace_contains(Q.sx, Q.lx),
        "lz_not_in_stabilizer_span": not rowspace_contains(Q.sz, Q.lz),
    }
    if expected_k is not None:
        checks["k_matches"] = Q.k == expected_k
    return CssValidation(checks)


def css_from_self_dual(C_sd: ClassicalCode, label: str | None = None) -> CssCode:
    """Puncture a type-II self-dual code and use the dual of the result for both stabilizer types."""
    if C_sd.n % 8:
        raise ValueError("type-II self-dual codes have length divisible by 8")
    if not is_self_dual(C_sd):
        raise ValueError("input code is not self-dual")
    if not is_doubly_even_classical(C_sd):
        raise ValueError("input code is not doubly even")
    C = puncture(C_sd)
    S = dual(C).generator
    ones = BitVector.ones(C.n)
    Q = CssCode(S, S, ones, ones, label=label or f"css({C_sd.label})")
    report = validate_css(Q)
    if not report:
        raise AssertionError(f"pipeline produced an invalid CSS code: {report.failures}")
    return Q


def trivial_code() -> CssCode:
    one = BitVector([1])
    empty = BitMatrix([], ncols=1)
    return CssCode(empty, empty, one, one, label="trivial", claimed_distance=1)


def gamma(n: int, k: int, d: int) -> float:
    if d < 2:
        raise ValueError("distance must be at least 2")
    if k < 1:
        raise ValueError("need at least one logical qubit")
    return math.log(n / k) / math.log(d)


def gamma_exponent(Q: CssCode, d: int) -> float:
    """Distillation overhead exponent ``log_d(n / k)``."""
    return gamma(Q.n, Q.k, d)
