"""Divisibility certificates for binary spans.

A span is decided from its generators through the inclusion-exclusion
identity for ``|g_1 + ... + g_m|``:

* doubly even  <=> row weights = 0 mod 4, pairwise overlaps = 0 mod 2
* triply even  <=> row weights = 0 mod 8, pairwise = 0 mod 4, triple = 0 mod 2
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .gf2 import BitMatrix, BitVector, random_span_elements

MAX_VIOLATIONS = 64


@dataclass(frozen=True)
class DivisibilityReport:
    level: int
    passed: bool
    violations: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    truncated: bool = False

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "passed": self.passed,
            "violations": [{"rows": list(rows), "residue": res} for rows, res in self.violations],
            "truncated": self.truncated,
        }


def _pair_overlaps(data: np.ndarray) -> np.ndarray:
    r = data.shape[0]
    out = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        out[i] = np.bitwise_count(data & data[i]).sum(axis=1)
    return out


def _triple_parities(data: np.ndarray) -> Iterable[tuple[int, int, np.ndarray]]:
    """Yield ``(i, j, parities)`` where ``parities[k]`` is |g_i g_j g_k| mod 2 for k > j."""
    r = data.shape[0]
    for i in range(r):
        for j in range(i + 1, r):
            pij = data[i] & data[j]
            if j + 1 < r:
                yield i, j, np.bitwise_count(data[j + 1 :] & pij).sum(axis=1) & 1


def _collect(violations, item, state) -> None:
    if len(violations) < MAX_VIOLATIONS:
        violations.append(item)
    else:
        state["truncated"] = True


def _divisible(M: BitMatrix, level: int) -> DivisibilityReport:
    data = M.data
    r = data.shape[0]
    weights = M.row_weights()
    wmod, pmod = (4, 2) if level == 2 else (8, 4)
    violations: list[tuple[tuple[int, ...], int]] = []
    state = {"truncated": False}
    for i in range(r):
        if weights[i] % wmod:
            _collect(violations, ((i,), int(weights[i] % wmod)), state)
    if r > 1:
        pairs = _pair_overlaps(data)
        for i, j in combinations(range(r), 2):
            if pairs[i, j] % pmod:
                _collect(violations, ((i, j), int(pairs[i, j] % pmod)), state)
    if level == 3:
        for i, j, par in _triple_parities(data):
            for off in np.flatnonzero(par):
                _collect(violations, ((i, j, j + 1 + int(off)), 1), state)
    return DivisibilityReport(level, not violations and not state["truncated"], violations, state["truncated"])


def is_doubly_even_span(M: BitMatrix) -> DivisibilityReport:
    return _divisible(M, 2)


def is_triply_even_span(M: BitMatrix) -> DivisibilityReport:
    return _divisible(M, 3)


def is_triorthogonal(M: BitMatrix, odd_rows: Iterable[int]) -> bool:
    odd = set(odd_rows)
    r = M.nrows
    if any(not 0 <= i < r for i in odd):
        raise IndexError("odd row index out of range")
    weights = M.row_weights()
    if any((weights[i] % 2 == 1) != (i in odd) for i in range(r)):
        return False
    if r > 1:
        pairs = _pair_overlaps(M.data)
        if any(pairs[i, j] % 2 for i, j in combinations(range(r), 2)):
            return False
    return not any(par.any() for _, _, par in _triple_parities(M.data))


def _logical_generator_criterion(sx: BitMatrix, lx: BitVector, modulus: int) -> bool:
    if modulus == 1:
        return True
    lw = lx.words
    over = np.bitwise_count(sx.data & lw).sum(axis=1) if sx.nrows else np.zeros(0, dtype=np.int64)
    if (over % modulus).any():
        return False
    if modulus == 4:
        data = sx.data & lw
        for i in range(sx.nrows):
            if i + 1 < sx.nrows:
                tri = np.bitwise_count(data[i + 1 :] & sx.data[i]).sum(axis=1)
                if (tri % 2).any():
                    return False
    return True


def logical_overlap_divisibility(
    sx: BitMatrix, lx: BitVector, modulus: int, samples: int = 10_000, seed: int = 0
) -> bool:
    """Whether ``|lx & s| = 0 mod modulus`` for every ``s`` in the span of ``sx``.

    Together with a span divisible by ``2*modulus`` this makes every element
    of ``lx + span(sx)`` share one weight modulo ``2*modulus``.  The generator
    test is exact for moduli 1, 2 and 4; ``samples`` random span elements are
    then checked directly and any disagreement is treated as a defect.
    """
    if len(lx) != sx.ncols:
        raise ValueError("length mismatch")
    if modulus not in (1, 2, 4):
        raise ValueError("supported moduli are 1, 2 and 4")
    verdict = _logical_generator_criterion(sx, lx, modulus)
    if verdict and samples and sx.nrows:
        rng = np.random.default_rng(seed)
        elems = random_span_elements(sx, samples, rng)
        over = np.bitwise_count(elems & lx.words).sum(axis=1)
        if (over % modulus).any():
            raise AssertionError("generator criterion disagrees with sampled span elements")
    return verdict
