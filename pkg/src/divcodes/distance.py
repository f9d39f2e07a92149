"""Certified minimum weights of linear codes and of cosets.

The exact route is Brouwer-Zimmermann enumeration: the generator is brought
to systematic form on a sequence of information sets, and all sums of ``w``
systematic rows are enumerated level by level.  A codeword missed at levels
``<= w`` of set ``j`` has more than ``w`` ones on that set's pivots, and at
most ``k - r_j`` of those can fall on coordinates already used by earlier
sets, which gives the running lower bound

    sum_j max(0, w_j + 1 - (k - r_j)).

When every candidate weight is known to lie in one residue class (doubly
even spans and their orthogonal cosets) the bound is rounded up into that
class.  Cosets ``shift + span`` are searched inside the code spanned by
``span`` and ``shift``, keeping only candidates with odd overlap against a
fixed functional that vanishes on the span.

Budgets count candidate combinations, never wall time, so reports are
reproducible.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .classical import ClassicalCode
from .css import CssCode
from .divisibility import is_doubly_even_span
from .gf2 import (
    BitMatrix,
    BitVector,
    _eliminate,
    kernel_basis,
    overlap2,
    row_basis,
    rowspace_contains,
    span_elements,
)

DEFAULT_BUDGET = 10_000_000
EXHAUSTIVE_MAX_DIM = 24


class DistanceError(ValueError):
    pass


@dataclass(frozen=True)
class DistanceReport:
    lower: int
    upper: int | None
    witness: BitVector | None
    method: str
    candidates: int = 0
    seed: int | None = None
    levels: tuple[int, ...] = ()
    seconds: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise AssertionError("lower bound exceeds witnessed upper bound")
        if self.witness is not None and self.witness.weight != self.upper:
            raise AssertionError("witness weight does not match the reported upper bound")

    @property
    def certified(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "certified": self.certified,
            "method": self.method,
            "candidates": self.candidates,
            "levels": list(self.levels),
            "seed": self.seed,
            "witness": str(self.witness) if self.witness is not None else None,
        }


@dataclass(frozen=True)
class CssDistance:
    dx: DistanceReport
    dz: DistanceReport

    @property
    def lower(self) -> int:
        return min(self.dx.lower, self.dz.lower)

    @property
    def upper(self) -> int | None:
        ups = [r.upper for r in (self.dx, self.dz) if r.upper is not None]
        return min(ups) if ups else None

    @property
    def d(self) -> int | None:
        return self.upper

    @property
    def certified(self) -> bool:
        return self.upper is not None and self.lower == self.upper


@dataclass
class _Problem:
    n: int
    generator: np.ndarray               # packed, full row rank
    functional: BitVector | None        # candidates must have odd overlap with it
    modulus: int
    residue: int
    verify: object                      # callable(BitVector) -> bool

    @property
    def k(self) -> int:
        return self.generator.shape[0]


def _weight_class(span: BitMatrix, shift: BitVector | None) -> tuple[int, int]:
    weights = span.row_weights()
    if shift is None:
        if is_doubly_even_span(span).passed:
            return 4, 0
        return (2, 0) if not (weights % 2).any() else (1, 0)
    orthogonal = not span.mul_vec(shift).weight
    if orthogonal and is_doubly_even_span(span).passed:
        return 4, shift.weight % 4
    if not (weights % 2).any():
        return 2, shift.weight % 2
    return 1, 0


def _classical_problem(G: BitMatrix) -> _Problem:
    basis = row_basis(G)
    modulus, residue = _weight_class(basis, None)

    def verify(v: BitVector) -> bool:
        return v.weight > 0 and rowspace_contains(basis, v)

    return _Problem(G.ncols, np.array(basis.data), None, modulus, residue, verify)


def _coset_problem(span: BitMatrix, shift: BitVector) -> _Problem:
    basis = row_basis(span)
    full = basis.append_rows(shift)
    functional = next(v for v in kernel_basis(basis) if overlap2(v, shift) % 2)
    modulus, residue = _weight_class(basis, shift)

    def verify(v: BitVector) -> bool:
        return rowspace_contains(basis, v ^ shift)

    return _Problem(span.ncols, np.array(full.data), functional, modulus, residue, verify)


def _round_up(value: int, modulus: int, residue: int) -> int:
    return value + (residue - value) % modulus


def _information_sets(problem: _Problem) -> list[tuple[np.ndarray, int]]:
    n, k = problem.n, problem.k
    used = np.zeros(n, dtype=bool)
    sets = []
    while True:
        order = [c for c in range(n) if not used[c]] + [c for c in range(n) if used[c]]
        data = np.array(problem.generator, copy=True)
        pivots = _eliminate(data, n, order)
        if len(pivots) != k:
            raise AssertionError("generator lost rank during elimination")
        fresh = [c for c in pivots if not used[c]]
        if not fresh:
            break
        used[fresh] = True
        sets.append((data, len(fresh)))
    return sets


def _parities(data: np.ndarray, functional: BitVector | None) -> np.ndarray:
    if functional is None:
        return np.zeros(data.shape[0], dtype=np.uint8)
    return (np.bitwise_count(data & functional.words).sum(axis=1) & 1).astype(np.uint8)


def _search(problem: _Problem, budget: int, seed: int | None = None) -> DistanceReport:
    start = time.perf_counter()
    n, k = problem.n, problem.k
    use_parity = problem.functional is not None
    sets = _information_sets(problem)
    parities = [_parities(data, problem.functional) for data, _ in sets]
    levels = [0] * len(sets)
    spent = 0
    best: int | None = None
    witness_words: np.ndarray | None = None

    def bound() -> int:
        raw = sum(max(0, levels[j] + 1 - (k - r)) for j, (_, r) in enumerate(sets))
        return _round_up(raw, problem.modulus, problem.residue)

    exhausted = False
    complete = False
    for w in range(1, k + 1):
        for j, (data, r) in enumerate(sets):
            if j > 0 and w + 1 - (k - r) <= 0:
                continue
            while levels[j] < w:
                lvl = levels[j] + 1
                cost = math.comb(k, lvl)
                if spent + cost > budget:
                    exhausted = True
                    break
                weight, combo = _kernels.enumerate_level(data, parities[j], use_parity, lvl)
                spent += cost
                levels[j] = lvl
                if weight < _kernels.BIG and (best is None or weight < best):
                    best = int(weight)
                    witness_words = np.bitwise_xor.reduce(data[combo], axis=0)
            if exhausted:
                break
            if r == k and levels[j] == k:
                complete = True
            if complete or (best is not None and bound() >= best):
                break
        if exhausted or complete or (best is not None and bound() >= best):
            break

    witness = None
    if witness_words is not None:
        witness = BitVector._raw(n, witness_words)
        if not problem.verify(witness) or witness.weight != best:
            raise AssertionError("enumeration produced an invalid witness")
    if complete:
        lower = best if best is not None else 0
    else:
        lower = bound() if best is None else min(bound(), best)
    method = "enumeration" if complete else "bz"
    return DistanceReport(
        lower=lower,
        upper=best,
        witness=witness,
        method=method,
        candidates=spent,
        seed=seed,
        levels=tuple(levels),
        seconds=time.perf_counter() - start,
    )


def _isd(problem: _Problem, trials: int, seed: int, p: int = 2) -> tuple[int | None, BitVector | None]:
    rng = np.random.default_rng(seed)
    n = problem.n
    functional = problem.functional.words if problem.functional is not None else np.zeros(
        problem.generator.shape[1], dtype=np.uint64
    )
    best, vec = None, None
    done = 0
    while done < trials:
        batch = min(2048, trials - done)
        perms = np.argsort(rng.random((batch, n)), axis=1).astype(np.int64)
        weight, words = _kernels.isd_run(
            problem.generator, n, perms, functional, problem.functional is not None, p
        )
        done += batch
        if weight < _kernels.BIG and (best is None or weight < best):
            best, vec = int(weight), BitVector._raw(n, words)
    if vec is not None and not problem.verify(vec):
        raise AssertionError("sampling produced an invalid witness")
    return best, vec


def _combine(report: DistanceReport, problem: _Problem, trials: int, seed: int) -> DistanceReport:
    if report.certified or trials <= 0:
        return report
    start = time.perf_counter()
    weight, vec = _isd(problem, trials, seed)
    if weight is None or (report.upper is not None and weight >= report.upper):
        return DistanceReport(
            report.lower, report.upper, report.witness, report.method, report.candidates,
            seed, report.levels, report.seconds + time.perf_counter() - start,
        )
    return DistanceReport(
        lower=min(report.lower, weight),
        upper=weight,
        witness=vec,
        method="isd-sample",
        candidates=report.candidates,
        seed=seed,
        levels=report.levels,
        seconds=report.seconds + time.perf_counter() - start,
    )


def classical_min_distance(
    C: ClassicalCode | BitMatrix, budget: int = DEFAULT_BUDGET, *, trials: int = 0, seed: int = 0
) -> DistanceReport:
    """Minimum nonzero weight of a linear code.

    Exact when the enumeration closes the gap within ``budget`` candidates;
    otherwise the reported lower bound is certified and the upper bound is
    the lightest codeword seen (improved by ``trials`` ISD samples when > 0).
    """
    G = C.generator if isinstance(C, ClassicalCode) else C
    problem = _classical_problem(G)
    if problem.k == 0:
        raise DistanceError("the zero code has no minimum distance")
    return _combine(_search(problem, budget, seed), problem, trials, seed)


def coset_min_weight(
    span: BitMatrix, shift: BitVector, budget: int = DEFAULT_BUDGET, *, trials: int = 0, seed: int = 0
) -> DistanceReport:
    """Minimum weight of ``shift + rowspace(span)``; the zero vector is excluded when ``shift`` is zero."""
    if len(shift) != span.ncols:
        raise ValueError("shift length differs from the span width")
    if shift.weight == 0:
        if span.nrows == 0 or row_basis(span).nrows == 0:
            raise DistanceError("zero coset of the zero space has no nonzero element")
        return classical_min_distance(span, budget, trials=trials, seed=seed)
    if rowspace_contains(span, shift):
        zero = BitVector.zeros(span.ncols)
        return DistanceReport(0, 0, zero, "enumeration", 0, seed)
    problem = _coset_problem(span, shift)
    return _combine(_search(problem, budget, seed), problem, trials, seed)


def css_distance(
    Q: CssCode, budget: int = DEFAULT_BUDGET, *, trials: int = 0, seed: int = 0
) -> CssDistance:
    """X and Z distances of a code with one logical qubit, as coset minima."""
    if Q.k != 1:
        raise DistanceError(f"distance search expects k = 1, got k = {Q.k}")
    dx = coset_min_weight(Q.sx, Q.lx, budget, trials=trials, seed=seed)
    dz = coset_min_weight(Q.sz, Q.lz, budget, trials=trials, seed=seed)
    return CssDistance(dx, dz)


def isd_upper_bound(
    span: BitMatrix, shift: BitVector | None, trials: int, seed: int = 0
) -> DistanceReport:
    """Upper bound on a (coset) minimum weight from information-set sampling alone."""
    if trials < 1:
        raise ValueError("need at least one trial")
    start = time.perf_counter()
    if shift is None or shift.weight == 0:
        problem = _classical_problem(span)
    else:
        if rowspace_contains(span, shift):
            return DistanceReport(0, 0, BitVector.zeros(span.ncols), "enumeration", 0, seed)
        problem = _coset_problem(span, shift)
    weight, vec = _isd(problem, trials, seed)
    return DistanceReport(
        lower=1 if weight is not None else 0,
        upper=weight,
        witness=vec,
        method="isd-sample",
        candidates=trials,
        seed=seed,
        seconds=time.perf_counter() - start,
    )


def exhaustive_min_weight(span: BitMatrix, shift: BitVector | None = None) -> int:
    """Reference minimum by listing the whole span (dimension <= 24)."""
    basis = row_basis(span)
    if basis.nrows > EXHAUSTIVE_MAX_DIM:
        raise DistanceError("span too large for exhaustive listing")
    elems = span_elements(basis)
    if shift is not None:
        elems = elems ^ shift.words
    weights = np.bitwise_count(elems).sum(axis=1)
    if shift is None or shift.weight == 0:
        weights = weights[1:]
    if weights.size == 0:
        raise DistanceError("empty search space")
    return int(weights.min())
