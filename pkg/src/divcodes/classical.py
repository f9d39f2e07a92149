"""Quadratic-residue codes, parity extension, puncturing and duality.

The QR generator polynomial is found with GF(2)[x] arithmetic only: the
residue indicator ``theta(x) = sum_{r in Q} x**r`` is an idempotent modulo
``x**p - 1`` whenever 2 is a square mod p, so ``gcd(theta, x**p - 1)`` and
``gcd(1 + theta, x**p - 1)`` generate the two complementary codes.  Exactly
one of them has degree ``(p - 1) / 2``; that one generates the augmented QR
code of dimension ``(p + 1) / 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .gf2 import (
    BitMatrix,
    BitVector,
    kernel_basis,
    overlap2,
    rank,
    row_basis,
    rowspace_equal,
    rowspace_subset,
)
from .gf2poly import Gf2Poly, poly_divides, poly_gcd

PROVENANCE_TAGS = ("paper-table", "certified", "witnessed", "unverified", "computed")


@dataclass(frozen=True)
class Claim:
    """A parameter value together with where it came from."""

    value: int
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCE_TAGS:
            raise ValueError(f"unknown provenance tag {self.provenance!r}")


@dataclass(frozen=True)
class ClassicalCode:
    n: int
    generator: BitMatrix
    label: str = ""
    claimed_distance: Claim | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.generator.ncols != self.n:
            raise ValueError(f"generator has {self.generator.ncols} columns, expected {self.n}")
        if rank(self.generator) != self.generator.nrows:
            raise ValueError("generator matrix must have full row rank")

    @property
    def k(self) -> int:
        return self.generator.nrows

    def __repr__(self) -> str:
        return f"ClassicalCode([{self.n},{self.k}] {self.label})"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, math.isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


def quadratic_residues(p: int) -> list[int]:
    return sorted({(i * i) % p for i in range(1, p)})


def qr_generator_polynomial(p: int) -> Gf2Poly:
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    if p % 8 not in (1, 7):
        raise ValueError(f"2 is not a quadratic residue mod {p} (p = {p % 8} mod 8)")
    theta = Gf2Poly.from_exponents(quadratic_residues(p))
    xp1 = Gf2Poly.x_pow_minus_one(p)
    g1 = poly_gcd(theta, xp1)
    g2 = poly_gcd(theta + Gf2Poly(1), xp1)
    target = (p - 1) // 2
    for g in (g1, g2):
        if g.degree == target:
            return g
    raise AssertionError(f"no idempotent divisor of degree {target} for p={p}")


def cyclic_generator_matrix(g: Gf2Poly, n: int) -> BitMatrix:
    if not poly_divides(g, Gf2Poly.x_pow_minus_one(n)):
        raise ValueError("generator polynomial must divide x^n - 1")
    k = n - g.degree
    rows = [BitVector.from_int(g.mask << i, n) for i in range(k)]
    return BitMatrix(rows, ncols=n)


def build_qr(p: int) -> ClassicalCode:
    """Augmented quadratic-residue code ``[p, (p + 1) / 2]``."""
    g = qr_generator_polynomial(p)
    return ClassicalCode(p, cyclic_generator_matrix(g, p), label=f"QR({p})")


def extend_parity(C: ClassicalCode) -> ClassicalCode:
    """Append an overall parity column at the last position."""
    parity = C.generator.row_weights() & 1
    return ClassicalCode(C.n + 1, C.generator.append_column(parity), label=f"ext({C.label})")


def puncture(C: ClassicalCode, position: int | None = None) -> ClassicalCode:
    """Delete one coordinate (default: the last) and re-reduce to full rank."""
    if position is None:
        position = C.n - 1
    if not 0 <= position < C.n:
        raise IndexError(f"position {position} outside 0..{C.n - 1}")
    if C.n == 1:
        raise ValueError("puncturing a length-1 code leaves no coordinates")
    G = row_basis(C.generator.delete_column(position))
    return ClassicalCode(C.n - 1, G, label=f"punct({C.label})")


def dual(C: ClassicalCode) -> ClassicalCode:
    return ClassicalCode(C.n, kernel_basis(C.generator), label=f"dual({C.label})")


def is_self_dual(C: ClassicalCode) -> bool:
    return 2 * C.k == C.n and rowspace_equal(C.generator, dual(C).generator)


def is_weakly_self_dual(C: ClassicalCode) -> bool:
    """``C`` is contained in its dual (self-orthogonal)."""
    return rowspace_subset(C.generator, dual(C).generator)


def is_doubly_even_classical(C: ClassicalCode) -> bool:
    """Every codeword has weight divisible by 4, decided on generators."""
    G = C.generator
    if (G.row_weights() % 4).any():
        return False
    rows = list(G)
    return all(overlap2(a, b) % 2 == 0 for i, a in enumerate(rows) for b in rows[i + 1 :])


def type2_distance_upper(n: int) -> int:
    """Upper bound ``4*floor(n/24) + 4`` on the distance of a type-II self-dual code."""
    if n <= 0 or n % 8:
        raise ValueError("type-II self-dual codes have length divisible by 8")
    return 4 * (n // 24) + 4


def eqr_lower_holds(n: int, d: int) -> bool:
    """Square-root style bound satisfied by extended QR codes: ``d^2 - 3d + 4 >= n``."""
    return d * d - 3 * d + 4 >= n


@dataclass(frozen=True)
class FamilyBounds:
    """Planning bounds for the doubly even quantum QR family.

    ``d_upper`` comes from ``d <= 4*floor((n+1)/24) + 3`` and ``n_upper`` from
    ``n <= d^2 - d + 1``; ``residue`` is ``n_upper - n`` when both inputs are known
    (non-negative means the pair is consistent with the length bound).
    """

    n: int | None
    d: int | None
    d_upper: int | None
    n_upper: int | None
    residue: int | None


def css_family_bounds(n: int | None = None, d: int | None = None) -> FamilyBounds:
    if n is None and d is None:
        raise ValueError("give a length, a distance, or both")
    if (n is not None and n <= 0) or (d is not None and d <= 0):
        raise ValueError("arguments must be positive")
    d_upper = 4 * ((n + 1) // 24) + 3 if n is not None else None
    n_upper = d * d - d + 1 if d is not None else None
    residue = n_upper - n if (n is not None and n_upper is not None) else None
    return FamilyBounds(n=n, d=d, d_upper=d_upper, n_upper=n_upper, residue=residue)


def qr_prime_scan(limit: int) -> list[int]:
    """Primes ``p <= limit`` with ``p = 7 mod 8`` (the type-II producing lengths)."""
    if limit < 2:
        return []
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return [int(p) for p in np.flatnonzero(sieve) if p % 8 == 7]
