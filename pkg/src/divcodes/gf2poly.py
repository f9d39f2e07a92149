"""Dense polynomials over GF(2).

A polynomial is held as a Python integer whose bit ``i`` is the coefficient
of ``x**i``; arbitrary-precision ints act as the packed word array.
"""

from __future__ import annotations

from collections.abc import Iterable

from .gf2 import BitVector


class Gf2Poly:
    __slots__ = ("_mask",)

    def __init__(self, mask: int = 0):
        if mask < 0:
            raise ValueError("coefficient mask must be non-negative")
        self._mask = int(mask)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> Gf2Poly:
        mask = 0
        for e in exponents:
            mask ^= 1 << e
        return cls(mask)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> Gf2Poly:
        """Coefficients listed lowest degree first."""
        return cls(sum((int(c) & 1) << i for i, c in enumerate(coeffs)))

    @classmethod
    def x_pow_minus_one(cls, n: int) -> Gf2Poly:
        return cls((1 << n) | 1)

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return self._mask.bit_length() - 1

    @property
    def coefficients(self) -> BitVector:
        return BitVector.from_int(self._mask, self.degree + 1)

    def is_zero(self) -> bool:
        return self._mask == 0

    def __bool__(self) -> bool:
        return self._mask != 0

    def __add__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(self._mask ^ other._mask)

    __sub__ = __add__

    def __mul__(self, other: Gf2Poly) -> Gf2Poly:
        a, b = self._mask, other._mask
        if a.bit_count() > b.bit_count():
            a, b = b, a
        out = 0
        while a:
            low = a & -a
            out ^= b << (low.bit_length() - 1)
            a ^= low
        return Gf2Poly(out)

    def __divmod__(self, other: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r, d = self._mask, other._mask
        dd = d.bit_length()
        q = 0
        while r.bit_length() >= dd:
            shift = r.bit_length() - dd
            q ^= 1 << shift
            r ^= d << shift
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other: Gf2Poly) -> Gf2Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Gf2Poly) -> Gf2Poly:
        return divmod(self, other)[1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Gf2Poly) and self._mask == other._mask

    def __hash__(self) -> int:
        return hash(("Gf2Poly", self._mask))

    def __call__(self, x: int) -> int:
        """Evaluate at ``x`` in GF(2)."""
        if x & 1:
            return self._mask.bit_count() & 1
        return self._mask & 1

    def __str__(self) -> str:
        if not self._mask:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            if (self._mask >> e) & 1:
                terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Gf2Poly({self})"


def poly_gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Monic gcd; every nonzero GF(2) polynomial is already monic."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a


def poly_xgcd(a: Gf2Poly, b: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly, Gf2Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == poly_gcd(a, b)``."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = Gf2Poly(1), Gf2Poly(0)
    t0, t1 = Gf2Poly(0), Gf2Poly(1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 + q * s1
        t0, t1 = t1, t0 + q * t1
    return r0, s0, t0


def poly_mulmod(a: Gf2Poly, b: Gf2Poly, m: Gf2Poly) -> Gf2Poly:
    return (a * b) % m


def poly_divides(d: Gf2Poly, f: Gf2Poly) -> bool:
    """True when ``d`` divides ``f`` (the zero polynomial is divisible by anything nonzero)."""
    return not (f % d)
