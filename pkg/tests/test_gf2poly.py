import pytest
from hypothesis import given
from hypothesis import strategies as st

from divcodes.gf2poly import Gf2Poly, poly_divides, poly_gcd, poly_mulmod, poly_xgcd

polys = st.integers(0, 2**40).map(Gf2Poly)


def test_gcd_examples():
    x = Gf2Poly.from_exponents
    assert poly_gcd(x([2, 0]), x([1, 0])) == x([1, 0])
    f = x([5, 2, 0])
    assert poly_gcd(f, Gf2Poly(0)) == f
    assert poly_gcd(Gf2Poly.x_pow_minus_one(7), x([3, 1, 0])) == x([3, 1, 0])
    assert poly_divides(x([3, 1, 0]), Gf2Poly.x_pow_minus_one(7))
    with pytest.raises(ValueError):
        poly_gcd(Gf2Poly(0), Gf2Poly(0))


@given(polys, polys.filter(lambda p: p.degree >= 0))
def test_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys)
def test_xgcd_bezout(a, b):
    if a.degree < 0 and b.degree < 0:
        return
    g, s, t = poly_xgcd(a, b)
    assert s * a + t * b == g
    assert poly_divides(g, a) and poly_divides(g, b)


@given(polys, polys, polys.filter(lambda p: p.degree >= 1))
def test_mulmod(a, b, m):
    assert poly_mulmod(a, b, m) == (a * b) % m
