import math

import pytest

from divcodes.classical import build_qr, extend_parity
from divcodes.css import CssCode, css_from_self_dual, gamma, gamma_exponent, trivial_code, validate_css
from divcodes.distance import classical_min_distance, css_distance
from divcodes.divisibility import is_doubly_even_span
from divcodes.gf2 import BitMatrix, BitVector, rowspace_equal

QR_PRIMES = [7, 23, 47, 79, 103, 167, 191, 199]


@pytest.mark.parametrize("p", QR_PRIMES)
def test_selfdual_pipeline(p):
    Q = css_from_self_dual(extend_parity(build_qr(p)))
    assert (Q.n, Q.k) == (p, 1)
    assert rowspace_equal(Q.sx, Q.sz)
    assert is_doubly_even_span(Q.sx)
    assert not Q.sx.mul_vec(BitVector.ones(p)).weight
    assert validate_css(Q).passed


@pytest.mark.parametrize("p,d", [(7, 3), (23, 7), (47, 11)])
def test_distance_at_least_punctured(p, d):
    Csd = extend_parity(build_qr(p))
    Q = css_from_self_dual(Csd)
    sd = classical_min_distance(Csd).upper
    dist = css_distance(Q)
    assert dist.certified and dist.d == d
    assert dist.d >= sd - 1


def test_selfdual_rejects():
    with pytest.raises(ValueError):
        css_from_self_dual(build_qr(7))


def test_validation_catches_stabilizer_logical(steane):
    broken = CssCode(steane.sx, steane.sz, steane.sx[0], steane.lz)
    report = validate_css(broken)
    assert not report
    assert "lx_not_in_stabilizer_span" in report.failures


def test_trivial_code():
    Q = trivial_code()
    assert Q.k == 1 and validate_css(Q).passed


def test_gamma():
    assert round(gamma(15, 1, 3), 3) == 2.465
    assert round(gamma(49, 1, 5), 3) == 2.418
    assert gamma(10, 10, 3) == 0
    assert math.isclose(gamma_exponent(trivial_code(), 3), 0.0)
    with pytest.raises(ValueError):
        gamma(7, 1, 1)


def test_k_from_ranks():
    S = BitMatrix(["1111000", "1111000"])
    Q = CssCode(S, BitMatrix([], ncols=7), BitVector.ones(7), BitVector.ones(7))
    assert Q.k == 6
    assert not validate_css(Q)
