import numpy as np
import pytest
from hypothesis import given

from conftest import bit_matrices
from divcodes.classical import (
    build_qr,
    css_family_bounds,
    dual,
    eqr_lower_holds,
    extend_parity,
    is_doubly_even_classical,
    is_self_dual,
    is_weakly_self_dual,
    ClassicalCode,
    puncture,
    qr_generator_polynomial,
    qr_prime_scan,
    type2_distance_upper,
)
from divcodes.distance import classical_min_distance, exhaustive_min_weight
from divcodes.gf2 import BitMatrix, random_span_elements, row_basis, rowspace_equal
from divcodes.gf2poly import Gf2Poly, poly_divides

TABLE_PRIMES = [7, 23, 47, 79, 103, 167, 191, 199]


def test_qr7_is_hamming(hamming7):
    assert (hamming7.n, hamming7.k) == (7, 4)
    assert classical_min_distance(hamming7).upper == 3


def test_qr23_is_golay():
    C = build_qr(23)
    assert C.k == 12
    rep = classical_min_distance(C)
    assert rep.certified and rep.upper == 7


def test_qr17_exhaustive():
    C = build_qr(17)
    assert C.k == 9
    assert classical_min_distance(C).upper == exhaustive_min_weight(C.generator) == 5


@pytest.mark.parametrize("p", [2, 9, 11, 13, 15])
def test_qr_rejects_bad_lengths(p):
    with pytest.raises(ValueError):
        build_qr(p)


@pytest.mark.parametrize("p,d", [(7, 4), (23, 8), (47, 12)])
def test_extended_qr(p, d):
    C = extend_parity(build_qr(p))
    assert C.k == C.n // 2
    assert is_self_dual(C) and is_doubly_even_classical(C)
    rep = classical_min_distance(C)
    assert rep.certified and rep.upper == d


@pytest.mark.parametrize("p", [7, 23, 47])
def test_puncture_inverts_extension(p):
    C = build_qr(p)
    assert rowspace_equal(puncture(extend_parity(C)).generator, C.generator)


def test_puncture_errors():
    rep1 = ClassicalCode(1, BitMatrix(["1"]))
    with pytest.raises(ValueError):
        puncture(rep1)
    with pytest.raises(IndexError):
        puncture(build_qr(7), 7)


def test_dual_examples(hamming7):
    D = dual(hamming7)
    assert D.k == 3
    weights = {int(w) for w in np.bitwise_count(random_span_elements(D.generator, 64, np.random.default_rng(1))).sum(1)}
    assert weights <= {0, 4}
    assert is_doubly_even_classical(D)
    assert dual(ClassicalCode(4, BitMatrix.identity(4))).k == 0
    assert is_doubly_even_classical(ClassicalCode(5, BitMatrix([], ncols=5)))


@given(bit_matrices(max_rows=8, max_cols=20, min_rows=1))
def test_dual_involution(M):
    C = ClassicalCode(M.ncols, row_basis(M))
    assert rowspace_equal(dual(dual(C)).generator, C.generator)


@pytest.mark.parametrize("p", qr_prime_scan(200))
def test_punctured_dual_family(p):
    C = build_qr(p)
    assert C.k == (p + 1) // 2
    assert poly_divides(qr_generator_polynomial(p), Gf2Poly.x_pow_minus_one(p))
    Csd = extend_parity(C)
    assert is_self_dual(Csd) and is_doubly_even_classical(Csd)
    D = dual(puncture(Csd))
    assert is_weakly_self_dual(D) and is_doubly_even_classical(D)
    sample = random_span_elements(Csd.generator, 10_000, np.random.default_rng(p))
    assert not (np.bitwise_count(sample).sum(1) % 4).any()


def test_bounds():
    assert type2_distance_upper(24) == 8
    assert type2_distance_upper(48) == 12
    with pytest.raises(ValueError):
        type2_distance_upper(20)
    assert eqr_lower_holds(48, 12)
    assert css_family_bounds(n=47).d_upper == 11
    assert css_family_bounds(n=7).d_upper == 3
    assert css_family_bounds(d=7).n_upper == 43
    got = [css_family_bounds(n=p).d_upper for p in TABLE_PRIMES]
    assert got == [3, 7, 11, 15, 19, 31, 35, 35]


def test_prime_scan():
    assert qr_prime_scan(50) == [7, 23, 31, 47]
    assert set(TABLE_PRIMES) <= set(qr_prime_scan(200))
    assert qr_prime_scan(6) == []
