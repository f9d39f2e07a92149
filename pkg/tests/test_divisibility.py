import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bit_matrices
from divcodes.divisibility import (
    is_doubly_even_span,
    is_triorthogonal,
    is_triply_even_span,
    logical_overlap_divisibility,
)
from divcodes.gf2 import BitMatrix, BitVector, random_span_elements, span_elements


def span_weights(M):
    return np.bitwise_count(span_elements(M)).sum(axis=1)


def random_self_orthogonal(rng, rows, cols):
    """Random rows with every pairwise overlap and weight even."""
    out = []
    while len(out) < rows:
        v = rng.integers(0, 2, cols).astype(np.uint8)
        for _ in range(4):
            bad = [u for u in out if int(u @ v) % 2] + ([v] if v.sum() % 2 else [])
            if not bad:
                break
            v = v.copy()
            v[rng.integers(cols)] ^= 1
        if v.sum() % 2 == 0 and all(int(u @ v) % 2 == 0 for u in out):
            out.append(v)
    return BitMatrix(np.array(out), ncols=cols)


def test_examples(steane, q15, qgolay):
    assert is_doubly_even_span(steane.sx)
    r = is_doubly_even_span(BitMatrix(["1100"]))
    assert not r and r.violations == [((0,), 2)]
    assert is_doubly_even_span(BitMatrix([], ncols=4))
    assert is_triply_even_span(q15.sx)
    assert not is_triply_even_span(qgolay.sx)
    assert is_triply_even_span(BitMatrix([], ncols=3))


def test_triorthogonal(q15):
    M = q15.sx.append_rows(q15.lx)
    assert is_triorthogonal(M, [M.nrows - 1])
    assert not is_triorthogonal(BitMatrix(["1100", "0110"]), [])
    assert is_triorthogonal(BitMatrix([], ncols=3), [])
    with pytest.raises(IndexError):
        is_triorthogonal(M, [M.nrows])


def test_logical_overlap(steane, q15):
    assert logical_overlap_divisibility(steane.sx, steane.lx, 2)
    assert logical_overlap_divisibility(q15.sx, q15.lx, 4)
    assert not logical_overlap_divisibility(BitMatrix(["1111"]), BitVector("1000"), 2)


@pytest.mark.parametrize("seed", range(25))
def test_oracle_random_self_orthogonal(seed):
    rng = np.random.default_rng(seed)
    M = random_self_orthogonal(rng, int(rng.integers(1, 13)), int(rng.integers(8, 32)))
    w = span_weights(M)
    assert bool(is_doubly_even_span(M)) == (not (w % 4).any())
    assert bool(is_triply_even_span(M)) == (not (w % 8).any())


@given(bit_matrices(max_rows=7, max_cols=24))
def test_oracle_arbitrary(M):
    w = span_weights(M)
    assert bool(is_doubly_even_span(M)) == (not (w % 4).any())
    assert bool(is_triply_even_span(M)) == (not (w % 8).any())


@given(st.integers(0, 2**32 - 1))
def test_triply_implies_doubly(seed):
    rng = np.random.default_rng(seed)
    blocks = rng.integers(0, 2, (3, 6)).astype(np.uint8)
    M = BitMatrix(np.repeat(blocks, 8, axis=1), ncols=48)   # every weight is a multiple of 8
    if is_triply_even_span(M):
        assert is_doubly_even_span(M)


@given(bit_matrices(max_rows=6, max_cols=20), st.integers(0, 2**20))
def test_logical_overlap_matches_span(M, bits):
    lx = BitVector.from_int(bits % (1 << M.ncols), M.ncols)
    for m in (2, 4):
        over = np.bitwise_count(span_elements(M) & lx.words).sum(axis=1)
        assert logical_overlap_divisibility(M, lx, m, samples=0) == (not (over % m).any())


@pytest.mark.parametrize("fixture", ["steane", "qgolay", "q47"])
def test_sampling_cross_check(fixture, request):
    Q = request.getfixturevalue(fixture)
    sample = random_span_elements(Q.sx, 10_000, np.random.default_rng(0))
    assert not (np.bitwise_count(sample).sum(axis=1) % 4).any()
