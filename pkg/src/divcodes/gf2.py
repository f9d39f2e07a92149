"""Bit-packed GF(2) vectors and matrices.

Bits are stored little-endian in ``uint64`` words: bit ``i`` of a vector
lives in word ``i // 64`` at position ``i % 64``.  Padding bits past the
logical length are always zero, so word-level popcounts are exact.

Elimination is deterministic (lowest pivot column, lowest pivot row) so
that every derived matrix is bit-reproducible.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

WORD_BITS = 64


def nwords(n: int) -> int:
    return (n + WORD_BITS - 1) // WORD_BITS


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a ``(..., n)`` 0/1 array into ``(..., nwords(n))`` uint64 words."""
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.shape[-1]
    nw = nwords(n)
    padded = np.zeros(bits.shape[:-1] + (nw * WORD_BITS,), dtype=np.uint8)
    padded[..., :n] = bits & 1
    packed = np.packbits(padded, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype="<u8")
    as_bytes = words.view(np.uint8)
    return np.unpackbits(as_bytes, axis=-1, count=n, bitorder="little")


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.uint64)
    arr.setflags(write=False)
    return arr


def _popcount(words: np.ndarray) -> int:
    return int(np.bitwise_count(words).sum())


class BitVector:
    """Immutable binary vector of fixed length."""

    __slots__ = ("_n", "_words")

    def __init__(self, bits: Sequence[int] | np.ndarray | str = ()):
        if isinstance(bits, str):
            bits = _parse_bitstring(bits)
        arr = np.asarray(bits, dtype=np.int64).reshape(-1)
        if arr.size and ((arr != 0) & (arr != 1)).any():
            raise ValueError("bit vectors hold only 0/1 entries")
        self._n = int(arr.size)
        self._words = _frozen(pack_bits(arr.astype(np.uint8)))

    @classmethod
    def _raw(cls, n: int, words: np.ndarray) -> BitVector:
        obj = cls.__new__(cls)
        obj._n = n
        words = np.array(words, dtype=np.uint64, copy=True)
        tail = n % WORD_BITS
        if tail and words.size:
            words[-1] &= np.uint64((1 << tail) - 1)
        obj._words = _frozen(words)
        return obj

    @classmethod
    def zeros(cls, n: int) -> BitVector:
        return cls._raw(n, np.zeros(nwords(n), dtype=np.uint64))

    @classmethod
    def ones(cls, n: int) -> BitVector:
        return cls._raw(n, np.full(nwords(n), np.uint64(0xFFFFFFFFFFFFFFFF)))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> BitVector:
        bits = np.zeros(n, dtype=np.uint8)
        for i in support:
            if not 0 <= i < n:
                raise IndexError(f"position {i} outside length {n}")
            bits[i] ^= 1
        return cls(bits)

    @classmethod
    def from_int(cls, value: int, n: int) -> BitVector:
        """Bit ``i`` of ``value`` becomes entry ``i``; higher bits must be zero."""
        if value < 0 or value >> n:
            raise ValueError("integer does not fit in the requested length")
        raw = value.to_bytes(nwords(n) * 8, "little")
        return cls._raw(n, np.frombuffer(raw, dtype="<u8").astype(np.uint64))

    @staticmethod
    def concat(*parts: BitVector) -> BitVector:
        return BitVector(np.concatenate([p.bits() for p in parts]) if parts else [])

    @property
    def words(self) -> np.ndarray:
        return self._words

    def bits(self) -> np.ndarray:
        return unpack_bits(self._words, self._n)

    def to_int(self) -> int:
        return int.from_bytes(self._words.astype("<u8").tobytes(), "little")

    @property
    def weight(self) -> int:
        return _popcount(self._words)

    def support(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.bits())]

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self._n
        if not 0 <= i < self._n:
            raise IndexError(i)
        return int((int(self._words[i // WORD_BITS]) >> (i % WORD_BITS)) & 1)

    def _check(self, other: BitVector) -> None:
        if self._n != other._n:
            raise ValueError(f"length mismatch: {self._n} != {other._n}")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector._raw(self._n, self._words ^ other._words)

    __add__ = __xor__

    def __and__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector._raw(self._n, self._words & other._words)

    def __or__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector._raw(self._n, self._words | other._words)

    def dot(self, other: BitVector) -> int:
        return overlap2(self, other) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._n == other._n and bool(np.array_equal(self._words, other._words))

    def __hash__(self) -> int:
        return hash((self._n, self._words.tobytes()))

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits())

    def __repr__(self) -> str:
        return f"BitVector('{self}')"


def _parse_bitstring(s: str) -> list[int]:
    out = []
    for ch in s:
        if ch in "01":
            out.append(ord(ch) - 48)
        elif ch not in " _":
            raise ValueError(f"invalid bit character {ch!r}")
    return out


class BitMatrix:
    """Immutable binary matrix; rows are packed into uint64 words."""

    __slots__ = ("_nrows", "_ncols", "_data")

    def __init__(self, rows=(), ncols: int | None = None):
        if isinstance(rows, np.ndarray) and rows.ndim == 2:
            arr = rows.astype(np.int64)
        else:
            items = list(rows)
            parsed = []
            for r in items:
                if isinstance(r, BitVector):
                    parsed.append(r.bits().astype(np.int64))
                elif isinstance(r, str):
                    parsed.append(np.array(_parse_bitstring(r), dtype=np.int64))
                else:
                    parsed.append(np.asarray(r, dtype=np.int64).reshape(-1))
            if parsed:
                widths = {p.size for p in parsed}
                if len(widths) != 1:
                    raise ValueError("ragged rows")
                arr = np.stack(parsed)
            else:
                if ncols is None:
                    raise ValueError("an empty matrix needs an explicit column count")
                arr = np.zeros((0, ncols), dtype=np.int64)
        if ncols is not None and arr.shape[1] != ncols:
            raise ValueError(f"expected {ncols} columns, got {arr.shape[1]}")
        if arr.size and ((arr != 0) & (arr != 1)).any():
            raise ValueError("bit matrices hold only 0/1 entries")
        self._nrows, self._ncols = int(arr.shape[0]), int(arr.shape[1])
        self._data = _frozen(pack_bits(arr.astype(np.uint8)).reshape(self._nrows, nwords(self._ncols)))

    @classmethod
    def _raw(cls, nrows: int, ncols: int, data: np.ndarray) -> BitMatrix:
        obj = cls.__new__(cls)
        obj._nrows, obj._ncols = nrows, ncols
        obj._data = _frozen(np.asarray(data, dtype=np.uint64).reshape(nrows, nwords(ncols)))
        return obj

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BitMatrix:
        return cls._raw(nrows, ncols, np.zeros((nrows, nwords(ncols)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(np.eye(n, dtype=np.int64), ncols=n)

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self._nrows, self._ncols

    @property
    def data(self) -> np.ndarray:
        return self._data

    def to_array(self) -> np.ndarray:
        return unpack_bits(self._data, self._ncols).reshape(self._nrows, self._ncols)

    def row(self, i: int) -> BitVector:
        return BitVector._raw(self._ncols, self._data[i])

    def __getitem__(self, i: int) -> BitVector:
        return self.row(i)

    def __iter__(self):
        return (self.row(i) for i in range(self._nrows))

    def __len__(self) -> int:
        return self._nrows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    def __hash__(self) -> int:
        return hash((self.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self._nrows}x{self._ncols})"

    def row_weights(self) -> np.ndarray:
        return np.bitwise_count(self._data).sum(axis=1).astype(np.int64)

    def take_rows(self, indices: Sequence[int]) -> BitMatrix:
        idx = np.asarray(list(indices), dtype=np.int64)
        return BitMatrix._raw(len(idx), self._ncols, self._data[idx])

    def append_rows(self, *rows: BitVector | BitMatrix) -> BitMatrix:
        blocks = [self._data]
        count = self._nrows
        for r in rows:
            if isinstance(r, BitMatrix):
                if r.ncols != self._ncols:
                    raise ValueError("column mismatch")
                blocks.append(r.data)
                count += r.nrows
            else:
                if len(r) != self._ncols:
                    raise ValueError("column mismatch")
                blocks.append(r.words.reshape(1, -1))
                count += 1
        return BitMatrix._raw(count, self._ncols, np.vstack(blocks))

    def delete_column(self, j: int) -> BitMatrix:
        if not 0 <= j < self._ncols:
            raise IndexError(f"column {j} outside 0..{self._ncols - 1}")
        arr = np.delete(self.to_array(), j, axis=1)
        return BitMatrix(arr, ncols=self._ncols - 1)

    def append_column(self, column: Sequence[int]) -> BitMatrix:
        col = np.asarray(column, dtype=np.int64).reshape(-1, 1)
        return BitMatrix(np.hstack([self.to_array().astype(np.int64), col]), ncols=self._ncols + 1)

    def mul_vec(self, v: BitVector) -> BitVector:
        """Syndrome ``M v^T`` as a length-``nrows`` vector."""
        if len(v) != self._ncols:
            raise ValueError("length mismatch")
        parities = np.bitwise_count(self._data & v.words).sum(axis=1) & 1
        return BitVector(parities.astype(np.uint8))

    def combination(self, coefficients: Sequence[int]) -> BitVector:
        coeff = np.asarray(coefficients, dtype=bool)
        acc = np.bitwise_xor.reduce(self._data[coeff], axis=0) if coeff.any() else np.zeros(
            nwords(self._ncols), dtype=np.uint64
        )
        return BitVector._raw(self._ncols, acc)

    def to_strings(self) -> list[str]:
        return [str(r) for r in self]


def vstack(*mats: BitMatrix) -> BitMatrix:
    first, *rest = mats
    return first.append_rows(*rest)


def hstack(*mats: BitMatrix) -> BitMatrix:
    rows = {m.nrows for m in mats}
    if len(rows) != 1:
        raise ValueError("row count mismatch")
    arr = np.hstack([m.to_array() for m in mats])
    return BitMatrix(arr, ncols=sum(m.ncols for m in mats))


def _eliminate(data: np.ndarray, ncols: int, order: Iterable[int] | None = None, limit: int | None = None):
    """In-place Gauss-Jordan elimination on packed rows.

    Columns are visited in ``order`` (default ascending); the first row at or
    below the current pivot position carrying a 1 becomes the pivot.
    Returns the pivot columns in the order they were found.
    """
    nrows = data.shape[0]
    pivots: list[int] = []
    r = 0
    one = np.uint64(1)
    for c in range(ncols) if order is None else order:
        if r == nrows or (limit is not None and r == limit):
            break
        w, b = divmod(int(c), WORD_BITS)
        col = (data[:, w] >> np.uint64(b)) & one
        below = np.flatnonzero(col[r:])
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            data[[r, p]] = data[[p, r]]
            col[[r, p]] = col[[p, r]]
        mask = col.astype(bool)
        mask[r] = False
        if mask.any():
            data[mask] ^= data[r]
        pivots.append(int(c))
        r += 1
    return pivots


def rref(M: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form; zero rows are kept at the bottom."""
    data = np.array(M.data, copy=True)
    pivots = _eliminate(data, M.ncols)
    return BitMatrix._raw(M.nrows, M.ncols, data), pivots


def row_basis(M: BitMatrix) -> BitMatrix:
    """Nonzero rows of ``rref(M)``: a canonical basis of the row space."""
    R, pivots = rref(M)
    return R.take_rows(range(len(pivots)))


def rank(M: BitMatrix) -> int:
    return len(rref(M)[1])


def kernel_basis(M: BitMatrix) -> BitMatrix:
    """Basis of ``{v : M v^T = 0}``, one row per free column of ``rref(M)``."""
    n = M.ncols
    R, pivots = rref(M)
    free = [c for c in range(n) if c not in set(pivots)]
    K = np.zeros((len(free), n), dtype=np.uint8)
    if free:
        K[np.arange(len(free)), free] = 1
        if pivots:
            Rb = R.take_rows(range(len(pivots))).to_array()
            K[:, pivots] = Rb[:, free].T
    return BitMatrix(K, ncols=n)


def _reduce(R: BitMatrix, pivots: Sequence[int], v: BitVector) -> np.ndarray:
    words = np.array(v.words, copy=True)
    for i, c in enumerate(pivots):
        w, b = divmod(c, WORD_BITS)
        if (int(words[w]) >> b) & 1:
            words ^= R.data[i]
    return words


def rowspace_contains(M: BitMatrix, v: BitVector) -> bool:
    if len(v) != M.ncols:
        raise ValueError(f"length mismatch: {len(v)} != {M.ncols}")
    R, pivots = rref(M)
    return not _reduce(R, pivots, v).any()


def rowspace_equal(A: BitMatrix, B: BitMatrix) -> bool:
    if A.ncols != B.ncols:
        raise ValueError(f"length mismatch: {A.ncols} != {B.ncols}")
    ra, rb = rank(A), rank(B)
    return ra == rb and rank(vstack(A, B)) == ra


def rowspace_subset(A: BitMatrix, B: BitMatrix) -> bool:
    """True when every row of ``A`` lies in the row space of ``B``."""
    if A.ncols != B.ncols:
        raise ValueError(f"length mismatch: {A.ncols} != {B.ncols}")
    return rank(vstack(B, A)) == rank(B)


def weight(v: BitVector) -> int:
    return v.weight


def overlap2(a: BitVector, b: BitVector) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    return _popcount(a.words & b.words)


def overlap3(a: BitVector, b: BitVector, c: BitVector) -> int:
    if not len(a) == len(b) == len(c):
        raise ValueError("length mismatch")
    return _popcount(a.words & b.words & c.words)


def span_elements(M: BitMatrix) -> np.ndarray:
    """All ``2**rank`` elements of the row space as packed words (small spans only)."""
    basis = row_basis(M)
    out = np.zeros((1, nwords(M.ncols)), dtype=np.uint64)
    for r in basis.data:
        out = np.vstack([out, out ^ r])
    return out


def random_span_elements(M: BitMatrix, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` uniformly random row-space elements (packed), via random coefficient vectors."""
    if M.nrows == 0:
        return np.zeros((count, nwords(M.ncols)), dtype=np.uint64)
    coeffs = rng.integers(0, 2, size=(count, M.nrows), dtype=np.uint8).astype(bool)
    out = np.zeros((count, nwords(M.ncols)), dtype=np.uint64)
    for i in range(M.nrows):
        out[coeffs[:, i]] ^= M.data[i]
    return out
