#!/usr/bin/env python3
"""Dense GF(2) matrices packed into 64-bit words

Rows are stored little-endian within each word: column j of a row lives in
bit j % 64 of word j // 64. Bits past the last column are always zero.
"""
from collections.abc import Iterable, Sequence

import numpy as np

from src.core.constants import Limits
from src.core.errors import InvalidArgumentError
from src.gf2.shapes import MatrixShape

WORD_BITS = Limits.WORD_BITS
_ONE = np.uint64(1)


def _word_count(cols: int) -> int:
    return -(-cols // WORD_BITS)


def _pack(dense: np.ndarray) -> np.ndarray:
    rows, cols = dense.shape
    n_words = _word_count(cols)
    if n_words == 0:
        return np.zeros((rows, 0), dtype=np.uint64)

    padded = np.zeros((rows, n_words * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = dense
    packed = np.ascontiguousarray(np.packbits(padded, axis=1, bitorder="little"))
    return packed.view("<u8").astype(np.uint64)


def _unpack(words: np.ndarray, cols: int) -> np.ndarray:
    rows = words.shape[0]
    if cols == 0:
        return np.zeros((rows, 0), dtype=np.uint8)

    as_bytes = np.ascontiguousarray(words.astype("<u8")).view(np.uint8)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :cols]


class BitMatrix:
    """Immutable binary matrix; safe to share between threads and trials"""

    __slots__ = ("_rows", "_cols", "_words")

    def __init__(self, rows: int, cols: int, words: np.ndarray):
        if rows < 0 or cols < 0:
            raise InvalidArgumentError(f"matrix dimensions must be non-negative, got {rows}x{cols}")

        words = np.array(words, dtype=np.uint64, copy=True).reshape(rows, _word_count(cols))
        tail = cols % WORD_BITS
        if rows and tail and np.any(words[:, -1] >> np.uint64(tail)):
            raise InvalidArgumentError("padding bits beyond the last column must be zero")

        words.flags.writeable = False
        self._rows = rows
        self._cols = cols
        self._words = words

    @classmethod
    def from_dense(cls, dense: np.ndarray | Sequence[Sequence[int]], cols: int | None = None) -> "BitMatrix":
        """Pack a 0/1 array; `cols` is only needed for matrices with no rows"""
        arr = np.asarray(dense, dtype=np.uint8)
        if arr.size == 0 and arr.ndim != 2:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise InvalidArgumentError(f"expected a 2-D array, got {arr.ndim}-D")
        if np.any(arr > 1):
            raise InvalidArgumentError("GF(2) entries must be 0 or 1")
        return cls(arr.shape[0], arr.shape[1], _pack(arr))

    @classmethod
    def from_strings(cls, rows: Iterable[str], cols: int | None = None) -> "BitMatrix":
        """Build from strings such as ["10", "01"]"""
        rows = list(rows)
        if not rows:
            return cls.zeros(0, cols or 0)
        width = len(rows[0])
        if any(len(r) != width or set(r) - {"0", "1"} for r in rows):
            raise InvalidArgumentError(f"rows must be equal-length 0/1 strings, got {rows}")
        return cls.from_dense([[int(ch) for ch in r] for r in rows])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, np.zeros((rows, _word_count(cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, size: int) -> "BitMatrix":
        return cls.from_dense(np.eye(size, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> MatrixShape:
        return MatrixShape(m=self._rows, k=self._cols)

    @property
    def words(self) -> np.ndarray:
        """Read-only packed storage, shape (rows, ceil(cols / 64))"""
        return self._words

    def to_dense(self) -> np.ndarray:
        return _unpack(self._words, self._cols)

    def take_rows(self, mask: np.ndarray) -> "BitMatrix":
        """Rows selected by a boolean mask or an index array"""
        selected = self._words[mask]
        return BitMatrix(selected.shape[0], self._cols, selected)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if other.cols != self._cols:
            raise InvalidArgumentError(f"cannot stack {self._cols} columns on {other.cols}")
        return BitMatrix(self._rows + other.rows, self._cols, np.vstack([self._words, other.words]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self._rows == other.rows
            and self._cols == other.cols
            and bool(np.array_equal(self._words, other.words))
        )

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._words.tobytes()))

    def __repr__(self) -> str:
        body = ["".join(str(b) for b in row) for row in self.to_dense()]
        return f"BitMatrix({self._rows}x{self._cols}, {body})"


def rank(mat: BitMatrix) -> int:
    """GF(2) rank; rows that fit one word go through the integer XOR basis"""
    if mat.cols == 0:
        return 0
    if mat.cols <= WORD_BITS:
        return rank_of_row_masks(mat.words[:, 0].tolist())
    return rank_packed(mat)


def rank_packed(mat: BitMatrix) -> int:
    """GF(2) rank by forward elimination over packed words, on a scratch copy"""
    work = np.array(mat.words, copy=True)
    n_rows = mat.rows
    pivot_row = 0

    for col in range(mat.cols):
        if pivot_row == n_rows:
            break
        word, bit = divmod(col, WORD_BITS)
        hits = np.flatnonzero((work[pivot_row:, word] >> np.uint64(bit)) & _ONE)
        if hits.size == 0:
            continue

        first = pivot_row + int(hits[0])
        if first != pivot_row:
            work[[pivot_row, first]] = work[[first, pivot_row]]
        # hits[0] was the first set row, so the swapped-down row has a clear bit
        if hits.size > 1:
            work[pivot_row + hits[1:]] ^= work[pivot_row]
        pivot_row += 1

    return pivot_row


def rank_of_row_masks(rows: Iterable[int]) -> int:
    """Rank of rows given as integer bit masks (XOR basis keyed by leading bit)"""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def random_matrix(shape: MatrixShape, rng: np.random.Generator) -> BitMatrix:
    """Uniform random matrix: every entry an independent fair coin"""
    bits = rng.integers(0, 2, size=(shape.m, shape.k), dtype=np.uint8)
    return BitMatrix.from_dense(bits)


def stack_block_angular(
    a_block: BitMatrix,
    b_block: BitMatrix,
    c_left: BitMatrix,
    c_right: BitMatrix,
) -> BitMatrix:
    """Lay out ((A 0), (0 B), (C D)) as one matrix"""
    if c_left.cols != a_block.cols:
        raise InvalidArgumentError(f"C has {c_left.cols} columns but A has {a_block.cols}")
    if c_right.cols != b_block.cols:
        raise InvalidArgumentError(f"D has {c_right.cols} columns but B has {b_block.cols}")
    if c_left.rows != c_right.rows:
        raise InvalidArgumentError(f"C has {c_left.rows} rows but D has {c_right.rows}")

    left, right = a_block.cols, b_block.cols
    top, middle = a_block.rows, b_block.rows
    dense = np.zeros((top + middle + c_left.rows, left + right), dtype=np.uint8)
    dense[:top, :left] = a_block.to_dense()
    dense[top:top + middle, left:] = b_block.to_dense()
    dense[top + middle:, :left] = c_left.to_dense()
    dense[top + middle:, left:] = c_right.to_dense()
    return BitMatrix.from_dense(dense)
