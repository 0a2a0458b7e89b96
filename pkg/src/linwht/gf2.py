"""Exact linear algebra over GF(2) with bit-packed rows.

A matrix stores one Python int per row.  The most significant bit of a
row word is column 0, so a row's integer value reads the same as its
bit string: the matrix ``01/10`` has words ``(1, 2)``.  Column vectors
use the same convention, which makes them literally equal to the index
integers they encode: the packed form of the binary digits of ``i``
(most significant bit on top) is ``i`` itself, and the vector
``(0, ..., 0, 1)`` is the integer ``1``.

Everything here is immutable and every operation returns a new value,
so instances can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BitMatrix",
    "DimensionError",
    "SingularError",
    "identity",
    "rotation_matrix",
    "reversal_matrix",
    "int_to_bits",
    "bits_to_int",
    "parity",
]

# Above this dimension, multiplication switches to a vectorised path;
# below it, plain int loops are faster than numpy dispatch overhead.
_VECTOR_MIN_DIM = 32


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


class SingularError(ValueError):
    """The matrix is not invertible over GF(2).

    ``rank`` carries the rank reached by elimination, so callers can
    report how far from invertible the input was.
    """

    def __init__(self, message: str, rank: int):
        super().__init__(message)
        self.rank = rank


def parity(x: int) -> int:
    """Parity of the popcount, i.e. the GF(2) sum of the bits of x."""
    return x.bit_count() & 1


def _mul_words_int(a_words: Sequence[int], b_words: Sequence[int], inner: int) -> tuple[int, ...]:
    top = inner - 1
    out = []
    for w in a_words:
        acc = 0
        while w:
            p = w.bit_length() - 1
            acc ^= b_words[top - p]
            w ^= 1 << p
        out.append(acc)
    return tuple(out)


def _mul_words_vec(a_words: Sequence[int], b_words: Sequence[int], inner: int) -> tuple[int, ...]:
    a = np.array(a_words, dtype=np.uint64)
    b = np.array(b_words, dtype=np.uint64)
    shifts = np.arange(inner - 1, -1, -1, dtype=np.uint64)
    picks = ((a[:, None] >> shifts[None, :]) & np.uint64(1)).astype(bool)
    terms = np.where(picks, b[None, :], np.uint64(0))
    return tuple(int(v) for v in np.bitwise_xor.reduce(terms, axis=1))


def _mul_words(a_words: Sequence[int], b_words: Sequence[int], inner: int) -> tuple[int, ...]:
    if inner >= _VECTOR_MIN_DIM and inner <= 64 and len(a_words) >= _VECTOR_MIN_DIM:
        return _mul_words_vec(a_words, b_words, inner)
    return _mul_words_int(a_words, b_words, inner)


@dataclass(frozen=True)
class BitMatrix:
    """An immutable rows x cols matrix over GF(2), one int per row."""

    rows: int
    cols: int
    words: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative dimensions {self.rows}x{self.cols}")
        if len(self.words) != self.rows:
            raise DimensionError(
                f"{self.rows} rows declared but {len(self.words)} row words given"
            )
        limit = 1 << self.cols
        for w in self.words:
            if not 0 <= w < limit:
                raise DimensionError(f"row word {w:#x} does not fit in {self.cols} columns")

    # -- construction ------------------------------------------------

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "BitMatrix":
        """Build from nested 0/1 entries, row-major."""
        packed = []
        width = None
        for row in rows:
            bits = list(row)
            if width is None:
                width = len(bits)
            elif len(bits) != width:
                raise DimensionError("ragged rows")
            w = 0
            for b in bits:
                if b not in (0, 1):
                    raise ValueError(f"entry {b!r} is not a bit")
                w = (w << 1) | b
            packed.append(w)
        return BitMatrix(len(packed), width or 0, tuple(packed))

    @staticmethod
    def from_cols(cols: Sequence[int], rows: int) -> "BitMatrix":
        """Build from packed column vectors, leftmost first."""
        ncols = len(cols)
        words = []
        for r in range(rows):
            rbit = rows - 1 - r
            w = 0
            for c in range(ncols):
                w = (w << 1) | ((cols[c] >> rbit) & 1)
            words.append(w)
        return BitMatrix(rows, ncols, tuple(words))

    @staticmethod
    def from_text(text: str) -> "BitMatrix":
        """Parse the ``/``-separated row form, e.g. ``01/10``."""
        rows = text.split("/")
        width = len(rows[0])
        words = []
        for row in rows:
            if len(row) != width or width == 0:
                raise DimensionError(f"bad row {row!r} in {text!r}")
            if set(row) - {"0", "1"}:
                raise ValueError(f"non-bit character in {row!r}")
            words.append(int(row, 2))
        return BitMatrix(len(words), width, tuple(words))

    # -- queries -----------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        return (self.words[i] >> (self.cols - 1 - j)) & 1

    def to_text(self) -> str:
        return "/".join(format(w, f"0{self.cols}b") for w in self.words)

    def to_lists(self) -> list[list[int]]:
        return [[(w >> (self.cols - 1 - j)) & 1 for j in range(self.cols)] for w in self.words]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def is_permutation(self) -> bool:
        if self.rows != self.cols:
            return False
        seen = 0
        for w in self.words:
            if w.bit_count() != 1:
                return False
            seen |= w
        return seen == (1 << self.cols) - 1

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"BitMatrix({self.to_text()!r})"

    # -- arithmetic --------------------------------------------------

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return BitMatrix(self.rows, other.cols, _mul_words(self.words, other.words, self.cols))

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("shape mismatch in addition")
        return BitMatrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.words, other.words)))

    def transpose(self) -> "BitMatrix":
        words = [0] * self.cols
        for r, w in enumerate(self.words):
            bit = 1 << (self.rows - 1 - r)
            c = self.cols - 1
            while w:
                if w & 1:
                    words[c] |= bit
                w >>= 1
                c -= 1
        return BitMatrix(self.cols, self.rows, tuple(words))

    def apply(self, v: int) -> int:
        """Matrix times packed column vector."""
        out = 0
        for w in self.words:
            out = (out << 1) | ((w & v).bit_count() & 1)
        return out

    def left_apply(self, u: int) -> int:
        """Packed row vector times matrix: XORs the rows selected by u."""
        acc = 0
        top = self.rows - 1
        while u:
            p = u.bit_length() - 1
            acc ^= self.words[top - p]
            u ^= 1 << p
        return acc

    def rank(self) -> int:
        work = list(self.words)
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            pos = self.cols - 1 - c
            piv = next((i for i in range(r, self.rows) if (work[i] >> pos) & 1), -1)
            if piv < 0:
                continue
            work[r], work[piv] = work[piv], work[r]
            for i in range(r + 1, self.rows):
                if (work[i] >> pos) & 1:
                    work[i] ^= work[r]
            r += 1
        return r

    def inverse(self) -> "BitMatrix":
        """Gauss-Jordan inverse; raises SingularError with the rank on failure."""
        if self.rows != self.cols:
            raise DimensionError(f"cannot invert {self.rows}x{self.cols}")
        n = self.cols
        # Each working row holds (matrix row << n) | identity row.
        aug = [(self.words[r] << n) | (1 << (n - 1 - r)) for r in range(n)]
        r = 0
        for c in range(n):
            pos = 2 * n - 1 - c
            piv = next((i for i in range(r, n) if (aug[i] >> pos) & 1), -1)
            if piv < 0:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            prow = aug[r]
            for i in range(n):
                if i != r and (aug[i] >> pos) & 1:
                    aug[i] ^= prow
            r += 1
        if r < n:
            raise SingularError(f"matrix of rank {r} < {n} is singular", r)
        mask = (1 << n) - 1
        return BitMatrix(n, n, tuple(w & mask for w in aug))


def identity(n: int) -> BitMatrix:
    return BitMatrix(n, n, tuple(1 << (n - 1 - r) for r in range(n)))


def rotation_matrix(n: int) -> BitMatrix:
    """Cyclic bit rotation towards the top: row k maps component k+1 up."""
    if n < 1:
        raise DimensionError("rotation needs n >= 1")
    words = tuple(1 << (n - 2 - r) for r in range(n - 1)) + (1 << (n - 1),)
    return BitMatrix(n, n, words)


def reversal_matrix(n: int) -> BitMatrix:
    """Anti-diagonal matrix: reverses the order of the bit components."""
    if n < 1:
        raise DimensionError("reversal needs n >= 1")
    return BitMatrix(n, n, tuple(1 << r for r in range(n)))


def int_to_bits(i: int, n: int) -> tuple[int, ...]:
    """Binary digits of i as a length-n tuple, most significant first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0 <= i < 1 << n:
        raise ValueError(f"{i} does not fit in {n} bits")
    return tuple((i >> (n - 1 - k)) & 1 for k in range(n))


def bits_to_int(bits: Sequence[int]) -> int:
    v = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"entry {b!r} is not a bit")
        v = (v << 1) | b
    return v
