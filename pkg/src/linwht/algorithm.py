"""Stage sequences: the algorithm objects everything else manipulates.

A transform algorithm on n bits is a sequence of n+1 invertible n x n
bit matrices (P_0, ..., P_n).  It denotes the linear map

    perm(P_0) . B . perm(P_1) . B . ... . B . perm(P_n)

where B applies a 2-point butterfly to each adjacent pair of entries
and perm(Q) sends the value at index i to index Q*i (indices read as
bit column vectors).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .gf2 import BitMatrix, DimensionError, SingularError, identity

__all__ = ["AlgorithmSeq", "seq_product", "reversed_inverted"]


@dataclass(frozen=True)
class AlgorithmSeq:
    """Immutable sequence of n+1 invertible n x n stage matrices."""

    matrices: tuple[BitMatrix, ...]

    def __post_init__(self):
        if len(self.matrices) < 2:
            raise DimensionError("an algorithm needs at least two stage matrices")
        n = len(self.matrices) - 1
        for idx, m in enumerate(self.matrices):
            if m.rows != n or m.cols != n:
                raise DimensionError(
                    f"stage matrix {idx} is {m.rows}x{m.cols}, expected {n}x{n}"
                )
            if not m.is_invertible():
                raise SingularError(f"stage matrix {idx} is singular", m.rank())

    @property
    def n(self) -> int:
        return len(self.matrices) - 1

    def __len__(self) -> int:
        return len(self.matrices)

    def __getitem__(self, k: int) -> BitMatrix:
        return self.matrices[k]

    def __iter__(self) -> Iterator[BitMatrix]:
        return iter(self.matrices)

    def key(self) -> str:
        """Canonical text form, usable as a dictionary/dedupe key."""
        return ";".join(m.to_text() for m in self.matrices)


def seq_product(P: Sequence[BitMatrix], i: int, j: int) -> BitMatrix:
    """Product P_i * P_{i+1} * ... * P_j; the identity when j < i."""
    last = len(P) - 1
    if not (0 <= i <= last and 0 <= j <= last):
        raise IndexError(f"product range [{i}, {j}] outside [0, {last}]")
    n = P[0].rows
    acc = identity(n)
    for k in range(i, j + 1):
        acc = acc @ P[k]
    return acc


def reversed_inverted(P: AlgorithmSeq) -> AlgorithmSeq:
    """The sequence (P_n^-1, ..., P_0^-1), which computes the transpose map."""
    return AlgorithmSeq(tuple(m.inverse() for m in reversed(P.matrices)))
