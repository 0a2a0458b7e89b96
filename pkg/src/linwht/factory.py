"""Parametrization of all stage sequences that compute the transform.

Every member is built from one B in GL_n and n matrices Q_1..Q_n in
GL_{n-1}, via (with C the downward index rotation and D_i the bordered
matrix diag(Q_i, 1)):

    P_0 = B * D_1
    P_i = D_i^{-1} * C * D_{i+1}      for 0 < i < n
    P_n = D_n^{-1} * C * B^T

``factorize`` inverts the construction; B comes back as the spreading
matrix of the sequence.  The map is injective, so member counts equal
parameter counts: |GL_n| * |GL_{n-1}|^n.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .algorithm import AlgorithmSeq
from .config import N_MAX
from .gf2 import BitMatrix, DimensionError, rotation_matrix
from .groups import enumerate_gl, enumerate_perm, random_invertible
from .membership import NotMemberError, check_membership, spreading_matrix
from .oracle import evaluate, hadamard

__all__ = [
    "FactorTuple",
    "MemberSurvey",
    "build",
    "factorize",
    "sample_member",
    "enumerate_members",
    "enumerate_bit_index_members",
    "survey_members",
]

MEMBER_ENUM_MAX = 3
BIT_INDEX_ENUM_MAX = 4


@dataclass(frozen=True)
class FactorTuple:
    """B plus the n inner matrices; the free coordinates of a member."""

    b: BitMatrix
    qs: tuple[BitMatrix, ...]

    def __post_init__(self):
        n = self.b.rows
        if not self.b.is_square() or n < 1:
            raise DimensionError(f"B must be square of size >= 1, got {self.b.rows}x{self.b.cols}")
        if not self.b.is_invertible():
            raise ValueError("B must be invertible")
        if len(self.qs) != n:
            raise DimensionError(f"need exactly {n} inner matrices, got {len(self.qs)}")
        for i, q in enumerate(self.qs, start=1):
            if q.rows != n - 1 or q.cols != n - 1:
                raise DimensionError(
                    f"inner matrix {i} must be {n - 1}x{n - 1}, got {q.rows}x{q.cols}"
                )
            if not q.is_invertible():
                raise ValueError(f"inner matrix {i} must be invertible")

    @property
    def n(self) -> int:
        return self.b.rows


def _bordered(q: BitMatrix) -> BitMatrix:
    """diag(q, 1): pad with a final row and column equal to e_n."""
    n = q.rows + 1
    return BitMatrix(n, n, tuple(w << 1 for w in q.words) + (1,))


def _unbordered(m: BitMatrix) -> BitMatrix:
    n = m.rows
    if m.words[-1] != 1 or any(w & 1 for w in m.words[:-1]):
        raise RuntimeError("internal error: factor matrix is not bordered")
    return BitMatrix(n - 1, n - 1, tuple(w >> 1 for w in m.words[:-1]))


def build(f: FactorTuple) -> AlgorithmSeq:
    n = f.n
    c = rotation_matrix(n)
    d = [_bordered(q) for q in f.qs]
    d_inv = [_bordered(q.inverse()) for q in f.qs]
    mats = [f.b @ d[0]]
    for i in range(1, n):
        mats.append(d_inv[i - 1] @ c @ d[i])
    mats.append(d_inv[n - 1] @ c @ f.b.transpose())
    return AlgorithmSeq(tuple(mats))


def factorize(P: AlgorithmSeq) -> FactorTuple:
    """Recover the (B, Q_1..Q_n) coordinates of a member.

    Raises NotMemberError when the sequence fails ``check_membership``.
    """
    report = check_membership(P)
    if not report.passed:
        raise NotMemberError(report.witness or "sequence fails the membership conditions")
    n = P.n
    b = spreading_matrix(P)
    c_t = rotation_matrix(n).transpose()
    qs = []
    tilde = b.inverse() @ P[0]
    qs.append(_unbordered(tilde))
    for i in range(1, n):
        tilde = c_t @ tilde @ P[i]
        qs.append(_unbordered(tilde))
    return FactorTuple(b, tuple(qs))


def sample_member(n: int, seed: Optional[int] = None) -> AlgorithmSeq:
    """Uniform draw from the member set (uniform over factor tuples)."""
    if not 1 <= n <= N_MAX:
        raise ValueError(f"n must be in 1..{N_MAX}, got {n}")
    rng = random.Random(seed)
    b = random_invertible(n, rng)
    qs = tuple(random_invertible(n - 1, rng) for _ in range(n))
    return build(FactorTuple(b, qs))


def _factor_tuples(n: int, bit_index: bool) -> Iterator[FactorTuple]:
    outer = enumerate_perm if bit_index else enumerate_gl
    inner = list(outer(n - 1))
    for b in outer(n):
        for qs in itertools.product(inner, repeat=n):
            yield FactorTuple(b, qs)


def enumerate_members(n: int, dedupe: bool = False) -> Iterator[AlgorithmSeq]:
    """All members at size n, one per factor tuple.

    The construction is injective, so ``dedupe`` never drops anything;
    the flag exists to demonstrate that empirically.
    """
    if not 1 <= n <= MEMBER_ENUM_MAX:
        raise ValueError(f"full enumeration supported for 1 <= n <= {MEMBER_ENUM_MAX}")
    yield from _enumerate(n, bit_index=False, dedupe=dedupe)


def enumerate_bit_index_members(n: int, dedupe: bool = False) -> Iterator[AlgorithmSeq]:
    """Members whose stage matrices are all permutations of the index bits."""
    if not 1 <= n <= BIT_INDEX_ENUM_MAX:
        raise ValueError(f"bit-index enumeration supported for 1 <= n <= {BIT_INDEX_ENUM_MAX}")
    yield from _enumerate(n, bit_index=True, dedupe=dedupe)


def _enumerate(n: int, bit_index: bool, dedupe: bool) -> Iterator[AlgorithmSeq]:
    seen: set[str] = set()
    for f in _factor_tuples(n, bit_index):
        P = build(f)
        if dedupe:
            k = P.key()
            if k in seen:
                continue
            seen.add(k)
        yield P


@dataclass(frozen=True)
class MemberSurvey:
    raw: int
    distinct: int
    verified: int


def survey_members(n: int, verify_oracle: bool = False) -> MemberSurvey:
    """Enumerate every member at size n and verify each distinct one.

    Verification always runs the fast structural check; with
    ``verify_oracle`` it also compares the computed matrix entrywise
    against the transform.
    """
    reference = hadamard(n) if verify_oracle else None
    raw = 0
    seen: set[str] = set()
    verified = 0
    for f in _factor_tuples(n, bit_index=False):
        P = build(f)
        raw += 1
        k = P.key()
        if k in seen:
            continue
        seen.add(k)
        ok = check_membership(P).passed
        if ok and reference is not None:
            ok = bool((evaluate(P) == reference).all())
        verified += ok
    return MemberSurvey(raw, len(seen), verified)
