"""Shared fixtures and independent reference implementations.

The reference code here deliberately avoids the packed-word paths of
the library: matrices are lists of 0/1 ints and ranks come from a
textbook elimination, so library bugs cannot hide in both places.
"""

from __future__ import annotations

import functools
import itertools
import random
from pathlib import Path

import numpy as np

from linwht import AlgorithmSeq, BitMatrix, evaluate, sample_member
from linwht.groups import random_invertible

FIXTURES = Path(__file__).parent / "fixtures"

# 8-point transform tabulated by hand from the sign rule
# entry(i, j) = (-1)^popcount(i & j).
WHT3 = np.array(
    [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, -1, 1, -1, 1, -1, 1, -1],
        [1, 1, -1, -1, 1, 1, -1, -1],
        [1, -1, -1, 1, 1, -1, -1, 1],
        [1, 1, 1, 1, -1, -1, -1, -1],
        [1, -1, 1, -1, -1, 1, -1, 1],
        [1, 1, -1, -1, -1, -1, 1, 1],
        [1, -1, -1, 1, -1, 1, 1, -1],
    ],
    dtype=np.int32,
)

# the six n=2 members: stage texts, their product, and the spreading matrix
N2_ROWS = frozenset(
    {
        (("10/01", "01/10", "01/10"), "10/01", "10/01"),
        (("01/10", "01/10", "10/01"), "10/01", "01/10"),
        (("10/11", "01/10", "01/11"), "11/10", "10/11"),
        (("11/01", "01/10", "11/10"), "01/11", "11/01"),
        (("11/10", "01/10", "10/11"), "01/11", "11/10"),
        (("01/11", "01/10", "11/01"), "11/10", "01/11"),
    }
)


def read_fixture(name: str) -> str:
    return (FIXTURES / name).read_text()


def naive_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    assert all(len(r) == inner for r in a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) % 2 for j in range(cols)]
        for i in range(rows)
    ]


def naive_rank(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                m[r] = [x ^ y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def brute_gl(n: int) -> set[tuple[int, ...]]:
    """Every invertible n x n matrix as a word tuple, by exhaustive scan."""
    assert n <= 3
    out = set()
    for words in itertools.product(range(1 << n), repeat=n):
        rows = [[(w >> (n - 1 - c)) & 1 for c in range(n)] for w in words]
        if naive_rank(rows) == n:
            out.add(words)
    return out


def random_sequence(n: int, rng: random.Random) -> AlgorithmSeq:
    return AlgorithmSeq(tuple(random_invertible(n, rng) for _ in range(n + 1)))


def twisted_member(n: int, rng: random.Random) -> AlgorithmSeq:
    """A member with P_0 replaced by A*P_0 for a random A != I.

    Any nonidentity twist keeps the corner condition (it only touches
    P_0) and breaks the product condition.
    """
    P = sample_member(n, rng.randrange(1 << 30))
    while True:
        a = random_invertible(n, rng)
        if any(a.words[r] != 1 << (n - 1 - r) for r in range(n)):
            break
    return AlgorithmSeq((a @ P[0],) + P.matrices[1:])


def forced_singular_sequence(n: int, rng: random.Random) -> AlgorithmSeq:
    """Random sequence whose P_1 fixes the last basis vector, which forces
    two equal columns in the spreading matrix."""
    inner = random_invertible(n - 1, rng)
    row = rng.randrange(1 << (n - 1))
    p1 = BitMatrix(n, n, tuple(w << 1 for w in inner.words) + ((row << 1) | 1,))
    mats = [random_invertible(n, rng), p1]
    mats += [random_invertible(n, rng) for _ in range(n - 1)]
    return AlgorithmSeq(tuple(mats))


def bit_reverse(i: int, n: int) -> int:
    return int(format(i, f"0{n}b")[::-1], 2)


def kron_hadamard(n: int) -> np.ndarray:
    """Product of the n matrices I_{2^(k-1)} (x) F_2 (x) I_{2^(n-k)}."""
    f2 = np.array([[1, 1], [1, -1]], dtype=np.int64)
    factors = [
        np.kron(np.kron(np.eye(1 << (k - 1), dtype=np.int64), f2), np.eye(1 << (n - k), dtype=np.int64))
        for k in range(1, n + 1)
    ]
    return functools.reduce(np.matmul, factors)


def border_all_ones(P: AlgorithmSeq) -> bool:
    w = evaluate(P)
    return bool((w[0] == 1).all() and (w[:, 0] == 1).all())
