"""Fast structural membership checks for stage sequences.

A sequence P = (P_0, ..., P_n) computes the 2^n-point Walsh-Hadamard
transform exactly when two bit-matrix conditions hold.  Write
P_{i:j} = P_i * ... * P_j and let the spreading matrix be

    X = ( P_{0:n-1}*e | P_{0:n-2}*e | ... | P_{0:1}*e | P_0*e ),

where e = (0, ..., 0, 1)^T.  The conditions are

  * product condition:  P_{0:n} = X * X^T, and
  * inverse condition:  X is invertible and row k of X^{-1} equals the
    bottom row of P_{0:n-k}^{-1} (k = 1..n).

Neither condition implies the other; ``find_counterexample`` searches
out witnesses for both gaps.  Everything here runs on n x n bit
matrices only (O(n^4) bit operations), never on 2^n-sized objects.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .algorithm import AlgorithmSeq, seq_product
from .gf2 import BitMatrix, identity, parity
from .groups import random_invertible

__all__ = [
    "CheckReport",
    "ConditionError",
    "NotMemberError",
    "spreading_matrix",
    "check_membership",
    "is_member",
    "check_corner_condition",
    "predict_plus_set",
    "find_counterexample",
]


class ConditionError(ValueError):
    """A predictor was called on a sequence that fails its precondition."""


class NotMemberError(ValueError):
    """The sequence does not compute the Walsh-Hadamard transform."""


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    x_invertible: bool
    cond_product: bool
    cond_inverse: bool
    witness: Optional[str]

    def __post_init__(self):
        if self.passed != (self.cond_product and self.cond_inverse):
            raise ValueError("inconsistent report: passed must mirror the two conditions")
        if self.cond_inverse and not self.x_invertible:
            raise ValueError("inconsistent report: inverse condition needs invertible X")


def _prefix_products(P: AlgorithmSeq) -> list[BitMatrix]:
    prefix = [P[0]]
    for k in range(1, P.n + 1):
        prefix.append(prefix[-1] @ P[k])
    return prefix


def _spreading_from_prefix(prefix: list[BitMatrix], n: int) -> BitMatrix:
    return BitMatrix.from_cols([prefix[j].apply(1) for j in range(n - 1, -1, -1)], n)


def spreading_matrix(P: AlgorithmSeq) -> BitMatrix:
    """Columns P_{0:n-1}*e, ..., P_0*e for e = (0,...,0,1)^T."""
    return _spreading_from_prefix(_prefix_products(P), P.n)


def check_membership(P: AlgorithmSeq) -> CheckReport:
    """Evaluate both membership conditions without forming any inverse of X.

    The inverse condition is tested as M * X = I where M stacks the
    claimed rows; the bottom rows of the partial-product inverses come
    from one inversion of P_{0:n-1} via
    P_{0:j}^{-1} = P_{j+1:n-1} * P_{0:n-1}^{-1}.
    """
    n = P.n
    mats = P.matrices
    prefix = _prefix_products(P)
    x = _spreading_from_prefix(prefix, n)
    rank_x = x.rank()
    x_invertible = rank_x == n
    cond_product = prefix[n] == x @ x.transpose()

    cond_inverse = False
    if x_invertible:
        # rho[j] = bottom row of P_{j+1:n-1}, accumulated right to left
        rho = [0] * n
        suffix = identity(n)
        for j in range(n - 1, -1, -1):
            rho[j] = suffix.words[-1]
            if j:
                suffix = mats[j] @ suffix
        f = prefix[n - 1].inverse()
        claimed = BitMatrix(n, n, tuple(f.left_apply(rho[n - 1 - r]) for r in range(n)))
        cond_inverse = claimed @ x == identity(n)

    passed = cond_product and cond_inverse
    if passed:
        witness = None
    elif not x_invertible:
        witness = f"spreading matrix is singular (rank {rank_x} of {n})"
    elif not cond_product:
        witness = "product of all stage matrices differs from X*X^T"
    else:
        witness = "rows of X^-1 do not match the partial-product inverses"
    return CheckReport(passed, x_invertible, cond_product, cond_inverse, witness)


def is_member(P: AlgorithmSeq) -> bool:
    return check_membership(P).passed


def check_corner_condition(P: AlgorithmSeq) -> bool:
    """No central product P_{k:l} (0 < k <= l < n), nor its inverse, has
    a 1 in its bottom-right corner.

    Equivalent to the inverse condition of ``check_membership``, and to
    the computed matrix having an all-ones first row and first column.
    """
    n = P.n
    inv = [P[k].inverse() for k in range(1, n)]
    for k in range(1, n):
        acc = P[k]
        acc_inv = inv[k - 1]
        for l in range(k, n):
            if l > k:
                acc = acc @ P[l]
                acc_inv = inv[l - 1] @ acc_inv
            if acc.entry(n - 1, n - 1) or acc_inv.entry(n - 1, n - 1):
                return False
    return True


def predict_plus_set(P: AlgorithmSeq, i: int) -> frozenset[int]:
    """Outputs predicted to carry +1 in column i, from bit matrices alone.

    Requires the corner condition; then the +1 rows of column i are
    exactly { j : <(X X^T)^{-1} P_{0:n} i, j> = 0 }.  For i = 0 this is
    every output index.
    """
    n = P.n
    if not 0 <= i < 1 << n:
        raise ValueError(f"input index {i} outside 0..{(1 << n) - 1}")
    if not check_corner_condition(P):
        raise ConditionError("plus-set prediction needs the corner condition to hold")
    x = spreading_matrix(P)
    gram_inv = (x @ x.transpose()).inverse()
    u = gram_inv.apply(seq_product(P, 0, n).apply(i))
    return frozenset(j for j in range(1 << n) if parity(u & j) == 0)


def find_counterexample(
    n: int,
    which: str,
    budget: int = 100_000,
    seed: int = 0,
) -> Optional[AlgorithmSeq]:
    """Search for a sequence violating exactly one membership condition.

    ``which`` selects the violated condition: "product" finds a P with
    the inverse condition holding but the product condition broken;
    "inverse" the other way around.  Draws uniform random sequences
    until one qualifies; returns None if the budget runs out.
    """
    if which not in ("product", "inverse"):
        raise ValueError(f"which must be 'product' or 'inverse', got {which!r}")
    if n < 2:
        raise ValueError("no condition can fail at n = 1; need n >= 2")
    rng = random.Random(seed)
    for _ in range(budget):
        P = AlgorithmSeq(tuple(random_invertible(n, rng) for _ in range(n + 1)))
        r = check_membership(P)
        if which == "product" and r.cond_inverse and not r.cond_product:
            return P
        if which == "inverse" and r.cond_product and not r.cond_inverse:
            return P
    return None
