"""Runtime size limits.

The bit-matrix core handles any dimension the packed representation can
hold, but the dense evaluator and the dataflow exporter materialise
2^n-sized objects and are therefore guarded.  Setting the environment
variable ``WHT_MAX_N`` replaces both of those guards at call time; the
packed-row dimension bound ``N_MAX`` is a representation contract and
stays fixed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

N_MAX = 64

ENV_MAX_N = "WHT_MAX_N"


class SizeLimitError(ValueError):
    """A dense 2^n-sized computation was refused by a size guard."""


@dataclass(frozen=True)
class Limits:
    n_max: int = N_MAX
    oracle_max_n: int = 14
    export_max_n: int = 6


def active_limits() -> Limits:
    """Current limits, honouring the ``WHT_MAX_N`` override if set."""
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return Limits()
    try:
        v = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from exc
    if v < 1:
        raise ValueError(f"{ENV_MAX_N} must be positive, got {v}")
    return Limits(oracle_max_n=v, export_max_n=v)
