"""Exhaustive search for the best two-term sum strictly under a target.

The candidate set is every sum 1/a_m + 1/a_n of two distinct indices
g1 <= m < n, plus the greedy pair itself (which may repeat an index; it is
the value being certified, so it always competes). Any candidate must have
m >= g1, since 1/a_m alone already has to sit under theta.

Truncating the first index is sound: for m >= g1 + 2 even the largest
possible candidate is below 1/a_m + 1/a_{m+1} < 2/a_m <= 2/a_{g1+2}
< 1/a_g1 < the greedy value, because a_{k+2} > 2*a_k for k >= 1. So depth 2
already suffices; the default extra_depth of 8 is pure margin, and the
verification suites confirm the winner's first index never exceeds g1 + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError
from .greedy import _require_theta, _smallest_index_below, greedy_two_term
from .sequences import SequenceParams, seq_term

__all__ = [
    "TwoTermSum",
    "OracleReport",
    "DEFAULT_EXTRA_DEPTH",
    "oracle_best",
    "competitor_shape_check",
]

DEFAULT_EXTRA_DEPTH = 8


@dataclass(frozen=True)
class TwoTermSum:
    """A pair of indices m <= n and the exact value 1/a_m + 1/a_n."""

    m: int
    n: int
    value: Fraction


@dataclass(frozen=True)
class OracleReport:
    """Search outcome: the winner, the last first-index examined, and the
    number of candidate pairs evaluated."""

    best: TwoTermSum
    search_bound: int
    candidates_examined: int


def oracle_best(
    params: SequenceParams, theta, extra_depth: int = DEFAULT_EXTRA_DEPTH
) -> OracleReport:
    """Best two-term sum below theta, scanning first indices g1..g1+extra_depth.

    For each first index the largest admissible sum uses the smallest
    admissible partner, since reciprocals strictly decrease. Candidates are
    walked in lexicographic order and replaced only on strict improvement, so
    ties resolve to the lexicographically smallest pair.
    """
    if extra_depth < 0:
        raise ValueError(f"extra_depth must be nonnegative, got {extra_depth}")
    t = _require_theta(theta)
    gr = greedy_two_term(params, t)
    best = TwoTermSum(gr.g1, gr.g2, gr.value)
    examined = 1
    for m in range(gr.g1 + 1, gr.g1 + extra_depth + 1):
        first = Fraction(1, seq_term(params, m))
        partner = _smallest_index_below(params, t - first, m + 1)
        value = first + Fraction(1, seq_term(params, partner))
        examined += 1
        if value > best.value:
            best = TwoTermSum(m, partner, value)
    return OracleReport(
        best=best, search_bound=gr.g1 + extra_depth, candidates_examined=examined
    )


def competitor_shape_check(params: SequenceParams, theta) -> bool:
    """True iff the oracle winner is exactly the adjacent pair (g1+1, g1+2).

    Only meaningful when the greedy pick is not best; raises ContractError
    otherwise.
    """
    from .optimality import classify  # deferred: optimality imports TwoTermSum

    cls = classify(params, theta)
    if cls.is_best:
        raise ContractError(
            f"greedy is already best at theta={cls.theta}; nothing to check"
        )
    report = oracle_best(params, theta)
    g1 = cls.greedy.g1
    return (report.best.m, report.best.n) == (g1 + 1, g1 + 2)
