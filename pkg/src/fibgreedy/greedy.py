"""Greedy unit-fraction underapproximation of a target in (0, 1].

The usable terms are a_1, a_2, ... (index 0 never enters the pool). Each step
picks the smallest index, no smaller than the previous pick, whose reciprocal
fits strictly under what remains of the target. Strictness matters: a target
exactly equal to 1/a_n skips index n. Repeating the previous index is legal
and does occur, e.g. seeds (3, 4) at theta = 1 start 1/4 + 1/4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TermLimitError, ThetaDomainError
from .sequences import SequenceParams, seq_term

__all__ = [
    "GreedyResult",
    "GreedyPrefix",
    "DEFAULT_TERM_LIMIT",
    "greedy_first",
    "greedy_two_term",
    "greedy_prefix",
]

DEFAULT_TERM_LIMIT = 64


def _require_theta(theta) -> Fraction:
    if isinstance(theta, float):
        raise TypeError("theta must be exact (Fraction or int), not float")
    t = Fraction(theta)
    if not 0 < t <= 1:
        raise ThetaDomainError(f"theta must be in (0, 1], got {t}")
    return t


def _smallest_index_below(params: SequenceParams, bound: Fraction, start: int) -> int:
    """Smallest n >= start with 1/a_n < bound; bound must be positive."""
    num, den = bound.numerator, bound.denominator
    n = start
    # 1/a_n < num/den  <=>  num*a_n > den, exact cross-multiplication
    while num * seq_term(params, n) <= den:
        n += 1
    return n


def greedy_first(params: SequenceParams, theta) -> int:
    """Smallest index n >= 1 with 1/a_n strictly below theta."""
    t = _require_theta(theta)
    return _smallest_index_below(params, t, 1)


@dataclass(frozen=True)
class GreedyResult:
    """The greedy two-term pick: indices g1 <= g2 and the exact sum."""

    g1: int
    g2: int
    value: Fraction


def greedy_two_term(params: SequenceParams, theta) -> GreedyResult:
    """Greedy pair for theta: g1 as in greedy_first, then the smallest
    g2 >= g1 whose reciprocal fits strictly under the remainder."""
    t = _require_theta(theta)
    g1 = _smallest_index_below(params, t, 1)
    first = Fraction(1, seq_term(params, g1))
    g2 = _smallest_index_below(params, t - first, g1)
    return GreedyResult(g1, g2, first + Fraction(1, seq_term(params, g2)))


@dataclass(frozen=True)
class GreedyPrefix:
    """First k greedy indices (non-decreasing) and their exact partial sum."""

    indices: tuple[int, ...]
    partial_sum: Fraction


def greedy_prefix(
    params: SequenceParams, theta, k: int, limit: int = DEFAULT_TERM_LIMIT
) -> GreedyPrefix:
    """First k greedy terms; the first two always match greedy_two_term.

    The remainder stays strictly positive forever, so any k is well defined;
    the limit merely caps requested work.
    """
    t = _require_theta(theta)
    if k < 1:
        raise ValueError(f"term count must be at least 1, got {k}")
    if k > limit:
        raise TermLimitError(f"term count {k} exceeds the limit of {limit}")
    indices: list[int] = []
    total = Fraction(0)
    n = 1
    for _ in range(k):
        n = _smallest_index_below(params, t - total, n)
        indices.append(n)
        total += Fraction(1, seq_term(params, n))
    return GreedyPrefix(tuple(indices), total)
