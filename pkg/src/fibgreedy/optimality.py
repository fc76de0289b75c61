"""Deciding whether the greedy two-term pick is the best one possible.

For each even first index 2n+2 there is a single half-open window of targets

    ( 1/a_{2n+3} + 1/a_{2n+4},  1/a_{2n+2} + 1/a_{2n+3+xi(n)} ]

on which the adjacent pair (2n+3, 2n+4) strictly beats the greedy pick;
outside every window greedy wins, and an odd first index always wins. The
window's right edge is governed by the cutoff xi(n): the largest shift s
such that a_{2n+3+s} * chi still fits under a_{2n+2} * a_{2n+3} * a_{2n+4}.

Window n sits strictly inside the band (1/a_{2n+2}, 1/a_{2n+1}) of targets
whose greedy first index is exactly 2n+2, so classification needs only one
membership test; windows never touch and march strictly downward.

The cutoff has an equivalent definition through Fibonacci factors:
the largest s with a_{2n+2}*F(s) + a_{2n+3}*F(s+1) <= bound/chi as an exact
rational inequality. ``xi_literal`` evaluates that form word for word and is
kept as an independent cross-check on the integer-only scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import SelfCheckError, UnsupportedPresetError
from .greedy import GreedyResult, _require_theta, greedy_two_term
from .oracle import TwoTermSum
from .rationals import approx_decimal, format_rational
from .sequences import SequenceParams, SequencePreset, seq_term

__all__ = [
    "XiResult",
    "BadInterval",
    "Classification",
    "xi",
    "xi_literal",
    "xi_closed_form",
    "bad_interval",
    "bad_interval_record",
    "classify",
    "interval_table",
]


@dataclass(frozen=True)
class XiResult:
    """Cutoff at window index n, with the product bound and chi used."""

    n: int
    xi: int
    bound: int
    chi: int


@lru_cache(maxsize=None)
def _xi_result(params: SequenceParams, n: int) -> XiResult:
    a = lambda i: seq_term(params, i)
    bound = a(2 * n + 2) * a(2 * n + 3) * a(2 * n + 4)
    chi = params.chi
    if a(2 * n + 3) * chi > bound:
        # equivalent to chi > a_{2n+2}*a_{2n+4}, impossible for valid seeds
        raise SelfCheckError(f"cutoff undefined at n={n} for {params}")
    s = 0
    while a(2 * n + 4 + s) * chi <= bound:
        s += 1
    return XiResult(n=n, xi=s, bound=bound, chi=chi)


def xi(params: SequenceParams, n: int, cross_check: bool = False) -> XiResult:
    """Cutoff xi(n): largest s with a_{2n+3+s} * chi <= the product bound.

    The scan walks s upward using integers only. With cross_check=True the
    literal rational-inequality path must agree or SelfCheckError is raised.
    """
    if n < 0:
        raise ValueError(f"window index must be nonnegative, got {n}")
    result = _xi_result(params, n)
    if cross_check:
        literal = xi_literal(params, n)
        if literal != result.xi:
            raise SelfCheckError(
                f"cutoff paths disagree at n={n}: scan={result.xi}, literal={literal}"
            )
    return result


def xi_literal(params: SequenceParams, n: int) -> int:
    """Cutoff via the defining form: largest s with
    a_{2n+2}*F(s) + a_{2n+3}*F(s+1) <= bound/chi, compared as exact rationals.

    Kept deliberately independent of the integer-only scan: Fibonacci factors
    advance by their own recurrence and the bound stays a Fraction.
    """
    if n < 0:
        raise ValueError(f"window index must be nonnegative, got {n}")
    a2 = seq_term(params, 2 * n + 2)
    a3 = seq_term(params, 2 * n + 3)
    a4 = seq_term(params, 2 * n + 4)
    rhs = Fraction(a2 * a3 * a4, params.chi)
    f_s, f_s1 = 0, 1  # F(0), F(1)
    if a2 * f_s + a3 * f_s1 > rhs:
        raise SelfCheckError(f"cutoff undefined at n={n} for {params}")
    s = 0
    while True:
        f_s, f_s1 = f_s1, f_s + f_s1
        if a2 * f_s + a3 * f_s1 > rhs:
            return s
        s += 1


def xi_closed_form(preset, n: int) -> int:
    """Closed-form cutoff for presets: 4n+4 (fibonacci) or 4n+6 (lucas).

    Custom seeds have no known closed form; asking for one raises
    UnsupportedPresetError.
    """
    name = preset.name if isinstance(preset, SequencePreset) else preset
    if n < 0:
        raise ValueError(f"window index must be nonnegative, got {n}")
    if name == "fibonacci":
        return 4 * n + 4
    if name == "lucas":
        return 4 * n + 6
    raise UnsupportedPresetError(f"no closed-form cutoff for sequence {name!r}")


@dataclass(frozen=True)
class BadInterval:
    """Window n of targets where greedy loses: left excluded, right included."""

    n: int
    left: Fraction
    right: Fraction
    xi: int

    def covers(self, theta: Fraction) -> bool:
        return self.left < theta <= self.right

    @property
    def is_empty(self) -> bool:
        return self.left == self.right


@lru_cache(maxsize=None)
def bad_interval(params: SequenceParams, n: int) -> BadInterval:
    """Endpoints of window n, exactly."""
    if n < 0:
        raise ValueError(f"window index must be nonnegative, got {n}")
    x = _xi_result(params, n).xi
    left = Fraction(1, seq_term(params, 2 * n + 3)) + Fraction(1, seq_term(params, 2 * n + 4))
    right = Fraction(1, seq_term(params, 2 * n + 2)) + Fraction(
        1, seq_term(params, 2 * n + 3 + x)
    )
    return BadInterval(n=n, left=left, right=right, xi=x)


def bad_interval_record(interval: BadInterval) -> dict:
    """Serialization row for one window; approx fields are display-only."""
    return {
        "n": interval.n,
        "xi": interval.xi,
        "left": format_rational(interval.left),
        "right": format_rational(interval.right),
        "left_approx": approx_decimal(interval.left),
        "right_approx": approx_decimal(interval.right),
    }


@dataclass(frozen=True)
class Classification:
    """Verdict for one target: greedy result, best-or-not, and when beaten,
    the witnessing window plus the pair that wins there."""

    theta: Fraction
    greedy: GreedyResult
    is_best: bool
    witness_interval: BadInterval | None
    competitor: TwoTermSum | None


def classify(params: SequenceParams, theta, cross_check_intervals: int = 0) -> Classification:
    """Decide whether the greedy pick is best for theta.

    An odd greedy first index is always best. An even first index 2m+2 is
    tested against window m alone; nesting makes other windows unreachable.
    When beaten, the winning competitor is the adjacent pair (2m+3, 2m+4),
    whose value is the window's left endpoint.

    cross_check_intervals=N additionally scans windows 0..N-1 for membership
    and raises SelfCheckError if the scan disagrees with the single test.
    """
    t = _require_theta(theta)
    gr = greedy_two_term(params, t)
    witness: BadInterval | None = None
    if gr.g1 % 2 == 0:
        m = gr.g1 // 2 - 1
        candidate = bad_interval(params, m)
        if candidate.covers(t):
            witness = candidate
    if cross_check_intervals > 0:
        hits = [
            j for j in range(cross_check_intervals) if bad_interval(params, j).covers(t)
        ]
        expected = [witness.n] if witness is not None and witness.n < cross_check_intervals else []
        if hits != expected:
            raise SelfCheckError(
                f"interval scan disagrees at theta={t}: scan hit {hits}, expected {expected}"
            )
    if witness is None:
        return Classification(t, gr, True, None, None)
    competitor = TwoTermSum(2 * witness.n + 3, 2 * witness.n + 4, witness.left)
    return Classification(t, gr, False, witness, competitor)


def interval_table(params: SequenceParams, count: int) -> list[BadInterval]:
    """Windows 0..count-1; left endpoints strictly decrease down the list."""
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    return [bad_interval(params, j) for j in range(count)]
