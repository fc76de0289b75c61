"""Fibonacci numbers on all integer indices, and Fibonacci-type sequences.

A Fibonacci-type sequence is fixed by two seeds (a0, a1) with

    a0 > 0,  a1 >= 1,  a0 <= a1,  chi = a0^2 + a1*a0 - a1^2 > 0,

and every later term the sum of the previous two. The conditions force
1 <= a_1 < a_2 < a_3 < ... , so reciprocals of the usable terms (index >= 1)
are strictly decreasing, and a_{n+2} > 2*a_n for n >= 1.

Two presets are exposed: "fibonacci" (seeds 1, 1; a_n equals the classical
F_{n+1}) and "lucas" (seeds 3, 4; a_n equals the classical L_{n+2}).

The checker functions package integer identities that hold for every valid
sequence; the verification suites and the CLI's ``verify`` subcommand sweep
them over ranges.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import SequenceValidationError

__all__ = [
    "fib",
    "SequenceParams",
    "SequencePreset",
    "FIBONACCI",
    "LUCAS",
    "seq_term",
    "seq_term_from_fibs",
    "check_shift_identity",
    "check_cassini_like",
    "check_fib_addition",
    "parse_sequence_spec",
    "classical_label",
]


def _fib_pair(n: int) -> tuple[int, int]:
    # fast doubling: (F(n), F(n+1)) for n >= 0, O(log n) big-int operations
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    """Fibonacci number F(n) for any integer n, exactly.

    Negative indices use the reflection F(-k) = (-1)^(k+1) * F(k), which
    agrees with running the recurrence backwards. Comfortable up to |n| of a
    million and beyond.
    """
    if n >= 0:
        return _fib_pair(n)[0]
    k = -n
    f = _fib_pair(k)[0]
    return f if k & 1 else -f


@dataclass(frozen=True)
class SequenceParams:
    """Validated seeds of one Fibonacci-type sequence.

    Construction rejects seeds violating any condition, naming the failed one.
    """

    a0: int
    a1: int

    def __post_init__(self) -> None:
        if self.a0 <= 0:
            raise SequenceValidationError(f"a0 must be positive, got {self.a0}")
        if self.a1 < 1:
            raise SequenceValidationError(f"a1 must be at least 1, got {self.a1}")
        if self.a0 > self.a1:
            raise SequenceValidationError(
                f"a0 must not exceed a1, got a0={self.a0}, a1={self.a1}"
            )
        if self.chi <= 0:
            raise SequenceValidationError(
                f"chi must be positive: a0={self.a0}, a1={self.a1} give chi={self.chi}"
            )

    @property
    def chi(self) -> int:
        """The positive invariant a0^2 + a1*a0 - a1^2."""
        return self.a0 * self.a0 + self.a1 * self.a0 - self.a1 * self.a1


def make_params(a0: int, a1: int) -> SequenceParams:
    """Validated sequence seeds; raises naming the first failed condition."""
    return SequenceParams(a0, a1)


# grow-only term cache per seeds; reads are lock-free, growth is locked
_TERMS: dict[SequenceParams, list[int]] = {}
_TERMS_LOCK = threading.Lock()


def _terms(params: SequenceParams, upto: int) -> list[int]:
    terms = _TERMS.get(params)
    if terms is None:
        with _TERMS_LOCK:
            terms = _TERMS.setdefault(params, [params.a0, params.a1])
    if len(terms) <= upto:
        with _TERMS_LOCK:
            while len(terms) <= upto:
                terms.append(terms[-1] + terms[-2])
    return terms


def seq_term(params: SequenceParams, n: int) -> int:
    """Term a_n (0-based). Memoized per seeds, so repeated scans are cheap."""
    if n < 0:
        raise ValueError(f"sequence index must be nonnegative, got {n}")
    return _terms(params, n)[n]


def seq_term_from_fibs(params: SequenceParams, n: int) -> int:
    """a_n through the linear form a0*F(n-1) + a1*F(n).

    Independent of the recurrence path; the verification suites assert the
    two agree.
    """
    if n < 0:
        raise ValueError(f"sequence index must be nonnegative, got {n}")
    return params.a0 * fib(n - 1) + params.a1 * fib(n)


def check_shift_identity(params: SequenceParams, n: int, m: int) -> bool:
    """a_{n+m} == F(n-1)*a_m + F(n)*a_{m+1} for n, m >= 0."""
    if n < 0 or m < 0:
        raise ValueError(f"indices must be nonnegative, got n={n}, m={m}")
    return seq_term(params, n + m) == fib(n - 1) * seq_term(params, m) + fib(n) * seq_term(
        params, m + 1
    )


def check_cassini_like(params: SequenceParams, n: int) -> bool:
    """a_n*a_{n+3} - a_{n+1}*a_{n+2} == chi for even n, -chi for odd n."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    lhs = seq_term(params, n) * seq_term(params, n + 3) - seq_term(params, n + 1) * seq_term(
        params, n + 2
    )
    return lhs == (params.chi if n % 2 == 0 else -params.chi)


def check_fib_addition(n: int, m: int) -> bool:
    """F(n+m) == F(n-1)*F(m) + F(n)*F(m+1), valid on all integers."""
    return fib(n + m) == fib(n - 1) * fib(m) + fib(n) * fib(m + 1)


@dataclass(frozen=True)
class SequencePreset:
    """A named sequence choice: one of the presets or custom seeds."""

    name: str
    params: SequenceParams


FIBONACCI = SequencePreset("fibonacci", SequenceParams(1, 1))  # a_n = F(n+1)
LUCAS = SequencePreset("lucas", SequenceParams(3, 4))  # a_n = L(n+2)


def parse_sequence_spec(text: str) -> SequencePreset:
    """Parse ``"fibonacci"``, ``"lucas"``, or ``"custom:a0,a1"``."""
    s = text.strip()
    if s == "fibonacci":
        return FIBONACCI
    if s == "lucas":
        return LUCAS
    if s.startswith("custom:"):
        body = s[len("custom:") :]
        parts = body.split(",")
        if len(parts) != 2:
            raise SequenceValidationError(
                f"custom sequence must be 'custom:a0,a1', got {text!r}"
            )
        try:
            a0, a1 = int(parts[0]), int(parts[1])
        except ValueError:
            raise SequenceValidationError(
                f"custom seeds must be integers, got {text!r}"
            ) from None
        return SequencePreset("custom", make_params(a0, a1))
    raise SequenceValidationError(
        f"unknown sequence spec {text!r} (expected 'fibonacci', 'lucas', or 'custom:a0,a1')"
    )


def classical_label(preset: SequencePreset, index: int) -> str | None:
    """Classical subscript of a_index for presets: F_{index+1} or L_{index+2}."""
    if preset.name == "fibonacci":
        return f"F_{index + 1}"
    if preset.name == "lucas":
        return f"L_{index + 2}"
    return None
