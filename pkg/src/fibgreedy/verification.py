"""Re-runnable correctness suites over sequences, windows, and the oracle.

Each suite sweeps one family of exact checks and reports how many ran, how
many failed, and the first counterexample in a human-readable form. The CLI's
``verify`` subcommand runs them all; the test suite reuses them at the
acceptance bounds. Suites with intrinsically fixed ranges (the double-index
identities and the linear-form equivalence) keep their own defaults; max_n
drives the single-index sweeps and grid_denominator the target sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .optimality import bad_interval, classify, xi, xi_closed_form, xi_literal
from .oracle import oracle_best
from .sequences import (
    SequencePreset,
    check_cassini_like,
    check_fib_addition,
    check_shift_identity,
    seq_term,
    seq_term_from_fibs,
)

__all__ = [
    "SuiteResult",
    "growth_suite",
    "term_formula_suite",
    "shift_identity_suite",
    "cassini_suite",
    "fib_addition_suite",
    "positivity_suite",
    "xi_suite",
    "endpoint_suite",
    "closed_form_suite",
    "grid_equivalence_suite",
    "run_all",
]


@dataclass
class SuiteResult:
    name: str
    checks: int
    failures: int
    first_counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


class _Tally:
    def __init__(self, name: str) -> None:
        self.name = name
        self.checks = 0
        self.failures = 0
        self.first: str | None = None

    def check(self, ok: bool, detail: Callable[[], str]) -> None:
        self.checks += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = detail()

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.checks, self.failures, self.first)


def growth_suite(preset: SequencePreset, max_n: int = 300) -> SuiteResult:
    """Strict growth a_{n+1} > a_n and a_{n+2} > 2*a_n for n >= 1."""
    p = preset.params
    t = _Tally("strict_growth")
    for n in range(1, max_n + 1):
        ok = seq_term(p, n + 1) > seq_term(p, n) and seq_term(p, n + 2) > 2 * seq_term(p, n)
        t.check(ok, lambda n=n: f"params={p}, n={n}: growth violated")
    return t.result()


def term_formula_suite(preset: SequencePreset, max_n: int = 500) -> SuiteResult:
    """Recurrence terms equal the linear form a0*F(n-1) + a1*F(n)."""
    p = preset.params
    t = _Tally("term_formula")
    for n in range(0, max_n + 1):
        rec, lin = seq_term(p, n), seq_term_from_fibs(p, n)
        t.check(
            rec == lin,
            lambda n=n, rec=rec, lin=lin: f"params={p}, n={n}: recurrence {rec} != linear form {lin}",
        )
    return t.result()


def shift_identity_suite(preset: SequencePreset, bound: int = 50) -> SuiteResult:
    """a_{n+m} == F(n-1)*a_m + F(n)*a_{m+1} for 0 <= n, m <= bound."""
    p = preset.params
    t = _Tally("shift_identity")
    for n in range(0, bound + 1):
        for m in range(0, bound + 1):
            t.check(
                check_shift_identity(p, n, m),
                lambda n=n, m=m: f"params={p}, n={n}, m={m}: shift identity violated",
            )
    return t.result()


def cassini_suite(preset: SequencePreset, max_n: int = 300) -> SuiteResult:
    """a_n*a_{n+3} - a_{n+1}*a_{n+2} == (-1)^n * chi for n <= max_n."""
    p = preset.params
    t = _Tally("cassini_like")
    for n in range(0, max_n + 1):
        t.check(
            check_cassini_like(p, n),
            lambda n=n: f"params={p}, n={n}: alternating product identity violated",
        )
    return t.result()


def fib_addition_suite(bound: int = 30) -> SuiteResult:
    """F(n+m) == F(n-1)*F(m) + F(n)*F(m+1) for -bound <= n, m <= bound."""
    t = _Tally("fib_addition")
    for n in range(-bound, bound + 1):
        for m in range(-bound, bound + 1):
            t.check(
                check_fib_addition(n, m),
                lambda n=n, m=m: f"n={n}, m={m}: addition formula violated",
            )
    return t.result()


def positivity_suite(preset: SequencePreset, max_n: int = 300) -> SuiteResult:
    """Three strict reciprocal inequalities, checked as exact rationals:
    1/a_{2n+1} - 1/a_{2n+2} - 1/a_{2n+3} > 0,
    1/a_{2n+3} + 1/a_{2n+4} - 1/a_{2n+2} > 0,
    1/a_{2n+2} - 1/a_{2n+3} - 1/a_{2n+5} > 0."""
    p = preset.params

    def r(i: int) -> Fraction:
        return Fraction(1, seq_term(p, i))

    t = _Tally("reciprocal_positivity")
    for n in range(0, max_n + 1):
        t.check(
            r(2 * n + 1) - r(2 * n + 2) - r(2 * n + 3) > 0,
            lambda n=n: f"params={p}, n={n}: odd-gap inequality violated",
        )
        t.check(
            r(2 * n + 3) + r(2 * n + 4) - r(2 * n + 2) > 0,
            lambda n=n: f"params={p}, n={n}: adjacent-pair inequality violated",
        )
        t.check(
            r(2 * n + 2) - r(2 * n + 3) - r(2 * n + 5) > 0,
            lambda n=n: f"params={p}, n={n}: even-gap inequality violated",
        )
    return t.result()


def xi_suite(preset: SequencePreset, max_n: int = 300) -> SuiteResult:
    """Cutoff well-definedness, both characterizations, and path agreement.

    For each n: xi >= 0 with chi <= a_{2n+2}*a_{2n+4}; the reciprocal form
    1/a_{2n+3+xi} >= chi/bound > 1/a_{2n+4+xi} holds exactly; and the literal
    rational-inequality path returns the same cutoff as the integer scan.
    """
    p = preset.params
    t = _Tally("xi_cutoff")
    for n in range(0, max_n + 1):
        res = xi(p, n)
        t.check(
            res.xi >= 0 and p.chi <= seq_term(p, 2 * n + 2) * seq_term(p, 2 * n + 4),
            lambda n=n, res=res: f"params={p}, n={n}: cutoff {res.xi} not well defined",
        )
        ratio = Fraction(res.chi, res.bound)
        lo = Fraction(1, seq_term(p, 2 * n + 3 + res.xi))
        hi = Fraction(1, seq_term(p, 2 * n + 4 + res.xi))
        t.check(
            lo >= ratio > hi,
            lambda n=n, res=res: f"params={p}, n={n}: reciprocal characterization fails at xi={res.xi}",
        )
        lit = xi_literal(p, n)
        t.check(
            lit == res.xi,
            lambda n=n, res=res, lit=lit: f"params={p}, n={n}: scan xi={res.xi}, literal xi={lit}",
        )
    return t.result()


def endpoint_suite(preset: SequencePreset, max_n: int = 300) -> SuiteResult:
    """Window geometry: left <= right; window n strictly inside the band
    (1/a_{2n+2}, 1/a_{2n+1}); consecutive windows strictly separated."""
    p = preset.params

    def r(i: int) -> Fraction:
        return Fraction(1, seq_term(p, i))

    t = _Tally("window_geometry")
    previous_left: Fraction | None = None
    for n in range(0, max_n + 1):
        iv = bad_interval(p, n)
        t.check(
            iv.left <= iv.right,
            lambda n=n, iv=iv: f"params={p}, n={n}: left {iv.left} > right {iv.right}",
        )
        t.check(
            r(2 * n + 2) < iv.left and iv.right < r(2 * n + 1),
            lambda n=n, iv=iv: f"params={p}, n={n}: window not inside its band",
        )
        if previous_left is not None:
            t.check(
                iv.right < previous_left,
                lambda n=n, iv=iv: f"params={p}, n={n}: window touches the previous one",
            )
        previous_left = iv.left
    return t.result()


def closed_form_suite(preset: SequencePreset, max_n: int = 300) -> SuiteResult:
    """Preset cutoffs match their closed forms (4n+4 / 4n+6)."""
    t = _Tally("closed_form")
    for n in range(0, max_n + 1):
        got = xi(preset.params, n).xi
        want = xi_closed_form(preset, n)
        t.check(
            got == want,
            lambda n=n, got=got, want=want: f"{preset.name}, n={n}: xi={got}, closed form {want}",
        )
    return t.result()


def grid_equivalence_suite(
    preset: SequencePreset, grid_denominator: int = 1000, extra_depth: int = 8
) -> SuiteResult:
    """Classifier versus oracle over theta = k/grid_denominator, one check
    per target bundling: dominance, strict membership, verdict equivalence,
    winner first index <= g1+1, and on a loss the exact adjacent winner whose
    value is the window's left endpoint."""
    p = preset.params
    if grid_denominator < 2:
        raise ValueError(f"grid denominator must be at least 2, got {grid_denominator}")
    t = _Tally("grid_equivalence")
    for k in range(1, grid_denominator + 1):
        theta = Fraction(k, grid_denominator)
        cls = classify(p, theta)
        report = oracle_best(p, theta, extra_depth)
        greedy_value = cls.greedy.value
        best = report.best
        problem = None
        if best.value < greedy_value:
            problem = f"oracle {best.value} below greedy {greedy_value}"
        elif not best.value < theta:
            problem = f"oracle value {best.value} not strictly below theta"
        elif (best.value == greedy_value) != cls.is_best:
            problem = (
                f"verdict is_best={cls.is_best} but oracle best {best.value} "
                f"vs greedy {greedy_value}"
            )
        elif best.m > cls.greedy.g1 + 1:
            problem = f"winner first index {best.m} beyond g1+1"
        elif not cls.is_best:
            g1 = cls.greedy.g1
            if (best.m, best.n) != (g1 + 1, g1 + 2):
                problem = f"winner {(best.m, best.n)} is not the adjacent pair"
            elif cls.competitor is None or best.value != cls.competitor.value:
                problem = "winner value differs from the window's left endpoint"
        t.check(problem is None, lambda k=k, problem=problem: f"params={p}, theta={k}/{grid_denominator}: {problem}")
    return t.result()


def run_all(
    preset: SequencePreset,
    max_n: int = 300,
    grid_denominator: int = 1000,
    extra_depth: int = 8,
) -> list[SuiteResult]:
    """Every suite at the given bounds; presets add the closed-form sweep."""
    results = [
        growth_suite(preset, max_n),
        term_formula_suite(preset),
        shift_identity_suite(preset),
        cassini_suite(preset, max_n),
        fib_addition_suite(),
        positivity_suite(preset, max_n),
        xi_suite(preset, max_n),
        endpoint_suite(preset, max_n),
    ]
    if preset.name in ("fibonacci", "lucas"):
        results.append(closed_form_suite(preset, max_n))
    results.append(grid_equivalence_suite(preset, grid_denominator, extra_depth))
    return results
