"""Brute-force ground truth for unit's-digit sets.

A closed form with denominator d satisfies S(n + d*L) = S(n) (mod L), so the
residues of S(0) .. S(d*L - 1) are every residue the infinite sequence of minor
totals will ever take.  No difference tables are involved here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .difftab import ORACLE, ResidueProfile
from .radix import check_base, unit_digit
from .seqcore import (
    MinorTotal,
    NoClosedFormError,
    PrimeTable,
    SequenceId,
    closed_form,
    running_totals,
)


@dataclass(frozen=True)
class PeriodWindow:
    seq: SequenceId
    base: int
    residues: tuple

    @property
    def length(self) -> int:
        return len(self.residues)


@dataclass(frozen=True)
class DigitHistogram:
    seq: SequenceId
    base: int
    n_terms: int
    counts: tuple

    @property
    def present(self) -> frozenset:
        return frozenset(d for d, c in enumerate(self.counts) if c)

    @property
    def absent(self) -> frozenset:
        return frozenset(d for d, c in enumerate(self.counts) if not c)


def _closed_only(seq: SequenceId, what: str):
    if not seq.has_closed_form:
        raise NoClosedFormError(
            f"{what} needs an eventually periodic closed form; {seq} is empirical only "
            "(use empirical_histogram)"
        )


def period_window(seq: SequenceId, base: int) -> PeriodWindow:
    _closed_only(seq, "period_window")
    L = check_base(base)
    length = seq.denominator * L
    residues = tuple(closed_form(seq, n) % L for n in range(length))
    for n in range(length + 1):
        if closed_form(seq, n + length) % L != residues[n % length]:
            raise ArithmeticError(f"{seq} mod {L} is not periodic with period {length}")
    return PeriodWindow(seq, L, residues)


def oracle_profile(seq: SequenceId, base: int) -> ResidueProfile:
    window = period_window(seq, base)
    return ResidueProfile.from_admissible(seq, window.base, set(window.residues), ORACLE)


def empirical_histogram(
    seq: SequenceId, base: int, n_terms: int, primes: Optional[PrimeTable] = None
) -> DigitHistogram:
    """Unit's-digit counts over S_1 .. S_N, the totals built by plain summation."""
    L = check_base(base)
    if n_terms < 1:
        raise ValueError("need at least one minor total")
    counts = [0] * L
    for total in running_totals(seq, n_terms, primes):
        counts[unit_digit(total, L)] += 1
    return DigitHistogram(seq, L, n_terms, tuple(counts))


def witness(seq: SequenceId, base: int, j: int) -> Optional[tuple[int, MinorTotal]]:
    """Smallest n >= 1 whose minor total ends in digit ``j``; None proves a gap."""
    _closed_only(seq, "witness")
    L = check_base(base)
    if not 0 <= j < L:
        raise ValueError(f"digit {j} out of range for base {L}")
    # n = d*L stands in for n = 0, so 1..d*L is a full period
    for n in range(1, seq.denominator * L + 1):
        value = closed_form(seq, n)
        if value % L == j:
            return n, MinorTotal(n, value)
    return None
