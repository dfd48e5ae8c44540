"""Difference tables and the analytic admissible-digit sets they certify.

Writing n = L*k + i (i the unit's digit of the index), a minor total ends in
digit j exactly when

    m = (S(L*k + i) - S(i)) / L + (S(i) - j) / L

is a nonnegative integer for some k.  The second term is a cell of the L x L
difference table.  For the even and odd sequences the first term is a
polynomial in k with integer coefficients, so a cell certifies j iff it is
divisible by L.  For the sum of squares the first term carries sixths and the
cell must supply the complementary fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .radix import check_base
from .seqcore import (
    NoClosedFormError,
    SequenceId,
    WrongKindError,
    closed_form,
)

PAPER_METHOD = "paper-method"
ORACLE = "oracle"
EMPIRICAL = "empirical"

SIMPLE_KINDS = (SequenceId.NATURAL, SequenceId.EVEN, SequenceId.ODD)


def _require_closed_form(seq: SequenceId):
    if not seq.has_closed_form:
        raise NoClosedFormError(
            f"{seq} has no closed-form minor total, so no difference table exists; "
            "use oracle.empirical_histogram for an empirical digit count instead"
        )


@dataclass(frozen=True)
class ResidueProfile:
    seq: SequenceId
    base: int
    admissible: frozenset
    gaps: frozenset
    method: str

    def __post_init__(self):
        everything = set(range(self.base))
        if self.admissible | self.gaps != everything or self.admissible & self.gaps:
            raise ValueError("admissible and gaps must partition the digits of the base")

    @classmethod
    def from_admissible(cls, seq, base, admissible, method):
        admissible = frozenset(admissible)
        return cls(seq, base, admissible, frozenset(range(base)) - admissible, method)


@dataclass(frozen=True)
class DifferenceTable:
    seq: SequenceId
    base: int
    header: tuple  # f(i) for i = 0..L-1
    cells: tuple  # cells[j][i] = header[i] - j
    marks: tuple  # marks[j][i]: this cell certifies digit j

    def cell(self, j: int, i: int) -> int:
        return self.cells[j][i]

    def row_certified(self, j: int) -> bool:
        return any(self.marks[j])

    @property
    def certified_digits(self) -> frozenset:
        return frozenset(j for j in range(self.base) if self.row_certified(j))


def faulhaber_integer_part(L: int, k: int, i: int) -> Fraction:
    """(V(L*k + i) - V(i)) / L for the sum of squares, kept as an exact sixth-fraction."""
    linear = (i + 1) * (2 * i + 1) + i * (2 * i + 1) + 2 * i * (i + 1)
    return Fraction(2 * L * L * k**3 + 3 * L * k * k * (2 * i + 1) + k * linear, 6)


def _natural_integer_part(L: int, k: int, i: int) -> Fraction:
    return Fraction(L * k * k + k * (2 * i + 1), 2)


def _k_residues(seq: SequenceId) -> range:
    # the k-dependent part of m is periodic in k modulo the closed form's
    # denominator, so one full cycle of k decides every cell
    return range(seq.denominator)


def _cell_certifies(seq: SequenceId, L: int, i: int, diff: int) -> Optional[int]:
    """Return a k (mod the denominator) making m an integer, or None."""
    if seq in (SequenceId.EVEN, SequenceId.ODD):
        return 0 if diff % L == 0 else None
    part = faulhaber_integer_part if seq is SequenceId.FAULHABER_P2 else _natural_integer_part
    tail = Fraction(diff, L)
    for k in _k_residues(seq):
        if (part(L, k, i) + tail).denominator == 1:
            return k
    return None


def build_table(seq: SequenceId, base: int) -> DifferenceTable:
    _require_closed_form(seq)
    L = check_base(base)
    header = tuple(closed_form(seq, i) for i in range(L))
    cells = tuple(tuple(f - j for f in header) for j in range(L))
    marks = tuple(
        tuple(_cell_certifies(seq, L, i, cells[j][i]) is not None for i in range(L))
        for j in range(L)
    )
    return DifferenceTable(seq, L, header, cells, marks)


def certify_simple(seq: SequenceId, base: int, j: int) -> bool:
    """Whether digit ``j`` is reachable for the natural, even or odd sequence."""
    if seq not in SIMPLE_KINDS:
        raise WrongKindError(f"certify_simple handles natural/even/odd, not {seq}")
    L = check_base(base)
    _check_digit(j, L)
    if seq is SequenceId.NATURAL:
        # period-complete form: n = L*k + i with k in {0, 1} covers n in 0..2L-1
        return any(closed_form(seq, n) % L == j for n in range(2 * L))
    return any((closed_form(seq, i) - j) % L == 0 for i in range(L))


def certify_faulhaber(base: int, j: int) -> bool:
    L = check_base(base)
    _check_digit(j, L)
    return certificate(SequenceId.FAULHABER_P2, L, j) is not None


def certificate(seq: SequenceId, base: int, j: int) -> Optional[tuple[int, int]]:
    """First (i, k mod d) whose cell makes m integral for digit ``j``, else None."""
    _require_closed_form(seq)
    L = check_base(base)
    _check_digit(j, L)
    for i in range(L):
        k = _cell_certifies(seq, L, i, closed_form(seq, i) - j)
        if k is not None:
            return i, k
    return None


def realize(seq: SequenceId, base: int, j: int) -> Optional[tuple[int, int]]:
    """Turn a certificate into a concrete (n, m) with S_n = L*m + j and m >= 0.

    Every coefficient of the k-dependent part of m is nonnegative, so moving k
    up by whole periods of the denominator keeps m integral and eventually
    nonnegative.
    """
    cert = certificate(seq, base, j)
    if cert is None:
        return None
    L = check_base(base)
    i, k = cert
    while True:
        n = L * k + i
        m, r = divmod(closed_form(seq, n) - j, L)
        if r:
            raise ArithmeticError(f"certificate {cert} does not realize digit {j} in base {L}")
        if m >= 0:
            return n, m
        k += seq.denominator


def predict_profile(seq: SequenceId, base: int) -> ResidueProfile:
    _require_closed_form(seq)
    L = check_base(base)
    if seq is SequenceId.FAULHABER_P2:
        admissible = [j for j in range(L) if certify_faulhaber(L, j)]
    else:
        admissible = [j for j in range(L) if certify_simple(seq, L, j)]
    return ResidueProfile.from_admissible(seq, L, admissible, PAPER_METHOD)


def _check_digit(j: int, L: int):
    if not 0 <= j < L:
        raise ValueError(f"digit {j} out of range for base {L}")
