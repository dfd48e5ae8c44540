"""Sequence terms and their minor totals (partial sums) over exact integers."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Optional

DEFAULT_SIEVE_LIMIT = 120_000


class NoClosedFormError(ValueError):
    """Raised when an analytic operation is asked for a sequence without a closed form."""


class WrongKindError(ValueError):
    pass


class CapacityError(IndexError):
    """A prime index lies beyond what the sieve holds."""


class SequenceId(enum.Enum):
    NATURAL = ("natural", 2)
    EVEN = ("even", 1)
    ODD = ("odd", 1)
    FAULHABER_P2 = ("squares", 6)
    PRIMES = ("primes", None)

    def __init__(self, label: str, denominator: Optional[int]):
        self.label = label
        # denominator of the integer-valued closed-form polynomial
        self.denominator = denominator

    @property
    def has_closed_form(self) -> bool:
        return self.denominator is not None

    def __str__(self):
        return self.label


CLOSED_FORM_KINDS = tuple(s for s in SequenceId if s.has_closed_form)

_ALIASES = {"faulhaber2": SequenceId.FAULHABER_P2, "faulhaber": SequenceId.FAULHABER_P2}


def sequence_by_name(name: str) -> SequenceId:
    key = name.strip().lower()
    for seq in SequenceId:
        if seq.label == key:
            return seq
    try:
        return _ALIASES[key]
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}") from None


@dataclass(frozen=True)
class MinorTotal:
    n: int
    value: int

    def __int__(self):
        return self.value


class PrimeTable:
    """Primes below ``limit``, found once by the sieve of Eratosthenes."""

    def __init__(self, limit: int = DEFAULT_SIEVE_LIMIT):
        if limit < 2:
            raise ValueError("sieve limit must be at least 2")
        self.limit = limit
        flags = bytearray([1]) * limit
        flags[0:2] = b"\x00\x00"
        for p in range(2, int(limit**0.5) + 1):
            if flags[p]:
                flags[p * p :: p] = bytes(len(range(p * p, limit, p)))
        self._primes = tuple(i for i, f in enumerate(flags) if f)

    @property
    def capacity(self) -> int:
        return len(self._primes)

    def nth(self, n: int) -> int:
        if n < 1:
            raise ValueError("prime index starts at 1")
        if n > len(self._primes):
            raise CapacityError(
                f"prime #{n} is beyond the sieve capacity of {len(self._primes)} "
                f"(limit {self.limit})"
            )
        return self._primes[n - 1]

    def first(self, n: int) -> tuple[int, ...]:
        if n > len(self._primes):
            self.nth(n)
        return self._primes[:n]


@functools.lru_cache(maxsize=None)
def default_primes() -> PrimeTable:
    return PrimeTable(DEFAULT_SIEVE_LIMIT)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def term(seq: SequenceId, n: int, primes: Optional[PrimeTable] = None) -> int:
    """Return the n-th member (1-based) of ``seq``."""
    if n < 1:
        raise ValueError("term index starts at 1")
    if seq is SequenceId.NATURAL:
        return n
    if seq is SequenceId.EVEN:
        return 2 * n
    if seq is SequenceId.ODD:
        return 2 * n - 1
    if seq is SequenceId.FAULHABER_P2:
        return n * n
    return (primes or default_primes()).nth(n)


def closed_form(seq: SequenceId, n: int) -> int:
    """Closed-form minor total as a bare int; also the header f(i) of difference tables."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if seq is SequenceId.NATURAL:
        return _exact_div(n * (n + 1), 2)
    if seq is SequenceId.EVEN:
        return n * (n + 1)
    if seq is SequenceId.ODD:
        return n * n
    if seq is SequenceId.FAULHABER_P2:
        return _exact_div(n * (n + 1) * (2 * n + 1), 6)
    raise NoClosedFormError(
        f"{seq} has no closed form for its minor totals; use the empirical histogram"
    )


def minor_total_closed(seq: SequenceId, n: int) -> MinorTotal:
    return MinorTotal(n, closed_form(seq, n))


def minor_total_accumulated(
    seq: SequenceId, n: int, primes: Optional[PrimeTable] = None
) -> MinorTotal:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if seq is SequenceId.PRIMES:
        return MinorTotal(n, sum((primes or default_primes()).first(n)))
    return MinorTotal(n, sum(term(seq, k) for k in range(1, n + 1)))


def running_totals(seq: SequenceId, count: int, primes: Optional[PrimeTable] = None):
    """Yield S_1 .. S_count by accumulation."""
    if seq is SequenceId.PRIMES:
        members = (primes or default_primes()).first(count)
    else:
        members = (term(seq, k) for k in range(1, count + 1))
    total = 0
    for x in members:
        total += x
        yield total
