"""Positional notation in radices 2 through 36."""

import string

MIN_BASE = 2
MAX_BASE = 36
ALPHABET = string.digits + string.ascii_uppercase


def check_base(base) -> int:
    L = int(base)
    if L != base or not MIN_BASE <= L <= MAX_BASE:
        raise ValueError(f"base must be an integer in [{MIN_BASE}, {MAX_BASE}], got {base!r}")
    return L


def digit_char(d: int, base: int = MAX_BASE) -> str:
    if not 0 <= d < base:
        raise ValueError(f"digit {d} out of range for base {base}")
    return ALPHABET[d]


def unit_digit(value: int, base: int) -> int:
    if value < 0:
        raise ValueError("value must be nonnegative")
    return value % check_base(base)


def render(value: int, base: int) -> str:
    """Most-significant-first digit string of ``value``; ``"0"`` for zero."""
    L = check_base(base)
    if value < 0:
        raise ValueError("value must be nonnegative")
    if value == 0:
        return "0"
    out = []
    while value:
        value, d = divmod(value, L)
        out.append(ALPHABET[d])
    return "".join(reversed(out))


def parse(text: str, base: int) -> int:
    L = check_base(base)
    if not text:
        raise ValueError("empty digit string")
    value = 0
    for ch in text.upper():
        d = ALPHABET.find(ch)
        if d < 0 or d >= L:
            raise ValueError(f"invalid digit {ch!r} for base {L}")
        value = value * L + d
    return value


def parse_base_range(text: str) -> list[int]:
    """``"4..10"`` -> [4, ..., 10]; a bare ``"7"`` is a range of one."""
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise ValueError(f"bad base range {text!r}; expected LO..HI") from None
    if hi_i < lo_i:
        raise ValueError(f"empty base range {text!r}")
    return [check_base(b) for b in range(lo_i, hi_i + 1)]
