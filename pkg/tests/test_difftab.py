import pytest
from hypothesis import given, strategies as st

from minortotals.difftab import (
    PAPER_METHOD,
    ResidueProfile,
    build_table,
    certificate,
    certify_faulhaber,
    certify_simple,
    faulhaber_integer_part,
    predict_profile,
    realize,
)
from minortotals.seqcore import (
    CLOSED_FORM_KINDS,
    NoClosedFormError,
    SequenceId,
    WrongKindError,
    closed_form,
)

NAT, EVEN, ODD, SQ, PRIMES = (
    SequenceId.NATURAL,
    SequenceId.EVEN,
    SequenceId.ODD,
    SequenceId.FAULHABER_P2,
    SequenceId.PRIMES,
)


def brute_digits(seq, L, upto=2000):
    """Residues of S_0 .. S_upto, by direct summation with no closed form."""
    seen, total = {0}, 0
    member = {NAT: lambda k: k, EVEN: lambda k: 2 * k, ODD: lambda k: 2 * k - 1, SQ: lambda k: k * k}[seq]
    for k in range(1, upto + 1):
        total += member(k)
        seen.add(total % L)
    return seen


def test_even_base10_header():
    assert build_table(EVEN, 10).header == (0, 2, 6, 12, 20, 30, 42, 56, 72, 90)


def test_odd_base10_bold_zero_row9():
    assert build_table(ODD, 10).cell(9, 3) == 0


def test_squares_base10_header():
    assert build_table(SQ, 10).header == (0, 1, 5, 14, 30, 55, 91, 140, 204, 285)


def test_even_base2_degenerate():
    t = build_table(EVEN, 2)
    assert t.header == (0, 2)
    assert t.cells == ((0, 2), (-1, 1))
    assert t.certified_digits == {0}


def test_table_rejects_primes():
    with pytest.raises(NoClosedFormError, match="empirical"):
        build_table(PRIMES, 10)


@pytest.mark.parametrize("seq", CLOSED_FORM_KINDS, ids=str)
@pytest.mark.parametrize("L", range(2, 17))
def test_table_structure(seq, L):
    t = build_table(seq, L)
    assert len(t.cells) == L and all(len(row) == L for row in t.cells)
    for j in range(L):
        for i in range(L):
            assert t.cell(j, i) == t.header[i] - j
            if j:
                assert t.cell(j - 1, i) - t.cell(j, i) == 1
    assert list(t.header) == sorted(t.header)


# gray cells of the printed even-sequence tables
@pytest.mark.parametrize(
    "L, j, gray",
    [
        (10, 0, {0, 20, 30, 90}),
        (10, 2, {0, 10, 40, 70}),
        (10, 6, {0, 50}),
        (8, 0, {0, 56}),
        (8, 2, {0, 40}),
        (8, 4, {8, 16}),
        (8, 6, {0, 24}),
    ],
)
def test_even_marks_match_printed_tables(L, j, gray):
    t = build_table(EVEN, L)
    marked = {v for v, m in zip(t.cells[j], t.marks[j]) if m}
    assert marked == gray


def test_squares_marks_cover_printed_base10_cells():
    printed = {0: {0, 5, 30, 55, 140, 285}, 1: {0, 90}, 4: {10, 200}, 5: {0, 25, 50, 135, 280}, 6: {85}, 9: {5, 195}}
    t = build_table(SQ, 10)
    for j in range(10):
        marked = {v for v, m in zip(t.cells[j], t.marks[j]) if m}
        # the printed table highlights nonnegative cells only
        assert {v for v in marked if v >= 0} == printed.get(j, set())


def test_squares_marks_cover_printed_base8_cells():
    printed = {0: {0, 140}, 1: {0, 4}, 2: {12, 28}, 3: {52, 88}, 5: {0}, 6: {8, 24}, 7: {48, 84}}
    t = build_table(SQ, 8)
    for j, cells in printed.items():
        marked = {v for v, m in zip(t.cells[j], t.marks[j]) if m}
        assert cells <= marked
    assert t.certified_digits == set(range(8))


@pytest.mark.parametrize(
    "seq, L, j, expected",
    [(EVEN, 10, 6, True), (EVEN, 10, 4, False), (ODD, 10, 7, False), (ODD, 3, 2, False), (NAT, 10, 2, False), (NAT, 10, 5, True)],
)
def test_certify_simple(seq, L, j, expected):
    assert certify_simple(seq, L, j) is expected


@pytest.mark.parametrize("seq", [SQ, PRIMES])
def test_certify_simple_wrong_kind(seq):
    with pytest.raises(WrongKindError):
        certify_simple(seq, 10, 0)


@pytest.mark.parametrize("L, j, expected", [(10, 5, True), (10, 8, False), (8, 7, True)])
def test_certify_faulhaber(L, j, expected):
    assert certify_faulhaber(L, j) is expected


def test_certify_faulhaber_base6_all_digits():
    assert all(certify_faulhaber(6, j) for j in range(6))


def test_digit_out_of_range():
    with pytest.raises(ValueError):
        certify_faulhaber(10, 10)
    with pytest.raises(ValueError):
        certify_simple(ODD, 5, 5)


@given(st.integers(2, 36), st.integers(0, 40), st.integers(0, 35))
def test_faulhaber_integer_part_is_exact_identity(L, k, i):
    i %= L
    # (V(Lk+i) - V(i)) / L computed directly, as a fraction with denominator 6
    lhs = faulhaber_integer_part(L, k, i)
    assert lhs * 6 * L == 6 * (closed_form(SQ, L * k + i) - closed_form(SQ, i))


@given(st.integers(2, 36), st.integers(0, 35), st.integers(0, 500))
def test_faulhaber_integer_part_period_six_in_k(L, i, k):
    i %= L
    diff = faulhaber_integer_part(L, k + 6, i) - faulhaber_integer_part(L, k, i)
    assert diff.denominator == 1


@pytest.mark.parametrize(
    "seq, L, gaps",
    [
        (NAT, 10, {2, 4, 7, 9}),
        (EVEN, 10, {1, 3, 4, 5, 7, 8, 9}),
        (ODD, 8, {2, 3, 5, 6, 7}),
        (SQ, 10, {2, 3, 7, 8}),
        (SQ, 8, set()),
    ],
)
def test_predict_profile(seq, L, gaps):
    p = predict_profile(seq, L)
    assert p.gaps == gaps
    assert p.method == PAPER_METHOD


def test_predict_even_base10_admissible():
    assert predict_profile(EVEN, 10).admissible == {0, 2, 6}


def test_predict_even_base5_odd_digit():
    assert 1 in predict_profile(EVEN, 5).admissible


def test_predict_rejects_primes():
    with pytest.raises(NoClosedFormError, match="empirical_histogram"):
        predict_profile(PRIMES, 10)


def test_profile_must_partition():
    with pytest.raises(ValueError):
        ResidueProfile(ODD, 3, frozenset({0, 1}), frozenset({1, 2}), PAPER_METHOD)


@pytest.mark.parametrize("seq", CLOSED_FORM_KINDS, ids=str)
@pytest.mark.parametrize("L", range(2, 17))
def test_predict_matches_direct_summation(seq, L):
    assert predict_profile(seq, L).admissible == brute_digits(seq, L)


@pytest.mark.parametrize("seq", CLOSED_FORM_KINDS, ids=str)
@pytest.mark.parametrize("L", range(2, 17))
def test_profile_invariants(seq, L):
    p = predict_profile(seq, L)
    assert 0 in p.admissible
    assert p.admissible | p.gaps == set(range(L))
    if seq is EVEN and L % 2 == 0:
        assert all(j % 2 == 0 for j in p.admissible)


def test_odd_gaps_nonempty_3_to_16_and_empty_at_2():
    assert predict_profile(ODD, 2).gaps == set()
    for L in range(3, 17):
        assert predict_profile(ODD, L).gaps


def test_natural_gap_bases():
    for L in (4, 8, 16):
        assert not predict_profile(NAT, L).gaps
    for L in (5, 6, 7, 9, 10):
        assert predict_profile(NAT, L).gaps


@pytest.mark.parametrize("seq", CLOSED_FORM_KINDS, ids=str)
@pytest.mark.parametrize("L", range(2, 17))
def test_certificates_realize_nonnegative_m(seq, L):
    for j in range(L):
        cert = certificate(seq, L, j)
        found = realize(seq, L, j)
        assert (cert is None) == (found is None) == (j not in predict_profile(seq, L).admissible)
        if found:
            n, m = found
            assert m >= 0
            assert closed_form(seq, n) == L * m + j
            assert n % L == cert[0]
