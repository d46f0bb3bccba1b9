import pytest
from hypothesis import given, settings, strategies as st

from primality import FormKind, ParseError, detect_form, parse_number
from primality.forms import as_fermat, as_mersenne, as_proth


def test_parse_examples():
    assert parse_number("8191") == 8191
    assert parse_number("2^13-1") == 8191
    assert parse_number("9*2^11+1") == 18433
    assert parse_number(" 2 ^ 16 + 1 ") == 65537
    assert parse_number("2^1279-1") == (1 << 1279) - 1


@pytest.mark.parametrize(
    "expr, pos",
    [("", 0), ("2^", 2), ("3^5+1", 0), ("2^5*1", 3), ("9*3^4+1", 2), ("12x", 2), ("2^4+2", 4), ("7 7", 2)],
)
def test_parse_errors_report_position(expr, pos):
    with pytest.raises(ParseError) as info:
        parse_number(expr)
    assert info.value.position == pos


def test_parse_zero_is_domain_error():
    with pytest.raises(ValueError):
        parse_number("0")
    with pytest.raises(ValueError):
        parse_number("2^0-1")


def test_detect_examples():
    f = detect_form(65537)
    assert f.kind is FormKind.FERMAT and f.exponent == 4
    m = detect_form(8191)
    assert m.kind is FormKind.MERSENNE and m.exponent == 13
    p = detect_form(45057)
    assert p.kind is FormKind.PROTH and (p.k, p.exponent) == (11, 12)
    assert detect_form(11621).kind is FormKind.GENERIC


def test_detect_even_and_small_flagged():
    for n in (0, 1, 2, 10, 2**20):
        f = detect_form(n)
        assert f.kind is FormKind.GENERIC and f.warning


def test_32769_is_not_fermat():
    # 2^15 + 1: exponent 15 is not a power of two
    f = detect_form(32769)
    assert f.kind is FormKind.PROTH and (f.k, f.exponent) == (1, 15)


def test_mersenne_exponent_one_rejected():
    assert as_mersenne(1) is None
    assert detect_form(2047).kind is FormKind.MERSENNE  # p = 11 is prime
    assert detect_form(2**15 - 1).kind is FormKind.GENERIC  # p = 15 is not


def test_fermat_numbers_are_proth():
    for m in range(0, 8):
        f = (1 << (1 << m)) + 1
        assert as_fermat(f) == m
        if f >= 5:
            assert as_proth(f) == (1, 1 << m)


def test_never_mersenne_with_composite_exponent():
    for p in range(2, 200):
        form = detect_form((1 << p) - 1)
        if form.kind is FormKind.MERSENNE:
            assert all(p % d for d in range(2, p))


@settings(max_examples=400, derandomize=True)
@given(st.integers(1, 10**6), st.integers(1, 400), st.sampled_from(["+", "-", "proth", "plain"]))
def test_form_round_trip(k, e, shape):
    if shape == "proth":
        expr = f"{2 * k + 1}*2^{e}+1"
    elif shape == "plain":
        expr = str(k)
    else:
        expr = f"2^{e}{shape}1"
    n = parse_number(expr)
    form = detect_form(n)
    if form.kind is not FormKind.GENERIC:
        assert form.value() == n
    if form.kind is FormKind.PROTH:
        assert form.k % 2 == 1 and form.k < (1 << form.exponent)


def test_preference_order():
    # 3 = 2^(2^0)+1 = 2^2-1: Fermat wins over Mersenne
    assert detect_form(3).kind is FormKind.FERMAT
    # 5 is Fermat and Proth (k=1, e=2): Fermat wins
    assert detect_form(5).kind is FormKind.FERMAT
    # 7 = 2^3-1 and 3*2^1+1 is not Proth (3 > 2): Mersenne
    assert detect_form(7).kind is FormKind.MERSENNE
