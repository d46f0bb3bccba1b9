import random

import pytest

from primality import (
    PolyModRing,
    TestConfig,
    aks,
    lucas_lehmer,
    miller_rabin,
    pepin_test,
    poly_pow_mod,
    sieve,
    trial_division,
)
from primality.deterministic import aks_parameters
from primality.polyring import first_aks_failure, fft_is_exact, schoolbook_mul, x_plus_a_pow


# trial division

def test_trial_examples():
    assert trial_division(25).witness == 5
    assert trial_division(11621).tag == "prime"
    v = trial_division(2860486317)
    assert v.is_composite and v.witness == 3
    assert trial_division(1).is_inapplicable
    assert trial_division(2).tag == "prime"


def test_trial_matches_sieve():
    primes = set(sieve(20000))
    for n in range(2, 20001):
        assert (trial_division(n).tag == "prime") == (n in primes), n


# pepin

FERMAT = [(1 << (1 << m)) + 1 for m in range(7)]


def test_pepin_small_fermat_numbers_agree_with_trial():
    for f in FERMAT[1:5]:
        assert pepin_test(f).tag == "prime" == trial_division(f).tag


def test_pepin_f5_f6_composite():
    assert pepin_test(4294967297).is_composite
    assert pepin_test(18446744073709551617).is_composite


def test_pepin_sign():
    # 3^2 = 9 = -1 (mod 5)
    assert pow(3, 2, 5) == 4
    assert pepin_test(5).tag == "prime"


@pytest.mark.parametrize("n", [3, 7, 11, 32769, 18433])
def test_pepin_refuses(n):
    assert pepin_test(n).is_inapplicable


# lucas-lehmer

MERSENNE_EXPONENTS = {2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127}


def test_lucas_lehmer_table():
    assert lucas_lehmer(13).tag == "prime"
    assert lucas_lehmer(11).is_composite
    assert lucas_lehmer(31).tag == "prime"
    assert lucas_lehmer(37).is_composite


def test_lucas_lehmer_known_exponents():
    for p in sieve(127):
        v = lucas_lehmer(p)
        assert (v.tag == "prime") == (p in MERSENNE_EXPONENTS), p
        m = (1 << p) - 1
        if p <= 31:
            assert v.tag == trial_division(m).tag
        else:
            assert v.is_composite == miller_rabin(m, TestConfig(50, p)).is_composite


@pytest.mark.parametrize("p", [0, 1, 4, 9, 15])
def test_lucas_lehmer_needs_prime_exponent(p):
    assert lucas_lehmer(p).is_inapplicable


# polynomial ring

def test_ring_examples():
    x1 = PolyModRing.x_plus(5, 3, 1)
    assert poly_pow_mod(x1, 2).coeffs == (1, 2, 1)
    assert poly_pow_mod(PolyModRing(7, 4, [3, 1, 4]), 0) == PolyModRing.one(7, 4)
    assert poly_pow_mod(PolyModRing.x_plus(7, 3, 2), 7) == PolyModRing(7, 3, [2, 1])


def test_ring_folds_and_reduces():
    p = PolyModRing(5, 3, [7, 0, 0, 1, 6])
    assert p.coeffs == (3, 1, 0)
    assert len(p.coeffs) == 3 and all(c < 5 for c in p.coeffs)


def test_ring_mismatch():
    with pytest.raises(ValueError):
        PolyModRing(5, 3, [1]) * PolyModRing(5, 4, [1])
    with pytest.raises(ValueError):
        PolyModRing(5, 3, [1]) + PolyModRing(7, 3, [1])


def schoolbook_pow(base, e):
    out = PolyModRing.one(base.n, base.r)
    for _ in range(e):
        out = schoolbook_mul(out, base)
    return out


def test_pow_matches_schoolbook():
    rng = random.Random(99)
    for _ in range(300):
        n, r = rng.randint(2, 50), rng.randint(1, 50)
        base = PolyModRing(n, r, [rng.randrange(n) for _ in range(r)])
        e = rng.randrange(40)
        assert poly_pow_mod(base, e) == schoolbook_pow(base, e)


@pytest.mark.parametrize("n", [2**31 - 1, 2**32 - 5, 2**32 + 15, 2**61 - 1, 10**30 + 57])
def test_mul_matches_schoolbook_wide_coefficients(n):
    rng = random.Random(n)
    r = 37
    a = PolyModRing(n, r, [rng.randrange(n) for _ in range(r)])
    b = PolyModRing(n, r, [rng.randrange(n) for _ in range(r)])
    assert a * b == schoolbook_mul(a, b)


def test_x_plus_a_pow_matches_generic_pow():
    for n, r in [(31, 7), (561, 11), (2**31 - 1, 13), (2**64 + 13, 5)]:
        for a in (1, 2, 5):
            assert x_plus_a_pow(n, r, a, n) == poly_pow_mod(PolyModRing.x_plus(n, r, a), n)


def test_fft_batch_matches_exact_path():
    seen = set()
    for n in (1009, 1729, 8911, 20011, 65537, 10403):
        r, limit = aks_parameters(n)
        assert fft_is_exact(n, r)
        target = PolyModRing.monomial(n, r, n % r)
        a_values = range(1, min(limit, 12) + 1)
        exact = next(
            (a for a in a_values if x_plus_a_pow(n, r, a, n) != target + PolyModRing(n, r, [a])), None
        )
        assert first_aks_failure(n, r, a_values) == exact
        seen.add(exact is None)
    assert seen == {True, False}


# aks

def test_aks_examples():
    v = aks(8)
    assert v.is_composite and v.witness == 2
    assert aks(31).tag == "prime"
    assert aks(561).is_composite
    assert aks(1).is_inapplicable


def test_aks_parameters():
    r, limit = aks_parameters(2**31 - 1)
    assert r > 0 and limit > 0


def test_aks_step5_identity_small_n():
    primes = set(sieve(200))
    for n in range(2, 201):
        r, limit = aks_parameters(n)
        target_x = PolyModRing.monomial(n, r, n)
        holds = [x_plus_a_pow(n, r, a, n) == target_x + PolyModRing(n, r, [a]) for a in range(1, limit + 1)]
        if n in primes:
            assert holds[0], n
        elif all(n != b**e for b in range(2, 15) for e in range(2, 8)):
            assert not all(holds), n


def test_aks_matches_sieve(aks_verdicts):
    primes = set(sieve(20000))
    bad = [n for n, v in aks_verdicts.items() if (v.tag == "prime") != (n in primes)]
    assert bad == []


@pytest.mark.slow
def test_aks_mersenne_31():
    assert aks(2**31 - 1).tag == "prime"
