import random

import pytest

from primality import (
    LucasParams,
    baillie_psw,
    jacobi,
    lucas_uv,
    selfridge_params,
    sieve,
    strong_lucas_probable_prime,
)

from liars import jacobi_oracle
import numpy as np


def direct_uv(n, P, Q, k):
    U0, U1, V0, V1 = 0, 1, 2, P
    for _ in range(k):
        U0, U1 = U1, P * U1 - Q * U0
        V0, V1 = V1, P * V1 - Q * V0
    return U0 % n, V0 % n


def euler_jacobi(D, n):
    return int(jacobi_oracle(np.array([D % n], dtype=np.int64), n)[0])


def test_selfridge_examples():
    p = selfridge_params(11)
    # 5 is a square mod 11, -7 = 4 is too, 9 is a square, -11 = 0, 13 = 2 is not
    assert (p.D, p.P, p.Q) == (13, 1, -3)
    assert euler_jacobi(13, 11) == -1
    p = selfridge_params(2047)
    assert (p.D, p.P, p.Q) == (5, 1, -1)
    assert euler_jacobi(5, 2047) == -1


@pytest.mark.parametrize("n", [25, 49, 2, 4, 3])
def test_selfridge_domain(n):
    with pytest.raises(ValueError):
        selfridge_params(n)


def test_selfridge_invariants():
    for n in range(5, 5000, 2):
        if int(n**0.5) ** 2 == n:
            continue
        p = selfridge_params(n)
        assert p.D == p.P**2 - 4 * p.Q
        assert jacobi(p.D, n) == -1


def test_lucas_uv_examples():
    fib = LucasParams(5, 1, -1)
    assert lucas_uv(23, fib, 0) == (0, 2)
    assert lucas_uv(23, fib, 1) == (1, 1)
    assert lucas_uv(23, fib, 10) == (55 % 23, 123 % 23) == (9, 8)


def test_lucas_uv_matches_recurrence():
    rng = random.Random(31337)
    for _ in range(300):
        n = 2 * rng.randrange(1, 5000) + 1
        P, Q = rng.randrange(-20, 21), rng.randrange(-20, 21)
        params = LucasParams(P * P - 4 * Q, P, Q)
        k = rng.randrange(0, 1001)
        assert lucas_uv(n, params, k) == direct_uv(n, P, Q, k), (n, P, Q, k)


def test_strong_lucas_examples():
    assert strong_lucas_probable_prime(2047).is_composite
    assert strong_lucas_probable_prime(11621).tag == "probable-prime"
    v = strong_lucas_probable_prime(49)
    assert v.is_composite and v.witness == 7


def test_strong_lucas_never_rejects_primes():
    for p in sieve(10**5):
        if p >= 5:
            assert strong_lucas_probable_prime(p).tag == "probable-prime", p


def test_bpsw_examples():
    v = baillie_psw(12764787846358441471)
    assert v.tag == "probable-prime" and v.error_bound == 0
    assert baillie_psw(2047).is_composite
    assert baillie_psw(997).tag == "prime"
    assert baillie_psw(1).is_inapplicable


def test_bpsw_strong_pseudoprimes_base_2():
    # composites passing the base-2 strong test; the Lucas stage must reject them
    for n in (2047, 3277, 4033, 4681, 8321, 3215031751, 2152302898747):
        assert baillie_psw(n).is_composite, n


def test_bpsw_above_2_64_is_annotated():
    v = baillie_psw((1 << 89) - 1)
    assert v.tag == "probable-prime" and v.error_bound == 1 and "2^64" in v.reason


def test_bpsw_deterministic():
    for n in (2047, 11621, (1 << 127) - 1):
        assert baillie_psw(n) == baillie_psw(n)
