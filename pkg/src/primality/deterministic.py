"""Tests whose verdicts are always certain.

Trial division works on any n.  Pepin only accepts Fermat numbers and
Lucas-Lehmer takes the exponent p of a Mersenne number 2^p - 1.  AKS is
the general polynomial-time test.
"""

from __future__ import annotations

import math

from .arith import factorize, is_perfect_power, isqrt, multiplicative_order
from .forms import as_fermat
from .polyring import (
    PolyModRing,
    fft_is_exact,
    first_aks_failure,
    poly_pow_mod,
    x_plus_a_pow,
)
from .verdict import Verdict

__all__ = [
    "trial_division",
    "pepin_test",
    "lucas_lehmer",
    "aks",
    "aks_parameters",
    "PolyModRing",
    "poly_pow_mod",
]


def trial_division(n: int) -> Verdict:
    """Divide by 2 and odd candidates up to isqrt(n)."""
    if n < 2:
        return Verdict.inapplicable("needs n >= 2")
    if n % 2 == 0:
        return Verdict.prime() if n == 2 else Verdict.composite(2)
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return Verdict.composite(d)
    return Verdict.prime()


def pepin_test(f: int) -> Verdict:
    """Pepin's test, ``3^((F-1)/2) == -1 (mod F)`` for Fermat numbers F_m, m >= 1."""
    m = as_fermat(f)
    if m is None:
        return Verdict.inapplicable(f"{f} is not a Fermat number 2^2^m+1")
    if m == 0:
        return Verdict.inapplicable("F_0 = 3 is divisible by the base 3")
    if pow(3, (f - 1) // 2, f) == f - 1:
        return Verdict.prime()
    return Verdict.composite(3)


def lucas_lehmer(p: int) -> Verdict:
    """Decide the Mersenne number 2^p - 1 for prime p."""
    if p == 2:
        return Verdict.prime()
    if p < 2 or not trial_division(p).is_prime_class:
        return Verdict.inapplicable(f"exponent {p} is not prime")
    m = (1 << p) - 1
    s = 4
    for _ in range(p - 2):
        s = (s * s - 2) % m
    return Verdict.prime() if s == 0 else Verdict.composite()


def _totient(r: int) -> int:
    if r == 1:
        return 1
    phi = r
    for q in factorize(r).factors:
        phi = phi // q * (q - 1)
    return phi


def aks_parameters(n: int) -> tuple[int, int]:
    """Return ``(r, witness_limit)`` for AKS on n.

    r is the smallest modulus with ord_r(n) > L^2 and the witness limit is
    floor(sqrt(phi(r)) * L), where L = bit length of n (an upper bound for
    log2 n, so both quantities err on the safe side).
    """
    L = n.bit_length()
    bound = L * L
    r = 2
    while True:
        o = multiplicative_order(n, r)
        if o is not None and o > bound:
            break
        r += 1
    return r, math.isqrt(_totient(r) * L * L)


def aks(n: int) -> Verdict:
    """Agrawal-Kayal-Saxena deterministic test."""
    if n < 2:
        return Verdict.inapplicable("needs n >= 2")
    pp = is_perfect_power(n)
    if pp is not None:
        return Verdict.composite(pp[0])
    r, limit = aks_parameters(n)
    for a in range(2, min(r, n - 1) + 1):
        g = math.gcd(a, n)
        if 1 < g < n:
            return Verdict.composite(g)
    if n <= r:
        return Verdict.prime()
    witnesses = range(1, limit + 1)
    if fft_is_exact(n, r):
        bad = first_aks_failure(n, r, witnesses)
        return Verdict.prime() if bad is None else Verdict.composite(bad)
    target_x = PolyModRing.monomial(n, r, n % r)
    for a in witnesses:
        want = target_x + PolyModRing(n, r, [a])
        if x_plus_a_pow(n, r, a, n) != want:
            return Verdict.composite(a)
    return Verdict.prime()
