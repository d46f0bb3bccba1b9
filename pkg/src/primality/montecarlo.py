"""Compositeness tests: Fermat, Solovay-Strassen and Miller-Rabin.

A COMPOSITE verdict from these tests is always correct.  A number that
survives every round is reported PROBABLE_PRIME with the test's error
bound.  Pass ``bases`` to force specific bases instead of sampling
``cfg.rounds`` of them from ``cfg.seed``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

from .arith import jacobi, sample_base, split_power_of_two
from .verdict import TestConfig, Verdict

DEFAULT_CONFIG = TestConfig()


def _domain_error(n: int) -> Verdict | None:
    if n < 3 or n % 2 == 0:
        return Verdict.inapplicable("needs an odd n >= 3")
    return None


def _bases(n: int, cfg: TestConfig, bases: Iterable[int] | None) -> Iterator[int]:
    if bases is not None:
        yield from bases
        return
    rng = cfg.rng()
    for _ in range(cfg.rounds):
        yield sample_base(n, rng)


def fermat_test(n: int, cfg: TestConfig = DEFAULT_CONFIG, bases: Iterable[int] | None = None) -> Verdict:
    """Fermat's little theorem check, ``a^(n-1) == 1 (mod n)``.

    The error bound is always 1: Carmichael numbers pass every coprime base.
    """
    bad = _domain_error(n)
    if bad:
        return bad
    if n == 3:
        return Verdict.prime()
    for a in _bases(n, cfg, bases):
        g = math.gcd(a, n)
        if g == n:
            continue
        if g > 1:
            return Verdict.composite(g)
        if pow(a, n - 1, n) != 1:
            return Verdict.composite(a)
    return Verdict.probable_prime(1, reason="Fermat test gives no error bound")


def solovay_strassen(n: int, cfg: TestConfig = DEFAULT_CONFIG, bases: Iterable[int] | None = None) -> Verdict:
    """Euler's criterion ``a^((n-1)/2) == (a/n) (mod n)`` per base."""
    bad = _domain_error(n)
    if bad:
        return bad
    if n == 3:
        return Verdict.prime()
    rounds = 0
    half = (n - 1) // 2
    for a in _bases(n, cfg, bases):
        g = math.gcd(a, n)
        if g == n:
            continue
        rounds += 1
        if g > 1:
            return Verdict.composite(g)
        j = jacobi(a, n)
        if pow(a, half, n) != j % n:
            return Verdict.composite(a)
    return Verdict.probable_prime(Fraction(1, 2) ** rounds)


def strong_probable_prime(n: int, a: int, s: int, t: int) -> bool:
    """Single Miller-Rabin round for base a, with ``n - 1 == 2**s * t``."""
    x = pow(a, t, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def miller_rabin(n: int, cfg: TestConfig = DEFAULT_CONFIG, bases: Iterable[int] | None = None) -> Verdict:
    """Miller-Rabin strong probable-prime test, error bound ``(1/4)^k``."""
    bad = _domain_error(n)
    if bad:
        return bad
    if n == 3:
        return Verdict.prime()
    s, t = split_power_of_two(n - 1)
    rounds = 0
    for a in _bases(n, cfg, bases):
        g = math.gcd(a, n)
        if g == n:
            continue
        rounds += 1
        if g > 1:
            return Verdict.composite(g)
        if not strong_probable_prime(n, a, s, t):
            return Verdict.composite(a)
    return Verdict.probable_prime(Fraction(1, 4) ** rounds)
