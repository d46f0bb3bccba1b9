"""Primality-proving tests: Proth, Lucas and Pocklington.

A PRIME verdict from this module is a certificate.  Runtime depends on how
quickly a certifying base turns up.  Bases are drawn first from the seeded
generator (``cfg.rounds`` draws); the Proth and Lucas tests then scan
sequentially from 2 when n is below :data:`SCAN_LIMIT`, which guarantees
termination.
"""

from __future__ import annotations

import math
from typing import Iterator

from .arith import Factorization, isqrt, sample_base
from .forms import as_proth
from .montecarlo import miller_rabin
from .verdict import TestConfig, Verdict

DEFAULT_CONFIG = TestConfig()

SCAN_LIMIT = 1 << 24
PROTH_CROSSCHECK_ROUNDS = 30


def _random_bases(n: int, cfg: TestConfig) -> Iterator[int]:
    if n < 5:
        yield from range(2, n)
        return
    rng = cfg.rng()
    for _ in range(cfg.rounds):
        yield sample_base(n, rng)


def _search_bases(n: int, cfg: TestConfig) -> Iterator[int]:
    yield from _random_bases(n, cfg)
    if n < SCAN_LIMIT:
        yield from range(2, n)


def proth_test(n: int, cfg: TestConfig = DEFAULT_CONFIG) -> Verdict:
    """Proth's theorem: n = k*2^e + 1 is prime iff some a has a^((n-1)/2) == -1.

    A full scan without such a base proves n composite.  For n too large to
    scan, an unsuccessful search is reported COMPOSITE only when a 30-round
    Miller-Rabin run finds a witness, and INAPPLICABLE otherwise.
    """
    if n % 2 == 0 or as_proth(n) is None:
        return Verdict.inapplicable(f"{n} is not a Proth number k*2^e+1 with k < 2^e")
    half = (n - 1) // 2
    for a in _search_bases(n, cfg):
        if pow(a, half, n) == n - 1:
            return Verdict.prime(a)
    if n < SCAN_LIMIT:
        return Verdict.composite()
    check = miller_rabin(n, TestConfig(PROTH_CROSSCHECK_ROUNDS, cfg.seed))
    if check.is_composite:
        return check
    return Verdict.inapplicable("undecided within budget")


def _factors_of(n: int, factors: Factorization) -> str | None:
    if not factors.complete:
        return "factorization of n-1 is incomplete"
    if factors.value() != n - 1:
        return "factorization does not multiply out to n-1"
    return None


def lucas_test(n: int, factors: Factorization, cfg: TestConfig = DEFAULT_CONFIG) -> Verdict:
    """Lucas's converse of Fermat: find a of order exactly n-1 modulo n.

    Needs the complete factorization of n-1.  A base failing
    a^(n-1) == 1 proves compositeness; a base with a^((n-1)/q) != 1 for every
    prime q | n-1 proves primality.
    """
    if n < 3 or n % 2 == 0:
        return Verdict.inapplicable("needs an odd n >= 3")
    problem = _factors_of(n, factors)
    if problem:
        return Verdict.inapplicable(problem)
    qs = factors.primes()
    for a in _search_bases(n, cfg):
        if pow(a, n - 1, n) != 1:
            return Verdict.composite(a)
        if all(pow(a, (n - 1) // q, n) != 1 for q in qs):
            return Verdict.prime(a)
    return Verdict.inapplicable("no witness within budget")


def pocklington_prime(n: int, factors: Factorization) -> int | None:
    """Largest listed prime q | n-1 with q > sqrt(n) - 1, if any."""
    root = isqrt(n)
    usable = [q for q in factors.factors if q >= root and (n - 1) % q == 0]
    return max(usable, default=None)


def pocklington_test(n: int, factors: Factorization, cfg: TestConfig = DEFAULT_CONFIG) -> Verdict:
    """Pocklington's criterion with a single large prime factor q of n-1.

    n is prime once some a satisfies a^(n-1) == 1 and
    gcd(a^((n-1)/q) - 1, n) == 1.  A base failing the first condition proves
    n composite; after ``cfg.rounds`` bases that only fail the second, the
    test gives up with "probable composite".
    """
    if n < 3 or n % 2 == 0:
        return Verdict.inapplicable("needs an odd n >= 3")
    q = pocklington_prime(n, factors)
    if q is None:
        # condition (1) alone can still expose a composite
        a = next(_random_bases(n, cfg))
        if pow(a, n - 1, n) != 1:
            return Verdict.composite(a)
        return Verdict.inapplicable("n-1 has no known prime factor q > sqrt(n) - 1")
    e = (n - 1) // q
    for a in _random_bases(n, cfg):
        if pow(a, n - 1, n) != 1:
            return Verdict.composite(a)
        if math.gcd(pow(a, e, n) - 1, n) == 1:
            return Verdict.prime(a)
    return Verdict.inapplicable("probable composite")
