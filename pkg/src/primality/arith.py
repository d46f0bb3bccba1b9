"""Number-theoretic primitives shared by every primality test.

All integers are plain Python ``int`` (arbitrary precision).  Functions raise
``ValueError`` on domain errors.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "Factorization",
    "mod_pow",
    "gcd",
    "jacobi",
    "isqrt",
    "is_perfect_power",
    "sieve",
    "factorize",
    "split_power_of_two",
    "sample_base",
    "multiplicative_order",
    "small_primes",
]


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """Return ``base**exponent % modulus`` by square-and-multiply.

    Delegates to the built-in three-argument ``pow``, which performs
    left-to-right binary (windowed for long exponents) exponentiation with a
    reduction after every step.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base, exponent, modulus)


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, by binary reciprocity.

    >>> jacobi(2, 15), jacobi(5, 9), jacobi(0, 9)
    (1, 1, 0)
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi symbol needs an odd positive modulus")
    a %= n
    result = 1
    while a:
        # pull out factors of two: (2/n) = -1 iff n = 3, 5 (mod 8)
        twos = (a & -a).bit_length() - 1
        a >>= twos
        if twos & 1 and n & 7 in (3, 5):
            result = -result
        # quadratic reciprocity for odd a, n
        if a & n & 2:
            result = -result
        a, n = n % a, a
    return result if n == 1 else 0


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def _iroot(n: int, e: int) -> int:
    """Largest b with b**e <= n, by binary search."""
    bits = n.bit_length()
    lo = 1 << ((bits - 1) // e)
    hi = 1 << (-(-bits // e))
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if mid ** e <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def is_perfect_power(n: int) -> tuple[int, int] | None:
    """Return ``(b, e)`` with ``b**e == n`` and ``e`` maximal, else None."""
    if n < 2:
        raise ValueError("is_perfect_power needs n >= 2")
    for e in range(n.bit_length(), 1, -1):
        b = _iroot(n, e)
        if b > 1 and b ** e == n:
            return b, e
    return None


def sieve(limit: int) -> list[int]:
    """Primes ``<= limit`` by the sieve of Eratosthenes.

    Crossing out stops once the next uncrossed number exceeds sqrt(limit).
    """
    if limit < 2:
        return []
    marks = bytearray([1]) * (limit + 1)
    marks[0] = marks[1] = 0
    for r in range(2, math.isqrt(limit) + 1):
        if marks[r]:
            marks[r * r :: r] = bytes(len(range(r * r, limit + 1, r)))
    return [i for i, flag in enumerate(marks) if flag]


@lru_cache(maxsize=None)
def small_primes(limit: int = 10**6) -> tuple[int, ...]:
    """Cached ``sieve(limit)`` as a tuple."""
    return tuple(sieve(limit))


def split_power_of_two(m: int) -> tuple[int, int]:
    """Return ``(s, t)`` with ``m == 2**s * t`` and ``t`` odd."""
    if m < 1:
        raise ValueError("split_power_of_two needs m >= 1")
    s = (m & -m).bit_length() - 1
    return s, m >> s


def sample_base(n: int, source: random.Random) -> int:
    """Draw a base uniformly from ``[2, n-2]``."""
    if n < 4:
        raise ValueError("sample_base needs n >= 4")
    return source.randint(2, n - 2)


def multiplicative_order(n: int, r: int) -> int | None:
    """Smallest ``e >= 1`` with ``n**e == 1 (mod r)``; None if gcd(n, r) > 1."""
    if r < 2:
        raise ValueError("multiplicative_order needs r >= 2")
    if math.gcd(n, r) != 1:
        return None
    n %= r
    x, e = n, 1
    while x != 1:
        x = x * n % r
        e += 1
    return e


@dataclass
class Factorization:
    """Prime factorization, possibly partial.

    ``factors`` maps primes to exponents.  When ``complete`` is false,
    ``cofactor`` holds the part of the input that could not be split.
    """

    n: int
    factors: dict[int, int] = field(default_factory=dict)
    complete: bool = True
    cofactor: int = 1

    def value(self) -> int:
        out = self.cofactor
        for p, e in self.factors.items():
            out *= p ** e
        return out

    def primes(self) -> list[int]:
        return sorted(self.factors)

    def _add(self, p: int, e: int = 1) -> None:
        self.factors[p] = self.factors.get(p, 0) + e


# trial-division bound for factorize
TRIAL_LIMIT = 10**6
CERTIFY_ROUNDS = 30


def _probably_prime(n: int, rng: random.Random) -> bool:
    # Miller-Rabin kept local so arith stays import-free of the test modules
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    s, t = split_power_of_two(n - 1)
    for _ in range(CERTIFY_ROUNDS):
        x = pow(rng.randint(2, n - 2), t, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, budget: int, rng: random.Random) -> tuple[int | None, int]:
    """One Pollard-rho run with Brent cycle detection.

    Returns ``(factor or None, iterations used)``.
    """
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        used += r
        r <<= 1
        if used > budget:
            return None, used
    if g == n:
        # backtrack one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if g != n else None), used


def factorize(n: int, effort_bound: int = 10**6) -> Factorization:
    """Factor ``n`` by trial division then Brent's Pollard rho.

    Trial division uses the primes up to one million.  Whatever remains is
    split by rho (at most ``effort_bound`` iterations in total) and each
    piece is accepted as prime after 30 Miller-Rabin rounds.  If the budget
    runs out, the unsplit part is left in ``cofactor`` and ``complete`` is
    false.
    """
    if n < 2:
        raise ValueError("factorize needs n >= 2")
    result = Factorization(n)
    m = n
    for p in small_primes(TRIAL_LIMIT):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            result._add(p, e)
    if m == 1:
        return result
    if m < TRIAL_LIMIT * TRIAL_LIMIT:
        result._add(m)
        return result

    rng = random.Random(n)
    budget = effort_bound
    stack = [m]
    leftover = 1
    while stack:
        c = stack.pop()
        if _probably_prime(c, rng):
            result._add(c)
            continue
        root = is_perfect_power(c)
        if root is not None:
            stack.extend([root[0]] * root[1])
            continue
        d = None
        while d is None and budget > 0:
            d, used = _brent_rho(c, budget, rng)
            budget -= used
        if d is None:
            leftover *= c
            continue
        stack.extend([d, c // d])
    if leftover > 1:
        result.complete = False
        result.cofactor = leftover
    return result
