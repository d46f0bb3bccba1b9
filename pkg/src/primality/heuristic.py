"""Baillie-PSW: small-prime trial division, a base-2 strong test, and a
strong Lucas probable-prime test with Selfridge parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import isqrt, jacobi, small_primes, split_power_of_two
from .montecarlo import strong_probable_prime
from .verdict import Verdict

PRIMES_BELOW_1000 = small_primes(999)


@dataclass(frozen=True)
class LucasParams:
    """Lucas sequence parameters with discriminant D = P^2 - 4Q."""

    D: int
    P: int
    Q: int


def selfridge_params(n: int) -> LucasParams:
    """First D in 5, -7, 9, -11, ... with (D/n) = -1; P = 1, Q = (1 - D)/4."""
    if n < 5 or n % 2 == 0:
        raise ValueError("selfridge_params needs an odd n >= 5")
    if isqrt(n) ** 2 == n:
        raise ValueError(f"{n} is a perfect square; no suitable D exists")
    D = 5
    while jacobi(D, n) != -1:
        D = -D - 2 if D > 0 else -D + 2
    return LucasParams(D, 1, (1 - D) // 4)


def _lucas_uvq(n: int, params: LucasParams, k: int) -> tuple[int, int, int]:
    # (U_k, V_k, Q^k) mod n, walking k's bits from the top
    P, Q, D = params.P % n, params.Q % n, params.D % n
    if k == 0:
        return 0, 2 % n, 1 % n
    half = (n + 1) // 2
    U, V, Qk = 1 % n, P, Q
    for bit in bin(k)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * half % n, (D * U + P * V) * half % n
            Qk = Qk * Q % n
    return U, V, Qk


def lucas_uv(n: int, params: LucasParams, k: int) -> tuple[int, int]:
    """(U_k mod n, V_k mod n) by the doubling chain; n must be odd."""
    if n < 3 or n % 2 == 0:
        raise ValueError("lucas_uv needs an odd n >= 3")
    U, V, _ = _lucas_uvq(n, params, k)
    return U, V


def strong_lucas_probable_prime(n: int) -> Verdict:
    """Strong Lucas test: with n + 1 = 2^s * d, pass iff U_d == 0 or some
    V_(d*2^j) == 0 for 0 <= j < s."""
    if n < 5 or n % 2 == 0:
        return Verdict.inapplicable("needs an odd n >= 5")
    root = isqrt(n)
    if root * root == n:
        return Verdict.composite(root)
    params = selfridge_params(n)
    g = math.gcd(n, params.Q)
    if g > 1:
        return Verdict.composite(g)
    s, d = split_power_of_two(n + 1)
    U, V, Qk = _lucas_uvq(n, params, d)
    if U == 0 or V == 0:
        return Verdict.probable_prime(1, reason="strong Lucas test alone has no stated bound")
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return Verdict.probable_prime(1, reason="strong Lucas test alone has no stated bound")
    return Verdict.composite()


def baillie_psw(n: int) -> Verdict:
    """Baillie-PSW test; fully deterministic.

    Numbers below 10^6 are settled by the small-prime stage alone, since
    any composite that small has a prime factor below 1000.
    """
    if n < 2:
        return Verdict.inapplicable("needs n >= 2")
    for p in PRIMES_BELOW_1000:
        if n % p == 0:
            return Verdict.prime() if n == p else Verdict.composite(p)
    if n < 1000 * 1000:
        return Verdict.prime()
    s, t = split_power_of_two(n - 1)
    if not strong_probable_prime(n, 2, s, t):
        return Verdict.composite(2)
    lucas = strong_lucas_probable_prime(n)
    if lucas.is_composite:
        return lucas
    if n < 1 << 64:
        return Verdict.probable_prime(0, reason="no BPSW pseudoprime exists below 2^64")
    return Verdict.probable_prime(1, reason="error bound unquantified above 2^64")
