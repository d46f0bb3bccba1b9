"""Monte-Carlo tests and the liars that fool them.

Run with ``python demos/01_monte_carlo.py``.
"""
import numpy as np

from primality import TestConfig, fermat_test, jacobi, miller_rabin, solovay_strassen

# A Carmichael number satisfies Fermat's congruence for every coprime base.
n = 561
bases = np.arange(1, n)
coprime = bases[np.gcd(bases, n) == 1]
print(f"{n} has {coprime.size} coprime bases")
print("fermat over all of them:", fermat_test(n, bases=coprime.tolist()))

# Count each kind of liar exhaustively.
fermat_liars = sum(pow(int(a), n - 1, n) == 1 for a in coprime)
euler_liars = sum(pow(int(a), (n - 1) // 2, n) == jacobi(int(a), n) % n for a in coprime)
strong_liars = sum(miller_rabin(n, bases=[int(a)]).is_prime_class for a in coprime)
print(f"liars: fermat {fermat_liars}, euler {euler_liars}, strong {strong_liars}")

# With random bases the stronger tests catch it almost surely.
cfg = TestConfig(rounds=20, seed=1)
print("solovay-strassen:", solovay_strassen(n, cfg))
print("miller-rabin:    ", miller_rabin(n, cfg))

# Probable-prime verdicts carry an exact error bound.
for test in (fermat_test, solovay_strassen, miller_rabin):
    v = test(12764787846358441471, cfg)
    print(f"{test.__name__:>16}: {v.tag}, error bound {v.error_bound}")
