"""Baillie-PSW: small primes, a base-2 strong test, then a strong Lucas test."""
import numpy as np

from primality import baillie_psw, miller_rabin, selfridge_params, sieve, strong_lucas_probable_prime

# Base-2 strong pseudoprimes slip past Miller-Rabin with base 2 ...
spsp = [n for n in range(3, 10**5, 2) if miller_rabin(n, bases=[2]).is_prime_class]
spsp = sorted(set(spsp) - set(sieve(10**5)))
print("base-2 strong pseudoprimes below 10^5:", spsp)

# ... but not past the Lucas stage.
for n in spsp[:4]:
    print(f"{n}: selfridge {selfridge_params(n)}, lucas {strong_lucas_probable_prime(n)}, bpsw {baillie_psw(n)}")

# Exhaustive check against the sieve up to 2^20.
limit = 1 << 20
is_prime = np.zeros(limit + 1, dtype=bool)
is_prime[sieve(limit)] = True
bpsw = np.array([baillie_psw(n).is_prime_class for n in range(2, limit + 1)])
print(f"disagreements with the sieve on [2, 2^20]: {int((bpsw != is_prime[2:]).sum())}")
print("2^127-1:", baillie_psw((1 << 127) - 1))
