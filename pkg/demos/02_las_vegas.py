"""Primality proofs from Proth, Lucas and Pocklington.

Each PRIME verdict comes with the base that certifies it.
"""
from primality import TestConfig, detect_form, factorize, lucas_test, pocklington_test, proth_test

cfg = TestConfig(rounds=20, seed=0)

# Proth: n = k*2^e + 1 is prime iff some a has a^((n-1)/2) == -1.
for n in (18433, 45057, 2281701377):
    v = proth_test(n, cfg)
    print(f"{n} is {detect_form(n)}: {v}")

# Lucas needs every prime factor of n-1.
n = 18433
f = factorize(n - 1)
v = lucas_test(n, f, cfg)
print(f"\n{n}-1 = {f.factors}; lucas: {v}")
a = v.witness
print("witness checks:", [pow(a, (n - 1) // q, n) != 1 for q in f.factors])

# Pocklington only needs one prime q > sqrt(n) - 1 dividing n-1.
for n in (18439, 18433):
    f = factorize(n - 1)
    print(f"pocklington({n}), n-1 = {f.factors}: {pocklington_test(n, f, cfg)}")
