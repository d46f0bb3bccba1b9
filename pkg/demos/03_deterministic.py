"""Deterministic tests: trial division, Pepin, Lucas-Lehmer and AKS."""
import time

from primality import aks, lucas_lehmer, pepin_test, trial_division
from primality.deterministic import aks_parameters

# Pepin decides Fermat numbers; it refuses anything else.
for m in range(1, 7):
    f = (1 << (1 << m)) + 1
    print(f"F_{m} = {f}: {pepin_test(f)}")
print("pepin(32769):", pepin_test(32769))
print("trial(32769):", trial_division(32769))

# Lucas-Lehmer runs p - 2 squarings modulo 2^p - 1.
found = [p for p in range(2, 130) if lucas_lehmer(p).tag == "prime"]
print("\nMersenne prime exponents below 130:", found)

start = time.perf_counter()
print("2^1279-1:", lucas_lehmer(1279), f"({time.perf_counter() - start:.3f}s)")

# AKS works on any n but is slow in practice.
for n in (561, 8191, 65537):
    r, limit = aks_parameters(n)
    start = time.perf_counter()
    v = aks(n)
    print(f"aks({n}): r={r}, witnesses up to {limit}: {v} ({time.perf_counter() - start:.2f}s)")
