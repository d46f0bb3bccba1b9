"""Primality tests: Monte-Carlo, Las-Vegas, deterministic and heuristic.

>>> from primality import miller_rabin, TestConfig
>>> miller_rabin(11621, TestConfig(rounds=30, seed=1)).tag
'probable-prime'
"""

from .arith import (
    Factorization,
    factorize,
    gcd,
    is_perfect_power,
    isqrt,
    jacobi,
    mod_pow,
    multiplicative_order,
    sample_base,
    sieve,
    split_power_of_two,
)
from .bench import BenchRecord, Suite, emit_csv, read_csv, run_algorithm, run_suite
from .deterministic import aks, lucas_lehmer, pepin_test, trial_division
from .forms import FormKind, NumberForm, ParseError, detect_form, parse_number
from .heuristic import LucasParams, baillie_psw, lucas_uv, selfridge_params, strong_lucas_probable_prime
from .lasvegas import lucas_test, pocklington_test, proth_test
from .montecarlo import fermat_test, miller_rabin, solovay_strassen
from .polyring import PolyModRing, poly_pow_mod
from .verdict import Outcome, TestConfig, Verdict

__version__ = "0.1.0"
