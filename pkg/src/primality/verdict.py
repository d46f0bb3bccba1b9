"""Test outcomes and run configuration."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction


class Outcome(enum.Enum):
    COMPOSITE = "composite"
    PROBABLE_PRIME = "probable-prime"
    PRIME = "prime"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Verdict:
    """Result of a primality test.

    ``witness`` is a compositeness witness (a base or a factor) for
    COMPOSITE, and the certifying base for PRIME when the test has one.
    ``error_bound`` is only set on PROBABLE_PRIME.  ``reason`` explains an
    INAPPLICABLE verdict or annotates an unquantified bound.
    """

    outcome: Outcome
    witness: int | None = None
    error_bound: Fraction | None = None
    reason: str | None = None

    def __post_init__(self):
        if self.outcome is Outcome.PROBABLE_PRIME:
            if self.error_bound is None or not 0 <= self.error_bound <= 1:
                raise ValueError(f"bad error bound {self.error_bound!r}")
        elif self.error_bound is not None:
            raise ValueError("only probable-prime verdicts carry an error bound")

    @classmethod
    def composite(cls, witness: int | None = None) -> Verdict:
        return cls(Outcome.COMPOSITE, witness=witness)

    @classmethod
    def probable_prime(cls, error_bound, reason: str | None = None) -> Verdict:
        return cls(Outcome.PROBABLE_PRIME, error_bound=Fraction(error_bound), reason=reason)

    @classmethod
    def prime(cls, witness: int | None = None) -> Verdict:
        return cls(Outcome.PRIME, witness=witness)

    @classmethod
    def inapplicable(cls, reason: str) -> Verdict:
        return cls(Outcome.INAPPLICABLE, reason=reason)

    @property
    def tag(self) -> str:
        return self.outcome.value

    @property
    def is_composite(self) -> bool:
        return self.outcome is Outcome.COMPOSITE

    @property
    def is_prime_class(self) -> bool:
        """True for PRIME and PROBABLE_PRIME."""
        return self.outcome in (Outcome.PRIME, Outcome.PROBABLE_PRIME)

    @property
    def is_inapplicable(self) -> bool:
        return self.outcome is Outcome.INAPPLICABLE

    def __str__(self) -> str:
        parts = [self.tag]
        if self.witness is not None:
            parts.append(f"witness={self.witness}")
        if self.error_bound is not None:
            parts.append(f"error<={self.error_bound}")
        if self.reason:
            parts.append(f"({self.reason})")
        return " ".join(parts)


@dataclass(frozen=True)
class TestConfig:
    """Number of rounds ``k`` and the seed of the base-sampling generator."""

    __test__ = False  # keep pytest from collecting this class

    rounds: int = 20
    seed: int = 0

    def __post_init__(self):
        if self.rounds < 1:
            raise ValueError("rounds must be >= 1")

    def rng(self) -> random.Random:
        return random.Random(self.seed)
