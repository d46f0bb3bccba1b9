"""Input expressions and special number forms.

Grammar accepted by :func:`parse_number` (spaces allowed around tokens)::

    number := DIGITS
            | "2^" DIGITS "-1"
            | "2^" DIGITS "+1"
            | DIGITS "*2^" DIGITS "+1"
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass

from .arith import split_power_of_two


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([*^+-]))")


def _tokens(expr: str):
    pos = 0
    end = len(expr.rstrip())
    while pos < end:
        m = _TOKEN.match(expr, pos)
        if m is None:
            raise ParseError(f"unexpected character {expr[pos]!r}", pos)
        start = m.start(1) if m.group(1) else m.start(2)
        yield (m.group(1) or m.group(2)), start
        pos = m.end()
    yield None, end


def parse_number(expr: str) -> int:
    """Evaluate an input expression exactly.

    >>> parse_number("2^13-1"), parse_number("9*2^11+1")
    (8191, 18433)
    """
    toks = list(_tokens(expr))
    i = 0

    def take(kind: str):
        nonlocal i
        tok, pos = toks[i]
        if tok is None:
            raise ParseError(f"expected {kind}, got end of input", pos)
        if kind == "integer" and not tok.isdigit():
            raise ParseError(f"expected integer, got {tok!r}", pos)
        if kind != "integer" and tok != kind:
            raise ParseError(f"expected {kind!r}, got {tok!r}", pos)
        i += 1
        return tok, pos

    def at_end() -> bool:
        return toks[i][0] is None

    first, first_pos = take("integer")
    if at_end():
        value = int(first)
    elif toks[i][0] == "*":
        take("*")
        two, pos = take("integer")
        if two != "2":
            raise ParseError("power base must be 2", pos)
        take("^")
        e = int(take("integer")[0])
        take("+")
        one, pos = take("integer")
        if one != "1":
            raise ParseError("expected 1", pos)
        value = int(first) * (1 << e) + 1
    elif toks[i][0] == "^":
        if first != "2":
            raise ParseError("power base must be 2", first_pos)
        take("^")
        e = int(take("integer")[0])
        sign, pos = toks[i]
        if sign not in ("+", "-"):
            raise ParseError("expected '+' or '-'", pos)
        i += 1
        one, pos = take("integer")
        if one != "1":
            raise ParseError("expected 1", pos)
        value = (1 << e) + (1 if sign == "+" else -1)
    else:
        tok, pos = toks[i]
        raise ParseError(f"unexpected {tok!r}", pos)
    if not at_end():
        tok, pos = toks[i]
        raise ParseError(f"trailing input {tok!r}", pos)
    if value == 0:
        raise ValueError(f"{expr!r} evaluates to 0")
    return value


class FormKind(enum.Enum):
    GENERIC = "generic"
    MERSENNE = "mersenne"
    FERMAT = "fermat"
    PROTH = "proth"


@dataclass(frozen=True)
class NumberForm:
    """Classification of a number.

    ``exponent`` is p for Mersenne 2^p-1, m for Fermat 2^(2^m)+1 and the
    power of two for Proth k*2^e+1.  ``warning`` flags inputs outside the
    classifier's domain (even, or below 3).
    """

    kind: FormKind
    exponent: int | None = None
    k: int | None = None
    warning: bool = False

    @property
    def tag(self) -> str:
        return self.kind.value

    def value(self) -> int | None:
        if self.kind is FormKind.MERSENNE:
            return (1 << self.exponent) - 1
        if self.kind is FormKind.FERMAT:
            return (1 << (1 << self.exponent)) + 1
        if self.kind is FormKind.PROTH:
            return self.k * (1 << self.exponent) + 1
        return None

    def __str__(self) -> str:
        if self.kind is FormKind.MERSENNE:
            return f"mersenne(2^{self.exponent}-1)"
        if self.kind is FormKind.FERMAT:
            return f"fermat(2^2^{self.exponent}+1)"
        if self.kind is FormKind.PROTH:
            return f"proth({self.k}*2^{self.exponent}+1)"
        return "generic"


GENERIC = NumberForm(FormKind.GENERIC)


def _is_small_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def as_fermat(n: int) -> int | None:
    """m with n == 2^(2^m) + 1, else None."""
    e = n - 1
    if e < 2 or e & (e - 1):
        return None
    b = e.bit_length() - 1
    if b & (b - 1):
        return None
    return b.bit_length() - 1


def as_mersenne(n: int) -> int | None:
    """Prime p with n == 2^p - 1, else None."""
    m = n + 1
    if m < 4 or m & (m - 1):
        return None
    p = m.bit_length() - 1
    return p if _is_small_prime(p) else None


def as_proth(n: int) -> tuple[int, int] | None:
    """(k, e) with n == k*2^e + 1, k odd, k < 2^e; else None."""
    if n < 3:
        return None
    e, k = split_power_of_two(n - 1)
    if e >= 1 and k < (1 << e):
        return k, e
    return None


def detect_form(n: int) -> NumberForm:
    """Most specific form of n: Fermat, then Mersenne, then Proth."""
    if n < 3 or n % 2 == 0:
        return NumberForm(FormKind.GENERIC, warning=True)
    m = as_fermat(n)
    if m is not None:
        return NumberForm(FormKind.FERMAT, exponent=m)
    p = as_mersenne(n)
    if p is not None:
        return NumberForm(FormKind.MERSENNE, exponent=p)
    kp = as_proth(n)
    if kp is not None:
        return NumberForm(FormKind.PROTH, exponent=kp[1], k=kp[0])
    return GENERIC
