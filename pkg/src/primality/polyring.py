"""Polynomials in (Z/nZ)[X] / (X^r - 1), the ring used by AKS.

Products are computed exactly by Kronecker substitution: each operand is
packed into one big integer with a fixed-width slot per coefficient, the two
integers are multiplied (by GMP), and the slots are folded back modulo
X^r - 1.
"""

from __future__ import annotations

import gmpy2
import numpy as np


class PolyModRing:
    """Element of (Z/nZ)[X] / (X^r - 1) with a dense coefficient tuple."""

    __slots__ = ("n", "r", "coeffs")

    def __init__(self, n: int, r: int, coeffs=()):
        if n < 2 or r < 1:
            raise ValueError("ring needs n >= 2 and r >= 1")
        folded = [0] * r
        for i, c in enumerate(coeffs):
            folded[i % r] += c
        self.n = n
        self.r = r
        self.coeffs = tuple(c % n for c in folded)

    @classmethod
    def _raw(cls, n: int, r: int, coeffs) -> PolyModRing:
        obj = cls.__new__(cls)
        obj.n, obj.r, obj.coeffs = n, r, tuple(coeffs)
        return obj

    @classmethod
    def one(cls, n: int, r: int) -> PolyModRing:
        return cls(n, r, [1])

    @classmethod
    def monomial(cls, n: int, r: int, degree: int, coeff: int = 1) -> PolyModRing:
        c = [0] * r
        c[degree % r] = coeff
        return cls(n, r, c)

    @classmethod
    def x_plus(cls, n: int, r: int, a: int) -> PolyModRing:
        """The element X + a."""
        c = [0] * r
        c[0] += a
        c[1 % r] += 1
        return cls(n, r, c)

    def _check(self, other: PolyModRing) -> None:
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError(
                f"ring mismatch: (n={self.n}, r={self.r}) vs (n={other.n}, r={other.r})"
            )

    def __eq__(self, other):
        if not isinstance(other, PolyModRing):
            return NotImplemented
        return (self.n, self.r, self.coeffs) == (other.n, other.r, other.coeffs)

    def __hash__(self):
        return hash((self.n, self.r, self.coeffs))

    def __add__(self, other: PolyModRing) -> PolyModRing:
        self._check(other)
        n = self.n
        return PolyModRing._raw(n, self.r, [(a + b) % n for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: PolyModRing) -> PolyModRing:
        self._check(other)
        return PolyModRing._raw(self.n, self.r, _cyclic_mul(self.coeffs, other.coeffs, self.n))

    def __pow__(self, exponent: int) -> PolyModRing:
        return poly_pow_mod(self, exponent)

    def degree(self) -> int:
        for i in range(self.r - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def __repr__(self) -> str:
        terms = [f"{c}*X^{i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(reversed(terms)) or "0"
        return f"PolyModRing(n={self.n}, r={self.r}: {body})"


def _slot_bytes(n: int, r: int) -> int:
    # a folded cyclic-convolution slot holds at most r*(n-1)^2
    bits = 2 * (n - 1).bit_length() + r.bit_length() + 1
    return (bits + 7) // 8


def _pack(coeffs, width: int) -> int:
    return int.from_bytes(b"".join(c.to_bytes(width, "little") for c in coeffs), "little")


def _cyclic_mul(a, b, n: int) -> list[int]:
    if n < _NP_LIMIT:
        a_arr = np.asarray(a, dtype=np.uint64)
        b_arr = a_arr if a is b else np.asarray(b, dtype=np.uint64)
        return _cyclic_mul_np(a_arr, b_arr, n).tolist()
    r = len(a)
    width = _slot_bytes(n, r)
    pa = gmpy2.mpz(_pack(a, width))
    prod = int(pa * pa if a is b else pa * gmpy2.mpz(_pack(b, width)))
    shift = r * width * 8
    folded = (prod & ((1 << shift) - 1)) + (prod >> shift)
    raw = folded.to_bytes(r * width, "little")
    return [int.from_bytes(raw[i : i + width], "little") % n for i in range(0, r * width, width)]


# below this modulus every coefficient product fits in a uint64
_NP_LIMIT = 1 << 32


def _np_pack(arr: np.ndarray, width: int):
    if width == 8:
        return gmpy2.mpz.from_bytes(arr.astype("<u8").tobytes(), "little")
    slots = np.zeros((len(arr), 2), dtype="<u8")
    slots[:, 0] = arr
    return gmpy2.mpz.from_bytes(slots.tobytes(), "little")


def _cyclic_mul_np(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Kronecker product for n < 2^32 with numpy (un)packing; slots are 8 or 16 bytes."""
    r = len(a)
    width = 8 if _slot_bytes(n, r) <= 8 else 16
    pa = _np_pack(a, width)
    prod = pa * pa if b is a else pa * _np_pack(b, width)
    shift = r * width * 8
    folded = gmpy2.f_mod_2exp(prod, shift) + (prod >> shift)
    words = np.frombuffer(folded.to_bytes(r * width, "little"), dtype="<u8")
    nn = np.uint64(n)
    if width == 8:
        return words % nn
    words = words.reshape(r, 2)
    two64 = np.uint64((1 << 64) % n)
    return ((words[:, 1] % nn) * two64 % nn + words[:, 0] % nn) % nn


def poly_pow_mod(base: PolyModRing, exponent: int) -> PolyModRing:
    """``base**exponent`` by left-to-right square-and-multiply."""
    if exponent < 0:
        raise ValueError("negative exponent")
    result = PolyModRing.one(base.n, base.r)
    for bit in bin(exponent)[2:]:
        result = result * result
        if bit == "1":
            result = result * base
    return result


def schoolbook_mul(a: PolyModRing, b: PolyModRing) -> PolyModRing:
    """Quadratic reference product, reducing once at the end."""
    a._check(b)
    full = [0] * (2 * a.r)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                full[i + j] += x * y
    return PolyModRing(a.n, a.r, full)


def x_plus_a_pow(n: int, r: int, a: int, exponent: int) -> PolyModRing:
    """(X + a)^exponent in the ring; the multiply step is a shift-and-add."""
    a %= n
    if n < _NP_LIMIT:
        nn, aa = np.uint64(n), np.uint64(a)
        res = np.zeros(r, dtype=np.uint64)
        res[0] = 1
        for bit in bin(exponent)[2:]:
            res = _cyclic_mul_np(res, res, n)
            if bit == "1":
                res = (np.roll(res, 1) + aa * res % nn) % nn
        return PolyModRing._raw(n, r, res.tolist())
    result = [1] + [0] * (r - 1)
    for bit in bin(exponent)[2:]:
        result = _cyclic_mul(result, result, n)
        if bit == "1":
            result = [(result[i - 1] + a * result[i]) % n for i in range(r)]
    return PolyModRing._raw(n, r, result)


# float64 cyclic convolution is exact while r*(n-1)^2 stays well below 2^53
FFT_EXACT_LIMIT = 1 << 42


def fft_is_exact(n: int, r: int) -> bool:
    return r * (n - 1) ** 2 < FFT_EXACT_LIMIT


def first_aks_failure(n: int, r: int, a_values, chunk: int = 256) -> int | None:
    """Smallest a in ``a_values`` with (X + a)^n != X^(n mod r) + a.

    Evaluates a whole chunk of bases at once with float FFT convolutions.
    Only valid when :func:`fft_is_exact` holds; every rounded product is
    checked against its float value and a RuntimeError is raised if the
    rounding margin is ever lost.
    """
    if not fft_is_exact(n, r):
        raise ValueError("FFT path not exact for these ring parameters")
    a_values = list(a_values)
    bits = bin(n)[2:]
    # power-of-two linear convolution, folded mod X^r - 1 afterwards
    size = 1 << (2 * r - 2).bit_length()
    for start in range(0, len(a_values), chunk):
        a = np.array(a_values[start : start + chunk], dtype=np.int64)
        poly = np.zeros((len(a), r), dtype=np.int64)
        poly[:, 0] = 1
        for bit in bits:
            f = np.fft.rfft(poly, n=size, axis=1)
            sq = np.fft.irfft(f * f, n=size, axis=1)
            rounded = np.rint(sq)
            if np.abs(sq - rounded).max() > 0.25:
                raise RuntimeError("FFT rounding margin exceeded")
            full = rounded.astype(np.int64)
            poly = full[:, :r] % n
            poly[:, : r - 1] += full[:, r : 2 * r - 1] % n
            poly %= n
            if bit == "1":
                poly = (np.roll(poly, 1, axis=1) + (a % n)[:, None] * poly) % n
        target = np.zeros_like(poly)
        target[:, n % r] += 1
        target[:, 0] += a % n
        target %= n
        bad = np.nonzero((poly != target).any(axis=1))[0]
        if bad.size:
            return int(a[bad[0]])
    return None
