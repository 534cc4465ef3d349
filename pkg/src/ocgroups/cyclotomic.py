"""Exact elements of Z[zeta_e] stored as coefficient vectors modulo x^e - 1."""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of integer polynomials (lowest degree first), den monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division is not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _polydiv_exact(p, list(cyclotomic_poly(d)))
    return tuple(p)


def _reduce(coeffs, e: int) -> tuple[int, ...]:
    """Remainder of sum c_k x^k modulo the e-th cyclotomic polynomial."""
    phi = cyclotomic_poly(e)
    deg = len(phi) - 1
    r = list(coeffs)
    for i in range(len(r) - 1, deg - 1, -1):
        c = r[i]
        if c:
            for j in range(deg + 1):
                r[i - deg + j] -= c * phi[j]
    return tuple(r[:deg])


class CyclotomicInteger:
    """sum_k c_k * zeta^k with zeta = exp(2 pi i / e).

    Coefficient vectors are representatives modulo x^e - 1; equality and
    hashing go through the canonical remainder modulo the cyclotomic
    polynomial, so different representatives of one number compare equal.
    """

    __slots__ = ("e", "coeffs", "_red")

    def __init__(self, e: int, coeffs):
        if e < 1:
            raise ValueError("conductor must be positive")
        c = [0] * e
        for k, x in enumerate(coeffs):
            c[k % e] += int(x)
        self.e = e
        self.coeffs = tuple(c)
        self._red = None

    @classmethod
    def integer(cls, e: int, n: int) -> CyclotomicInteger:
        return cls(e, [n])

    @classmethod
    def root(cls, e: int, k: int = 1) -> CyclotomicInteger:
        c = [0] * e
        c[k % e] = 1
        return cls(e, c)

    def _coerce(self, other):
        if isinstance(other, CyclotomicInteger):
            if other.e != self.e:
                raise ValueError(f"conductor mismatch {self.e} vs {other.e}")
            return other
        if isinstance(other, int):
            return CyclotomicInteger.integer(self.e, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CyclotomicInteger(self.e, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.e, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        e = self.e
        full = np.convolve(np.array(self.coeffs, dtype=np.int64),
                           np.array(o.coeffs, dtype=np.int64))
        folded = full[:e].copy()
        folded[: len(full) - e] += full[e:]
        return CyclotomicInteger(e, folded.tolist())

    __rmul__ = __mul__

    def conjugate(self) -> CyclotomicInteger:
        e = self.e
        return CyclotomicInteger(e, [self.coeffs[(-k) % e] for k in range(e)])

    def galois(self, m: int) -> CyclotomicInteger:
        """Image under zeta -> zeta^m (m coprime to e)."""
        e = self.e
        if math.gcd(m, e) != 1:
            raise ValueError(f"{m} is not coprime to {e}")
        c = [0] * e
        for k, x in enumerate(self.coeffs):
            c[(m * k) % e] += x
        return CyclotomicInteger(e, c)

    def reduced(self) -> tuple[int, ...]:
        if self._red is None:
            self._red = _reduce(self.coeffs, self.e)
        return self._red

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.reduced() == o.reduced()

    def __hash__(self):
        return hash((self.e, self.reduced()))

    def is_rational(self) -> bool:
        """Fixed by every Galois automorphism zeta -> zeta^m."""
        return all(self.galois(m) == self for m in range(2, self.e) if math.gcd(m, self.e) == 1)

    def rational_value(self) -> int | None:
        r = self.reduced()
        if any(r[1:]):
            return None
        return r[0] if r else 0

    def to_complex(self) -> complex:
        e = self.e
        return sum(c * cmath.exp(2j * cmath.pi * k / e) for k, c in enumerate(self.coeffs) if c)

    def __repr__(self):
        return f"CyclotomicInteger({self.e}, {list(self.coeffs)})"

    def __str__(self):
        v = self.rational_value()
        if v is not None:
            return str(v)
        z = self.to_complex()
        if abs(z.imag) < 1e-9:
            return f"{z.real:.3f}"
        return f"{z.real:.3f}{z.imag:+.3f}i"
