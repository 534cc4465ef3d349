"""Permutations on {1..n}.

Products act left to right: ``(p * q)(x) == q(p(x))``.  Conjugation follows
the exponent convention ``x ** g == g**-1 * x * g`` via :meth:`Permutation.conj`.
"""

from __future__ import annotations

import math
import re
from functools import reduce


class PermutationError(ValueError):
    pass


class Permutation:
    """An immutable bijection of {1..n} in one-line notation (1-based).

    Internally the image tuple carries a leading 0 so that point ``i`` is
    looked up as ``_a[i]`` and composition is a single ``map``.
    """

    __slots__ = ("_a", "_hash")

    def __init__(self, images):
        a = (0,) + tuple(int(x) for x in images)
        n = len(a) - 1
        if n < 1:
            raise PermutationError("permutation needs degree >= 1")
        if sorted(a) != list(range(n + 1)):
            raise PermutationError(f"not a bijection of 1..{n}: {list(a[1:])}")
        self._a = a
        self._hash = hash(a)

    @classmethod
    def _raw(cls, a: tuple) -> Permutation:
        # trusted constructor: a already includes the leading 0
        p = object.__new__(cls)
        p._a = a
        p._hash = hash(a)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        if degree < 1:
            raise PermutationError("degree must be >= 1")
        return cls._raw(tuple(range(degree + 1)))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Permutation:
        a = list(range(degree + 1))
        seen = set()
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            for x in cyc:
                if not 1 <= x <= degree:
                    raise PermutationError(f"point {x} out of range 1..{degree}")
                if x in seen:
                    raise PermutationError(f"point {x} repeated in cycles")
                seen.add(x)
            for i, x in enumerate(cyc):
                a[x] = cyc[(i + 1) % len(cyc)]
        return cls._raw(tuple(a))

    @property
    def degree(self) -> int:
        return len(self._a) - 1

    @property
    def images(self) -> tuple:
        return self._a[1:]

    def __call__(self, x: int) -> int:
        if not 1 <= x <= len(self._a) - 1:
            raise PermutationError(f"point {x} out of range")
        return self._a[x]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self._a) != len(other._a):
            raise PermutationError(
                f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation._raw(tuple(map(other._a.__getitem__, self._a)))

    def inverse(self) -> Permutation:
        a = self._a
        inv = [0] * len(a)
        for i, x in enumerate(a):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation._raw(tuple(range(len(self._a))))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self, g: Permutation) -> Permutation:
        """Return ``g**-1 * self * g``."""
        ga = g._a
        # (g^-1 x g)(g(i)) = g(x(i))
        out = [0] * len(ga)
        for i, xi in enumerate(self._a):
            out[ga[i]] = ga[xi]
        return Permutation._raw(tuple(out))

    def is_identity(self) -> bool:
        a = self._a
        return all(a[i] == i for i in range(len(a)))

    def cycles(self, include_fixed: bool = False) -> list[tuple]:
        a = self._a
        seen = [False] * len(a)
        out = []
        for i in range(1, len(a)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = a[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = a[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        return tuple(sorted((len(c) for c in self.cycles(True)), reverse=True))

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def fixed_points(self) -> list[int]:
        return [i for i in range(1, len(self._a)) if self._a[i] == i]

    def moved_point(self) -> int | None:
        """Smallest point moved, or None for the identity."""
        a = self._a
        for i in range(1, len(a)):
            if a[i] != i:
                return i
        return None

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._a == other._a

    def __lt__(self, other: Permutation) -> bool:
        return self._a < other._a

    def __le__(self, other: Permutation) -> bool:
        return self._a <= other._a

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return format_perm(self)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: ``compose(p, q)(x) == q(p(x))``."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def format_perm(p: Permutation, style: str = "cycle") -> str:
    if style == "oneline":
        return "[" + ",".join(map(str, p.images)) + "]"
    if style != "cycle":
        raise ValueError(f"unknown style {style!r}")
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(\s*([\d\s,]*)\)")


def parse_perm(text: str, degree: int | None = None) -> Permutation:
    """Parse ``"[2,3,1]"`` (one-line) or ``"(1,2,3)(4,5)"`` (cycles).

    Cycle notation needs ``degree`` unless the largest mentioned point is
    the intended degree.
    """
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise PermutationError(f"unterminated one-line permutation {text!r}")
        body = s[1:-1].strip()
        images = [int(tok) for tok in re.split(r"[\s,]+", body) if tok]
        p = Permutation(images)
        if degree is not None and p.degree != degree:
            raise PermutationError(f"expected degree {degree}, got {p.degree}")
        return p
    cycles = []
    pos = 0
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise PermutationError(f"cannot parse permutation {text!r}")
        pos = m.end()
        pts = [int(tok) for tok in re.split(r"[\s,]+", m.group(1).strip()) if tok]
        if pts:
            cycles.append(pts)
    if s[pos:].strip():
        raise PermutationError(f"cannot parse permutation {text!r}")
    top = max((max(c) for c in cycles), default=1)
    if degree is None:
        degree = top
    elif top > degree:
        raise PermutationError(f"point {top} exceeds degree {degree}")
    return Permutation.from_cycles(cycles, degree)
