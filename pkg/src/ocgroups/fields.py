"""Small finite fields, 2x2/3x3 matrices over them, and the plane PG(2,4).

Field elements are plain ints.  For the prime fields they are residues; for
GF(4) the int ``a + 2*b`` encodes ``a + b*w`` with ``w*w == w + 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

SUPPORTED_ORDERS = (2, 3, 4, 5)


class GF:
    def __init__(self, q: int):
        if q not in SUPPORTED_ORDERS:
            raise ValueError(f"unsupported field order {q}")
        self.q = q
        self.elements = tuple(range(q))
        if q == 4:
            self.char = 2
            self.add_table = [[a ^ b for b in range(4)] for a in range(4)]
            self.mul_table = [[_gf4_mul(a, b) for b in range(4)] for a in range(4)]
        else:
            self.char = q
            self.add_table = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % q for b in range(q)] for a in range(q)]
        self.neg_table = [self.add_table[a].index(0) for a in range(q)]
        self.inv_table = [None] + [self.mul_table[a].index(1) for a in range(1, q)]

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.inv_table[a]

    def frobenius(self, a):
        """x -> x**char; the identity on prime fields."""
        r = 1
        for _ in range(self.char):
            r = self.mul(r, a)
        return r

    def check_axioms(self) -> bool:
        E = self.elements
        add, mul = self.add, self.mul
        for a, b, c in itertools.product(E, repeat=3):
            if add(add(a, b), c) != add(a, add(b, c)):
                return False
            if mul(mul(a, b), c) != mul(a, mul(b, c)):
                return False
            if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
                return False
        for a, b in itertools.product(E, repeat=2):
            if add(a, b) != add(b, a) or mul(a, b) != mul(b, a):
                return False
        for a in E:
            if add(a, 0) != a or mul(a, 1) != a or add(a, self.neg(a)) != 0:
                return False
            if a and mul(a, self.inv(a)) != 1:
                return False
        return True

    def __repr__(self):
        return f"GF({self.q})"


def _gf4_mul(x, y):
    a, b = x & 1, x >> 1
    c, d = y & 1, y >> 1
    # (a + b w)(c + d w) = ac + bd + (ad + bc + bd) w
    lo = (a & c) ^ (b & d)
    hi = (a & d) ^ (b & c) ^ (b & d)
    return lo | (hi << 1)


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    F = GF(q)
    if not F.check_axioms():
        raise AssertionError(f"field axioms fail for {F}")
    return F


@dataclass(frozen=True)
class Matrix:
    q: int
    rows: tuple

    @classmethod
    def of(cls, q, rows):
        F = field(q)
        return cls(q, tuple(tuple(x % q if F.q != 4 else x for x in r) for r in rows))

    @classmethod
    def identity(cls, q, n):
        return cls(q, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __mul__(self, other: Matrix) -> Matrix:
        F = field(self.q)
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                s = 0
                for k in range(n):
                    s = F.add(s, F.mul(self.rows[i][k], other.rows[k][j]))
                row.append(s)
            out.append(tuple(row))
        return Matrix(self.q, tuple(out))

    def __pow__(self, k: int) -> Matrix:
        r = Matrix.identity(self.q, self.n)
        for _ in range(k):
            r = r * self
        return r

    def det(self) -> int:
        F = field(self.q)
        m = self.rows
        if self.n == 2:
            return F.sub(F.mul(m[0][0], m[1][1]), F.mul(m[0][1], m[1][0]))
        if self.n == 3:
            d = 0
            for j in range(3):
                minor = F.sub(F.mul(m[1][(j + 1) % 3], m[2][(j + 2) % 3]),
                              F.mul(m[1][(j + 2) % 3], m[2][(j + 1) % 3]))
                d = F.add(d, F.mul(m[0][j], minor))
            return d
        raise ValueError("only 2x2 and 3x3 matrices are supported")

    def act(self, v: tuple) -> tuple:
        """Row-vector action v -> v*A, so acting by A then B equals acting by AB."""
        F = field(self.q)
        n = self.n
        out = []
        for j in range(n):
            s = 0
            for k in range(n):
                s = F.add(s, F.mul(v[k], self.rows[k][j]))
            out.append(s)
        return tuple(out)


def nonzero_vectors(q: int, n: int) -> list[tuple]:
    return [v for v in itertools.product(range(q), repeat=n) if any(v)]


def normalize(v: tuple, q: int) -> tuple:
    """Scale so the first nonzero coordinate is 1."""
    F = field(q)
    lead = next(x for x in v if x)
    s = F.inv(lead)
    return tuple(F.mul(s, x) for x in v)


class ProjectivePlane:
    """PG(2,q): points and lines as normalized triples, both sorted."""

    def __init__(self, q: int):
        self.q = q
        F = field(q)
        self.points = sorted({normalize(v, q) for v in nonzero_vectors(q, 3)})
        self.lines = list(self.points)
        self.point_index = {p: i for i, p in enumerate(self.points)}
        self.line_index = {l: i for i, l in enumerate(self.lines)}
        self.line_points = []
        for l in self.lines:
            pts = frozenset(
                i for i, p in enumerate(self.points)
                if F.add(F.add(F.mul(l[0], p[0]), F.mul(l[1], p[1])), F.mul(l[2], p[2])) == 0)
            self.line_points.append(pts)
        self.line_of_pointset = {pts: i for i, pts in enumerate(self.line_points)}

    def incident(self, point: int, line: int) -> bool:
        return point in self.line_points[line]

    def point_image(self, A: Matrix, i: int) -> int:
        return self.point_index[normalize(A.act(self.points[i]), self.q)]

    def line_image(self, A: Matrix, j: int) -> int:
        img = frozenset(self.point_image(A, i) for i in self.line_points[j])
        return self.line_of_pointset[img]
