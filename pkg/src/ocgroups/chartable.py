"""Character tables by the Burnside-Dixon method.

Class matrices are diagonalized simultaneously over a prime field GF(p)
with p = 1 mod exp(G), and the resulting modular characters are lifted to
exact cyclotomic integers through the eigenvalue multiplicities of each
element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import analysis
from .analysis import ConjugacyClass
from .cyclotomic import CyclotomicInteger
from .permgroup import PermGroup, TooLargeError

CHARACTER_CAP = 2000
PRIME_SEARCH_BOUND = 10 ** 6


class CharacterTableError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def dixon_prime(order: int, e: int, classes: int = 0, bound: int = PRIME_SEARCH_BOUND) -> int:
    """Smallest prime p = 1 (mod e) with p > 2*sqrt(order) and p > classes.

    The second bound keeps every k <= r invertible mod p, which the
    characteristic polynomial recursion divides by.
    """
    p = e + 1
    while p <= bound:
        if p * p > 4 * order and p > classes and _is_prime(p):
            return p
        p += e
    raise CharacterTableError(f"no prime = 1 mod {e} above 2*sqrt({order}) below {bound}")


def _primitive_root(p: int) -> int:
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1


def class_constants(G: PermGroup, cap: int | None = None, reps=None) -> list:
    """a[i][j][k] = #{(x, y) in C_i x C_j : x*y = z_k} for a fixed z_k in C_k.

    ``reps`` overrides the chosen z_k (to check independence of the choice).
    """
    cap = CHARACTER_CAP if cap is None else cap
    if G.order() > cap:
        raise TooLargeError(f"order {G.order()} exceeds the character-table cap {cap}")
    classes = analysis.conjugacy_classes(G)
    r = len(classes)
    if reps is None:
        reps = [c.representative for c in classes]
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i in range(r):
        xs = [x.inverse() for x in analysis.class_members(G, i)]
        for k, z in enumerate(reps):
            for xi in xs:
                a[i][analysis.class_index(G, xi * z)][k] += 1
    return a


# -- linear algebra over GF(p) ----------------------------------------------

def _rref(rows, p):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots = []
    lead = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(lead, len(m)) if m[i][col] % p), None)
        if piv is None:
            continue
        m[lead], m[piv] = m[piv], m[lead]
        inv = pow(m[lead][col], p - 2, p)
        m[lead] = [(x * inv) % p for x in m[lead]]
        for i in range(len(m)):
            if i != lead and m[i][col] % p:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(m):
            break
    return m, pivots


def _nullspace(A, p):
    """Basis of {x : A x = 0} over GF(p)."""
    n = len(A[0])
    m, pivots = _rref(A, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for row, pc in zip(m, pivots):
            x[pc] = (-row[f]) % p
        basis.append(x)
    return basis


def _charpoly(A, p):
    """Characteristic polynomial coefficients (highest degree first), Faddeev-LeVerrier."""
    n = len(A)
    coeffs = [1]
    M = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M <- A*M + c*I
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) % p for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] = (AM[i][i] + c) % p
        M = AM
        AMk = [[sum(A[i][t] * M[t][j] for t in range(n)) % p for j in range(n)] for i in range(n)]
        tr = sum(AMk[i][i] for i in range(n)) % p
        c = (-tr * pow(k, p - 2, p)) % p
        coeffs.append(c)
    return coeffs


def _split(M, basis, p):
    """Split span(basis) into eigenspaces of M (which leaves it invariant)."""
    d = len(basis)
    r = len(M)
    MB = [[sum(M[i][t] * b[t] for t in range(r)) % p for i in range(r)] for b in basis]
    # coordinates: solve B^T-system column by column
    aug = [[basis[j][i] for j in range(d)] + [MB[c][i] for c in range(d)] for i in range(r)]
    red, piv = _rref(aug, p)
    if piv[:d] != list(range(d)):
        raise CharacterTableError("basis is not independent")
    A = [[red[i][d + c] for c in range(d)] for i in range(d)]  # M b_c = sum_i A[i][c] b_i
    poly = _charpoly(A, p)
    roots = [lam for lam in range(p)
             if sum(co * pow(lam, len(poly) - 1 - k, p) for k, co in enumerate(poly)) % p == 0]
    spaces = []
    for lam in roots:
        shifted = [[(A[i][j] - (lam if i == j else 0)) % p for j in range(d)] for i in range(d)]
        ns = _nullspace(shifted, p)
        spaces.append([[sum(b[i] * xi for b, xi in zip(basis, v)) % p for i in range(r)]
                       for v in ns])
    if sum(len(s) for s in spaces) != d:
        raise CharacterTableError("class matrix is not diagonalizable mod p")
    return spaces


# -- the table ---------------------------------------------------------------

@dataclass
class CharacterTable:
    group_order: int
    classes: list[ConjugacyClass]
    e: int
    prime: int
    degrees: list[int]
    rows: list[list[CyclotomicInteger]]
    inverse_class: list[int]

    def row_orthogonality(self) -> bool:
        n = len(self.rows)
        for a in range(n):
            for b in range(n):
                s = CyclotomicInteger.integer(self.e, 0)
                for k, c in enumerate(self.classes):
                    s = s + self.rows[a][k] * self.rows[b][k].conjugate() * c.size
                if s != (self.group_order if a == b else 0):
                    return False
        return True

    def column_orthogonality(self) -> bool:
        r = len(self.classes)
        for i in range(r):
            cent = self.group_order // self.classes[i].size
            for j in range(r):
                s = CyclotomicInteger.integer(self.e, 0)
                for row in self.rows:
                    s = s + row[i] * row[j].conjugate()
                if s != (cent if i == j else 0):
                    return False
        return True

    def rational_rows(self) -> list[bool]:
        return [all(v.is_rational() for v in row) for row in self.rows]

    def to_dict(self) -> dict:
        return {
            "order": self.group_order,
            "exponent": self.e,
            "prime": self.prime,
            "class_orders": [c.rep_order for c in self.classes],
            "class_sizes": [c.size for c in self.classes],
            "characters": [
                {"degree": d,
                 "values": [{"coeffs": list(v.coeffs),
                             "approx": [round(v.to_complex().real, 6),
                                        round(v.to_complex().imag, 6)]} for v in row]}
                for d, row in zip(self.degrees, self.rows)
            ],
        }

    def format_text(self) -> str:
        cells = [[f"{c.rep_order}" for c in self.classes],
                 [f"{c.size}" for c in self.classes]]
        for row in self.rows:
            cells.append([str(v) for v in row])
        width = max(len(x) for r in cells for x in r) + 1
        lines = ["order " + "".join(x.rjust(width) for x in cells[0]),
                 "size  " + "".join(x.rjust(width) for x in cells[1])]
        for k, r in enumerate(cells[2:], start=1):
            lines.append(f"X.{k:<4}" + "".join(x.rjust(width) for x in r))
        return "\n".join(lines)


def dixon_character_table(G: PermGroup, cap: int | None = None) -> CharacterTable:
    cap = CHARACTER_CAP if cap is None else cap
    if G.order() > cap:
        raise TooLargeError(f"order {G.order()} exceeds the character-table cap {cap}")
    cached = G.cache.get("chartab")
    if cached is not None:
        return cached
    n = G.order()
    classes = analysis.conjugacy_classes(G)
    r = len(classes)
    e = analysis.exponent(G)
    p = dixon_prime(n, e, r)
    a = class_constants(G, cap)
    inv_class = [analysis.class_index(G, c.representative.inverse()) for c in classes]

    spaces = [[[int(i == j) for j in range(r)] for i in range(r)]]
    for i in range(r):
        if all(len(s) == 1 for s in spaces):
            break
        M = [[a[i][j][k] % p for k in range(r)] for j in range(r)]
        nxt = []
        for S in spaces:
            nxt.extend([S] if len(S) == 1 else _split(M, S, p))
        spaces = nxt
    if len(spaces) != r or any(len(s) != 1 for s in spaces):
        raise CharacterTableError("class matrices did not separate the characters")

    powers = analysis.power_classes(G)
    z = pow(_primitive_root(p), (p - 1) // e, p)
    zinv = pow(z, p - 2, p)
    Zmat = np.array([[pow(zinv, (j * l) % e, p) for l in range(e)] for j in range(e)],
                    dtype=np.int64)
    e_inv = pow(e, p - 2, p)

    rows = []
    degrees = []
    for (v,) in spaces:
        s0 = pow(v[0], p - 2, p)
        omega = [(x * s0) % p for x in v]
        norm = sum(omega[k] * omega[inv_class[k]] * pow(classes[k].size, p - 2, p)
                   for k in range(r)) % p
        dsq = (n * pow(norm, p - 2, p)) % p
        deg = next((d for d in range(1, math.isqrt(n) + 1) if (d * d) % p == dsq), None)
        if deg is None:
            raise CharacterTableError("no integral degree fits the central character")
        chi = [(omega[k] * deg * pow(classes[k].size, p - 2, p)) % p for k in range(r)]
        X = np.array([[chi[powers[k][j % classes[k].rep_order]] for j in range(e)]
                      for k in range(r)], dtype=np.int64)
        mult = (X @ Zmat) % p
        mult = (mult * e_inv) % p
        row = []
        for k in range(r):
            m = [int(x) for x in mult[k]]
            if sum(m) != deg or max(m) > deg:
                raise CharacterTableError("eigenvalue multiplicities failed to lift")
            row.append(CyclotomicInteger(e, m))
        rows.append(row)
        degrees.append(deg)

    order = sorted(range(r), key=lambda t: (degrees[t],
                                            tuple(tuple(-c for c in v.coeffs) for v in rows[t])))
    table = CharacterTable(n, classes, e, p, [degrees[t] for t in order],
                           [rows[t] for t in order], inv_class)
    G.cache["chartab"] = table
    return table


def rationality_counts(table: CharacterTable, G: PermGroup) -> tuple[int, int]:
    """(rational irreducible characters, rational classes)."""
    chars = sum(table.rational_rows())
    classes = sum(analysis.rational_classes(G))
    return chars, classes
