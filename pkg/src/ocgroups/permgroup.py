"""Permutation groups backed by a deterministic Schreier-Sims stabilizer chain."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

import numpy as np

from .perm import Permutation, PermutationError

DEFAULT_ENUMERATION_CAP = 100_000
ENUMERATION_CAP = DEFAULT_ENUMERATION_CAP


class TooLargeError(ValueError):
    """Raised when a group is too large to enumerate under the active cap."""


def set_enumeration_cap(cap: int) -> None:
    global ENUMERATION_CAP
    if cap < 1:
        raise ValueError("cap must be positive")
    ENUMERATION_CAP = cap


def orbit_transversal(point: int, gens) -> dict[int, Permutation]:
    """Map each orbit point y to an element u with ``u(point) == y``."""
    n = gens[0].degree if gens else point
    ident = Permutation.identity(max(n, point))
    trans = {point: ident}
    queue = [point]
    for x in queue:
        u = trans[x]
        for s in gens:
            y = s._a[x]
            if y not in trans:
                trans[y] = u * s
                queue.append(y)
    return trans


@dataclass
class BSGS:
    base: list[int]
    strong_generators: list[Permutation]
    transversals: list[dict[int, Permutation]]
    degree: int
    _inverses: list[dict[int, Permutation]] = field(default_factory=list, repr=False)

    def __post_init__(self):
        if not self._inverses:
            self._inverses = [{x: u.inverse() for x, u in t.items()}
                              for t in self.transversals]

    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        return _sift(g, self.base, self.transversals, self._inverses, start)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise PermutationError(
                f"degree mismatch: {g.degree} vs group degree {self.degree}")
        h, level = self.sift(g)
        return level == len(self.base) and h.is_identity()


def _sift(g, base, transversals, inverses, start):
    h = g
    for level in range(start, len(base)):
        x = h._a[base[level]]
        t = transversals[level]
        if x not in t:
            return h, level
        h = h * inverses[level][x]
    return h, len(base)


def build_bsgs(generators, degree: int | None = None) -> BSGS:
    """Deterministic Schreier-Sims.

    Levels are processed from the bottom of the chain upward; whenever a
    Schreier generator fails to sift, its residue becomes a new strong
    generator and processing restarts at the level where sifting stopped.
    """
    generators = list(generators)
    if degree is None:
        if not generators:
            raise ValueError("need generators or a degree")
        degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise PermutationError("generators must share one degree")

    base: list[int] = []
    strong: list[Permutation] = []
    for g in generators:
        if g.is_identity() or g in strong:
            continue
        if all(g._a[b] == b for b in base):
            base.append(g.moved_point())
        strong.append(g)

    transversals: list[dict] = [{} for _ in base]
    inverses: list[dict] = [{} for _ in base]

    def level_gens(i):
        fixed = base[:i]
        return [s for s in strong if all(s._a[b] == b for b in fixed)]

    i = len(base) - 1
    while i >= 0:
        gens_i = level_gens(i)
        t = orbit_transversal(base[i], gens_i) if gens_i else {
            base[i]: Permutation.identity(degree)}
        transversals[i] = t
        inverses[i] = {x: u.inverse() for x, u in t.items()}
        restart = False
        for x, u in t.items():
            for s in gens_i:
                us = u * s
                y = s._a[x]
                if us == t[y]:
                    continue
                h = us * inverses[i][y]
                res, j = _sift(h, base, transversals, inverses, i + 1)
                if j == len(base) and res.is_identity():
                    continue
                if j == len(base):
                    base.append(res.moved_point())
                    transversals.append({})
                    inverses.append({})
                strong.append(res)
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1

    return BSGS(base, strong, transversals, degree, inverses)


class PermGroup:
    """A permutation group given by generators.

    The stabilizer chain and the element list are computed lazily, at most
    once, under a per-instance lock.
    """

    def __init__(self, generators, degree: int | None = None, name: str | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("need generators or a degree")
            degree = gens[0].degree
        for g in gens:
            if not isinstance(g, Permutation):
                raise TypeError(f"generator {g!r} is not a Permutation")
            if g.degree != degree:
                raise PermutationError(
                    f"generator degree {g.degree} differs from group degree {degree}")
        if not gens:
            gens = [Permutation.identity(degree)]
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self._lock = threading.RLock()
        self._bsgs: BSGS | None = None
        self._elements: list[Permutation] | None = None
        self._element_set: frozenset | None = None
        self.cache: dict = {}

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"

    @property
    def bsgs(self) -> BSGS:
        if self._bsgs is None:
            with self._lock:
                if self._bsgs is None:
                    self._bsgs = build_bsgs(self.generators, self.degree)
        return self._bsgs

    def order(self) -> int:
        return self.bsgs.order()

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Permutation) -> bool:
        if self._element_set is not None:
            if p.degree != self.degree:
                raise PermutationError("degree mismatch")
            return p in self._element_set
        return self.bsgs.contains(p)

    __contains__ = contains

    def elements(self, cap: int | None = None) -> list[Permutation]:
        """Every element exactly once, identity first, in BFS order."""
        if self._elements is None:
            cap = ENUMERATION_CAP if cap is None else cap
            n = self.order()
            if n > cap:
                raise TooLargeError(
                    f"group of order {n} is too large to enumerate (cap {cap})")
            with self._lock:
                if self._elements is None:
                    rows = _chain_rows(self.bsgs)
                    els = [Permutation._raw(tuple(r)) for r in rows.tolist()]
                    assert len(set(els)) == n, (len(els), n)
                    self.cache["element_array"] = rows
                    self._element_set = frozenset(els)
                    self._elements = els
        return self._elements

    def element_array(self) -> np.ndarray:
        """Image rows of ``elements()`` as an int64 array (column 0 is padding)."""
        arr = self.cache.get("element_array")
        if arr is None:
            arr = np.array([x._a for x in self.elements()], dtype=np.int64)
            self.cache["element_array"] = arr
        return arr

    def element_set(self) -> frozenset:
        self.elements()
        return self._element_set

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(a * b == b * a for i, a in enumerate(gs) for b in gs[i + 1:])

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_normal_in(self, other: PermGroup) -> bool:
        return self.is_subgroup_of(other) and all(
            self.contains(h.conj(g)) for h in self.generators for g in other.generators)


def _chain_rows(bsgs: BSGS) -> np.ndarray:
    """All products h * u with h in the next stabilizer and u a transversal element.

    Transversals list the identity first, so the identity comes out first.
    """
    rows = np.arange(bsgs.degree + 1, dtype=np.int64)[None, :]
    for t in reversed(bsgs.transversals):
        # (h*u)(x) = u(h(x)): gather u's images through every row h
        rows = np.concatenate([np.asarray(u._a, dtype=np.int64)[rows] for u in t.values()])
    return rows


def _closure(gens, identity) -> list[Permutation]:
    seen = {identity}
    out = [identity]
    for x in out:
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def closure(gens, degree: int) -> list[Permutation]:
    """Brute-force element list of the group generated by ``gens``."""
    return _closure(list(gens), Permutation.identity(degree))
