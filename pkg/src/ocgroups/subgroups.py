"""All subgroups of a small permutation group by cyclic-join closure.

Every subgroup <g1, ..., gm> is reached along <g1> < <g1, g2> < ..., so
joining found subgroups with cyclic generators until nothing new appears
finds them all.  Joins are only formed from one representative per
conjugacy class of subgroups: if H' = H^x then <H', g> = <H, g^(x^-1)>^x, and
every found subgroup has its whole conjugacy class added at once.
"""

from __future__ import annotations

import numpy as np

from .analysis import _with_elements, conjugation_tables, element_locator
from .permgroup import PermGroup

SUBGROUP_SCAN_CAP = 5040


class SubgroupLattice:
    """Subgroups of G as index arrays into ``G.elements()``."""

    def __init__(self, G: PermGroup):
        if G.order() > SUBGROUP_SCAN_CAP:
            raise ValueError(
                f"subgroup enumeration is limited to order {SUBGROUP_SCAN_CAP}, got {G.order()}")
        self.G = G
        self.elements = G.elements()
        n = len(self.elements)
        self.n = n
        self.table = _mult_table(G)
        self.conj = [np.array(t, dtype=np.int64) for t in conjugation_tables(G)]
        self.keys: list[bytes] = []
        self.members: list[np.ndarray] = []
        self.gens: list[list[int]] = []
        self.class_of: list[int] = []
        self.classes: list[list[int]] = []
        self._lookup: dict[bytes, int] = {}
        self._run()

    def _key(self, idx: np.ndarray) -> bytes:
        mask = np.zeros(self.n, dtype=bool)
        mask[idx] = True
        return np.packbits(mask).tobytes()

    def _join(self, H: np.ndarray, gens: list[int], g: int) -> np.ndarray:
        T = self.table
        inK = np.zeros(self.n, dtype=bool)
        inK[H] = True
        parts = [H]
        reps = [0]
        all_gens = gens + [g]
        for r in reps:
            for s in all_gens:
                y = T[r, s]
                if not inK[y]:
                    coset = T[H, y]
                    inK[coset] = True
                    parts.append(coset)
                    reps.append(y)
        return np.sort(np.concatenate(parts))

    def _add(self, idx: np.ndarray, gens: list[int]) -> bool:
        key = self._key(idx)
        if key in self._lookup:
            return False
        cid = len(self.classes)
        orbit = [(idx, gens, key)]
        seen = {key}
        for H, hg, _ in orbit:
            for c in self.conj:
                K = np.sort(c[H])
                k = self._key(K)
                if k not in seen:
                    seen.add(k)
                    orbit.append((K, [int(c[x]) for x in hg], k))
        ids = []
        for H, hg, k in orbit:
            sid = len(self.keys)
            self._lookup[k] = sid
            self.keys.append(k)
            self.members.append(H)
            self.gens.append(hg)
            self.class_of.append(cid)
            ids.append(sid)
        self.classes.append(ids)
        return True

    def _run(self):
        T = self.table
        for x in range(self.n):
            powers = [0]
            y = x
            while y != 0:
                powers.append(y)
                y = int(T[y, x])
            self._add(np.array(sorted(powers), dtype=np.int64), [x] if x else [])
        # one generator per cyclic subgroup, conjugates included
        cyclic_gens = [g[0] for g in self.gens if g]
        # cyclic subgroups are complete only after the loop; the queue of
        # class representatives is walked afterwards and grows as we go
        queue = [cls[0] for cls in self.classes]
        seen_reps = set(queue)
        pos = 0
        while pos < len(queue):
            sid = queue[pos]
            pos += 1
            H = self.members[sid]
            inH = np.zeros(self.n, dtype=bool)
            inH[H] = True
            for g in cyclic_gens:
                if inH[g]:
                    continue
                K = self._join(H, self.gens[sid], g)
                before = len(self.classes)
                if self._add(K, self.gens[sid] + [g]):
                    rep = self.classes[before][0]
                    if rep not in seen_reps:
                        seen_reps.add(rep)
                        queue.append(rep)

    def __len__(self):
        return len(self.keys)

    def order(self, sid: int) -> int:
        return len(self.members[sid])

    def group(self, sid: int) -> PermGroup:
        els = self.elements
        gens = [els[i] for i in self.gens[sid]]
        idx = self.members[sid]
        S = _with_elements(gens, [els[i] for i in idx], self.G.degree)
        S.cache["element_array"] = self.G.element_array()[idx]
        return S

    def sorted_ids(self) -> list[int]:
        return sorted(range(len(self)), key=lambda s: (self.order(s), self.class_of[s], s))

    def representatives(self) -> list[int]:
        return sorted((c[0] for c in self.classes),
                      key=lambda s: (self.order(s), self.class_of[s]))


def _mult_table(G: PermGroup) -> np.ndarray:
    """T[a, b] = index of elements[a] * elements[b] (left-to-right product)."""
    E = G.element_array()
    locate = element_locator(G)
    N = len(E)
    T = np.empty((N, N), dtype=np.int32)
    for b in range(N):
        T[:, b] = locate(E[b][E])  # row a: b(a(x))
    return T


def subgroup_lattice(G: PermGroup) -> SubgroupLattice:
    lat = G.cache.get("lattice")
    if lat is None:
        lat = SubgroupLattice(G)
        G.cache["lattice"] = lat
    return lat


def enumerate_subgroups(G: PermGroup) -> list[PermGroup]:
    lat = subgroup_lattice(G)
    return [lat.group(s) for s in lat.sorted_ids()]
