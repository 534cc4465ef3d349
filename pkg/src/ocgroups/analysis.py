"""Structural analysis of small permutation groups by full enumeration.

Everything here works on the explicit element list of a group (bounded by
the enumeration cap).  Per-group results are cached on ``G.cache``.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field

import numpy as np

from .perm import Permutation
from .permgroup import PermGroup, TooLargeError
from . import permgroup

ISOMORPHISM_CAP = 4096


class AnalysisError(ValueError):
    pass


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    rep_order: int

    def centralizer_order(self, group_order: int) -> int:
        q, r = divmod(group_order, self.size)
        assert r == 0
        return q


@dataclass
class PowerMap:
    """``targets[i][m]`` is the class of ``rep_i ** m`` for m coprime to o(rep_i)."""
    targets: list[dict[int, int]]

    def __call__(self, i: int, m: int) -> int:
        return self.targets[i][m]


class _ClassData:
    def __init__(self, G: PermGroup):
        els = G.elements()
        index = {x: i for i, x in enumerate(els)}
        tables = conjugation_tables(G)
        class_of = [-1] * len(els)
        groups: list[list[int]] = []
        for start in range(len(els)):
            if class_of[start] >= 0:
                continue
            c = len(groups)
            class_of[start] = c
            members = [start]
            for i in members:
                for t in tables:
                    j = t[i]
                    if class_of[j] < 0:
                        class_of[j] = c
                        members.append(j)
            groups.append(members)

        raw = []
        for members in groups:
            rep = min(els[i] for i in members)
            raw.append((rep.order(), len(members), rep, members))
        raw.sort(key=lambda t: (t[0], t[1], t[2]))
        remap = {}
        self.classes = []
        self.members = []
        for new, (order, size, rep, members) in enumerate(raw):
            self.classes.append(ConjugacyClass(rep, size, order))
            self.members.append(members)
            for i in members:
                remap[i] = new
        self.elements = els
        self.index = index
        self.class_of = [remap[i] for i in range(len(els))]
        self.order = len(els)
        self._powers: list[list[int]] | None = None

    def element_order(self, i: int) -> int:
        return self.classes[self.class_of[i]].rep_order

    def powers(self) -> list[list[int]]:
        """powers[c][m] = class of rep_c**m for 0 <= m < o(rep_c)."""
        if self._powers is None:
            out = []
            for cl in self.classes:
                row = []
                x = cl.representative
                y = Permutation.identity(x.degree)
                for _ in range(cl.rep_order):
                    row.append(self.class_of[self.index[y]])
                    y = y * x
                out.append(row)
            self._powers = out
        return self._powers


def conjugation_tables(G: PermGroup) -> list[list[int]]:
    """For each generator g, the map i -> index of elements[i]**g."""
    E = G.element_array()
    locate = element_locator(G)
    out = []
    for g in G.generators:
        ga = np.array(g._a, dtype=np.int64)
        C = np.empty_like(E)
        C[:, ga] = ga[E]  # (x^g)(g(i)) = g(x(i))
        out.append(locate(C).tolist())
    return out


def element_locator(G: PermGroup):
    """Function mapping an array of image rows (elements of G) to element indices.

    Elements of G are told apart by their images of the BSGS base, so rows
    are encoded as small integers and looked up by binary search.
    """
    cached = G.cache.get("locator")
    if cached is not None:
        return cached
    E = G.element_array()
    n = E.shape[1]
    base = list(G.bsgs.base) or [1]
    if len(base) * math.log2(n) > 62:
        raise AnalysisError("base too long to encode elements as int64")
    weights = n ** np.arange(len(base), dtype=np.int64)
    codes = E[:, base] @ weights
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]

    def locate(rows):
        return order[np.searchsorted(sorted_codes, np.asarray(rows)[:, base] @ weights)]

    G.cache["locator"] = locate
    return locate


def _data(G: PermGroup) -> _ClassData:
    d = G.cache.get("classes")
    if d is None:
        with G._lock:
            d = G.cache.get("classes")
            if d is None:
                d = _ClassData(G)
                G.cache["classes"] = d
    return d


def _check_cap(G: PermGroup):
    cap = permgroup.ENUMERATION_CAP
    if G.order() > cap:
        raise TooLargeError(f"group of order {G.order()} exceeds the enumeration cap {cap}")


# -- subgroup helpers --------------------------------------------------------

def _extend(H: list[Permutation], gens: list[Permutation], g: Permutation) -> list[Permutation]:
    """Elements of <H, g>, with H a subgroup generated by ``gens``; built as a
    union of right cosets of H."""
    Hset = set(H)
    if g in Hset:
        return H
    K = list(H)
    Kset = set(H)
    all_gens = list(gens) + [g]
    reps = [H[0]]
    for r in reps:
        for s in all_gens:
            y = r * s
            if y not in Kset:
                coset = [h * y for h in H]
                K.extend(coset)
                Kset.update(coset)
                reps.append(y)
    return K


def generated_subgroup(elements, degree: int, name: str | None = None) -> PermGroup:
    """Subgroup generated by ``elements``, with a greedily chosen generating set
    and its element list pre-filled."""
    ident = Permutation.identity(degree)
    H = [ident]
    Hset = {ident}
    gens: list[Permutation] = []
    for x in elements:
        if x not in Hset:
            H = _extend(H, gens, x)
            Hset = set(H)
            gens.append(x)
    return _with_elements(gens, H, degree, name)


def _with_elements(gens, elements, degree, name=None) -> PermGroup:
    S = PermGroup(gens, degree=degree, name=name)
    S._elements = list(elements)
    S._element_set = frozenset(elements)
    return S


def subgroup_from_set(elements, degree: int, name: str | None = None) -> PermGroup:
    """``elements`` must already be a subgroup; it is checked by size."""
    elements = sorted(elements)
    S = generated_subgroup(elements, degree, name)
    if len(S.elements()) != len(elements):
        raise AnalysisError("element set is not closed under multiplication")
    return S


# -- classes and predicates ----------------------------------------------------

def conjugacy_classes(G: PermGroup) -> list[ConjugacyClass]:
    _check_cap(G)
    return list(_data(G).classes)


def class_members(G: PermGroup, i: int) -> list[Permutation]:
    d = _data(G)
    return [d.elements[j] for j in d.members[i]]


def class_index(G: PermGroup, x: Permutation) -> int:
    d = _data(G)
    return d.class_of[d.index[x]]


def power_map(G: PermGroup) -> PowerMap:
    d = _data(G)
    pw = d.powers()
    targets = []
    for c, cl in enumerate(d.classes):
        o = cl.rep_order
        targets.append({m: pw[c][m % o] for m in range(1, max(o, 2)) if math.gcd(m, o) == 1})
    return PowerMap(targets)


def power_classes(G: PermGroup) -> list[list[int]]:
    """Full power table: entry [c][m] is the class of rep_c ** m, 0 <= m < o(rep_c)."""
    return _data(G).powers()


def center(G: PermGroup) -> PermGroup:
    cached = G.cache.get("center")
    if cached is None:
        d = _data(G)
        Z = [c.representative for c in d.classes if c.size == 1]
        cached = subgroup_from_set(Z, G.degree, name="Z")
        G.cache["center"] = cached
    return cached


def upper_central_series(G: PermGroup) -> list[PermGroup]:
    """Z_0 = 1 < Z_1 = Z(G) <= Z_2 <= ... up to the hypercenter.

    x lies in Z_{i+1} exactly when every commutator [x, g] with g a
    generator of G lies in Z_i.
    """
    d = _data(G)
    els = d.elements
    gens = [g for g in G.generators if not g.is_identity()]
    ginv = [g.inverse() for g in gens]
    series = [subgroup_from_set([els[0]], G.degree, name="Z0")]
    current = {els[0]}
    while True:
        nxt = []
        for x in els:
            xi = x.inverse()
            if all(xi * gi * x * g in current for g, gi in zip(gens, ginv)):
                nxt.append(x)
        if len(nxt) == len(current):
            return series
        current = set(nxt)
        series.append(subgroup_from_set(nxt, G.degree, name=f"Z{len(series)}"))


def is_nilpotent(G: PermGroup) -> bool:
    return len(upper_central_series(G)[-1].elements()) == G.order()


def exponent(G: PermGroup) -> int:
    return math.lcm(*(c.rep_order for c in conjugacy_classes(G)))


def order_spectrum(elements) -> set[int]:
    """Distinct element orders of a group or of any iterable of permutations."""
    if isinstance(elements, PermGroup):
        return {c.rep_order for c in conjugacy_classes(elements)}
    return {x.order() for x in elements}


def is_rational_group(G: PermGroup) -> bool:
    pm = power_map(G)
    return all(t == i for i, row in enumerate(pm.targets) for t in row.values())


def rational_classes(G: PermGroup) -> list[bool]:
    pm = power_map(G)
    return [all(t == i for t in row.values()) for i, row in enumerate(pm.targets)]


def _classes_by_order(G: PermGroup, noncentral_only: bool = False) -> Counter:
    counts = Counter()
    for c in conjugacy_classes(G):
        if noncentral_only and c.size == 1:
            continue
        counts[c.rep_order] += 1
    return counts


def is_oc_group(G: PermGroup) -> bool:
    """Non-central elements of equal order are conjugate.

    A class lies outside the center exactly when it has more than one element.
    """
    return all(n <= 1 for n in _classes_by_order(G, noncentral_only=True).values())


def odd_order_conjugacy(G: PermGroup) -> bool:
    return all(n <= 1 for d, n in _classes_by_order(G).items() if d % 2)


def all_order_conjugacy(G: PermGroup) -> bool:
    return all(n <= 1 for n in _classes_by_order(G).values())


def classes_of_order(G: PermGroup, d: int) -> int:
    return _classes_by_order(G)[d]


# -- subgroups ---------------------------------------------------------------

def _prime_part(n: int, p: int) -> int:
    r = 1
    while n % p == 0:
        n //= p
        r *= p
    return r


def _is_p_power(n: int, p: int) -> bool:
    return _prime_part(n, p) == n


def sylow_subgroup(G: PermGroup, p: int) -> PermGroup:
    """Grow a cyclic p-subgroup by p-elements of its normalizer."""
    key = ("sylow", p)
    if key in G.cache:
        return G.cache[key]
    d = _data(G)
    target = _prime_part(G.order(), p)
    els = d.elements
    if target == 1:
        S = subgroup_from_set([els[0]], G.degree)
        G.cache[key] = S
        return S
    p_elements = [i for i in range(len(els)) if d.element_order(i) > 1
                  and _is_p_power(d.element_order(i), p)]
    first = next(els[i] for i in p_elements if d.element_order(i) == p)
    gens = [first]
    P = _extend([els[0]], [], first)
    while len(P) < target:
        Pset = set(P)
        for i in p_elements:
            x = els[i]
            if x in Pset:
                continue
            if all(h.conj(x) in Pset for h in gens):
                P = _extend(P, gens, x)
                gens.append(x)
                break
        else:
            raise AnalysisError("normalizer growth stalled; not a p-subgroup chain")
    S = _with_elements(gens, P, G.degree, name=f"Syl{p}")
    G.cache[key] = S
    return S


def conjugate_subgroup_sets(G: PermGroup, H: PermGroup) -> list[frozenset]:
    """Orbit of H under conjugation, as element sets."""
    start = frozenset(H.elements())
    orbit = [start]
    seen = {start}
    for S in orbit:
        for g in G.generators:
            T = frozenset(x.conj(g) for x in S)
            if T not in seen:
                seen.add(T)
                orbit.append(T)
    return orbit


def p_core(G: PermGroup, p: int) -> PermGroup:
    """Largest normal p-subgroup: the intersection of all Sylow p-subgroups."""
    key = ("core", p)
    if key in G.cache:
        return G.cache[key]
    P = sylow_subgroup(G, p)
    core = set(P.elements())
    for S in conjugate_subgroup_sets(G, P):
        core &= S
        if len(core) == 1:
            break
    O = subgroup_from_set(core, G.degree, name=f"O{p}")
    assert _is_p_power(len(core), p) and O.is_normal_in(G)
    G.cache[key] = O
    return O


def _join(G_degree, A: PermGroup, B: PermGroup) -> PermGroup:
    H = list(A.elements())
    gens = list(A.generators)
    Hset = set(H)
    for g in B.generators:
        if g not in Hset:
            H = _extend(H, gens, g)
            Hset = set(H)
            gens.append(g)
    return _with_elements(gens, H, G_degree)


def normal_subgroups(G: PermGroup) -> list[PermGroup]:
    """All normal subgroups: normal closures of single classes, closed under joins."""
    cached = G.cache.get("normal")
    if cached is not None:
        return cached
    _check_cap(G)
    d = _data(G)
    found: dict[frozenset, PermGroup] = {}
    for i in range(len(d.classes)):
        N = generated_subgroup(class_members(G, i), G.degree)
        found.setdefault(N.element_set(), N)
    frontier = list(found.values())
    while frontier:
        new = []
        current = list(found.values())
        for A in frontier:
            for B in current:
                sa, sb = A.element_set(), B.element_set()
                if sa <= sb or sb <= sa:
                    continue
                J = _join(G.degree, A, B)
                if J.element_set() not in found:
                    found[J.element_set()] = J
                    new.append(J)
        frontier = new
    out = sorted(found.values(), key=lambda N: (len(N.elements()), sorted(N.elements())))
    G.cache["normal"] = out
    return out


def quotient(G: PermGroup, N: PermGroup) -> PermGroup:
    """G/N acting on the right cosets Nx by right multiplication.

    For trivial N the group itself is returned (it is its own faithful
    quotient), avoiding a regular representation of degree |G|.
    """
    if not N.is_normal_in(G):
        raise AnalysisError("quotient by a subgroup that is not normal")
    n = len(N.elements())
    if n == 1:
        return PermGroup(G.generators, name=G.name)
    index = G.order() // n
    if index > permgroup.ENUMERATION_CAP:
        raise TooLargeError(f"quotient of index {index} exceeds the cap")
    els = G.elements()
    Nels = N.elements()
    coset_of: dict[Permutation, int] = {}
    reps = []
    for x in els:
        if x in coset_of:
            continue
        c = len(reps)
        reps.append(x)
        for h in Nels:
            coset_of[h * x] = c
    gens = [Permutation([coset_of[r * g] + 1 for r in reps]) for g in G.generators]
    return PermGroup(gens, degree=index)


def derived_subgroup(G: PermGroup) -> PermGroup:
    cached = G.cache.get("derived")
    if cached is not None:
        return cached
    gens = G.generators
    comms = [a.inverse() * b.inverse() * a * b for a in gens for b in gens]
    D = generated_subgroup(comms, G.degree)
    changed = True
    while changed:
        changed = False
        Dset = D.element_set()
        for h in D.generators:
            for g in gens:
                y = h.conj(g)
                if y not in Dset:
                    D = generated_subgroup(list(D.generators) + [y], G.degree)
                    changed = True
                    break
            if changed:
                break
    G.cache["derived"] = D
    return D


def is_solvable(G: PermGroup) -> bool:
    H = G
    while True:
        D = derived_subgroup(H)
        if len(D.elements()) == 1:
            return True
        if len(D.elements()) == len(H.elements()):
            return False
        H = D


# -- isomorphism ---------------------------------------------------------------

def fingerprint(G: PermGroup) -> tuple:
    classes = conjugacy_classes(G)
    return (
        G.order(),
        tuple(sorted((c.size, c.rep_order) for c in classes)),
        len(center(G).elements()),
        len(derived_subgroup(G).elements()),
    )


def _generating_set(G: PermGroup) -> list[Permutation]:
    d = _data(G)
    order_idx = sorted(range(len(d.elements)),
                       key=lambda i: (-d.element_order(i), d.elements[i]))
    H = [d.elements[0]]
    Hset = set(H)
    gens: list[Permutation] = []
    for i in order_idx:
        x = d.elements[i]
        if x not in Hset:
            H = _extend(H, gens, x)
            Hset = set(H)
            gens.append(x)
            if len(H) == d.order:
                break
    return gens


def _extend_map(gens_G, imgs_H, identity_G, identity_H):
    """Map <gens_G> -> H by gens_G[i] -> imgs_H[i]; None if ill-defined."""
    phi = {identity_G: identity_H}
    queue = [identity_G]
    for x in queue:
        fx = phi[x]
        for g, h in zip(gens_G, imgs_H):
            y = x * g
            img = fx * h
            prev = phi.get(y)
            if prev is None:
                phi[y] = img
                queue.append(y)
            elif prev != img:
                return None
    return phi


def find_isomorphism(G: PermGroup, H: PermGroup) -> dict | None:
    for X in (G, H):
        if X.order() > ISOMORPHISM_CAP:
            raise TooLargeError(f"order {X.order()} exceeds the isomorphism cap {ISOMORPHISM_CAP}")
    if fingerprint(G) != fingerprint(H):
        return None
    dG, dH = _data(G), _data(H)
    gens = _generating_set(G)
    buckets = defaultdict(list)
    for i, y in enumerate(dH.elements):
        c = dH.classes[dH.class_of[i]]
        buckets[(c.rep_order, c.size)].append(y)
    cands = []
    for g in gens:
        c = dG.classes[dG.class_of[dG.index[g]]]
        cands.append(buckets[(c.rep_order, c.size)])
    idG, idH = dG.elements[0], dH.elements[0]
    n = G.order()

    def search(k, imgs):
        if k == len(gens):
            phi = _extend_map(gens, imgs, idG, idH)
            if phi is not None and len(phi) == n and len(set(phi.values())) == n:
                return phi
            return None
        for y in cands[k]:
            trial = imgs + [y]
            if _extend_map(gens[:k + 1], trial, idG, idH) is None:
                continue
            res = search(k + 1, trial)
            if res is not None:
                return res
        return None

    return search(0, [])


def are_isomorphic(G: PermGroup, H: PermGroup) -> bool:
    return find_isomorphism(G, H) is not None


# -- reports -----------------------------------------------------------------

@dataclass
class GroupReport:
    label: str
    order: int
    center_order: int
    is_abelian: bool
    is_nilpotent: bool
    class_count: int
    class_stats: list[tuple[int, int]] = field(default_factory=list)
    order_spectrum: list[int] = field(default_factory=list)
    is_rational: bool = False
    is_oc: bool = False
    odd_order_conjugate: bool = False
    all_order_conjugate: bool = False

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "center_order": self.center_order,
            "nilpotent": self.is_nilpotent,
            "abelian": self.is_abelian,
            "class_sizes": [list(t) for t in self.class_stats],
            "order_spectrum": list(self.order_spectrum),
            "rational": self.is_rational,
            "oc": self.is_oc,
            "odd_order_conjugate": self.odd_order_conjugate,
            "all_order_conjugate": self.all_order_conjugate,
        }


def group_report(G: PermGroup, label: str | None = None) -> GroupReport:
    classes = conjugacy_classes(G)
    return GroupReport(
        label=label or G.name or "G",
        order=G.order(),
        center_order=len(center(G).elements()),
        is_abelian=G.is_abelian(),
        is_nilpotent=is_nilpotent(G),
        class_count=len(classes),
        class_stats=[(c.size, c.rep_order) for c in classes],
        order_spectrum=sorted(order_spectrum(G)),
        is_rational=is_rational_group(G),
        is_oc=is_oc_group(G),
        odd_order_conjugate=odd_order_conjugacy(G),
        all_order_conjugate=all_order_conjugacy(G),
    )
