"""Explicit permutation representations of the groups used by the campaigns."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .fields import Matrix, ProjectivePlane, field, nonzero_vectors
from .perm import Permutation
from .permgroup import PermGroup


class ConstructionError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _log2_exact(n: int) -> int | None:
    if n < 1 or n & (n - 1):
        return None
    return n.bit_length() - 1


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ConstructionError("symmetric(n) needs n >= 1")
    if n == 1:
        return PermGroup([], degree=1, name="S1")
    gens = [Permutation.from_cycles([range(1, n + 1)], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([(1, 2)], n))
    return PermGroup(gens, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ConstructionError("alternating(n) needs n >= 1")
    gens = [Permutation.from_cycles([(1, 2, i)], n) for i in range(3, n + 1)]
    return PermGroup(gens, degree=n, name=f"A{n}")


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ConstructionError("cyclic(n) needs n >= 1")
    if n == 1:
        return PermGroup([], degree=1, name="C1")
    return PermGroup([Permutation.from_cycles([range(1, n + 1)], n)], name=f"C{n}")


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n."""
    if n < 1:
        raise ConstructionError("dihedral(n) needs n >= 1")
    if n == 1:
        return PermGroup([Permutation([2, 1])], name="D2")
    if n == 2:
        return PermGroup([Permutation([2, 1, 4, 3]), Permutation([3, 4, 1, 2])], name="D4")
    rot = Permutation.from_cycles([range(1, n + 1)], n)
    ref = Permutation([1] + list(range(n, 1, -1)))
    return PermGroup([rot, ref], name=f"D{2 * n}")


def elementary_abelian(p: int, k: int) -> PermGroup:
    if not _is_prime(p) or k < 1:
        raise ConstructionError(f"elementary_abelian needs p prime and k >= 1, got {p}, {k}")
    n = p * k
    gens = [Permutation.from_cycles([range(i * p + 1, (i + 1) * p + 1)], n) for i in range(k)]
    return PermGroup(gens, name=f"E{p}^{k}")


def _metacyclic_regular(m: int, t: int, c: int, name: str) -> PermGroup:
    # elements r^i s^j, 0 <= i < m, j in {0,1}; s r = r^t s, s^2 = r^c
    def mul(x, y):
        (i, j), (k, l) = x, y
        e = i + (k * t if j else k)
        if j and l:
            e += c
            return (e % m, 0)
        return (e % m, (j + l) % 2)

    els = [(i, j) for j in (0, 1) for i in range(m)]
    index = {x: n + 1 for n, x in enumerate(els)}

    def right_regular(g):
        return Permutation([index[mul(x, g)] for x in els])

    r, s = right_regular((1, 0)), right_regular((0, 1))
    return PermGroup([r, s], name=name)


def generalized_quaternion(order: int) -> PermGroup:
    k = _log2_exact(order)
    if k is None or k < 3:
        raise ConstructionError(f"generalized quaternion order must be 2^k with k >= 3, got {order}")
    m = order // 2
    return _metacyclic_regular(m, -1, m // 2, f"Q{order}")


def semidihedral(order: int) -> PermGroup:
    k = _log2_exact(order)
    if k is None or k < 4:
        # SD_8 would coincide with D8; the family starts at 16
        raise ConstructionError(f"semidihedral order must be 2^k with k >= 4, got {order}")
    m = order // 2
    G = _metacyclic_regular(m, m // 2 - 1, 0, f"SD{order}")
    r, s = G.generators
    assert (r ** m).is_identity() and (s * s).is_identity()
    assert s * r * s == r ** (m // 2 - 1)
    return G


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    n, m = G.degree, H.degree
    gens = [Permutation(list(g.images) + list(range(n + 1, n + m + 1))) for g in G.generators]
    gens += [Permutation(list(range(1, n + 1)) + [x + n for x in h.images])
             for h in H.generators]
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return PermGroup(gens, name=name)


def _prune(gens, degree):
    """Drop generators already in the span of the earlier ones."""
    kept: list[Permutation] = []
    for g in gens:
        if g.is_identity():
            continue
        if not kept or not PermGroup(kept).contains(g):
            kept.append(g)
    return kept or [Permutation.identity(degree)]


def _two_generators(G: PermGroup, pool_size: int = 300) -> PermGroup:
    """Replace G's generators by a deterministic generating pair when one is
    found among short words; class computations scale with generator count."""
    target = G.order()
    pool = [G.identity()]
    seen = set(pool)
    for x in pool:
        for g in G.generators:
            y = x * g
            if y not in seen:
                seen.add(y)
                pool.append(y)
        if len(pool) >= pool_size:
            break
    pool = pool[1:]
    for x in sorted(pool, key=lambda p: (-p.order(), p)):
        for y in pool:
            if PermGroup([x, y]).order() == target:
                return PermGroup([x, y], name=G.name)
    return G


def matrix_to_perm(A: Matrix, vectors: list[tuple]) -> Permutation:
    index = {v: i + 1 for i, v in enumerate(vectors)}
    return Permutation([index[A.act(v)] for v in vectors])


def _linear_group(q, mats, name):
    vectors = nonzero_vectors(q, 2)
    return PermGroup(_prune([matrix_to_perm(A, vectors) for A in mats], len(vectors)), name=name)


def gl23() -> PermGroup:
    q = 3
    mats = [Matrix.of(q, [[1, 1], [0, 1]]), Matrix.of(q, [[1, 0], [1, 1]]),
            Matrix.of(q, [[-1, 0], [0, 1]])]
    G = _linear_group(q, mats, "GL(2,3)")
    if G.order() != 48:
        raise ConstructionError(f"GL(2,3) has order {G.order()}")
    return G


def sl25() -> PermGroup:
    q = 5
    mats = [Matrix.of(q, [[1, 1], [0, 1]]), Matrix.of(q, [[1, 0], [1, 1]])]
    G = _linear_group(q, mats, "SL(2,5)")
    if G.order() != 120:
        raise ConstructionError(f"SL(2,5) has order {G.order()}")
    return G


Q8_MATRICES = ([[0, -1], [1, 0]], [[1, 1], [1, -1]])


def w_points() -> list[tuple]:
    return list(itertools.product(range(3), repeat=2))


def _affine_perm(A: Matrix, t: tuple, pts) -> Permutation:
    index = {v: i + 1 for i, v in enumerate(pts)}
    return Permutation([index[tuple((x + y) % 3 for x, y in zip(A.act(v), t))] for v in pts])


def frobenius_parts() -> tuple[PermGroup, PermGroup, PermGroup]:
    """(W, translation kernel, Q8 complement) acting on GF(3)^2, degree 9."""
    a, b = (Matrix.of(3, m) for m in Q8_MATRICES)
    one = Matrix.identity(3, 2)
    minus = Matrix.of(3, [[-1, 0], [0, -1]])
    if not (a ** 4 == one and a ** 2 == minus and b ** 2 == minus and a * b * a == b):
        raise ConstructionError("complement matrices do not satisfy the Q8 relations")
    pts = w_points()
    zero = (0, 0)
    kernel = PermGroup([_affine_perm(one, (1, 0), pts), _affine_perm(one, (0, 1), pts)],
                       name="E3^2")
    complement = PermGroup([_affine_perm(a, zero, pts), _affine_perm(b, zero, pts)], name="Q8")
    W = PermGroup(list(kernel.generators) + list(complement.generators), name="W")
    if W.order() != 72:
        raise ConstructionError(f"W has order {W.order()}")
    return W, kernel, complement


def frobenius_W() -> PermGroup:
    return frobenius_parts()[0]


def _sl34_matrices():
    mats = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            for lam in (1, 2):
                rows = [[int(r == c) for c in range(3)] for r in range(3)]
                rows[i][j] = lam
                mats.append(Matrix.of(4, rows))
    return mats


@lru_cache(maxsize=None)
def pg24() -> ProjectivePlane:
    return ProjectivePlane(4)


def _point_perm(A, plane):
    return Permutation([plane.point_image(A, i) + 1 for i in range(len(plane.points))])


def _point_line_perm(A, plane):
    npts = len(plane.points)
    images = [plane.point_image(A, i) + 1 for i in range(npts)]
    images += [npts + plane.line_image(A, j) + 1 for j in range(len(plane.lines))]
    return Permutation(images)


def psl_3_4() -> PermGroup:
    plane = pg24()
    mats = _sl34_matrices()
    for A in mats:
        assert A.det() == 1
    G = PermGroup(_prune([_point_perm(A, plane) for A in mats], 21), name="L3(4)")
    if G.order() != 20160:
        raise ConstructionError(f"PSL(3,4) has order {G.order()}")
    return _two_generators(G)


def psl_3_4_point_line() -> PermGroup:
    """PSL(3,4) acting on the 21 points followed by the 21 lines (degree 42)."""
    plane = pg24()
    gens = _prune([_point_line_perm(A, plane) for A in _sl34_matrices()], 42)
    return PermGroup(gens, name="L3(4) on points+lines")


def unitary_polarity() -> Permutation:
    """Point [v] -> line with coordinates conj(v); line [a] -> point conj(a).

    conj is the Frobenius x -> x^2 of GF(4), so point v lies on the image of
    point w iff sum(conj(w_i) v_i) == 0: the Hermitian form.
    """
    plane = pg24()
    F = field(4)
    npts = len(plane.points)
    images = []
    for v in plane.points:
        images.append(npts + plane.line_index[tuple(F.frobenius(x) for x in v)] + 1)
    for a in plane.lines:
        images.append(plane.point_index[tuple(F.frobenius(x) for x in a)] + 1)
    return Permutation(images)


def l3_4_beta() -> PermGroup:
    N = psl_3_4_point_line()
    beta = unitary_polarity()
    if not all(N.contains(g.conj(beta)) for g in N.generators):
        raise ConstructionError("polarity does not normalize PSL(3,4)")
    if not N.contains(beta * beta):
        raise ConstructionError("beta^2 is not in PSL(3,4)")
    G = PermGroup(list(N.generators) + [beta], name="L3(4).<beta>")
    if N.order() != 20160 or G.order() != 40320:
        raise ConstructionError(f"unexpected orders {N.order()}, {G.order()}")
    if not N.is_normal_in(G):
        raise ConstructionError("PSL(3,4) is not normal in the extension")
    return _two_generators(G)


_FIXED = {
    "s3": lambda: symmetric(3),
    "s5": lambda: symmetric(5),
    "a5": lambda: alternating(5),
    "a6": lambda: alternating(6),
    "q8": lambda: generalized_quaternion(8),
    "sd16": lambda: semidihedral(16),
    "gl23": gl23,
    "sl25": sl25,
    "w": frobenius_W,
    "l34": psl_3_4,
    "l34b": l3_4_beta,
}

_PARAM = {
    "sym": (symmetric, 1),
    "alt": (alternating, 1),
    "cyc": (cyclic, 1),
    "dih": (dihedral, 1),
    "ea": (elementary_abelian, 2),
    "genq": (generalized_quaternion, 1),
    "sd": (semidihedral, 1),
}

BUILTIN_NAMES = tuple(_FIXED) + tuple(f"{k}:<n>" for k in _PARAM)


def builtin(name: str) -> PermGroup:
    """Resolve ``s5``, ``l34b``, ``sym:4``, ``ea:3:2`` ... to a group."""
    key = name.strip().lower()
    if key in _FIXED:
        G = _FIXED[key]()
        G.name = G.name or key
        return G
    head, _, rest = key.partition(":")
    if head in _PARAM and rest:
        fn, nargs = _PARAM[head]
        try:
            args = [int(x) for x in rest.split(":")]
        except ValueError:
            raise ConstructionError(f"bad parameters in builtin {name!r}") from None
        if len(args) != nargs:
            raise ConstructionError(f"builtin {head} takes {nargs} parameter(s)")
        return fn(*args)
    raise ConstructionError(f"unknown builtin group {name!r}")
