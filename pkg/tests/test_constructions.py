import pytest

from ocgroups import analysis as an
from ocgroups import constructions as cons
from ocgroups.constructions import ConstructionError, builtin


def psl_order(n, q):
    """|PSL(n,q)| from the standard formula, computed independently."""
    from math import gcd, prod
    return q ** (n * (n - 1) // 2) * prod(q ** i - 1 for i in range(2, n + 1)) // gcd(n, q - 1)


@pytest.mark.parametrize("G,order,degree", [
    (cons.symmetric(3), 6, 3),
    (cons.alternating(5), 60, 5),
    (cons.cyclic(7), 7, 7),
    (cons.dihedral(5), 10, 5),
    (cons.elementary_abelian(3, 2), 9, 6),
])
def test_basic_families(G, order, degree):
    assert G.order() == order and G.degree == degree


def test_elementary_abelian_exponent():
    assert an.exponent(cons.elementary_abelian(3, 2)) == 3


def test_generalized_quaternion():
    for order in (8, 16, 32):
        G = cons.generalized_quaternion(order)
        assert G.order() == order and G.degree == order
        assert sum(1 for g in G.elements() if g.order() == 2) == 1
    assert an.exponent(cons.generalized_quaternion(16)) == 8


def test_semidihedral_16():
    G = cons.semidihedral(16)
    assert G.order() == 16 and an.exponent(G) == 8
    # elements of order 2 in SD16: 1 central + 4 reflections
    assert sum(1 for g in G.elements() if g.order() == 2) == 5


@pytest.mark.parametrize("fn,bad", [(cons.generalized_quaternion, 4),
                                    (cons.generalized_quaternion, 12),
                                    (cons.semidihedral, 8),
                                    (cons.symmetric, 0),
                                    (cons.elementary_abelian, (4, 2))])
def test_bad_parameters(fn, bad):
    with pytest.raises(ConstructionError):
        fn(*bad) if isinstance(bad, tuple) else fn(bad)


def test_direct_products():
    c6 = cons.direct_product(cons.cyclic(2), cons.cyclic(3))
    assert c6.order() == 6 and c6.is_abelian() and c6.degree == 5
    assert cons.direct_product(cons.symmetric(3), cons.cyclic(2)).order() == 12
    q8c3 = cons.direct_product(cons.generalized_quaternion(8), cons.cyclic(3))
    assert q8c3.order() == 24 and an.is_nilpotent(q8c3)


def test_gl23_and_sl25():
    gl = cons.gl23()
    assert gl.order() == (3 ** 2 - 1) * (3 ** 2 - 3) == 48 and gl.degree == 8
    sl = cons.sl25()
    assert sl.order() == 120 and sl.degree == 24
    assert sum(1 for g in sl.elements() if g.order() == 2) == 1


def test_gl23_sylow_is_semidihedral():
    assert an.are_isomorphic(an.sylow_subgroup(cons.gl23(), 2), cons.semidihedral(16))


def test_frobenius_w():
    W, K, H = cons.frobenius_parts()
    assert W.order() == 72 and W.degree == 9
    assert K.order() == 9 and H.order() == 8
    assert an.p_core(W, 3).element_set() == K.element_set()
    zero = cons.w_points().index((0, 0)) + 1
    for h in H.elements():
        if not h.is_identity():
            assert h.fixed_points() == [zero]
    assert an.is_rational_group(W)


def test_psl34(l34):
    assert l34.degree == 21
    assert l34.order() == psl_order(3, 4) == 20160
    assert an.order_spectrum(l34) == {1, 2, 3, 4, 5, 7}


def test_psl34_is_simple(l34):
    assert [N.order() for N in an.normal_subgroups(l34)] == [1, 20160]


def test_unitary_polarity():
    beta = cons.unitary_polarity()
    assert beta.degree == 42 and beta.order() == 2
    # swaps points and lines
    assert all(beta(i) > 21 for i in range(1, 22))
    # preserves incidence: p on l iff beta(l) on beta(p)
    plane = cons.pg24()
    for p in range(21):
        for l in range(21):
            bp = beta(p + 1) - 22
            bl = beta(22 + l) - 1
            assert plane.incident(p, l) == plane.incident(bl, bp)


def test_l34_beta(l34b):
    N = cons.psl_3_4_point_line()
    assert l34b.degree == 42 and l34b.order() == 40320
    assert N.order() == 20160 and N.is_normal_in(l34b)
    beta = cons.unitary_polarity()
    assert N.contains(beta * beta)
    assert all(N.contains(g.conj(beta)) for g in N.generators)
    assert an.is_rational_group(l34b) and an.odd_order_conjugacy(l34b)


def test_l34_beta_order_four_classes(l34b):
    """Class count for order-4 elements, reported as a known discrepancy.

    The extension by the unitary polarity keeps the three order-4 classes
    of L3(4) apart and adds one class of outer elements of order 4.
    """
    N = cons.psl_3_4_point_line()
    fours = [c for c in an.conjugacy_classes(l34b) if c.rep_order == 4]
    inner = [c for c in fours if N.contains(c.representative)]
    assert len(inner) == 3
    assert len(fours) == 4


def test_other_extensions_fail_the_predicates():
    """The field and graph extensions of L3(4) are not both rational and odd-order conjugate."""
    plane = cons.pg24()
    from ocgroups.fields import field
    from ocgroups.perm import Permutation
    from ocgroups.permgroup import PermGroup
    F = field(4)
    N = cons.psl_3_4_point_line()
    # field automorphism: Frobenius on point and line coordinates
    frob = Permutation([plane.point_index[tuple(F.frobenius(x) for x in v)] + 1 for v in plane.points]
                       + [22 + plane.line_index[tuple(F.frobenius(x) for x in a)] for a in plane.lines])
    # graph automorphism: point v <-> line v (standard polarity)
    graph = Permutation([22 + plane.line_index[v] for v in plane.points]
                        + [plane.point_index[a] + 1 for a in plane.lines])
    for extra in (frob, graph):
        G = cons._two_generators(PermGroup(list(N.generators) + [extra]))
        assert G.order() == 40320
        assert not (an.is_rational_group(G) and an.odd_order_conjugacy(G))


@pytest.mark.parametrize("name,order", [
    ("s3", 6), ("s5", 120), ("a5", 60), ("a6", 360), ("q8", 8), ("sd16", 16),
    ("gl23", 48), ("sl25", 120), ("w", 72), ("sym:4", 24), ("alt:4", 12), ("cyc:5", 5),
    ("dih:4", 8), ("ea:2:3", 8), ("genq:16", 16), ("sd:32", 32),
])
def test_builtins(name, order):
    G = builtin(name)
    assert G.order() == order == len(G.elements())


@pytest.mark.parametrize("name", ["nope", "sym", "sym:x", "ea:2"])
def test_unknown_builtins(name):
    with pytest.raises(ConstructionError):
        builtin(name)
