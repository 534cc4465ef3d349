import random

import pytest

from ocgroups import permgroup
from ocgroups.constructions import alternating, cyclic, symmetric
from ocgroups.perm import Permutation, PermutationError
from ocgroups.permgroup import PermGroup, TooLargeError, build_bsgs, closure


def test_s4_order_from_two_generators():
    gens = [Permutation.from_cycles([(1, 2, 3, 4)], 4), Permutation.from_cycles([(1, 2)], 4)]
    assert build_bsgs(gens).order() == 24


def test_seven_cycle():
    assert PermGroup([Permutation.from_cycles([(1, 2, 3, 4, 5, 6, 7)], 7)]).order() == 7


def test_trivial_group():
    G = PermGroup([Permutation.identity(3)])
    assert G.order() == 1
    assert G.elements() == [Permutation.identity(3)]


def test_membership():
    A4 = alternating(4)
    assert symmetric(4).contains(Permutation.from_cycles([(1, 2)], 4))
    assert not A4.contains(Permutation.from_cycles([(1, 2)], 4))
    assert A4.contains(Permutation.from_cycles([(1, 2), (3, 4)], 4))
    with pytest.raises(PermutationError):
        A4.contains(Permutation.identity(5))


def test_strong_generators_sift_to_identity():
    G = symmetric(6)
    for g in G.bsgs.strong_generators:
        h, level = G.bsgs.sift(g)
        assert h.is_identity() and level == len(G.bsgs.base)


def test_elements_unique_and_identity_first():
    for G in (symmetric(3), cyclic(8), symmetric(5)):
        els = G.elements()
        assert els[0].is_identity()
        assert len(els) == len(set(els)) == G.order()


def test_random_subgroups_of_s8_match_closure():
    rng = random.Random(8)
    for _ in range(20):
        gens = []
        for _ in range(rng.randint(1, 3)):
            images = list(range(1, 9))
            rng.shuffle(images)
            gens.append(Permutation(images))
        brute = closure(gens, 8)
        G = PermGroup(gens)
        assert G.order() == len(brute)
        assert set(G.elements()) == set(brute)
        for g in rng.sample(brute, min(5, len(brute))):
            assert G.contains(g)


def test_enumeration_cap():
    old = permgroup.ENUMERATION_CAP
    try:
        permgroup.set_enumeration_cap(100)
        with pytest.raises(TooLargeError):
            symmetric(5).elements()
        assert len(symmetric(4).elements()) == 24
    finally:
        permgroup.set_enumeration_cap(old)


def test_generators_must_share_degree():
    with pytest.raises(PermutationError):
        PermGroup([Permutation([2, 1]), Permutation([2, 1, 3])])


def test_large_group_elements(l34b):
    els = l34b.elements()
    assert len(els) == l34b.order() == 40320
