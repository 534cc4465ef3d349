import itertools

import pytest

from ocgroups import constructions as cons
from ocgroups.fields import GF, Matrix, ProjectivePlane, field, nonzero_vectors


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_field_axioms(q):
    assert field(q).check_axioms()


def test_unsupported_field():
    with pytest.raises(ValueError):
        GF(7)


def test_gf4_frobenius_is_order_two_automorphism():
    F = field(4)
    w = 2
    assert F.mul(w, w) == F.add(w, 1)
    frob = [F.frobenius(x) for x in range(4)]
    assert sorted(frob) == [0, 1, 2, 3] and frob != [0, 1, 2, 3]
    assert all(F.frobenius(F.frobenius(x)) == x for x in range(4))
    for a, b in itertools.product(range(4), repeat=2):
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))


def test_pg24_incidence():
    P = ProjectivePlane(4)
    assert len(P.points) == 21 and len(P.lines) == 21
    assert all(len(pts) == 5 for pts in P.line_points)
    for i in range(21):
        assert sum(P.incident(i, j) for j in range(21)) == 5
    for a, b in itertools.combinations(range(21), 2):
        assert sum(1 for pts in P.line_points if a in pts and b in pts) == 1


@pytest.mark.parametrize("q,mats", [
    (3, [[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[-1, 0], [0, 1]]]),
    (5, [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]),
])
def test_matrix_to_perm_is_homomorphism(q, mats):
    vecs = nonzero_vectors(q, 2)
    ms = [Matrix.of(q, m) for m in mats]
    for A, B in itertools.product(ms, repeat=2):
        assert A.det() != 0
        assert cons.matrix_to_perm(A * B, vecs) == cons.matrix_to_perm(A, vecs) * cons.matrix_to_perm(B, vecs)


def test_sl34_generators_act_as_homomorphism_on_points_and_lines():
    plane = cons.pg24()
    mats = cons._sl34_matrices()
    for A, B in itertools.product(mats[:5], repeat=2):
        assert cons._point_line_perm(A * B, plane) == (
            cons._point_line_perm(A, plane) * cons._point_line_perm(B, plane))
