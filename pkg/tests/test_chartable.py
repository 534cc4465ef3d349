import pytest

from ocgroups import analysis as an
from ocgroups import constructions as cons
from ocgroups.chartable import (CharacterTableError, class_constants, dixon_character_table,
                                dixon_prime, rationality_counts)
from ocgroups.permgroup import TooLargeError

GROUPS = {
    "C1": cons.cyclic(1), "C2": cons.cyclic(2), "C3": cons.cyclic(3), "S3": cons.symmetric(3),
    "Q8": cons.generalized_quaternion(8), "D8": cons.dihedral(4), "A5": cons.alternating(5),
    "S5": cons.symmetric(5), "GL23": cons.gl23(), "SL25": cons.sl25(), "W": cons.frobenius_W(),
    "SD16": cons.semidihedral(16), "C2^4": cons.elementary_abelian(2, 4),
}


def test_dixon_prime():
    p = dixon_prime(120, 60)
    assert p % 60 == 1 and p * p > 4 * 120
    assert dixon_prime(16, 2, classes=16) > 16
    with pytest.raises(CharacterTableError):
        dixon_prime(10 ** 6, 10 ** 6, bound=10)


def test_class_constants_small():
    assert class_constants(cons.cyclic(1)) == [[[1]]]
    a = class_constants(cons.cyclic(2))
    assert a[1][1][0] == 1 and a[1][1][1] == 0


def test_class_constants_counting_identity():
    for G in (cons.symmetric(3), cons.gl23()):
        classes = an.conjugacy_classes(G)
        a = class_constants(G)
        r = len(classes)
        for i in range(r):
            for j in range(r):
                assert sum(a[i][j][k] * classes[k].size for k in range(r)) == \
                    classes[i].size * classes[j].size


def test_class_constants_independent_of_representative():
    G = cons.symmetric(4)
    alt = [an.class_members(G, k)[-1] for k in range(len(an.conjugacy_classes(G)))]
    assert class_constants(G, reps=alt) == class_constants(G)


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_table_is_valid(name):
    G = GROUPS[name]
    T = dixon_character_table(G)
    assert len(T.rows) == len(T.classes)
    assert sum(d * d for d in T.degrees) == G.order()
    assert all(G.order() % d == 0 for d in T.degrees)
    assert T.row_orthogonality() and T.column_orthogonality()
    chars, classes = rationality_counts(T, G)
    assert chars == classes
    assert an.is_rational_group(G) == all(T.rational_rows())


def test_known_tables():
    assert dixon_character_table(cons.symmetric(3)).degrees == [1, 1, 2]
    T = dixon_character_table(cons.cyclic(1))
    assert T.degrees == [1] and T.rows[0][0] == 1
    q8 = dixon_character_table(GROUPS["Q8"])
    assert q8.degrees == [1, 1, 1, 1, 2] and all(q8.rational_rows())
    assert rationality_counts(dixon_character_table(GROUPS["S3"]), GROUPS["S3"]) == (3, 3)
    assert rationality_counts(dixon_character_table(GROUPS["C3"]), GROUPS["C3"]) == (1, 1)
    c, k = rationality_counts(dixon_character_table(GROUPS["A5"]), GROUPS["A5"])
    assert c == k < 5
    assert dixon_character_table(GROUPS["A5"]).degrees == [1, 3, 3, 4, 5]


def test_s5_values_on_transpositions():
    G = GROUPS["S5"]
    T = dixon_character_table(G)
    k = next(i for i, c in enumerate(T.classes) if c.representative.cycle_type()[:2] == (2, 1))
    vals = sorted(row[k].rational_value() for row in T.rows)
    assert vals == [-2, -1, -1, 0, 1, 1, 2]


def test_text_and_dict_outputs():
    T = dixon_character_table(GROUPS["S3"])
    text = T.format_text()
    assert text.splitlines()[0].startswith("order")
    d = T.to_dict()
    assert [c["degree"] for c in d["characters"]] == [1, 1, 2]


def test_cap(l34):
    with pytest.raises(TooLargeError):
        dixon_character_table(l34)
