from hypothesis import given
from hypothesis import strategies as st

from ocgroups import lemma24 as L


def literal_oracle(q_max=1000, r_max=20, a_max=200):
    """Search for an exponent a directly instead of using odd parts."""
    out = set()
    for q in L.primes_up_to(q_max):
        for r in range(2, r_max + 1):
            n = q ** r - 1
            if n.bit_length() > a_max + 9:
                continue
            if any((2 ** a * 315) % n == 0 for a in range(a_max)):
                out.add((q, r))
    return out


def test_odd_part():
    assert L.odd_part(1) == 1
    assert L.odd_part(48) == 3
    assert L.odd_part(127 ** 2 - 1) == 63


def test_pairs_match_literal_search():
    got = {(p.q, p.r) for p in L.admissible_pairs(1000, 20)}
    assert got == literal_oracle()
    assert len(got) == 17


def test_published_table():
    ok, table = L.verify()
    assert ok and table == L.EXPECTED
    assert table[2] == (2, 3, 4, 6) and table[3] == (2, 4)
    assert sorted(table) == [2, 3, 5, 7, 11, 13, 17, 19, 29, 31, 41, 71, 127]


def test_excludes_23():
    assert not L.is_admissible(23, 2)
    assert L.odd_part(23 ** 2 - 1) == 33


def test_every_pair_divides_literally():
    assert all(L.literal_divides(p) for p in L.admissible_pairs())


def test_completeness_certificate():
    cert = L.completeness_bound()
    assert cert.bound == 631
    assert cert.holds, {k: v for k, v in cert.checks.items() if not v}


@given(st.integers(2, 300), st.integers(2, 12), st.integers(0, 200), st.integers(0, 6))
def test_monotone_in_bounds(q, r, dq, dr):
    small = L.admissible_pairs(q, r)
    big = L.admissible_pairs(q + dq, r + dr)
    assert small <= big
