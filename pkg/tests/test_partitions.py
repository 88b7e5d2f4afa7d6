from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspfdeg import partitions as P


def test_partition_parsing_and_conjugate():
    assert P.partition("1,3,2") == (3, 2, 1)
    assert P.partition("") == ()
    assert P.conjugate((4, 3, 1)) == (3, 2, 2, 1)
    with pytest.raises(ValueError):
        P.partition([2, 0])


def test_partition_counts():
    assert [len(P.all_partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_distinguished_enumeration():
    assert P.enumerate_distinguished(F(1, 2), 3) == [(4, 2), (6,)]
    assert P.enumerate_distinguished(1, 1) == [(3,)]
    assert P.enumerate_distinguished(0, 2) == [(3, 1)]
    assert P.enumerate_distinguished(3, 0) == [(5, 3, 1)]
    assert P.enumerate_distinguished(F(3, 2), 0) == [(2,)]
    assert P.distinguished_rank(1, (5, 3, 1)) == 4


def test_htilde_values():
    h = P.htilde(1, (3,))
    assert h.to_dict() == {-1: 1, 1: 1}
    h = P.htilde(0, (3, 1))
    assert h.to_dict() == {-1: 1, 0: 2, 1: 1}
    assert P.htilde_rank(h) == 2
    h = P.htilde(F(1, 2), (4, 2))
    assert h.to_dict() == {F(-3, 2): 1, F(-1, 2): 2, F(1, 2): 2, F(3, 2): 1}


def test_htilde_rank_matches_distinguished_rank():
    for delta in (0, F(1, 2), 1):
        for n in range(9):
            for lam in P.enumerate_distinguished(delta, n):
                assert P.htilde_rank(P.htilde(delta, lam)) == n


def test_mtableau():
    t = P.MTableau(F(5, 4), (1, 1))
    assert t.grid() == [[F(5, 4)], [F(1, 4)]]
    assert t.corners() == (F(5, 4), F(1, 4), F(1, 4), F(1, 4))
    grid, contents, hp, hm = P.mtableau_contents(F(1, 4), (2,))
    assert contents == hp and hm[F(-5, 4)] == 1
    assert "1/4" in t.render()


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 9), max_size=8))
def test_conjugation_is_an_involution(parts):
    lam = P.partition(parts)
    assert P.conjugate(P.conjugate(lam)) == lam
    assert sum(P.conjugate(lam)) == sum(lam)


@settings(max_examples=100, deadline=None)
@given(st.sets(st.integers(0, 15), max_size=7))
def test_jumps_round_trip(js):
    lam = P.from_jumps(sorted(js, reverse=True))
    assert sorted(P.jumps(lam), reverse=True) == sorted(js, reverse=True)
