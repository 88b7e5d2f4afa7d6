import random
from fractions import Fraction as F

import pytest

from cuspfdeg import hecke as H
from cuspfdeg import partitions as P
from cuspfdeg.qseries import FactorLedger, MultiplicityFn, ledger_analyze

HALF = F(1, 2)


def test_classification():
    assert H.classify_params(HALF, 0) == ('I', 2)
    assert H.classify_params(HALF, HALF) == ('II', 1)
    assert H.classify_params(0, 1) == ('III', 1)
    assert H.classify_params(1, 1) == ('IV', 1)
    assert H.classify_params(F(1, 4), F(5, 4)) == ('V', 2)
    assert H.classify_params(F(1, 4), F(1, 4)) == ('VI', 2)
    with pytest.raises(ValueError):
        H.classify_params(HALF, F(1, 4))
    with pytest.raises(ValueError):
        H.HeckeParams(0, 1, 0, base=2)


def test_coordinates_of_small_points():
    assert H.coordinates(H.HeckeParams(0, 1, 1), (), (3,)).coords == ((1, 2),)
    assert H.coordinates(H.HeckeParams(HALF, HALF, 1), (), (2,)).coords == ((1, 1),)
    assert H.coordinates(H.HeckeParams(F(1, 4), F(5, 4), 2), (), (1, 1)).coords == ((1, 1), (1, 5))


def test_check_residual():
    p = H.HeckeParams(0, 1, 1)
    assert H.check_residual(p, ((1, 2),)) == (0, 1, True)
    assert H.check_residual(p, ((1, 4),)) == (0, 0, False)
    assert H.check_residual(H.HeckeParams(0, 1, 0), ()) == (0, 0, True)


def test_residue_examples():
    _, even, odd = H.residue_parts(H.HeckeParams(0, 1, 1), (), (3,))
    assert even.to_dict() == {1: -1} and odd.is_zero()
    _, even, _ = H.residue_parts(H.HeckeParams(HALF, HALF, 1), (), (2,))
    assert even.to_dict() == {1: -1}
    f = H.residue_q(H.HeckeParams(0, 0, 0), ())[1]
    assert f.phi == {}
    with pytest.raises(H.NotResidual):
        H.residue_q(H.HeckeParams(0, 1, 1), ((1, 4),))


def test_d0_examples():
    assert H.d0_qpart(H.HeckeParams(F(1, 4), F(5, 4))).to_dict() == {1: -1}
    assert H.d0_qpart(H.HeckeParams(HALF, HALF)).is_zero()
    # the anisotropic factor (v + 1/v) at delta_- = delta_+ = 1
    assert H.d0_qpart(H.HeckeParams(1, 1)).to_dict() == {1: -1}


def test_unnormalized_residue_drops_d0():
    p = H.HeckeParams(1, 1, 0)
    assert H.residue_q(p, (), normalized=False)[1].phi == {}


def test_brute_force_examples():
    assert H.brute_force_residual_points(H.HeckeParams(0, 1, 1)) == [((1, 2),)]
    assert H.brute_force_residual_points(H.HeckeParams(HALF, HALF, 1)) == [((-1, 1),), ((1, 1),)]
    assert H.brute_force_residual_points(H.HeckeParams(0, 0, 0)) == [()]


def test_unsupported_side():
    with pytest.raises(H.UnsupportedParameters):
        H.enumerate_residual_points(H.HeckeParams(0, 3, 1))


def _raw_ledger(params, coords):
    led = FactorLedger()
    for k, s, e in H._binomials(params, coords):
        if e == 0 and s < 0:
            continue
        led.add_binomial(s, e, k)
    return led


def test_weyl_invariance_of_the_residue():
    rng = random.Random(7)
    for mm, mp, n in [(0, 1, 4), (HALF, HALF, 4), (1, 1, 3), (F(1, 4), F(7, 4), 3), (HALF, 1, 3)]:
        params = H.HeckeParams(mm, mp, n)
        for lm, lp in H.enumerate_residual_points(params):
            coords = list(H.coordinates(params, lm, lp).coords)
            ref = _raw_ledger(params, coords).canonical()
            moved = [(s, -e if rng.random() < 0.5 else e) for s, e in coords]
            rng.shuffle(moved)
            assert _raw_ledger(params, moved).canonical().phi == ref.phi


def test_odd_vector_factorizes_over_sides():
    for mm, mp in [(0, 1), (HALF, HALF), (0, 0), (1, 1), (HALF, 0), (HALF, 1),
                   (F(1, 4), F(5, 4)), (F(3, 4), F(7, 4))]:
        for n in range(7):
            params = H.HeckeParams(mm, mp, n)
            for lm, lp in H.enumerate_residual_points(params):
                odd = H.odd_content(params, lm, lp)
                n_m = H.side_rank(mm, lm)
                right = H.odd_content(H.HeckeParams(mm, mp, n - n_m), _empty(mm), lp)
                left = H.odd_content(H.HeckeParams(mp, mm, n_m), _empty(mp), lm)
                assert odd == right + left, (params, lm, lp)


def _empty(m):
    return H.side_points(m, 0)[0]


def test_residues_at_one_and_zero_differ_by_delta_shift():
    for delta in (0, 1):
        for n in range(9):
            for lam in P.enumerate_distinguished(delta, n):
                e1 = H.residue_parts(H.HeckeParams(1, delta, n), _empty(1), lam)[1]
                e0 = H.residue_parts(H.HeckeParams(0, delta, n), (), lam)[1]
                # the d0 normalizations differ only at (1, 1)
                corr = H.d0_qpart(H.HeckeParams(1, delta)) - H.d0_qpart(H.HeckeParams(0, delta))
                assert e1 - corr - e0 == H.delta_one_shift(delta, lam)


def test_high_rank_odd_content_of_the_exceptional_families():
    from cuspfdeg.cuspidal import int_delta_family
    expected = {('d', 2): {F(3, 2): 1}, ('d', 3): {}, ('e', 2): {F(3, 2): 1}, ('e', 3): {}}
    for (case, r), odd in expected.items():
        d, lam, n = int_delta_family(case, r)
        assert H.odd_content(H.HeckeParams(0, d, n), (), lam).to_dict() == odd


def test_json_record():
    pt = H.coordinates(H.HeckeParams(HALF, HALF, 1), (), (2,))
    obj = pt.to_json_obj()
    assert obj["params"] == {"m_minus": "1/2", "m_plus": "1/2", "base": 1, "rank": 1}
    assert obj["coords"] == [["+", 1]]
