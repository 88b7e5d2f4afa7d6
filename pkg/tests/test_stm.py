from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspfdeg import hecke as H
from cuspfdeg import partitions as P
from cuspfdeg import stm
from cuspfdeg.qseries import ledger_analyze

HALF = F(1, 2)


def _parts(params, lm, lp):
    return H.residue_parts(params, lm, lp)[1:]


def test_eta_swaps_sides():
    p = H.HeckeParams(HALF, HALF, 6)
    tgt, pt = stm.iso_apply('eta', p, ((), (6, 4, 2)))
    assert tgt == p and pt == ((6, 4, 2), ())


def test_eta_is_an_involution():
    p = H.HeckeParams(0, 1, 4)
    for point in H.enumerate_residual_points(p):
        t1, p1 = stm.iso_apply('eta', p, point)
        t2, p2 = stm.iso_apply('eta', t1, p1)
        assert (t2, p2) == (p, point)


def test_eta_plus_conjugates_quarter_labels():
    p = H.HeckeParams(F(1, 4), F(1, 4), 3)
    tgt, pt = stm.iso_apply('eta_plus', p, ((), (2, 1)))
    assert tgt.m_plus == F(-1, 4) and pt == ((), (2, 1))
    tgt, pt = stm.iso_apply('eta_plus', H.HeckeParams(F(1, 4), F(5, 4), 3), ((), (3,)))
    assert pt == ((), (1, 1, 1))


def test_eta_plus_preserves_residues():
    for mm, mp in [(F(1, 4), F(5, 4)), (F(3, 4), F(3, 4)), (F(1, 4), F(7, 4))]:
        for n in range(5):
            p = H.HeckeParams(mm, mp, n)
            for point in H.enumerate_residual_points(p):
                tgt, pt = stm.iso_apply('eta_plus', p, point)
                assert _parts(tgt, *pt) == _parts(p, *point)


def test_unsupported_conjugation():
    with pytest.raises(stm.STMError):
        stm.iso_apply('eta_plus', H.HeckeParams(0, 2, 0), ((), ()))
    with pytest.raises(stm.STMError):
        stm.iso_apply('psi', H.HeckeParams(0, 1, 1), ((), (3,)))


def test_translation_examples():
    tgt, pt, step = stm.translate(H.HeckeParams(0, 3, 0), ((), (5, 3, 1)), '+')
    assert (tgt.m_minus, tgt.m_plus, tgt.rank) == (0, 1, 4) and pt == ((), (5, 3, 1))
    # at m = 3/2 labels partition 2n + 2, so (4) sits at rank 1 and (2) at rank 0
    tgt, pt, _ = stm.translate(H.HeckeParams(HALF, F(3, 2), 1), ((), (4,)), '+')
    assert (tgt.m_minus, tgt.m_plus, tgt.rank) == (HALF, HALF, 2)
    tgt, pt, _ = stm.translate(H.HeckeParams(HALF, F(3, 2), 0), ((), (2,)), '+')
    assert (tgt.m_minus, tgt.m_plus, tgt.rank) == (HALF, HALF, 1)
    assert step.kind == 'translate'


def test_translation_errors():
    with pytest.raises(stm.STMError, match="target must differ"):
        stm.translate(H.HeckeParams(0, 3, 0), ((), (5, 3, 1)), '+', target_m=3)
    with pytest.raises(stm.STMError, match="target must differ"):
        stm.translate(H.HeckeParams(0, 1, 1), ((), (3,)), '+')
    with pytest.raises(stm.STMError):
        stm.translate(H.HeckeParams(0, 3, 0), ((), (5, 3, 1)), '+', target_m=2)
    with pytest.raises(stm.STMError):
        stm.translate(H.HeckeParams(0, 3, 0), ((), (5, 3, 1)), '+', target_m=-1)


def test_translations_on_opposite_sides_commute():
    p = H.HeckeParams(F(3, 2), 3, 0)
    pt = (stm._cuspidal_point(p) or stm._some_point(p))
    a, pa, _ = stm.translate(p, pt, '-')
    a, pa, _ = stm.translate(a, pa, '+')
    b, pb, _ = stm.translate(p, pt, '+')
    b, pb, _ = stm.translate(b, pb, '-')
    assert (a, pa) == (b, pb)


def test_extraspecial_examples():
    tgt, pt, _ = stm.extraspecial_map(H.HeckeParams(F(1, 4), F(5, 4), 2), ((), (1, 1)))
    assert (tgt.m_minus, tgt.m_plus, tgt.rank) == (0, 1, 5) and pt == ((), (7, 3, 1))
    tgt, pt, _ = stm.extraspecial_map(H.HeckeParams(F(1, 4), F(1, 4), 0), ((), ()))
    assert (tgt.m_minus, tgt.m_plus, tgt.rank) == (0, 0, 0)
    # |lambda| = 28 on the delta = 0 side gives rank 14
    tgt, pt, _ = stm.extraspecial_map(H.HeckeParams(F(1, 4), F(15, 4), 0), ((), ()))
    assert tgt.rank == 14 and pt == ((), (13, 9, 5, 1))
    with pytest.raises(stm.STMError):
        stm.extraspecial_map(H.HeckeParams(0, 1, 1), ((), (3,)))


def test_reduce_to_minimal_examples():
    steps = stm.reduce_to_minimal(H.HeckeParams(0, 3, 0))
    assert [s.kind for s in steps] == ['translate']
    assert (steps[-1].target.m_minus, steps[-1].target.m_plus) == (0, 1)
    steps = stm.reduce_to_minimal(H.HeckeParams(F(1, 4), F(5, 4), 0))
    assert [s.kind for s in steps] == ['extraspecial']
    assert (steps[-1].target.m_minus, steps[-1].target.m_plus) == (0, 1)
    assert stm.reduce_to_minimal(H.HeckeParams(HALF, HALF, 0)) == []


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(HALF, F(5, 2)), (0, 4), (F(3, 2), 1), (-1, F(5, 2)), (F(-3, 4), F(5, 4)),
                        (3, 4), (F(5, 2), F(3, 2))]))
def test_reduction_ends_at_a_minimal_object(pair):
    p = H.HeckeParams(*pair, 0)
    steps = stm.reduce_to_minimal(p)
    final = steps[-1].target if steps else p
    assert H.is_minimal(final)


def test_residue_coincidence_at_a_non_minimal_object():
    # two W_0 orbits of C_2(1/2, 3/2) share their residue q-part, so translation
    # images are unique only at minimal targets
    p = H.HeckeParams(HALF, F(3, 2), 2)
    a = ((-1, 1), (-1, 3))
    b = ((-1, 1), (1, 3))
    assert a in H.brute_force_residual_points(p) and b in H.brute_force_residual_points(p)
    pa = ledger_analyze(H.residue_q(p, a, normalized=False)[0])[1:]
    pb = ledger_analyze(H.residue_q(p, b, normalized=False)[0])[1:]
    assert pa == pb


def test_step_json():
    _, _, step = stm.translate(H.HeckeParams(0, 3, 0), ((), (5, 3, 1)), '+')
    obj = step.to_json_obj()
    assert obj["kind"] == 'translate' and obj["target"]["rank"] == 4
