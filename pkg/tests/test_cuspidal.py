from fractions import Fraction as F
from itertools import product

import pytest

from cuspfdeg import cuspidal as C
from cuspfdeg import hecke as H
from cuspfdeg import partitions as P
from cuspfdeg.qseries import MultiplicityFn

HALF = F(1, 2)


def test_template_examples():
    # Sp4(q) cuspidal unipotent: q-part 1/((1+q)^2 (1+q^2))
    assert C.degree_template('III_ord', 1, 0).even_mult.to_dict() == {1: -2, 2: -1}
    assert C.degree_template('III_extra', 0, 1).even_mult.to_dict() == {1: -1}
    assert C.degree_template('II', 0, 0).even_mult.is_zero()
    with pytest.raises(ValueError):
        C.degree_template('VII', 0, 0)
    with pytest.raises(ValueError):
        C.degree_template('II', -1, 0)


def test_templates_are_nonpositive_and_distinct():
    symmetric = {'I', 'III_ord', 'IV_ord'}
    for fam in C.FAMILIES:
        seen = {}
        for a, b in product(range(9), repeat=2):
            if fam in symmetric and a > b:
                continue
            even = C.degree_template(fam, a, b).even_mult
            assert all(v < 0 for v in even.to_dict().values())
            assert even not in seen, (fam, (a, b), seen.get(even))
            seen[even] = (a, b)


def test_solve_sets():
    assert C.solve_sets(0, 3) == ('III_ord', 1, 1)
    assert C.solve_sets(F(1, 4), F(5, 4)) == ('III_extra', 0, 1)
    assert C.solve_sets(HALF, HALF) == ('II', 0, 0)
    assert C.template_for_params(HALF, HALF).even_mult.is_zero()


def test_extraspecial_normalization():
    assert C.extraspecial_norm_qpart(F(1, 4), F(5, 4)).to_dict() == {1: -1}
    assert C.extraspecial_norm_qpart(F(1, 4), F(1, 4)).is_zero()


def test_solve_fdeg_examples():
    sol = C.solve_fdeg(H.HeckeParams(HALF, HALF), 6, C.degree_template('II', 2, 1))
    assert sol == [(((), (6, 4, 2)), ((6, 4, 2), ()))]
    assert C.solve_fdeg(H.HeckeParams(0, 1), 1, C.degree_template('III_extra', 0, 1)) == [(((), (3,)),)]
    assert C.solve_fdeg(H.HeckeParams(0, 1), 3, MultiplicityFn({1: 1})) == []


def test_verify_uniqueness_examples():
    rep = C.verify_uniqueness(H.HeckeParams(HALF, HALF), 6)
    assert rep.ok
    swap = [e for e in rep.entries if e["solutions"] == [[[], [6, 4, 2]], [[6, 4, 2], []]]]
    assert swap and swap[0]["orbits"] == 1
    assert C.verify_uniqueness(H.HeckeParams(0, 1), 4).ok
    with pytest.raises(ValueError):
        C.verify_uniqueness(H.HeckeParams(0, 3), 1)


def test_classify_no_odd_examples():
    assert C.classify_no_odd(HALF, HALF, n=6) == [((), (6, 4, 2)), ((4, 2), (4, 2)), ((6, 4, 2), ())]
    assert C.classify_no_odd(0, 1, n=1) == [((), (3,))]
    # the check compares direct residues with the closed-form predictions
    for mm, mp in [(0, 0), (0, 1), (1, 1), (HALF, 0), (HALF, 1), (F(1, 4), F(3, 4)), (F(5, 4), F(7, 4))]:
        for n in range(7):
            C.classify_no_odd(mm, mp, n=n)


def test_staircase_and_runs():
    assert C.staircase(3) == (6, 4, 2)
    assert C.odd_run(3) == (5, 3, 1)


def test_int_delta_families():
    for case in 'bcde':
        for r in range(3):
            d, lam, n = C.int_delta_family(case, r)
            assert C.int_delta_case(d, lam) == case
            assert P.distinguished_rank(d, lam) == n
    assert [C.int_delta_family(c, 0)[2] for c in 'de'] == [7, 9]
    assert [C.int_delta_family(c, 1)[2] for c in 'de'] == [31, 33]
    assert [C.int_delta_allowed('d', r) for r in range(4)] == [True, True, False, True]


def test_one_sided_closed_form_matches_direct():
    for delta in (0, 1):
        for n in range(9):
            for lam in P.enumerate_distinguished(delta, n):
                pred = C.one_sided_closed_form(delta, lam)
                if pred is None:
                    continue
                params = H.HeckeParams(0, delta, n)
                _, even, odd = H.residue_parts(params, (), lam)
                if C.side_no_odd_predicted(delta, lam):
                    assert odd.is_zero()
                    assert even == pred, (delta, lam)


def test_staircase_closed_form():
    for r in range(5):
        lam = C.staircase(r)
        n = P.distinguished_rank(HALF, lam)
        _, even, odd = H.residue_parts(H.HeckeParams(HALF, HALF, n), (), lam)
        assert odd.is_zero() and even == C.staircase_closed_form(lam)
    assert C.staircase_closed_form((2,)).to_dict() == {1: -1}


def test_quarter_family_case():
    assert C.quarter_family_case(F(1, 4), ()) is not None
    assert C.quarter_family_case(F(1, 4), (2, 2)) is not None
    assert C.quarter_family_case(F(3, 4), (2, 2)) is None
    assert C.quarter_no_odd_predicted(F(9, 4), (1,)) is False


def test_convolution_formula_on_two_sided_points():
    for mm, mp in [(0, 1), (HALF, HALF), (F(1, 4), F(5, 4))]:
        for n in range(5):
            params = H.HeckeParams(mm, mp, n)
            for lm, lp in H.enumerate_residual_points(params):
                assert C.mixed_mult_formula(params, lm, lp) == H.residue_parts(params, lm, lp)[1]
