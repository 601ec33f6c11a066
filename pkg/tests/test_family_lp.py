"""Tilted linear-program family."""

from fractions import Fraction as F

import pytest

from optgap.core.creal import Verdict
from optgap.errors import UnsupportedInstanceError
from optgap.families import get_family

lp = get_family("lp")


def test_objective_at_optimum():
    inst = lp.path(F(1, 2))
    assert lp.objective(inst, (F(1), F(0))).exact_rational() == 1


def test_path_places_eps_in_second_row():
    inst = lp.path(F(-3, 8))
    assert inst.params[5].exact_rational() == F(-3, 8)
    assert inst.params[4].exact_rational() == 1  # row (1, eps)


def test_oracle_positive_side():
    assert [tuple(c.exact_rational() for c in p) for p in lp.opt_oracle(lp.path(F(1, 2))).points] == [
        (1, 0)
    ]


def test_oracle_negative_side():
    pts = lp.opt_oracle(lp.path(F(-1, 2))).points
    assert [tuple(c.exact_rational() for c in p) for p in pts] == [(F(3, 2), 1)]


def test_oracle_boundary_is_segment():
    s = lp.opt_oracle(lp.path(F(0)))
    assert not s.points
    assert s.segments == (((F(1), F(0)), (F(1), F(1))),)


def test_off_slice_rejected():
    inst = lp.instance_from_rationals([F(2), F(0)] + [F(0)] * 12)
    with pytest.raises(UnsupportedInstanceError):
        lp.opt_oracle(inst)


def test_membership_is_sign_of_eps():
    assert lp.membership_y1(lp.path(F(1, 4)), 8) is Verdict.ABOVE
    assert lp.membership_y1(lp.path(F(-1, 4)), 8) is Verdict.BELOW
    assert lp.classify_y1(lp.path(F(1, 4)), 8) is True
    assert lp.classify_y1(lp.path(F(-1, 4)), 8) is False
    assert lp.classify_y1(lp.path(F(0)), 30) is None


def test_brute_force_agrees_with_oracle():
    best = lp.brute_force(lp.path(F(1, 2)), F(1, 64))
    assert best == [(1, 0)]
    best = lp.brute_force(lp.path(F(-1, 4)), F(1, 64))
    assert best == [(F(5, 4), 1)]  # 1 - eps with eps = -1/4, on the grid


def test_kappa_is_one():
    assert lp.kappa().exact_rational() == 1
    assert lp.gap_note().matches_paper
