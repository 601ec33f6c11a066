"""Log-optimal portfolio family."""

from fractions import Fraction as F

import pytest

from optgap.core.creal import Verdict
from optgap.errors import InvalidInstanceError
from optgap.families import get_family

pf = get_family("portfolio")


def test_objective_independent_of_portfolio_at_alpha_one():
    inst = pf.path(F(0))  # alpha = 1
    w1 = pf.objective(inst, (F(1, 2), F(1, 2))).approx(60)
    w2 = pf.objective(inst, (F(1), F(0))).approx(60)
    assert w1 == w2  # identical log-combinations evaluate identically


def test_objective_value_is_mean_log_wealth():
    inst = pf.path(F(1))  # alpha = 3/2
    # W((0,1)) = (1/3)(ln(3/2) + ln 3 + ln(9/2))
    import mpmath

    mpmath.mp.prec = 120
    got = pf.objective(inst, (F(0), F(1))).approx(50)
    want = (mpmath.log(mpmath.mpf(3) / 2) + mpmath.log(3) + mpmath.log(mpmath.mpf(9) / 2)) / 3
    assert abs(mpmath.mpf(got.numerator) / got.denominator - want) < mpmath.mpf(2) ** -49


def test_oracle_each_side_and_boundary():
    assert [tuple(c.exact_rational() for c in p) for p in pf.opt_oracle(pf.path(F(1))).points] == [
        (0, 1)
    ]
    assert [tuple(c.exact_rational() for c in p) for p in pf.opt_oracle(pf.path(F(-1))).points] == [
        (1, 0)
    ]
    boundary = pf.opt_oracle(pf.path(F(0)))
    assert boundary.segments == (((F(1), F(0)), (F(0), F(1))),)


def test_membership_blur_near_alpha_one():
    # alpha within 2^(2-n) of 1 may be UNKNOWN; well separated must decide
    inst = pf.path(F(1, 2**10))  # alpha - 1 = 2^-11
    assert pf.membership_y1(inst, 2) is Verdict.UNKNOWN
    assert pf.membership_y1(inst, 14) is Verdict.ABOVE
    assert pf.classify_y1(pf.path(F(-1, 4)), 10) is True  # alpha < 1 is Y1


def test_validation_rejects_bad_markets():
    with pytest.raises(InvalidInstanceError):
        pf.instance_from_rationals([F(1, 2), F(1, 2), F(0)] + [F(1)] * 6)  # zero prob
    with pytest.raises(InvalidInstanceError):
        # duplicate outcomes in a column
        pf.instance_from_rationals([F(1, 3)] * 3 + [F(1), F(1), F(1), F(1), F(3), F(3)])


def test_brute_force_exact_grid():
    assert pf.brute_force(pf.path(F(-1)), F(1, 32)) == [(1, 0)]
    assert pf.brute_force(pf.path(F(1)), F(1, 32)) == [(0, 1)]
    ties = pf.brute_force(pf.path(F(0)), F(1, 4))
    assert len(ties) == 5  # whole grid ties at alpha = 1


def test_widened_market_ignores_padding():
    wide = pf.widened(4)
    inst = wide.path(F(1))
    pts = wide.opt_oracle(inst).points
    assert [tuple(c.exact_rational() for c in p) for p in pts] == [(0, 1, 0, 0)]
    # holding the padded asset is strictly worse
    worse = wide.objective(inst, (F(0), F(1, 2), F(1, 4), F(1, 4))).approx(40)
    best = wide.objective(inst, (F(0), F(1), F(0), F(0))).approx(40)
    assert worse < best


def test_kappa_is_two_in_l1():
    assert pf.kappa().exact_rational() == 2
    assert pf.gap_note().matches_paper
