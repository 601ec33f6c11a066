"""Planar SIVP family: exact field arithmetic and bounded enumeration."""

from fractions import Fraction as F

import pytest

from optgap.core.creal import Verdict
from optgap.core.dyadic import pow2
from optgap.errors import InvalidInstanceError
from optgap.families import get_family
from optgap.families.quadfield import SQRT2, Quad, compare_sqrt_sums
from optgap.families.sivp import (
    compare_norm_sums,
    lattice_enumerate,
    minimum_norm_bases,
)

sv = get_family("sivp")


def rat_basis(v1, v2):
    return (
        (Quad(F(v1[0])), Quad(F(v1[1]))),
        (Quad(F(v2[0])), Quad(F(v2[1]))),
    )


def test_quad_sign_and_arithmetic():
    assert (SQRT2 - 1).sign() == 1
    assert (SQRT2 - 2).sign() == -1
    assert (Quad(F(3)) - 2 * SQRT2).sign() == 1  # 3 > 2.828
    assert ((SQRT2 * SQRT2) - 2).is_zero()


def test_compare_sqrt_sums_exact_tie():
    # sqrt(2) + sqrt(4-2sqrt2) == (1+lam*) + sqrt(lam*^2+1) at the critical tilt
    a, b = Quad(F(2)), Quad(F(4), F(-2))
    assert compare_sqrt_sums(a, b, b, a) == 0
    assert compare_sqrt_sums(Quad(F(4)), Quad(F(0)), Quad(F(1)), Quad(F(1))) == 0  # 2 = 1+1
    assert compare_sqrt_sums(Quad(F(2)), Quad(F(2)), Quad(F(1)), Quad(F(4))) < 0  # 2.83 < 3


def test_enumerate_axis_basis():
    basis = rat_basis((1, 1), (-1, 0))  # lambda = 0
    mins = minimum_norm_bases(basis, 2)
    # norm sum 2: vectors (0,±1) and (±1,0) in both orders
    assert len(mins) == 8
    for b in mins:
        ns = [(v[0].a, v[1].a) for v in b]
        assert all(abs(x) + abs(y) == 1 for x, y in ns)


def test_enumerate_above_critical_contains_paper_basis():
    basis = rat_basis((1, 1), (F(-3, 2), 0))  # lambda = 1/2
    mins = minimum_norm_bases(basis, 3)
    flat = {tuple((c.a, c.b) for v in b for c in v) for b in mins}
    # ((-1/2, 1), (1, 1)) is a minimizing ordered basis
    assert ((F(-1, 2), F(0)), (F(1), F(0)), (F(1), F(0)), (F(1), F(0))) in flat


def test_unimodular_rebasing_preserves_minimum():
    b1 = rat_basis((1, 1), (-1, 0))
    # same lattice, different basis: v1' = v1 + v2, v2' = v2
    b2 = rat_basis((0, 1), (-1, 0))
    m1 = minimum_norm_bases(b1, 3)[0]
    m2 = minimum_norm_bases(b2, 3)[0]
    assert compare_norm_sums(m1, m2) == 0


def test_oracle_sides_and_critical_tie():
    below = sv.opt_oracle(sv.path(F(-1, 2)))
    above = sv.opt_oracle(sv.path(F(1, 2)))
    critical = sv.opt_oracle(sv.path(F(0)))
    assert len(below.points) == 8
    assert len(above.points) == 8
    assert len(critical.points) == 16


def test_oracle_matches_enumeration():
    for t in (F(-1, 2), F(0), F(1, 2)):
        inst = sv.path(t)
        oracle = {
            tuple(c.approx(50) for c in p) for p in sv.opt_oracle(inst).points
        }
        brute = {tuple(c.approx(50) for c in p) for p in sv.brute_force(inst, F(1, 64))}
        assert oracle == brute


def test_objective_is_norm_sum():
    inst = sv.path(F(0))
    val = sv.objective(inst, (F(0), F(1), F(1), F(0))).approx(40)
    assert val == 2


def test_membership_scalar_equals_t_over_100_on_path():
    inst = sv.path(F(-1, 2))
    assert sv.membership_scalar(inst).exact_rational() == F(-1, 200)
    assert sv.membership_y1(inst, 16) is Verdict.BELOW
    assert sv.classify_y1(inst, 16) is True


def test_dependent_basis_rejected():
    with pytest.raises(InvalidInstanceError):
        sv.instance_from_rationals([F(1), F(1), F(2), F(2)])


def test_kappa_value_and_flag():
    k = sv.kappa().approx(50)
    # kappa^2 = (5 - 2 sqrt2)/2
    import mpmath

    mpmath.mp.prec = 120
    want = mpmath.sqrt((5 - 2 * mpmath.sqrt(2)) / 2)
    assert abs(mpmath.mpf(k.numerator) / k.denominator - want) < mpmath.mpf(2) ** -48
    note = sv.gap_note()
    assert not note.matches_paper
    assert note.paper_value_repr == "sqrt(2)"
