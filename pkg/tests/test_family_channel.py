"""DMC capacity family: mutual information, entropy reduction, embeddings."""

import random
from fractions import Fraction as F

import mpmath
import pytest

from optgap.core.creal import Verdict
from optgap.core.dyadic import pow2
from optgap.errors import InvalidInstanceError, UnsupportedInstanceError
from optgap.families import get_family
from optgap.families.channel import (
    StochasticMatrix,
    binary_entropy,
    embed,
    mutual_information,
    w1,
    w2,
    w_star,
)

ch = get_family("channel")


def random_simplex_point(rng, k=3, den=997):
    cuts = sorted(rng.randint(0, den) for _ in range(k - 1))
    parts = [cuts[0]] + [b - a for a, b in zip(cuts, cuts[1:])] + [den - cuts[-1]]
    return tuple(F(p, den) for p in parts)


def test_stochastic_matrix_validation():
    with pytest.raises(InvalidInstanceError):
        StochasticMatrix.from_rows([[F(1, 2), 0, 0], [0, 1, 1]])  # column 0 sums to 1/2
    with pytest.raises(InvalidInstanceError):
        StochasticMatrix.from_rows([[2, 0, 0], [-1, 1, 1]])  # negative entry


def test_mutual_information_reduces_to_binary_entropy_on_w_star():
    rng = random.Random(11)
    for _ in range(25):
        p = random_simplex_point(rng)
        lhs = mutual_information(p, w_star()).approx(34)
        rhs = binary_entropy(p[0]).approx(34)
        assert abs(lhs - rhs) <= pow2(-32)


def test_mutual_information_examples():
    assert mutual_information((F(1, 2), F(1, 4), F(1, 4)), w_star()).exact_rational() == 1
    assert mutual_information((F(1), F(0), F(0)), w1(F(1, 3))).exact_rational() == 0
    for mu in (F(1, 7), F(9, 10)):
        assert mutual_information((F(1, 2), F(1, 2), F(0)), w1(mu)).exact_rational() == 1


def test_binary_entropy_values():
    assert binary_entropy(F(1, 2)).exact_rational() == 1
    assert binary_entropy(F(0)).exact_rational() == 0
    assert binary_entropy(F(1)).exact_rational() == 0
    mpmath.mp.prec = 120
    got = binary_entropy(F(1, 4)).approx(50)
    want = 2 - mpmath.mpf(3) / 4 * mpmath.log(3, 2)
    assert abs(mpmath.mpf(got.numerator) / got.denominator - want) < mpmath.mpf(2) ** -49


def test_binary_entropy_creal_input():
    from optgap.core import creal as cr
    from optgap.core.creal import CReal

    x = cr.scale(F(1, 2), cr.sqrt(CReal.from_rational(F(1, 4)), F(1, 8)))  # = 1/4, lazily
    lazy = CReal(lambda n: x.approx(n))  # strip exactness marker
    got = binary_entropy(lazy).approx(30)
    want = binary_entropy(F(1, 4)).approx(40)
    assert abs(got - want) <= pow2(-29)
    near_zero = CReal(lambda n: pow2(-2 * n - 8))
    assert abs(binary_entropy(near_zero).approx(8)) <= pow2(-8)


def test_oracle_and_membership():
    pts = ch.opt_oracle(ch.path(F(-3, 10))).points  # W1 branch, mu = 3/10
    assert [tuple(c.exact_rational() for c in p) for p in pts] == [(F(1, 2), F(1, 2), F(0))]
    pts = ch.opt_oracle(ch.path(F(3, 10))).points
    assert [tuple(c.exact_rational() for c in p) for p in pts] == [(F(1, 2), F(0), F(1, 2))]
    seg = ch.opt_oracle(ch.path(F(0))).segments
    assert seg == (((F(1, 2), F(1, 2), F(0)), (F(1, 2), F(0), F(1, 2))),)
    assert ch.membership_y1(ch.path(F(-1, 4)), 8) is Verdict.BELOW
    assert ch.classify_y1(ch.path(F(-1, 4)), 8) is True


def test_brute_force_traces_segment_on_boundary():
    pts = ch.brute_force(ch.path(F(0)), F(1, 16))
    assert all(p[0] == F(1, 2) for p in pts)
    assert len(pts) == 9  # p2 ranges over {0, 1/16, ..., 1/2}
    single = ch.brute_force(ch.path(F(-1, 4)), F(1, 16))
    assert single == [(F(1, 2), F(1, 2), F(0))]


def test_embedding_preserves_value_and_projects_optimizers():
    core = w1(F(1, 5))
    wide = embed(core, 5, 4)
    p_core = (F(1, 2), F(1, 3), F(1, 6))
    p_wide = (F(1, 4), F(1, 3), F(1, 6), F(1, 8), F(1, 8))  # mass 1/4+1/8+1/8 duplicates input 1
    lhs = mutual_information(p_wide, wide).approx(40)
    rhs = mutual_information(p_core, core).approx(40)
    assert abs(lhs - rhs) <= pow2(-38)


def test_embedded_oracle_n4_is_segment():
    wide = ch.widened(4, 3)
    inst = wide.path(F(-1, 4))
    s = wide.opt_oracle(inst)
    assert s.segments and not s.points
    a, b = s.segments[0]
    assert a == (F(1, 2), F(1, 2), F(0), F(0)) and b == (F(0), F(1, 2), F(0), F(1, 2))
    beyond = ch.widened(5, 3)
    with pytest.raises(UnsupportedInstanceError):
        beyond.opt_oracle(beyond.path(F(-1, 4)))


def test_kappa_flagged_against_paper():
    note = ch.gap_note()
    assert not note.matches_paper
    assert note.paper_value_repr == "> 2"
    k = ch.kappa().approx(40)
    assert abs(k * k - F(1, 2)) <= pow2(-36)
