"""Norm/set-distance machinery used for optimizer gaps."""

from fractions import Fraction as F

import pytest

from optgap.core import creal as cr
from optgap.core.creal import CReal
from optgap.core.dyadic import pow2
from optgap.core.geometry import (
    Norm,
    OptimizerSet,
    distance_to_set,
    hausdorff_points,
    point_distance,
    point_segment_distance,
    segment_segment_distance_sq,
    set_distance,
)


def approx(x, n=40):
    return x.approx(n)


def test_point_distance_norms():
    u, v = (F(0), F(0)), (F(3), F(-4))
    assert approx(point_distance(u, v, Norm.L1)) == 7
    assert approx(point_distance(u, v, Norm.LINF)) == 4
    assert approx(point_distance(u, v, Norm.L2)) == 5


def test_point_distance_irrational():
    d = point_distance((F(0), F(0)), (F(1), F(1)), Norm.L2)
    q = approx(d, 30)
    assert abs(q * q - 2) <= pow2(-27)


def test_point_segment_l2_projects():
    d = point_segment_distance((F(0), F(2)), (F(-1), F(0)), (F(1), F(0)), Norm.L2)
    assert approx(d) == 2
    d = point_segment_distance((F(5), F(0)), (F(-1), F(0)), (F(1), F(0)), Norm.L2)
    assert approx(d) == 4  # clamped to endpoint


def test_point_segment_l1_breakpoints():
    d = point_segment_distance((F(1, 2), F(1, 2)), (F(0), F(0)), (F(1), F(0)), Norm.L1)
    assert approx(d) == F(1, 2)
    d = point_segment_distance((F(2), F(1)), (F(0), F(0)), (F(1), F(1)), Norm.L1)
    assert approx(d) == 1


def test_segment_segment_sq():
    a, b = (F(0), F(0)), (F(1), F(0))
    c, e = (F(0), F(1)), (F(1), F(1))
    assert segment_segment_distance_sq(a, b, c, e) == 1
    # crossing segments touch
    a, b = (F(-1), F(-1)), (F(1), F(1))
    c, e = (F(-1), F(1)), (F(1), F(-1))
    assert segment_segment_distance_sq(a, b, c, e) == 0


def test_optimizer_set_distance_mixes_points_and_segments():
    s1 = OptimizerSet.of_points((F(1), F(0)))
    s2 = OptimizerSet(points=(), segments=(((F(1), F(0)), (F(1), F(1))),))
    assert approx(set_distance(s1, s2, Norm.L2)) == 0
    s3 = OptimizerSet.of_points((F(3), F(1)))
    assert approx(distance_to_set((F(3), F(1)), s2, Norm.L2)) == 2
    assert approx(set_distance(s3, s2, Norm.L2)) == 2


def test_optimizer_set_must_be_nonempty():
    with pytest.raises(ValueError):
        OptimizerSet(points=(), segments=())


def test_hausdorff_points():
    a = [(F(0), F(0)), (F(1), F(0))]
    b = [(F(0), F(0))]
    assert approx(hausdorff_points(a, b, Norm.L2)) == 1
    assert approx(hausdorff_points(a, a, Norm.L1)) == 0


def test_creal_points_supported_in_l2():
    p = (cr.sqrt(CReal.from_rational(2), F(1)), CReal.from_rational(0))
    seg = ((F(0), F(0)), (F(2), F(0)))
    d = point_segment_distance(p, *seg, Norm.L2)
    assert abs(approx(d, 40)) <= pow2(-38)
