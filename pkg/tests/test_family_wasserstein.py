"""Wasserstein test-function family: exact pairings and class structure."""

from fractions import Fraction as F

import pytest

from optgap.core.dyadic import pow2
from optgap.errors import InvalidInstanceError
from optgap.families import get_family
from optgap.families.wasserstein import (
    CATALOG,
    UNIFORM,
    density_values,
    function_distance_sq,
    l2_inner,
    same_class,
    wasserstein_pairing,
)

wa = get_family("wasserstein")
BY_NAME = dict(CATALOG)


def test_catalog_is_lipschitz_one():
    for name, f in CATALOG:
        for u, v in zip(f, f[1:]):
            assert abs(v - u) <= F(1, 4), name  # knot spacing 1/4


@pytest.mark.parametrize("eps", [F(1, 8), F(1, 4), F(1, 2)])
def test_tilt_density_pairs_with_identity(eps):
    d = density_values(eps, F(0))
    assert wasserstein_pairing(d, UNIFORM, BY_NAME["id"]) == eps / 12


@pytest.mark.parametrize("eps", [F(1, 8), F(1, 4), F(1, 2)])
def test_tent_density_pairs_with_abs(eps):
    d = density_values(F(0), eps)
    assert wasserstein_pairing(d, UNIFORM, BY_NAME["abs"]) == eps / 12


def test_pairing_of_identical_densities_is_zero():
    d = density_values(F(1, 3), F(0))
    for _, f in CATALOG:
        assert wasserstein_pairing(d, d, f) == 0


def test_unnormalized_density_rejected():
    with pytest.raises(InvalidInstanceError):
        wasserstein_pairing((F(2),) * 5, UNIFORM, BY_NAME["id"])
    with pytest.raises(InvalidInstanceError):
        wasserstein_pairing((F(-1), F(1), F(2), F(1), F(-1)), UNIFORM, BY_NAME["id"])


@pytest.mark.parametrize("eps", [F(1, 8), F(1, 4), F(1, 2)])
def test_catalog_bound_with_equality_exactly_on_id_class(eps):
    d = density_values(eps, F(0))
    for name, f in CATALOG:
        val = wasserstein_pairing(d, UNIFORM, f)
        assert val <= eps / 12, name
        if same_class(f, BY_NAME["id"]):
            assert val == eps / 12, name
        else:
            assert val < eps / 12, name


def test_class_structure():
    assert same_class(BY_NAME["id"], BY_NAME["neg-id"])
    assert same_class(BY_NAME["abs"], BY_NAME["abs-drop"])
    assert same_class(BY_NAME["abs"], BY_NAME["neg-abs"])
    assert not same_class(BY_NAME["id"], BY_NAME["abs"])
    assert not same_class(BY_NAME["wave"], BY_NAME["zero"])


def test_oracle_matches_brute_force():
    for t in (F(-1, 4), F(1, 4)):
        inst = wa.path(t)
        oracle = {tuple(c.exact_rational() for c in p) for p in wa.opt_oracle(inst).points}
        brute = {tuple(p) for p in wa.brute_force(inst, F(1, 64))}
        assert oracle == brute


def test_oracle_argmax_classes():
    pts = wa.opt_oracle(wa.path(F(-1, 4))).points  # tilt branch: id class
    names = {name for name, f in CATALOG if tuple(c.exact_rational() for c in pts[0]) == f or any(tuple(c.exact_rational() for c in p) == f for p in pts)}
    assert names == {"id", "neg-id"}
    pts = wa.opt_oracle(wa.path(F(1, 4))).points
    names = {name for name, f in CATALOG if any(tuple(c.exact_rational() for c in p) == f for p in pts)}
    assert names == {"abs", "neg-abs", "abs-drop"}


def test_function_metric():
    # ||x - |x|||^2 = int of (2x)^2 over [-1/2,0] = 1/6
    assert function_distance_sq(BY_NAME["id"], BY_NAME["abs"]) == F(1, 6)
    assert l2_inner(UNIFORM, UNIFORM) == 1


def test_kappa_squared_is_5_over_48():
    k = wa.kappa().approx(60)
    assert abs(k * k - F(5, 48)) <= pow2(-55)
    assert wa.gap_note().matches_paper


def test_membership_scalar_sign():
    assert wa.classify_y1(wa.path(F(-1, 4)), 10) is True
    assert wa.classify_y1(wa.path(F(1, 4)), 10) is False
