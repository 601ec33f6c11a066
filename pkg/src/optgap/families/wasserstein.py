"""Wasserstein-1 test-function family over a finite Lipschitz-1 catalog.

Instances are densities on [-1/2, 1/2] of the form 1 + a*x + b*(1 - 4|x|)
paired against the uniform density; the problem is to pick the catalog
function maximizing |E_p[f] - E_uniform[f]|.  The tilted densities (a = eps)
are maximized exactly by the identity class {±x + c} with value eps/12; the
tent densities (b = eps) by the absolute-value class {±|x| + c}, also eps/12.

Solutions are piecewise-linear functions represented by their values at the
knots (-1/2, -1/4, 0, 1/4, 1/2); every integral here is an exact rational
(products of linear pieces integrated in closed form).  Errors and gaps are
measured in the L2([-1/2,1/2]) function norm, a quadratic form on knot
vectors.

The catalog: the four canonical members x, -x, |x|, -|x|, plus eight more
Lipschitz-1 piecewise-linear functions (slope patterns over the four knot
intervals are listed next to each entry).  The family gap stored in the
descriptor is the catalog-independent lower bound min over free shifts c of
||±x - (±|x| + c)||_L2 = sqrt(5/48): any admissible catalog contains the two
required classes only up to unknown shifts, and the fooling guarantee must
hold for all of them.  The concrete catalog's own class gap is larger
(sqrt(1/6)), so every fooling bound stated against sqrt(5/48) holds a
fortiori.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..core import creal as cr
from ..core.creal import CReal, Scalar, Verdict
from ..core.geometry import (
    Norm,
    OptimizerSet,
    point_segment_distance_sq,
    segment_segment_distance_sq,
)
from ..errors import InvalidInstanceError, UnsupportedInstanceError
from .base import Family, GapNote, Instance, register

F = Fraction

KNOTS: tuple[Fraction, ...] = (F(-1, 2), F(-1, 4), F(0), F(1, 4), F(1, 2))
FnValues = tuple[Fraction, ...]  # values at KNOTS

#: catalog of test functions; the first entry is the tie-break winner
CATALOG: tuple[tuple[str, FnValues], ...] = (
    ("id", (F(-1, 2), F(-1, 4), F(0), F(1, 4), F(1, 2))),          # slopes + + + +
    ("neg-id", (F(1, 2), F(1, 4), F(0), F(-1, 4), F(-1, 2))),      # slopes - - - -
    ("abs", (F(1, 2), F(1, 4), F(0), F(1, 4), F(1, 2))),           # slopes - - + +
    ("neg-abs", (F(-1, 2), F(-1, 4), F(0), F(-1, 4), F(-1, 2))),   # slopes + + - -
    ("abs-drop", (F(0), F(-1, 4), F(-1, 2), F(-1, 4), F(0))),      # |x| - 1/2
    ("wave", (F(0), F(1, 4), F(0), F(-1, 4), F(0))),               # slopes + - - +
    ("neg-wave", (F(0), F(-1, 4), F(0), F(1, 4), F(0))),           # slopes - + + -
    ("shelf", (F(0), F(1, 4), F(1, 4), F(1, 4), F(1, 2))),         # slopes + 0 0 +
    ("mid-ramp", (F(0), F(0), F(1, 4), F(1, 2), F(1, 2))),         # slopes 0 + + 0
    ("ramp-plateau", (F(0), F(1, 4), F(1, 2), F(3, 4), F(3, 4))),  # slopes + + + 0
    ("plateau-ramp", (F(0), F(0), F(1, 4), F(1, 2), F(3, 4))),     # slopes 0 + + +
    ("zero", (F(0), F(0), F(0), F(0), F(0))),
)

#: density basis: u1 = x, u2 = 1 - 4|x| (both integrate to 0 over the interval)
U1: FnValues = (F(-1, 2), F(-1, 4), F(0), F(1, 4), F(1, 2))
U2: FnValues = (F(-1), F(0), F(1), F(0), F(-1))
UNIFORM: FnValues = (F(1), F(1), F(1), F(1), F(1))


def l2_inner(f: Sequence[Fraction], g: Sequence[Fraction]) -> Fraction:
    """Exact integral of f*g over [-1/2, 1/2] for knot-valued PL functions."""
    total = F(0)
    for i in range(len(KNOTS) - 1):
        h = KNOTS[i + 1] - KNOTS[i]
        fu, fv, gu, gv = f[i], f[i + 1], g[i], g[i + 1]
        total += h * (2 * fu * gu + fu * gv + fv * gu + 2 * fv * gv) / 6
    return total


def integral(f: Sequence[Fraction]) -> Fraction:
    return l2_inner(f, UNIFORM)


def density_values(a: Fraction, b: Fraction) -> FnValues:
    return tuple(1 + F(a) * u + F(b) * v for u, v in zip(U1, U2))


def check_density(vals: Sequence[Fraction]) -> FnValues:
    vals = tuple(F(v) for v in vals)
    if len(vals) != len(KNOTS):
        raise InvalidInstanceError("densities are knot-valued on the 5-point grid")
    if any(v < 0 for v in vals):
        raise InvalidInstanceError("density must be non-negative")
    if integral(vals) != 1:
        raise InvalidInstanceError("density must integrate to exactly 1")
    return vals


def wasserstein_pairing(p1: Sequence[Fraction], p2: Sequence[Fraction], f: Sequence[Fraction]) -> Fraction:
    """|E_{p1}[f] - E_{p2}[f]| as an exact rational."""
    d1, d2 = check_density(p1), check_density(p2)
    fv = tuple(F(v) for v in f)
    diff = tuple(x - y for x, y in zip(d1, d2))
    return abs(l2_inner(fv, diff))


def same_class(f: FnValues, g: FnValues) -> bool:
    """f ~ g iff f = g + c or f = -g + c for a constant c."""
    for sign in (1, -1):
        deltas = {x - sign * y for x, y in zip(f, g)}
        if len(deltas) == 1:
            return True
    return False


def function_distance_sq(f: Sequence[Fraction], g: Sequence[Fraction]) -> Fraction:
    d = tuple(F(x) - F(y) for x, y in zip(f, g))
    return l2_inner(d, d)


_SHIFT_RANGE = F(2)  # class segments range over f + c, c in [-2, 2]


def _class_segments(base: FnValues) -> tuple[tuple[FnValues, FnValues], ...]:
    """The equivalence class {±base + c} as two knot-space segments."""
    segs = []
    for sign in (1, -1):
        lo = tuple(sign * v - _SHIFT_RANGE for v in base)
        hi = tuple(sign * v + _SHIFT_RANGE for v in base)
        segs.append((lo, hi))
    return tuple(segs)


class WassersteinFamily(Family):
    name = "wasserstein"
    solution_dim = len(KNOTS)
    param_dim = 2
    norm = Norm.L2  # label only; the metric hooks below use the function norm
    sense = "max"
    y1_side = Verdict.BELOW
    lipschitz = F(1)

    @property
    def norm_label(self) -> str:
        return "L2(function)"

    def path(self, t: Fraction) -> Instance:
        t = self.check_path_parameter(t)
        a, b = (-t, F(0)) if t <= 0 else (F(0), t)
        return self._instance(a, b, t=t)

    def _instance(self, a: Fraction, b: Fraction, t=None) -> Instance:
        check_density(density_values(a, b))
        return Instance(
            family=self.name,
            params=(CReal.from_rational(a), CReal.from_rational(b)),
            t=t,
            payload=(F(a), F(b)),
        )

    def instance_from_rationals(self, values: Sequence[Fraction]) -> Instance:
        if len(values) != 2:
            raise InvalidInstanceError("wasserstein instances have parameters (a, b)")
        return self._instance(F(values[0]), F(values[1]))

    def density(self, inst: Instance) -> FnValues:
        a, b = inst.payload
        return density_values(a, b)

    def objective(self, inst: Instance, x: Sequence[Scalar]) -> CReal:
        vals = []
        for v in x:
            e = v.exact_rational() if isinstance(v, CReal) else F(v)
            if e is None:
                raise InvalidInstanceError("test functions have exact rational knot values")
            vals.append(e)
        return CReal.from_rational(
            wasserstein_pairing(self.density(inst), UNIFORM, tuple(vals))
        )

    def _pairings(self, inst: Instance) -> list[Fraction]:
        dens = self.density(inst)
        return [wasserstein_pairing(dens, UNIFORM, f) for _, f in CATALOG]

    def opt_oracle(self, inst: Instance) -> OptimizerSet:
        a, b = inst.payload
        if a != 0 and b != 0:
            raise UnsupportedInstanceError("oracle supports the two density branches")
        vals = self._pairings(inst)
        best = max(vals)
        return OptimizerSet.of_points(
            *(f for (_, f), v in zip(CATALOG, vals) if v == best)
        )

    def membership_scalar(self, inst: Instance) -> CReal:
        return cr.sub(inst.params[1], inst.params[0])  # b - a

    def brute_force(self, inst: Instance, resolution: Fraction) -> list[tuple[Fraction, ...]]:
        """Exhaustive catalog argmax by exact pairing values (finite solution space)."""
        vals = self._pairings(inst)
        best = max(vals)
        return [f for (_, f), v in zip(CATALOG, vals) if v == best]

    # -- function-space metric ---------------------------------------------------

    def solution_error(self, x: Sequence, target: OptimizerSet) -> CReal:
        vals = []
        for v in x:
            e = v.exact_rational() if isinstance(v, CReal) else F(v)
            if e is None:
                raise InvalidInstanceError("test functions have exact rational knot values")
            vals.append(e)
        p = tuple(vals)
        best: Fraction | None = None
        for q in target.points:
            qe = tuple(c.exact_rational() for c in q)
            d = function_distance_sq(p, qe)
            best = d if best is None or d < best else best
        for seg in target.segments:
            d = point_segment_distance_sq(p, seg[0], seg[1], inner=l2_inner)
            best = d if best is None or d < best else best
        return cr.sqrt_nonneg(CReal.from_rational(best))

    def optset_distance(self, s1: OptimizerSet, s2: OptimizerSet) -> CReal:
        best: Fraction | None = None
        pts1 = [tuple(c.exact_rational() for c in p) for p in s1.points]
        pts2 = [tuple(c.exact_rational() for c in p) for p in s2.points]
        for p in pts1:
            for q in pts2:
                d = function_distance_sq(p, q)
                best = d if best is None or d < best else best
            for seg in s2.segments:
                d = point_segment_distance_sq(p, seg[0], seg[1], inner=l2_inner)
                best = d if best is None or d < best else best
        for seg in s1.segments:
            for q in pts2:
                d = point_segment_distance_sq(q, seg[0], seg[1], inner=l2_inner)
                best = d if best is None or d < best else best
            for seg2 in s2.segments:
                d = segment_segment_distance_sq(seg[0], seg[1], seg2[0], seg2[1], inner=l2_inner)
                best = d if best is None or d < best else best
        if best is None:
            raise InvalidInstanceError("empty optimizer sets")
        return cr.sqrt_nonneg(CReal.from_rational(best))

    def gap_optimizer_set(self, inst: Instance) -> OptimizerSet:
        """Whole equivalence classes (free shift), for the catalog-independent gap."""
        a, b = inst.payload
        if a != 0 and b != 0:
            raise UnsupportedInstanceError("gap sets exist on the two density branches")
        if a == 0 and b == 0:
            raise UnsupportedInstanceError("boundary instance has no single optimal class")
        base = CATALOG[0][1] if b == 0 else CATALOG[2][1]  # id class / abs class
        return OptimizerSet(points=(), segments=_class_segments(base))

    def kappa(self) -> CReal:
        return cr.sqrt(CReal.from_rational(F(5, 48)), F(1, 16))

    def gap_note(self) -> GapNote:
        return GapNote(
            computed_repr="sqrt(5/48)",
            paper_value_repr="sqrt(5)/(4*sqrt(3))",
            matches_paper=True,
            detail="min over free shifts of ||±x - (±|x| + c)||_L2; squared value exactly 5/48",
        )


FAMILY = register(WassersteinFamily())
