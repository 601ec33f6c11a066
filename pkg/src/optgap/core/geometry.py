"""Distances between finite unions of points and segments in solution space.

Optimizer sets are finite unions of exact points and line segments.  Families
measure their gaps in different norms (L1 / L2 / Linf), so every distance
here is parameterized by the norm.  Segment endpoints produced in this
package are always exact rationals; free points may be CReal-valued, in which
case results are CReals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .creal import CReal, Scalar, abs_, add, max_, min_, mul, scale, shift, sqrt_nonneg, sub

Vec = tuple[CReal, ...]
RatVec = tuple[Fraction, ...]


class Norm(enum.Enum):
    L1 = "L1"
    L2 = "L2"
    LINF = "Linf"


def as_vec(xs: Sequence[Scalar]) -> Vec:
    return tuple(CReal.coerce(x) for x in xs)


def rational_vec(xs: Sequence[Scalar]) -> RatVec | None:
    """Exact rational coordinates if every entry is rational-backed."""
    out = []
    for x in xs:
        if isinstance(x, CReal):
            e = x.exact_rational()
            if e is None:
                return None
            out.append(e)
        else:
            out.append(Fraction(x))
    return tuple(out)


def norm_value(diff: Sequence[CReal], norm: Norm) -> CReal:
    if norm is Norm.L1:
        total = CReal.from_rational(0)
        for d in diff:
            total = add(total, abs_(d))
        return total
    if norm is Norm.LINF:
        acc = abs_(diff[0])
        for d in diff[1:]:
            acc = max_(acc, abs_(d))
        return acc
    total = CReal.from_rational(0)
    for d in diff:
        total = add(total, mul(d, d))
    return sqrt_nonneg(total)


def point_distance(u: Sequence[Scalar], v: Sequence[Scalar], norm: Norm) -> CReal:
    uu, vv = as_vec(u), as_vec(v)
    if len(uu) != len(vv):
        raise ValueError("dimension mismatch")
    return norm_value([sub(a, b) for a, b in zip(uu, vv)], norm)


def _clamp01(x: CReal) -> CReal:
    return min_(max_(x, CReal.from_rational(0)), CReal.from_rational(1))


def point_segment_distance(
    p: Sequence[Scalar], a: RatVec, b: RatVec, norm: Norm
) -> CReal:
    """Distance from point p to the segment [a, b] (rational endpoints)."""
    pp = as_vec(p)
    d = tuple(bb - aa for aa, bb in zip(a, b))
    if all(x == 0 for x in d):
        return point_distance(p, a, norm)
    if norm is Norm.L2:
        # minimize sum((p - a - s d)^2) over s in [0,1]; quadratic in s
        dd = sum(x * x for x in d)
        num = CReal.from_rational(0)
        for pi, ai, di in zip(pp, a, d):
            num = add(num, scale(di, shift(-ai, pi)))
        s = _clamp01(scale(Fraction(1, 1) / dd, num))
        diffs = [sub(shift(-ai, pi), scale(di, s)) for pi, ai, di in zip(pp, a, d)]
        return norm_value(diffs, norm)
    # L1 / Linf: convex piecewise-linear in s; exact when p is rational
    pr = rational_vec(p)
    if pr is None:
        raise NotImplementedError("L1/Linf point-segment distance needs rational points")
    candidates = {Fraction(0), Fraction(1)}
    for pi, ai, di in zip(pr, a, d):
        if di != 0:
            s = (pi - ai) / di
            if 0 < s < 1:
                candidates.add(s)
    best: Fraction | None = None
    for s in candidates:
        diffs = [pi - ai - s * di for pi, ai, di in zip(pr, a, d)]
        val = sum(abs(x) for x in diffs) if norm is Norm.L1 else max(abs(x) for x in diffs)
        if best is None or val < best:
            best = val
    return CReal.from_rational(best)


def dot_inner(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def segment_segment_distance_sq(
    a: RatVec, b: RatVec, c: RatVec, e: RatVec, inner=dot_inner
) -> Fraction:
    """Exact squared distance between segments [a,b] and [c,e].

    Minimizes the quadratic <w, w> with w = a + s(b-a) - c - u(e-c) over the
    unit square: the unconstrained critical point if interior, else the four
    clamped edges.  ``inner`` may be any PSD bilinear form on rational
    vectors (the function-space metric of the Wasserstein family uses this).
    """
    d1 = tuple(y - x for x, y in zip(a, b))
    d2 = tuple(y - x for x, y in zip(c, e))
    w = tuple(x - y for x, y in zip(a, c))
    A = inner(d1, d1)
    B = inner(d1, d2)
    C = inner(d2, d2)
    D = inner(d1, w)
    E = inner(d2, w)

    def q(s: Fraction, u: Fraction) -> Fraction:
        vec = tuple(ws + s * x - u * y for ws, x, y in zip(w, d1, d2))
        return inner(vec, vec)

    def clamp(x: Fraction) -> Fraction:
        return min(max(x, Fraction(0)), Fraction(1))

    candidates: list[tuple[Fraction, Fraction]] = []
    det = A * C - B * B
    if det != 0:
        s0 = (B * E - C * D) / det
        u0 = (A * E - B * D) / det
        candidates.append((clamp(s0), clamp(u0)))
    # edges: fix one variable at 0/1, minimize over the other
    if A != 0:
        for u_fixed in (Fraction(0), Fraction(1)):
            candidates.append((clamp((B * u_fixed - D) / A), u_fixed))
    if C != 0:
        for s_fixed in (Fraction(0), Fraction(1)):
            candidates.append((s_fixed, clamp((B * s_fixed + E) / C)))
    for s_fixed in (Fraction(0), Fraction(1)):
        for u_fixed in (Fraction(0), Fraction(1)):
            candidates.append((s_fixed, u_fixed))
    return min(q(s, u) for s, u in candidates)


def point_segment_distance_sq(p: RatVec, a: RatVec, b: RatVec, inner=dot_inner) -> Fraction:
    """Exact squared distance from a rational point to segment [a,b] under ``inner``."""
    d = tuple(y - x for x, y in zip(a, b))
    w = tuple(x - y for x, y in zip(p, a))
    dd = inner(d, d)
    if dd == 0:
        return inner(w, w)
    s = inner(w, d) / dd
    s = min(max(s, Fraction(0)), Fraction(1))
    vec = tuple(ws - s * x for ws, x in zip(w, d))
    return inner(vec, vec)


@dataclass(frozen=True)
class OptimizerSet:
    """Finite union of exact optimizer points and segments.

    Every element attains the instance's optimal objective value; segments
    encode one-dimensional degenerate optimal faces (they appear at path
    boundary instances).
    """

    points: tuple[Vec, ...] = ()
    segments: tuple[tuple[RatVec, RatVec], ...] = field(default=())

    def __post_init__(self):
        if not self.points and not self.segments:
            raise ValueError("an optimizer set must be nonempty")

    @staticmethod
    def of_points(*pts: Sequence[Scalar]) -> "OptimizerSet":
        return OptimizerSet(points=tuple(as_vec(p) for p in pts))

    @property
    def dim(self) -> int:
        if self.points:
            return len(self.points[0])
        return len(self.segments[0][0])

    def elements_for_report(self, level: int = 64) -> list[list[str]]:
        out = [[str(c.approx(level)) for c in p] for p in self.points]
        for a, b in self.segments:
            out.append([f"segment {tuple(map(str, a))} -> {tuple(map(str, b))}"])
        return out


def distance_to_set(p: Sequence[Scalar], target: OptimizerSet, norm: Norm) -> CReal:
    """min distance from a point to any element of the set."""
    best: CReal | None = None
    for q in target.points:
        d = point_distance(p, q, norm)
        best = d if best is None else min_(best, d)
    for a, b in target.segments:
        d = point_segment_distance(p, a, b, norm)
        best = d if best is None else min_(best, d)
    assert best is not None
    return best


def set_distance(s1: OptimizerSet, s2: OptimizerSet, norm: Norm) -> CReal:
    """min over element pairs (the optimizer-gap between two instances)."""
    best: CReal | None = None
    for p in s1.points:
        d = distance_to_set(p, s2, norm)
        best = d if best is None else min_(best, d)
    for a, b in s1.segments:
        for q in s2.points:
            d = point_segment_distance(q, a, b, norm)
            best = d if best is None else min_(best, d)
        if norm is Norm.L2:
            for c, e in s2.segments:
                d = sqrt_nonneg(CReal.from_rational(segment_segment_distance_sq(a, b, c, e)))
                best = d if best is None else min_(best, d)
        elif s2.segments:
            raise NotImplementedError("segment-segment distance implemented for L2 only")
    assert best is not None
    return best


def hausdorff_points(
    a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], norm: Norm
) -> CReal:
    """Hausdorff distance between two finite point clouds."""
    if not a or not b:
        raise ValueError("hausdorff of an empty cloud")
    sup: CReal | None = None
    for side1, side2 in ((a, b), (b, a)):
        for p in side1:
            best: CReal | None = None
            for q in side2:
                d = point_distance(p, q, norm)
                best = d if best is None else min_(best, d)
            sup = best if sup is None else max_(sup, best)
    assert sup is not None
    return sup
