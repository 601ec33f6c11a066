"""Two-variable linear-program family with a tilting constraint.

The program is: maximize x1 subject to x1 >= 0, x1 + eps*x2 <= 1,
0 <= x2 <= 1, coded as (c, A, y) with c = (1, 0), y = (0, 1, 0, 1) and A
carrying eps in its second row.  For eps > 0 the unique maximizer is (1, 0);
for eps < 0 it is (1 - eps, 1); at eps = 0 the optimal face is the segment
{(1, s) : s in [0, 1]}.  The optimizer gap is 1 in L2 while the optimal value
map eps -> max x1 stays continuous.

Path convention: path(t) puts eps = t, so Y1 (optimizers at (1,0)) is the
t > 0 side for this family.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..core import creal as cr
from ..core.creal import CReal, Scalar, Verdict
from ..core.geometry import Norm, OptimizerSet
from ..errors import InvalidInstanceError, UnsupportedInstanceError
from .base import Family, GapNote, Instance, register

F = Fraction

#: fixed parts of the parameter vector (c | A row-major | y); eps sits at EPS_INDEX
TEMPLATE: tuple[Fraction, ...] = (
    F(1), F(0),                    # c
    F(-1), F(0),                   # -x1        <= 0
    F(1), None,                    # x1 + eps x2 <= 1   (eps slot)
    F(0), F(-1),                   # -x2        <= 0
    F(0), F(1),                    # x2         <= 1
    F(0), F(1), F(0), F(1),        # y
)
EPS_INDEX = 5


def lp_data(eps: Fraction) -> tuple[tuple[Fraction, ...], tuple[tuple[Fraction, ...], ...], tuple[Fraction, ...]]:
    """(c, A, y) of the slice instance with the given tilt."""
    c = (F(1), F(0))
    a = ((F(-1), F(0)), (F(1), eps), (F(0), F(-1)), (F(0), F(1)))
    y = (F(0), F(1), F(0), F(1))
    return c, a, y


def _linear(coeffs: Sequence[Fraction], xs: Sequence[Scalar]) -> CReal:
    total = CReal.from_rational(0)
    for q, x in zip(coeffs, xs):
        total = cr.add(total, cr.scale(q, CReal.coerce(x)))
    return total


class LpFamily(Family):
    name = "lp"
    solution_dim = 2
    param_dim = 14
    norm = Norm.L2
    sense = "max"
    y1_side = Verdict.ABOVE  # eps > 0 is Y1 for this construction
    lipschitz = F(1)

    def path(self, t: Fraction) -> Instance:
        t = self.check_path_parameter(t)
        vec = tuple(t if v is None else v for v in TEMPLATE)
        return Instance(
            family=self.name,
            params=tuple(CReal.from_rational(v) for v in vec),
            t=t,
            payload=vec,
        )

    def instance_from_rationals(self, values: Sequence[Fraction]) -> Instance:
        vec = tuple(F(v) for v in values)
        if len(vec) != self.param_dim:
            raise InvalidInstanceError(f"lp expects {self.param_dim} parameters")
        return Instance(self.name, tuple(CReal.from_rational(v) for v in vec), payload=vec)

    def _slice_eps(self, inst: Instance) -> Fraction:
        vec = inst.payload
        if vec is None:
            raise UnsupportedInstanceError("lp oracle needs an exact payload")
        for i, fixed in enumerate(TEMPLATE):
            if fixed is not None and vec[i] != fixed:
                raise UnsupportedInstanceError(
                    f"instance leaves the supported slice at coordinate {i}"
                )
        return vec[EPS_INDEX]

    def objective(self, inst: Instance, x: Sequence[Scalar]) -> CReal:
        if len(x) != 2:
            raise InvalidInstanceError("lp solutions are 2-vectors")
        vec = inst.payload
        return _linear(vec[0:2], x)

    def opt_oracle(self, inst: Instance) -> OptimizerSet:
        eps = self._slice_eps(inst)
        if eps > 0:
            return OptimizerSet.of_points((F(1), F(0)))
        if eps < 0:
            return OptimizerSet.of_points((1 - eps, F(1)))
        return OptimizerSet(points=(), segments=(((F(1), F(0)), (F(1), F(1))),))

    def membership_scalar(self, inst: Instance) -> CReal:
        return inst.params[EPS_INDEX]

    def brute_force(self, inst: Instance, resolution: Fraction) -> list[tuple[Fraction, ...]]:
        """Grid argmax of c.x over feasible points of the box [0,2] x [0,1]."""
        resolution = F(resolution)
        if resolution <= 0:
            raise ValueError("resolution must be positive")
        vec = inst.payload
        c = vec[0:2]
        a = [vec[2 + 2 * i : 4 + 2 * i] for i in range(4)]
        y = vec[10:14]
        steps1 = int(2 / resolution)
        steps2 = int(1 / resolution)
        best_val: Fraction | None = None
        best: list[tuple[Fraction, ...]] = []
        for i in range(steps1 + 1):
            x1 = i * resolution
            for j in range(steps2 + 1):
                x2 = j * resolution
                if any(ar[0] * x1 + ar[1] * x2 > yr for ar, yr in zip(a, y)):
                    continue
                val = c[0] * x1 + c[1] * x2
                if best_val is None or val > best_val:
                    best_val, best = val, [(x1, x2)]
                elif val == best_val:
                    best.append((x1, x2))
        if best_val is None:
            raise InvalidInstanceError("no feasible grid point")
        return best

    def kappa(self) -> CReal:
        return CReal.from_rational(1)

    def gap_note(self) -> GapNote:
        return GapNote(computed_repr="1", paper_value_repr="1", matches_paper=True)


FAMILY = register(LpFamily())
