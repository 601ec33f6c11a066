"""Log-optimal portfolio family over a discrete market with a return tilt.

The market has n equally likely joint outcomes; outcome k pays k per unit on
asset 1 and k*alpha on asset 2, so the expected log-wealth of a portfolio
(b1, b2) is mean(log k) + log(b1 + (1-b1)alpha): independent of b at
alpha = 1, optimized by all-in on asset 1 below it and asset 2 above it.
The optimizer gap is 2 in L1 while the optimal value is continuous.

Path: alpha(t) = 1 + t/2, so Y1 (optimizer (1,0)) is the t < 0 side.
Markets with m > 2 assets reduce to this core by padding extra assets with a
constant sub-unit payout (``widened``); the optimizer ignores them.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from ..core import creal as cr
from ..core.creal import CReal, Scalar, Verdict
from ..core.functions import ln_combination
from ..core.geometry import Norm, OptimizerSet
from ..errors import InvalidInstanceError, UnsupportedInstanceError
from .base import Family, GapNote, Instance, register

F = Fraction

PAD_RETURN = F(1, 4)  # strictly below every real outcome, so padding is never held


def market(alpha: Fraction, n: int = 3, m: int = 2) -> tuple[tuple[Fraction, ...], tuple[tuple[Fraction, ...], ...]]:
    """(probs, outcomes[k][j]) for the tilted market."""
    probs = tuple(F(1, n) for _ in range(n))
    rows = []
    for k in range(1, n + 1):
        row = [F(k), F(k) * alpha]
        row.extend(PAD_RETURN for _ in range(m - 2))
        rows.append(tuple(row))
    return probs, tuple(rows)


class PortfolioFamily(Family):
    name = "portfolio"
    norm = Norm.L1
    sense = "max"
    y1_side = Verdict.BELOW
    t0 = F(0)

    def __init__(self, n: int = 3, m: int = 2):
        if n < 1 or m < 2:
            raise ValueError("portfolio family needs n >= 1 outcomes and m >= 2 assets")
        self.n = n
        self.m = m
        self.solution_dim = m
        self.param_dim = n + n * m
        self.lipschitz = max(F(1), F(n, 2))  # d(outcome k,2)/dt = k/2

    def widened(self, m: int) -> "PortfolioFamily":
        """The m-asset reduction wrapper around the 2-asset core."""
        return PortfolioFamily(n=self.n, m=m)

    # -- construction ----------------------------------------------------------

    def _instance(self, probs, outcomes, t=None) -> Instance:
        self._validate(probs, outcomes)
        flat = list(probs) + [v for row in outcomes for v in row]
        return Instance(
            family=self.name,
            params=tuple(CReal.from_rational(v) for v in flat),
            t=t,
            payload=(tuple(probs), tuple(tuple(r) for r in outcomes)),
        )

    def _validate(self, probs, outcomes):
        if len(probs) != self.n or len(outcomes) != self.n:
            raise InvalidInstanceError("outcome count mismatch")
        if any(p <= 0 for p in probs) or sum(probs) != 1:
            raise InvalidInstanceError("probabilities must be positive and sum to 1")
        for row in outcomes:
            if len(row) != self.m:
                raise InvalidInstanceError("asset count mismatch")
            if any(v <= 0 for v in row):
                raise InvalidInstanceError("outcomes must be positive")
        for j in range(self.m):
            col = [row[j] for row in outcomes]
            if j < 2 and len(set(col)) != len(col):
                raise InvalidInstanceError("per-asset outcomes must be pairwise distinct")

    def path(self, t: Fraction) -> Instance:
        t = self.check_path_parameter(t)
        probs, outcomes = market(1 + t / 2, self.n, self.m)
        return self._instance(probs, outcomes, t=t)

    def instance_from_rationals(self, values: Sequence[Fraction]) -> Instance:
        vals = [F(v) for v in values]
        if len(vals) != self.param_dim:
            raise InvalidInstanceError(f"portfolio expects {self.param_dim} parameters")
        probs = vals[: self.n]
        outcomes = [
            tuple(vals[self.n + k * self.m : self.n + (k + 1) * self.m]) for k in range(self.n)
        ]
        return self._instance(probs, outcomes)

    # -- surface -----------------------------------------------------------------

    def objective(self, inst: Instance, x: Sequence[Scalar]) -> CReal:
        """Expected log-wealth E[ln(b . X)] (natural log)."""
        b = [F(v) if not isinstance(v, CReal) else v.exact_rational() for v in x]
        if any(v is None for v in b):
            raise InvalidInstanceError("portfolio objective expects exact rational portfolios")
        if len(b) != self.m:
            raise InvalidInstanceError("portfolio dimension mismatch")
        if any(v < 0 for v in b) or sum(b) != 1:
            raise InvalidInstanceError("portfolio must lie on the simplex")
        probs, outcomes = inst.payload
        terms = []
        for p, row in zip(probs, outcomes):
            wealth = sum(bv * rv for bv, rv in zip(b, row))
            if wealth <= 0:
                raise InvalidInstanceError("portfolio has non-positive wealth on an outcome")
            terms.append((p, wealth))
        return ln_combination(terms)

    def _slice_alpha(self, inst: Instance) -> Fraction:
        probs, outcomes = inst.payload
        alpha = outcomes[0][1]
        ref_probs, ref_outcomes = market(alpha, self.n, self.m)
        if probs != ref_probs or outcomes != ref_outcomes:
            raise UnsupportedInstanceError("instance leaves the tilted-market slice")
        return alpha

    def opt_oracle(self, inst: Instance) -> OptimizerSet:
        alpha = self._slice_alpha(inst)
        pad = tuple(F(0) for _ in range(self.m - 2))
        e1 = (F(1), F(0)) + pad
        e2 = (F(0), F(1)) + pad
        if alpha < 1:
            return OptimizerSet.of_points(e1)
        if alpha > 1:
            return OptimizerSet.of_points(e2)
        return OptimizerSet(points=(), segments=((e1, e2),))

    def membership_scalar(self, inst: Instance) -> CReal:
        # alpha - 1, with alpha read off the first outcome's second asset
        return cr.shift(F(-1), inst.params[self.n + 1])

    def brute_force(self, inst: Instance, resolution: Fraction) -> list[tuple[Fraction, ...]]:
        """Grid argmax over the 2-asset simplex via exact product comparison.

        argmax of sum p_k ln(w_k(b)) equals argmax of prod w_k(b)^(p_k * D)
        for the common denominator D, which is an exact rational comparison.
        """
        resolution = F(resolution)
        if resolution <= 0:
            raise ValueError("resolution must be positive")
        if self.m != 2:
            raise UnsupportedInstanceError("brute force implemented for the 2-asset core")
        probs, outcomes = inst.payload
        d = lcm(*(p.denominator for p in probs))
        exps = [int(p * d) for p in probs]
        steps = int(1 / resolution)
        best_key: Fraction | None = None
        best: list[tuple[Fraction, ...]] = []
        for i in range(steps + 1):
            b1 = i * resolution
            b = (b1, 1 - b1)
            key = F(1)
            for e, row in zip(exps, outcomes):
                key *= (b[0] * row[0] + b[1] * row[1]) ** e
            if best_key is None or key > best_key:
                best_key, best = key, [b]
            elif key == best_key:
                best.append(b)
        return best

    def kappa(self) -> CReal:
        return CReal.from_rational(2)

    def gap_note(self) -> GapNote:
        return GapNote(computed_repr="2", paper_value_repr="2", matches_paper=True)


FAMILY = register(PortfolioFamily())
