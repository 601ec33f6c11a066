"""Discrete memoryless channel family: capacity-achieving input distributions.

The 3-input / 2-output core consists of the boundary channel

    W* = [[1, 0, 0],
          [0, 1, 1]]

and the two perturbed branches (mu in (0, 1))

    W1(mu) = [[1, 0, mu], [0, 1, 1-mu]]     optimizer (1/2, 1/2, 0)
    W2(mu) = [[1, mu, 0], [0, 1-mu, 1]]     optimizer (1/2, 0, 1/2)

Mutual information against W* collapses to the binary entropy of p1, so the
capacity is 1 bit on the whole path while the maximizing distribution jumps.
The computed optimizer gap is sqrt(1/2) in L2 (1 in L1); the source
derivation states "> 2", which does not match either norm and is flagged.

Channels with n > 3 inputs / m > 2 outputs reduce to the core by duplicating
input 1 and adding dead outputs (``embed``); the optimizer oracle supports
the embedded slice up to n = 4, where the optimal set is still a segment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..core import creal as cr
from ..core.creal import CReal, Scalar, Verdict
from ..core.dyadic import pow2
from ..core.functions import log2_of_rational, log_combination
from ..core.geometry import Norm, OptimizerSet
from ..errors import InvalidInstanceError, UnsupportedInstanceError
from .base import Family, GapNote, Instance, register

F = Fraction


@dataclass(frozen=True)
class StochasticMatrix:
    """Column-stochastic matrix: rows[y][x] = P(Y=y | X=x), columns sum to 1."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise InvalidInstanceError("empty channel matrix")
        n = len(self.rows[0])
        if any(len(r) != n for r in self.rows):
            raise InvalidInstanceError("ragged channel matrix")
        for x in range(n):
            col = [r[x] for r in self.rows]
            if any(v < 0 for v in col):
                raise InvalidInstanceError("channel entries must be non-negative")
            if sum(col) != 1:
                raise InvalidInstanceError(f"column {x} does not sum to 1 exactly")

    @property
    def outputs(self) -> int:
        return len(self.rows)

    @property
    def inputs(self) -> int:
        return len(self.rows[0])

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Fraction]]) -> "StochasticMatrix":
        return StochasticMatrix(tuple(tuple(F(v) for v in r) for r in rows))


def w_star() -> StochasticMatrix:
    return StochasticMatrix.from_rows([[1, 0, 0], [0, 1, 1]])


def w1(mu: Fraction) -> StochasticMatrix:
    return StochasticMatrix.from_rows([[1, 0, mu], [0, 1, 1 - mu]])


def w2(mu: Fraction) -> StochasticMatrix:
    return StochasticMatrix.from_rows([[1, mu, 0], [0, 1 - mu, 1]])


def mutual_information(p: Sequence[Fraction], w: StochasticMatrix) -> CReal:
    """I(p, W) in bits; zero-probability terms contribute 0.

    Takes exact rationals: whether a term vanishes is then decidable, which
    it would not be for stream-represented inputs.
    """
    p = [F(v) for v in p]
    if len(p) != w.inputs:
        raise InvalidInstanceError("distribution dimension does not match channel inputs")
    if any(v < 0 for v in p) or sum(p) != 1:
        raise InvalidInstanceError("input distribution must lie on the simplex")
    out_marginal = [sum(pr * row[x] for x, pr in enumerate(p)) for row in w.rows]
    terms = []
    for x, pr in enumerate(p):
        if pr == 0:
            continue
        for y, row in enumerate(w.rows):
            if row[x] == 0:
                continue
            terms.append((pr * row[x], row[x] / out_marginal[y]))
    return log_combination(terms)


def binary_entropy(x: Scalar) -> CReal:
    """h2(x) = -x log2 x - (1-x) log2(1-x) on [0, 1], endpoints 0."""
    if isinstance(x, CReal) and x.exact_rational() is not None:
        x = x.exact_rational()
    if not isinstance(x, CReal):
        x = F(x)
        if not 0 <= x <= 1:
            raise InvalidInstanceError("binary entropy needs x in [0, 1]")
        if x == 0 or x == 1:
            return CReal.from_rational(0)
        return log_combination([(x, 1 / x), (1 - x, 1 / (1 - x))])

    def fn(n: int) -> Fraction:
        # separate x from {0, 1} far enough that the entropy tail is < 2^-(n+2),
        # then evaluate at a rational approximant using |h2'| <= m there.
        m = n + 4
        while True:
            xa = x.approx(m)
            if xa <= pow2(1 - m) or xa >= 1 - pow2(1 - m):
                bound = 3 * pow2(-m) * (m + 2)  # h2 on [0, 3*2^-m] (or mirrored)
                if bound <= pow2(-(n + 1)):
                    return bound / 2
                m += 4
                continue
            # here x and 1-x are both >= 2^-m, so |h2'| <= m
            fine = n + 2 + max(1, m.bit_length())
            xa = min(max(x.approx(fine), pow2(-m)), 1 - pow2(-m))
            return binary_entropy(xa).approx(n + 2)

    return CReal(fn)


def embed(core: StochasticMatrix, n: int, m: int) -> StochasticMatrix:
    """Wider channel whose capacity problem reduces to the 3x2 core.

    Inputs 4..n duplicate input 1; outputs 3..m are never produced.
    """
    if core.inputs != 3 or core.outputs != 2:
        raise InvalidInstanceError("embedding starts from the 3x2 core")
    if n < 3 or m < 2:
        raise InvalidInstanceError("embedding needs n >= 3, m >= 2")
    rows = []
    for y in range(m):
        row = []
        for x in range(n):
            if y < 2:
                row.append(core.rows[y][x] if x < 3 else core.rows[y][0])
            else:
                row.append(F(0))
        rows.append(tuple(row))
    return StochasticMatrix(tuple(rows))


class ChannelFamily(Family):
    name = "channel"
    norm = Norm.L2
    sense = "max"
    y1_side = Verdict.BELOW
    lipschitz = F(1)

    def __init__(self, n: int = 3, m: int = 2):
        self.n = n
        self.m = m
        self.solution_dim = n
        self.param_dim = n * m

    def widened(self, n: int, m: int) -> "ChannelFamily":
        return ChannelFamily(n=n, m=m)

    def _instance(self, w: StochasticMatrix, t=None) -> Instance:
        if (w.inputs, w.outputs) != (self.n, self.m):
            raise InvalidInstanceError("channel shape mismatch")
        flat = [v for row in w.rows for v in row]
        return Instance(
            family=self.name,
            params=tuple(CReal.from_rational(v) for v in flat),
            t=t,
            payload=w,
        )

    def path(self, t: Fraction) -> Instance:
        t = self.check_path_parameter(t)
        if t < 0:
            core = w1(-t)
        elif t > 0:
            core = w2(t)
        else:
            core = w_star()
        if (self.n, self.m) != (3, 2):
            core = embed(core, self.n, self.m)
        return self._instance(core, t=t)

    def instance_from_rationals(self, values: Sequence[Fraction]) -> Instance:
        vals = [F(v) for v in values]
        if len(vals) != self.param_dim:
            raise InvalidInstanceError(f"channel expects {self.param_dim} parameters")
        rows = tuple(tuple(vals[y * self.n : (y + 1) * self.n]) for y in range(self.m))
        return self._instance(StochasticMatrix(rows))

    def objective(self, inst: Instance, x: Sequence[Scalar]) -> CReal:
        p = []
        for v in x:
            e = v.exact_rational() if isinstance(v, CReal) else F(v)
            if e is None:
                raise InvalidInstanceError("channel objective expects exact rational distributions")
            p.append(e)
        return mutual_information(p, inst.payload)

    def _core_slice(self, w: StochasticMatrix) -> tuple[str, Fraction]:
        """Classify a (possibly embedded) slice channel; returns (branch, mu)."""
        core_rows = (tuple(w.rows[0][:3]), tuple(w.rows[1][:3]))
        for y in range(2, w.outputs):
            if any(v != 0 for v in w.rows[y]):
                raise UnsupportedInstanceError("instance leaves the embedded slice")
        core = StochasticMatrix(core_rows)
        mu12, mu13 = core.rows[0][1], core.rows[0][2]
        if mu12 == 0 and mu13 == 0:
            branch, mu = "star", F(0)
            ref = w_star()
        elif mu12 == 0:
            branch, mu = "w1", mu13
            ref = w1(mu)
        elif mu13 == 0:
            branch, mu = "w2", mu12
            ref = w2(mu)
        else:
            raise UnsupportedInstanceError("instance is on neither branch of the slice")
        if not 0 <= mu < 1:
            raise UnsupportedInstanceError("branch parameter outside [0, 1)")
        if core.rows != ref.rows:
            raise UnsupportedInstanceError("instance leaves the supported channel slice")
        if w.inputs > 3 and w.rows != embed(core, w.inputs, w.outputs).rows:
            raise UnsupportedInstanceError("instance leaves the embedded slice")
        return branch, mu

    def opt_oracle(self, inst: Instance) -> OptimizerSet:
        w: StochasticMatrix = inst.payload
        branch, _ = self._core_slice(w)
        n = w.inputs
        if n > 4:
            raise UnsupportedInstanceError(
                "optimal faces of embeddings beyond n = 4 are not segment-representable"
            )
        pad = tuple(F(0) for _ in range(n - 3))
        p1 = (F(1, 2), F(1, 2), F(0)) + pad
        p2 = (F(1, 2), F(0), F(1, 2)) + pad
        if branch == "star" and n > 3:
            raise UnsupportedInstanceError("embedded boundary channel has a 2-dim optimal face")
        if branch == "w1":
            if n == 3:
                return OptimizerSet.of_points(p1)
            # duplicated input 1 shares mass with input 4
            alt = (F(0), F(1, 2), F(0), F(1, 2))
            return OptimizerSet(points=(), segments=((p1, alt),))
        if branch == "w2":
            if n == 3:
                return OptimizerSet.of_points(p2)
            alt = (F(0), F(0), F(1, 2), F(1, 2))
            return OptimizerSet(points=(), segments=((p2, alt),))
        return OptimizerSet(points=(), segments=((p1, p2),))

    def membership_scalar(self, inst: Instance) -> CReal:
        return cr.sub(inst.params[1], inst.params[2])  # W[0][1] - W[0][2]

    def brute_force(self, inst: Instance, resolution: Fraction) -> list[tuple[Fraction, ...]]:
        """Simplex-grid argmax of I(., W) with 2^-60 value separation.

        Genuinely tied grid points (the symmetric pairs on the boundary
        channel) agree to every precision; points that are not exactly tied
        on this slice differ by far more than the band.
        """
        resolution = F(resolution)
        if resolution <= 0 or resolution.numerator != 1:
            raise ValueError("resolution must be 1/K")
        if self.n != 3:
            raise UnsupportedInstanceError("brute force implemented for the 3-input core")
        k = resolution.denominator
        w: StochasticMatrix = inst.payload
        bits = 60
        band = pow2(-(bits - 2))
        best_val: Fraction | None = None
        best: list[tuple[Fraction, ...]] = []
        for i in range(k + 1):
            for j in range(k + 1 - i):
                p = (F(i, k), F(j, k), F(k - i - j, k))
                val = mutual_information(p, w).approx(bits)
                if best_val is None or val > best_val + band:
                    best_val, best = val, [p]
                elif val >= best_val - band:
                    best.append(p)
                    if val > best_val:
                        best_val = val
        return best

    def kappa(self) -> CReal:
        return cr.sqrt(CReal.from_rational(F(1, 2)), F(1, 4))

    def gap_note(self) -> GapNote:
        return GapNote(
            computed_repr="sqrt(1/2)",
            paper_value_repr="> 2",
            matches_paper=False,
            detail=(
                "the two branch optimizers are (1/2,1/2,0) and (1/2,0,1/2): distance "
                "sqrt(1/2) in L2 and 1 in L1; the stated '> 2' matches neither norm"
            ),
        )


def capacity_upper_bound_gap(n_inputs: int, iterations: int) -> CReal:
    """Classical worst-case capacity gap after N alternating-maximization steps."""
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    return cr.scale(F(1, iterations), log2_of_rational(F(n_inputs)))


FAMILY = register(ChannelFamily())
