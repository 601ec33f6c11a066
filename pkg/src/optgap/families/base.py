"""Family contract: objective, computable path, membership decider, optimizer oracle.

Each family packages one parameterized optimization problem behind the same
surface:

* ``path(t)`` maps a rational t in [-1, 1] to an instance; every path is
  normalized so the optimizer discontinuity sits at t0 = 0, with the two
  decidable branches Y1/Y2 on either side.
* ``membership_scalar(inst)`` is a computable quantity that is negative
  exactly on the t < 0 branch and positive on the t > 0 branch; families
  record which branch is Y1 (``y1_side``), since the construction for the
  linear-program family runs with Y1 on the right.
* ``opt_oracle(inst)`` returns the exact optimizer set, including the
  degenerate segment/orbit at the boundary instance.
* ``kappa()`` is the family's optimizer gap: the infimum over Y1 x Y2 of
  optimizer-set distance in the family norm.  Where the source material's
  stated constant disagrees with the computed infimum, ``gap_note`` carries
  both values and a discrepancy flag; the descriptor always stores the
  computed (true) gap, because the fooling guarantees are triangle
  inequalities against it.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from ..core.creal import CReal, Verdict, sign_at
from ..core.geometry import Norm, OptimizerSet, distance_to_set, set_distance
from ..errors import InvalidInstanceError

Rational = Fraction


@dataclass(frozen=True)
class Instance:
    """A point y in a family's parameter space.

    ``params`` is the digit-oracle view (CReal vector); ``payload`` carries
    the family-specific exact form used by oracles; ``t`` is the exact path
    parameter when the instance lies on the family path.
    """

    family: str
    params: tuple[CReal, ...]
    t: Fraction | None = None
    payload: Any = None

    def serializable(self, level: int = 64) -> dict:
        out: dict[str, Any] = {
            "family": self.family,
            "params": [self._param_str(p, level) for p in self.params],
        }
        if self.t is not None:
            out["t"] = str(self.t)
        return out

    @staticmethod
    def _param_str(p: CReal, level: int) -> str:
        exact = p.exact_rational()
        if exact is not None:
            return str(exact)
        return f"~{p.approx(level)}@{level}"


@dataclass(frozen=True)
class GapNote:
    """Computed gap vs. the constant stated in the source derivation."""

    computed_repr: str
    paper_value_repr: str
    matches_paper: bool
    detail: str = ""


class Family(abc.ABC):
    name: str
    solution_dim: int
    param_dim: int
    norm: Norm
    sense: str  # "max" or "min"
    y1_side: Verdict  # verdict of membership_scalar's sign on Y1 instances
    lipschitz: Fraction  # bound on d(params)/dt, <= 2 for all defaults
    t0: Fraction = Fraction(0)

    # -- path / instances ----------------------------------------------------

    @abc.abstractmethod
    def path(self, t: Fraction) -> Instance:
        """Instance at path parameter t in [-1, 1]; t0 = 0 is the boundary."""

    def check_path_parameter(self, t: Fraction) -> Fraction:
        t = Fraction(t)
        if not -1 <= t <= 1:
            raise InvalidInstanceError(f"path parameter {t} outside [-1, 1]")
        return t

    @abc.abstractmethod
    def instance_from_rationals(self, values: Sequence[Fraction]) -> Instance:
        """Instance from an exact rational parameter vector (solver view)."""

    # -- problem surface -------------------------------------------------------

    @abc.abstractmethod
    def objective(self, inst: Instance, x: Sequence[Fraction]) -> CReal:
        """F(x, y); exact rational-backed where the integrands are polynomial."""

    @abc.abstractmethod
    def opt_oracle(self, inst: Instance) -> OptimizerSet:
        """Exact optimizer set from the closed-form derivation."""

    @abc.abstractmethod
    def membership_scalar(self, inst: Instance) -> CReal:
        """Deciding quantity: negative on the t<0 branch, positive on t>0."""

    @abc.abstractmethod
    def brute_force(self, inst: Instance, resolution: Fraction) -> list[tuple[Fraction, ...]]:
        """Independent argmax/argmin search at the given resolution."""

    @abc.abstractmethod
    def kappa(self) -> CReal:
        """The optimizer gap (computed infimum) in the family norm."""

    @abc.abstractmethod
    def gap_note(self) -> GapNote:
        ...

    # -- solution-space metric (overridable; wasserstein uses a function norm) --

    @property
    def norm_label(self) -> str:
        return self.norm.value

    def solution_error(self, x: Sequence, target: OptimizerSet) -> CReal:
        """Distance from a solver answer to the exact optimizer set."""
        return distance_to_set(x, target, self.norm)

    def optset_distance(self, s1: OptimizerSet, s2: OptimizerSet) -> CReal:
        return set_distance(s1, s2, self.norm)

    def gap_optimizer_set(self, inst: Instance) -> OptimizerSet:
        """Optimizer set used when sampling the family gap (default: the oracle)."""
        return self.opt_oracle(inst)

    def gap_sample_pairs(self, exponents) -> "list[tuple[OptimizerSet, OptimizerSet]]":
        """(Y1, Y2) optimizer-set pairs whose distance infimum is the gap.

        Default: symmetric dyadic approaches to the boundary along the path,
        which is where the infimum over Y1 x Y2 is approached for every
        family except the lattice one (it overrides this with a full-range
        tilt grid, its infimum being attained away from the boundary).
        """
        from ..core.dyadic import pow2

        pairs = []
        for j in exponents:
            t = pow2(-j)
            pairs.append(
                (
                    self.gap_optimizer_set(self.path(-t)),
                    self.gap_optimizer_set(self.path(t)),
                )
            )
        return pairs

    # -- shared helpers --------------------------------------------------------

    def membership_y1(self, inst: Instance, n: int) -> Verdict:
        """Finite-precision membership test; see y1_side for the Y1 verdict.

        Sound at every level: BELOW/ABOVE are never wrong; UNKNOWN happens
        only while the deciding scalar is within 2**(2-n) of the boundary.
        """
        return sign_at(self.membership_scalar(inst), n)

    def classify_y1(self, inst: Instance, n: int) -> bool | None:
        """True for Y1, False for Y2, None while undecided at level n."""
        v = self.membership_y1(inst, n)
        if v is Verdict.UNKNOWN:
            return None
        return v is self.y1_side

    def descriptor(self) -> dict:
        note = self.gap_note()
        return {
            "name": self.name,
            "solution_dim": self.solution_dim,
            "param_dim": self.param_dim,
            "norm": self.norm_label,
            "sense": self.sense,
            "t0": str(self.t0),
            "kappa": note.computed_repr,
            "paper_kappa": note.paper_value_repr,
            "kappa_matches_paper": note.matches_paper,
            "y1_side": self.y1_side.value,
        }


_REGISTRY: dict[str, Family] = {}


def register(family: Family) -> Family:
    _REGISTRY[family.name] = family
    return family


def get_family(name: str) -> Family:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; known: {sorted(_REGISTRY)}") from None


def family_names() -> list[str]:
    return sorted(_REGISTRY)
