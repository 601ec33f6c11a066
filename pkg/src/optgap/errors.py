"""Exception hierarchy shared across the package."""


class OptgapError(Exception):
    """Base class for all package errors."""


class StepBudgetExceeded(OptgapError):
    """An approximator ran past the configured elementary-step budget."""


class PrecisionBudgetExceeded(OptgapError):
    """A decision procedure was still undecided at its maximum precision."""


class SeparationWitnessError(OptgapError):
    """A division/sqrt was requested without a valid separation-from-zero witness."""


class UnsupportedInstanceError(OptgapError):
    """Instance lies outside the parameter slice an oracle supports."""


class InvalidInstanceError(OptgapError):
    """Instance parameters violate family-specific validity constraints."""


class InfeasibleError(OptgapError):
    """LP feasible region is empty."""


class UnboundedError(OptgapError):
    """LP objective is unbounded over the feasible region."""


class ReplayMismatchError(OptgapError):
    """A solver replay produced different output under identical oracle answers."""
