"""Global runtime knobs.

The step budget bounds the number of elementary steps (series terms, grid
cells, enumeration nodes) a single approximator query may consume, so that a
non-terminating computation surfaces as a reportable error instead of a hang.
It can be overridden with the ``OPTGAP_STEP_BUDGET`` environment variable.
"""

from __future__ import annotations

import os
import threading

from .errors import StepBudgetExceeded

DEFAULT_STEP_BUDGET = 10**6

# Per-step rounding for iterative solvers: iterates are rounded to multiples
# of 2**-SOLVER_ROUND_BITS to keep numerator growth bounded.
SOLVER_ROUND_BITS = 128

_local = threading.local()


def step_budget() -> int:
    env = os.environ.get("OPTGAP_STEP_BUDGET")
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise ValueError(f"OPTGAP_STEP_BUDGET must be an integer, got {env!r}") from exc
        if value <= 0:
            raise ValueError("OPTGAP_STEP_BUDGET must be positive")
        return value
    return DEFAULT_STEP_BUDGET


class _Meter:
    __slots__ = ("remaining",)

    def __init__(self, limit: int):
        self.remaining = limit


def reset_steps() -> None:
    """Start a fresh step account for the current thread."""
    _local.meter = _Meter(step_budget())


def charge(n: int = 1) -> None:
    """Consume ``n`` elementary steps; raises once the budget is gone."""
    meter = getattr(_local, "meter", None)
    if meter is None:
        meter = _Meter(step_budget())
        _local.meter = meter
    meter.remaining -= n
    if meter.remaining < 0:
        raise StepBudgetExceeded(
            f"approximator exceeded the configured step budget of {step_budget()}"
        )
