"""Digit-level access to a vector of computable reals, with a query audit log.

A solver under test sees instance parameters only through a ``DigitOracle``:
it may request the level-n approximant of any coordinate, and every request is
logged.  The maximum level ever answered is the solver's consumed precision —
the quantity the fooling harness attacks.  An oracle can carry an overlay that
pins all answers at levels <= pin_level to another answer function; this is
how two nearby instances are made indistinguishable up to a digit prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .. import config
from .creal import CReal, check_level


@dataclass(frozen=True)
class QueryRecord:
    coord: int
    level: int
    answer: Fraction


class DigitOracle:
    """Single-session digit oracle over a CReal vector.

    One logical consumer at a time: the query log is part of the experimental
    record, and replaying the same query sequence returns bit-identical
    answers (approximators are pure and cached).
    """

    def __init__(
        self,
        source: Sequence[CReal],
        pin_level: int | None = None,
        pinned: Callable[[int, int], Fraction] | None = None,
    ):
        if (pin_level is None) != (pinned is None):
            raise ValueError("pin_level and pinned must be supplied together")
        self._source = tuple(source)
        self._pin_level = pin_level
        self._pinned = pinned
        self._log: list[QueryRecord] = []

    @property
    def dim(self) -> int:
        return len(self._source)

    def query(self, coord: int, level: int) -> Fraction:
        check_level(level)
        if not 0 <= coord < len(self._source):
            raise IndexError(f"coordinate {coord} out of range 0..{len(self._source) - 1}")
        config.reset_steps()  # the step budget is per query
        if self._pin_level is not None and level <= self._pin_level:
            answer = Fraction(self._pinned(coord, level))
        else:
            answer = self._source[coord].approx(level)
        self._log.append(QueryRecord(coord, level, answer))
        return answer

    def query_vector(self, level: int) -> tuple[Fraction, ...]:
        """All coordinates at one level (each individually logged)."""
        return tuple(self.query(i, level) for i in range(len(self._source)))

    @property
    def query_log(self) -> tuple[QueryRecord, ...]:
        return tuple(self._log)

    def consumed_precision(self) -> int:
        """Highest level answered so far (0 if nothing was queried)."""
        return max((rec.level for rec in self._log), default=0)

    def answers(self) -> tuple[tuple[int, int, str], ...]:
        """Log in serializable form: (coord, level, 'p/q')."""
        return tuple((r.coord, r.level, str(r.answer)) for r in self._log)
