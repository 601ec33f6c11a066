"""Computable reals as cached on-demand approximation streams.

A ``CReal`` wraps a deterministic approximator ``n -> Fraction`` whose answer
at level ``n`` is within ``2**-n`` of the represented real (effective
convergence).  Approximators must be pure; results are cached so repeated
queries are bit-identical.  Rational-backed values carry their exact value and
arithmetic propagates exactness, so piecewise-polynomial objectives evaluate
exactly.  No floats anywhere.
"""

from __future__ import annotations

import enum
import threading
from fractions import Fraction
from typing import Callable, Union

from .. import config
from ..errors import SeparationWitnessError
from .dyadic import floor_log2, pow2, sqrt_enclosure

Rational = Fraction
Scalar = Union[Fraction, int, "CReal"]


def check_level(n: int) -> int:
    """Validate a precision level (guaranteed error <= 2**-n)."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"precision level must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"precision level must be >= 0, got {n}")
    return n


class Verdict(enum.Enum):
    """Outcome of a finite-precision comparison; UNKNOWN is a legal answer."""

    BELOW = "below"
    ABOVE = "above"
    UNKNOWN = "unknown"


def _ceil_log2_magnitude(bound: Fraction) -> int:
    """Smallest b >= 0 with bound <= 2**b."""
    if bound <= 1:
        return 0
    e = floor_log2(bound)
    return e if pow2(e) == bound else e + 1


class CReal:
    """A real number represented by an effectively convergent rational stream."""

    __slots__ = ("_fn", "_exact", "_cache", "_lock")

    def __init__(self, approximator: Callable[[int], Fraction], exact: Fraction | None = None):
        self._fn = approximator
        self._exact = exact
        self._cache: dict[int, Fraction] = {}
        self._lock = threading.Lock()

    def approx(self, n: int) -> Fraction:
        """Rational within 2**-n of the represented real; repeatable."""
        check_level(n)
        if self._exact is not None:
            return self._exact
        with self._lock:
            hit = self._cache.get(n)
        if hit is not None:
            return hit
        config.charge()
        value = self._fn(n)
        if not isinstance(value, Fraction):
            value = Fraction(value)
        with self._lock:
            self._cache[n] = value
        return value

    # -- constructors / inspection ------------------------------------------

    @staticmethod
    def from_rational(q: Fraction | int) -> CReal:
        q = Fraction(q)
        return CReal(lambda n: q, exact=q)

    @staticmethod
    def coerce(x: Scalar) -> CReal:
        return x if isinstance(x, CReal) else CReal.from_rational(x)

    def exact_rational(self) -> Fraction | None:
        """The exact value when rational-backed by construction, else None."""
        return self._exact

    # -- operators -----------------------------------------------------------

    def __add__(self, other: Scalar) -> CReal:
        return add(self, CReal.coerce(other))

    def __sub__(self, other: Scalar) -> CReal:
        return sub(self, CReal.coerce(other))

    def __neg__(self) -> CReal:
        if self._exact is not None:
            return CReal.from_rational(-self._exact)
        return CReal(lambda n: -self.approx(n))

    def __mul__(self, other: Scalar) -> CReal:
        return mul(self, CReal.coerce(other))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other: Scalar) -> CReal:
        return sub(CReal.coerce(other), self)

    def __repr__(self) -> str:
        if self._exact is not None:
            return f"CReal({self._exact})"
        a = self.approx(30)
        return f"CReal(~{a.numerator / a.denominator:.9g})"


def add(x: CReal, y: CReal) -> CReal:
    ex, ey = x.exact_rational(), y.exact_rational()
    if ex is not None and ey is not None:
        return CReal.from_rational(ex + ey)
    if ex is not None:
        return shift(ex, y)
    if ey is not None:
        return shift(ey, x)
    return CReal(lambda n: x.approx(n + 1) + y.approx(n + 1))


def sub(x: CReal, y: CReal) -> CReal:
    return add(x, -y)


def shift(q: Fraction, x: CReal) -> CReal:
    """q + x without spending a precision bit on the exact summand."""
    q = Fraction(q)
    return CReal(lambda n: q + x.approx(n))


def scale(q: Fraction, x: CReal) -> CReal:
    """q * x with exact rational coefficient q."""
    q = Fraction(q)
    if q == 0:
        return CReal.from_rational(0)
    ex = x.exact_rational()
    if ex is not None:
        return CReal.from_rational(q * ex)
    b = _ceil_log2_magnitude(abs(q))
    return CReal(lambda n: q * x.approx(n + b))


def mul(x: CReal, y: CReal) -> CReal:
    ex, ey = x.exact_rational(), y.exact_rational()
    if ex is not None and ey is not None:
        return CReal.from_rational(ex * ey)
    if ex is not None:
        return scale(ex, y)
    if ey is not None:
        return scale(ey, x)

    def fn(n: int) -> Fraction:
        bx = abs(x.approx(0)) + 1  # >= |x|
        by = abs(y.approx(0)) + 1
        kx = n + 1 + _ceil_log2_magnitude(by)
        ky = n + 1 + _ceil_log2_magnitude(bx + 1)
        return x.approx(kx) * y.approx(ky)

    return CReal(fn)


def reciprocal(y: CReal, witness: int) -> CReal:
    """1/y given a separation witness: |approx(y, witness)| > 2**(1-witness).

    The witness certifies |y| >= 2**-witness, which zero-testing alone cannot
    decide; callers must supply it.
    """
    check_level(witness)
    probe = y.approx(witness)
    if abs(probe) <= pow2(1 - witness):
        raise SeparationWitnessError(
            f"level-{witness} approximant {probe} does not separate the divisor from zero"
        )
    ey = y.exact_rational()
    if ey is not None:
        return CReal.from_rational(1 / ey)

    def fn(n: int) -> Fraction:
        return 1 / y.approx(n + 2 * witness + 2)

    return CReal(fn)


def div(x: CReal, y: CReal, witness: int) -> CReal:
    return mul(x, reciprocal(y, witness))


def sqrt(x: CReal, lower_bound_witness: Fraction) -> CReal:
    """sqrt(x) given a positive rational lower bound on x (caller-asserted)."""
    lb = Fraction(lower_bound_witness)
    if lb <= 0:
        raise SeparationWitnessError("sqrt lower-bound witness must be positive")
    ex = x.exact_rational()
    if ex is not None:
        root = _exact_sqrt(ex)
        if root is not None:
            return CReal.from_rational(root)
    # 1/(2*sqrt(lb)) <= 2**b
    b = max(0, (_ceil_log2_magnitude(1 / lb) + 1) // 2)

    def fn(n: int) -> Fraction:
        xa = x.approx(n + 2 + b)
        if xa < lb:
            xa = lb
        return sqrt_enclosure(xa, n + 2)

    return CReal(fn)


def sqrt_nonneg(x: CReal) -> CReal:
    """sqrt(x) for x >= 0 without a separation witness (quadratic modulus)."""
    ex = x.exact_rational()
    if ex is not None:
        root = _exact_sqrt(ex)
        if root is not None:
            return CReal.from_rational(root)

    def fn(n: int) -> Fraction:
        xa = x.approx(2 * n + 4)
        if xa < 0:
            xa = Fraction(0)
        return sqrt_enclosure(xa, n + 2)

    return CReal(fn)


def _exact_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        raise ValueError("sqrt of a negative rational")
    import math

    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def abs_(x: CReal) -> CReal:
    ex = x.exact_rational()
    if ex is not None:
        return CReal.from_rational(abs(ex))
    return CReal(lambda n: abs(x.approx(n)))


def max_(x: CReal, y: CReal) -> CReal:
    return CReal(lambda n: max(x.approx(n), y.approx(n)))


def min_(x: CReal, y: CReal) -> CReal:
    return CReal(lambda n: min(x.approx(n), y.approx(n)))


def compare_up_to(x: CReal, y: CReal, n: int) -> Verdict:
    """Sound partial comparison from level-n approximants only.

    BELOW implies x < y and ABOVE implies x > y (never wrong); UNKNOWN
    guarantees |x - y| <= 2**(2-n).  Equality of computable reals is
    undecidable, so UNKNOWN is a legal terminal answer.
    """
    check_level(n)
    gap = x.approx(n) - y.approx(n)
    threshold = pow2(1 - n)  # both approximants may err by 2**-n
    if gap > threshold:
        return Verdict.ABOVE
    if gap < -threshold:
        return Verdict.BELOW
    return Verdict.UNKNOWN


def sign_at(x: CReal, n: int) -> Verdict:
    """Sign test against zero at level n (same soundness as compare_up_to)."""
    return compare_up_to(x, CReal.from_rational(0), n)


class CRealSequence:
    """A computable sequence of reals: (index, level) -> rational approximant."""

    def __init__(self, approximator: Callable[[int, int], Fraction]):
        self._fn = approximator
        self._cache: dict[tuple[int, int], Fraction] = {}

    def approx(self, index: int, level: int) -> Fraction:
        if index < 0:
            raise ValueError("sequence index must be >= 0")
        check_level(level)
        key = (index, level)
        if key not in self._cache:
            config.charge()
            self._cache[key] = Fraction(self._fn(index, level))
        return self._cache[key]

    def at(self, index: int) -> CReal:
        """The index-th member as a CReal."""
        return CReal(lambda n: self.approx(index, n))
