"""Exact arithmetic in Q[sqrt(2)], with exact comparison of sqrt-norm sums.

Basis coordinates of the lattice family live in this field, which makes
determinant tests, sign tests, and comparisons of norm sums
sqrt(A) + sqrt(B) vs sqrt(C) + sqrt(D) fully decidable (repeated squaring
stays inside the field), including the exact tie at the critical parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core.creal import CReal
from ..core.dyadic import sqrt_enclosure

F = Fraction


@dataclass(frozen=True)
class Quad:
    """a + b*sqrt(2) with exact rational a, b."""

    a: Fraction
    b: Fraction = F(0)

    @staticmethod
    def of(x) -> "Quad":
        if isinstance(x, Quad):
            return x
        return Quad(F(x))

    def __add__(self, other) -> "Quad":
        o = Quad.of(other)
        return Quad(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other) -> "Quad":
        o = Quad.of(other)
        return Quad(self.a - o.a, self.b - o.b)

    def __rsub__(self, other) -> "Quad":
        return Quad.of(other) - self

    def __mul__(self, other) -> "Quad":
        o = Quad.of(other)
        return Quad(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __neg__(self) -> "Quad":
        return Quad(-self.a, -self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(2)."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # opposite signs: compare a^2 with 2 b^2 (never equal for a, b != 0)
        d = self.a * self.a - 2 * self.b * self.b
        assert d != 0, "sqrt(2) cannot be rational"
        if self.a > 0:
            return 1 if d > 0 else -1
        return -1 if d > 0 else 1

    def exact_rational(self) -> Fraction | None:
        return self.a if self.b == 0 else None

    def to_creal(self) -> CReal:
        """CReal view; error at level n is at most 2**-(n+1)."""
        if self.b == 0:
            return CReal.from_rational(self.a)
        pad = 1 + max(0, abs(self.b).numerator.bit_length() - abs(self.b).denominator.bit_length() + 1)
        a, b = self.a, self.b
        return CReal(lambda n: a + b * sqrt_enclosure(F(2), n + pad))

    def __repr__(self) -> str:
        return f"Quad({self.a} + {self.b}*sqrt2)"


SQRT2 = Quad(F(0), F(1))


def sign_p_plus_q_sqrt(p: Quad, q: Quad, w: Quad) -> int:
    """Exact sign of p + q*sqrt(w) for w >= 0, all in Q[sqrt2]."""
    if w.sign() == 0 or q.sign() == 0:
        return p.sign()
    sp, sq = p.sign(), q.sign()
    if sp == 0:
        return sq
    if sp > 0 and sq > 0:
        return 1
    if sp < 0 and sq < 0:
        return -1
    d = (p * p - q * q * w).sign()  # sign of p^2 - q^2 w
    return d if sp > 0 else -d


def compare_sqrt_sums(a: Quad, b: Quad, c: Quad, d: Quad) -> int:
    """Exact sign of (sqrt(a) + sqrt(b)) - (sqrt(c) + sqrt(d)), radicands >= 0.

    Squaring twice keeps everything in the field: after the first squaring
    the comparison is 2*sqrt(ab) + s vs 2*sqrt(cd) with s in the field, and
    the second squaring reduces to the sign of an element plus one radical.
    """
    for r in (a, b, c, d):
        if r.sign() < 0:
            raise ValueError("radicands must be non-negative")
    s = (a + b) - (c + d)
    lhs_nonneg = s.sign() >= 0 or (4 * (a * b) - s * s).sign() >= 0
    if not lhs_nonneg:
        return -1
    p = 4 * (a * b) + s * s - 4 * (c * d)
    return sign_p_plus_q_sqrt(p, 4 * s, a * b)
