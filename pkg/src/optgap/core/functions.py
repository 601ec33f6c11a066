"""CReal-valued elementary functions built on the dyadic enclosures."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .creal import CReal, _ceil_log2_magnitude
from .dyadic import ln_enclosure, log2_enclosure, pow2

Rational = Fraction


def log2_of_rational(q: Fraction) -> CReal:
    """log2(q) as a CReal, exact on powers of two."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log2 of a non-positive rational")
    n, d = q.numerator, q.denominator
    if n & (n - 1) == 0 and d & (d - 1) == 0:
        return CReal.from_rational(n.bit_length() - d.bit_length())
    return CReal(lambda k: log2_enclosure(q, k))


def log_combination(terms: Iterable[tuple[Fraction, Fraction]]) -> CReal:
    """Sum of c * log2(r) over (c, r) pairs with exact rational c, r > 0.

    Terms with c == 0 are dropped (the 0*log 0 convention used throughout
    information-theoretic quantities).  The result is exact when every
    surviving r is a power of two.
    """
    exact = Fraction(0)
    lazy: list[tuple[Fraction, Fraction]] = []
    for c, r in terms:
        c, r = Fraction(c), Fraction(r)
        if c == 0:
            continue
        if r <= 0:
            raise ValueError("log argument must be positive when its coefficient is nonzero")
        n, d = r.numerator, r.denominator
        if n & (n - 1) == 0 and d & (d - 1) == 0:
            exact += c * (n.bit_length() - d.bit_length())
        else:
            lazy.append((c, r))
    if not lazy:
        return CReal.from_rational(exact)
    weight = sum(abs(c) for c, _ in lazy)
    pad = 1 + _ceil_log2_magnitude(weight)

    def fn(k: int) -> Fraction:
        return exact + sum(c * log2_enclosure(r, k + pad) for c, r in lazy)

    return CReal(fn)


def ln_combination(terms: Iterable[tuple[Fraction, Fraction]]) -> CReal:
    """Sum of c * ln(r) over (c, r) pairs (natural log), zero-c terms dropped."""
    lazy: list[tuple[Fraction, Fraction]] = []
    for c, r in terms:
        c, r = Fraction(c), Fraction(r)
        if c == 0 or r == 1:
            continue
        if r <= 0:
            raise ValueError("ln argument must be positive when its coefficient is nonzero")
        lazy.append((c, r))
    if not lazy:
        return CReal.from_rational(0)
    weight = sum(abs(c) for c, _ in lazy)
    pad = 1 + _ceil_log2_magnitude(weight)

    def fn(k: int) -> Fraction:
        return sum(c * ln_enclosure(r, k + pad) for c, r in lazy)

    return CReal(fn)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch in dot product")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def relu(x: Fraction) -> Fraction:
    return x if x > 0 else Fraction(0)
