"""Dyadic enclosures of elementary functions on exact rationals.

Every function here takes/returns ``fractions.Fraction`` and guarantees an
absolute error of at most ``2**-bits``.  Internally values are rounded to a
working dyadic grid after each heavy operation so numerators stay bounded;
the rounding error is accounted for in the (conservative) bound.  Floats are
never used.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .. import config

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def dyadic_round(x: Fraction, bits: int) -> Fraction:
    """Round ``x`` to the grid of multiples of ``2**-bits`` (half-to-even)."""
    scaled = x * (1 << bits)
    return Fraction(round(scaled), 1 << bits)


def floor_log2(x: Fraction) -> int:
    """Largest integer e with 2**e <= x.  Requires x > 0."""
    if x <= 0:
        raise ValueError("floor_log2 requires a positive argument")
    n, d = x.numerator, x.denominator
    e = n.bit_length() - d.bit_length()
    # bit_length estimate can be off by one; fix up exactly.
    if x < Fraction(1 << max(e, 0), 1 << max(-e, 0)):
        e -= 1
    if x >= Fraction(1 << max(e + 1, 0), 1 << max(-(e + 1), 0)):
        e += 1
    return e


def pow2(e: int) -> Fraction:
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


def sqrt_enclosure(x: Fraction, bits: int) -> Fraction:
    """Dyadic r with |r - sqrt(x)| <= 2**-bits, for x >= 0.

    Uses exact integer square roots on a scaled numerator, so the returned
    endpoint is an exact rational bracketing witness.
    """
    if x < 0:
        raise ValueError("sqrt of a negative rational")
    if x == 0:
        return _ZERO
    p = bits + 1
    n, d = x.numerator, x.denominator
    root = math.isqrt(n * d << (2 * p))
    return Fraction(root, d << p)


_LN2_CACHE: dict[int, Fraction] = {}


def ln2_enclosure(bits: int) -> Fraction:
    """Dyadic r with |r - ln 2| <= 2**-bits (ln 2 = 2*atanh(1/3))."""
    cached = _LN2_CACHE.get(bits)
    if cached is not None:
        return cached
    # term ratio is 1/9, so the tail after term J is < term_J / 8
    z2 = Fraction(1, 9)
    term = Fraction(1, 3)
    total = _ZERO
    j = 0
    while True:
        config.charge()
        total += term / (2 * j + 1)
        term *= z2
        j += 1
        if term * 2 < pow2(-(bits + 3)):
            break
    result = dyadic_round(2 * total, bits + 2)
    _LN2_CACHE[bits] = result
    return result


def _atanh_series(z: Fraction, work_bits: int) -> Fraction:
    """atanh(z) for |z| <= 0.36 with error <= 2**-(work_bits - 2)."""
    z = dyadic_round(z, work_bits)
    z2 = dyadic_round(z * z, work_bits)
    total = _ZERO
    power = z
    j = 0
    while True:
        config.charge()
        total += power / (2 * j + 1)
        power = dyadic_round(power * z2, work_bits + 8)
        j += 1
        # |z2| <= 0.13, so remaining tail < |power| * 1.2
        if abs(power) * 2 < pow2(-(work_bits + 2)):
            break
        if j > 4 * work_bits:
            raise ArithmeticError("atanh series failed to converge")
    return total


def ln_enclosure(x: Fraction, bits: int) -> Fraction:
    """Dyadic r with |r - ln(x)| <= 2**-bits, for x > 0."""
    if x <= 0:
        raise ValueError("ln of a non-positive rational")
    if x == 1:
        return _ZERO
    e = floor_log2(x)
    m = x * pow2(-e)  # m in [1, 2)
    if m > Fraction(4, 3):  # keep |z| <= 1/5 by splitting one more factor of 2
        m = m / 2
        e += 1
    pad = 8 + (abs(e) + 2).bit_length()
    work = bits + pad
    m = dyadic_round(m, work)  # ln perturbation <= 2**-(work-1) since m >= 2/3
    z = (m - 1) / (m + 1)  # |z| <= 1/5
    lnm = 2 * _atanh_series(z, work)
    result = lnm if e == 0 else lnm + e * ln2_enclosure(work)
    return dyadic_round(result, bits + 2)


def log2_enclosure(x: Fraction, bits: int) -> Fraction:
    """Dyadic r with |r - log2(x)| <= 2**-bits, for x > 0.

    Exact when x is a power of two.
    """
    if x <= 0:
        raise ValueError("log2 of a non-positive rational")
    n, d = x.numerator, x.denominator
    if n & (n - 1) == 0 and d & (d - 1) == 0:
        return Fraction(n.bit_length() - d.bit_length())
    e = floor_log2(x)
    pad = 8 + (abs(e) + 2).bit_length()
    work = bits + pad
    lnx = ln_enclosure(x, work)
    ln2 = ln2_enclosure(work)
    # |lnx/ln2 - true| <= (|lnx - true_lnx| + |log2(x)|*|ln2 - true_ln2|) / ln2
    return dyadic_round(lnx / ln2, bits + 2)


def exp_enclosure(u: Fraction, bits: int) -> Fraction:
    """Dyadic r with |r - exp(u)| <= 2**-bits * max(1, exp(u)) surrogate.

    The guarantee provided is |r - exp(u)| <= 2**-bits whenever exp(u) <= 2**40;
    callers in this package only exponentiate bounded log-ratios.
    """
    if u == 0:
        return _ONE
    if abs(u) > 60:  # exp(60) ~ 1e26; nothing in this package goes near it
        raise OverflowError("exp argument out of the supported range")
    # range reduction u = k*ln2 + r with |r| <= 0.4
    ln2_coarse = ln2_enclosure(48)
    k = round(u / ln2_coarse)
    pad = 10 + max(0, k) + (abs(k) + 2).bit_length()
    work = bits + pad
    r = dyadic_round(u - k * ln2_enclosure(work), work)
    total = _ONE
    term = _ONE
    j = 0
    while True:
        config.charge()
        j += 1
        term = dyadic_round(term * r / j, work + 8)
        total += term
        if abs(term) * 2 < pow2(-(work + 2)):
            break
        if j > 4 * work:
            raise ArithmeticError("exp series failed to converge")
    return dyadic_round(total * pow2(k), bits + 2)
