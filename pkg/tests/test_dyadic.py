"""Dyadic elementary enclosures cross-checked against mpmath."""

import random
from fractions import Fraction as F

import mpmath
import pytest

from optgap.core import dyadic as dy

mpmath.mp.prec = 350


def to_mp(q: F):
    return mpmath.mpf(q.numerator) / q.denominator


@pytest.mark.parametrize("bits", [8, 24, 53, 120, 200])
def test_ln_log2_sqrt_enclosures(bits):
    rng = random.Random(bits)
    for _ in range(40):
        x = F(rng.randint(1, 10**9), rng.randint(1, 10**9))
        assert abs(to_mp(dy.ln_enclosure(x, bits)) - mpmath.log(to_mp(x))) <= mpmath.mpf(2) ** -bits
        assert abs(to_mp(dy.log2_enclosure(x, bits)) - mpmath.log(to_mp(x), 2)) <= mpmath.mpf(2) ** -bits
        assert abs(to_mp(dy.sqrt_enclosure(x, bits)) - mpmath.sqrt(to_mp(x))) <= mpmath.mpf(2) ** -bits


@pytest.mark.parametrize("bits", [8, 24, 53, 120])
def test_exp_enclosure(bits):
    rng = random.Random(bits + 1)
    for _ in range(30):
        u = F(rng.randint(-40 * 10**6, 40 * 10**6), 10**6)
        assert abs(to_mp(dy.exp_enclosure(u, bits)) - mpmath.exp(to_mp(u))) <= mpmath.mpf(2) ** -bits


def test_log2_exact_on_powers_of_two():
    assert dy.log2_enclosure(F(1, 8), 10) == -3
    assert dy.log2_enclosure(F(1024), 10) == 10


def test_sqrt_exact_on_perfect_squares():
    assert dy.sqrt_enclosure(F(9, 16), 30) == F(3, 4)


def test_floor_log2():
    assert dy.floor_log2(F(1)) == 0
    assert dy.floor_log2(F(3, 2)) == 0
    assert dy.floor_log2(F(1, 2)) == -1
    assert dy.floor_log2(F(1023, 4)) == 7
    with pytest.raises(ValueError):
        dy.floor_log2(F(0))


def test_exp_overflow_guarded():
    with pytest.raises(OverflowError):
        dy.exp_enclosure(F(1000), 10)
