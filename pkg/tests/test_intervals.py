import math
from fractions import Fraction

import pytest

from cclab.intervals import (Interval, iroot, leq_certified, log_interval,
                             pow_interval, sqrt_interval)


def test_iroot():
    assert iroot(0, 3) == 0
    assert iroot(26, 3) == 2
    assert iroot(27, 3) == 3
    assert iroot(10 ** 24, 2) == 10 ** 12
    big = 7 ** 40
    assert iroot(big, 40) == 7
    assert iroot(big - 1, 40) == 6


def test_sqrt_interval():
    iv = sqrt_interval(Interval.point(2), 40)
    assert iv.lo <= Fraction(math.sqrt(2)).limit_denominator(10 ** 9) <= iv.hi
    assert iv.lo * iv.lo <= 2 <= iv.hi * iv.hi
    assert iv.width <= Fraction(3, 1 << 40)
    ex = sqrt_interval(Interval.point(49), 20)
    assert ex.lo <= 7 <= ex.hi


def test_pow_interval_exact_and_fractional():
    iv = pow_interval(3, Interval.point(4), 20)
    assert iv.lo == iv.hi == 81
    iv = pow_interval(3, Interval.point(Fraction(1, 2)), 40)
    s3 = math.sqrt(3)
    assert float(iv.lo) <= s3 <= float(iv.hi)
    assert iv.width < Fraction(1, 1 << 20)
    # negative exponents
    iv = pow_interval(2, Interval.point(Fraction(-3, 2)), 40)
    want = 2.0 ** -1.5
    assert float(iv.lo) <= want <= float(iv.hi)


def test_pow_interval_large_denominator_is_fast():
    # exponent with a huge denominator must not build huge powers
    e = Fraction(12345678901234567, 2 ** 60)
    iv = pow_interval(3, Interval.point(e), 64)
    assert 1 <= iv.lo <= iv.hi <= 3


def test_log_interval():
    iv = log_interval(3, Fraction(81), 30)
    assert iv.lo <= 4 <= iv.hi
    iv = log_interval(3, Fraction(10), 40)
    want = math.log(10, 3)
    assert float(iv.lo) <= want <= float(iv.hi)
    assert iv.width <= Fraction(1, 1 << 20)
    iv = log_interval(2, Fraction(1, 3), 40)
    assert float(iv.lo) <= math.log(1 / 3, 2) <= float(iv.hi)


def test_roundtrip_pow_log():
    for v in (Fraction(7), Fraction(22, 7), Fraction(1000)):
        lg = log_interval(5, v, 50)
        pw = pow_interval(5, lg, 50)
        assert pw.lo <= v <= pw.hi


def test_leq_certified():
    assert leq_certified(Fraction(5), lambda b: pow_interval(3, Interval.point(Fraction(3, 2)), b))
    assert not leq_certified(Fraction(6), lambda b: pow_interval(3, Interval.point(Fraction(3, 2)), b))
    # 3^1.5 = 5.196...
