"""Certified rational bounds for the irrational quantities in the inequality
suite (q^sqrt(x), log_q, fractional powers).

Everything is an exact Fraction interval [lo, hi] produced at a requested
precision; comparisons refine until decided, so no verdict can flip with more
precision.  Exact rational fast paths avoid the interval machinery entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def iroot(v: int, n: int) -> int:
    """floor(v^(1/n)) for v >= 0 by Newton iteration on big ints."""
    assert v >= 0 and n >= 1
    if v == 0:
        return 0
    if n == 1:
        return v
    x = 1 << (-(-v.bit_length() // n))
    while True:
        y = ((n - 1) * x + v // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    while x ** n > v:
        x -= 1
    while (x + 1) ** n <= v:
        x += 1
    return x


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        assert self.lo <= self.hi

    @staticmethod
    def point(x) -> "Interval":
        x = Fraction(x)
        return Interval(x, x)

    def __add__(self, other):
        other = _coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other):
        other = _coerce(other)
        vals = [a * b for a in (self.lo, self.hi) for b in (other.lo, other.hi)]
        return Interval(min(vals), max(vals))

    __rmul__ = __mul__

    def max_with(self, x) -> "Interval":
        x = Fraction(x)
        return Interval(max(self.lo, x), max(self.hi, x))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _coerce(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.point(x)


def sqrt_interval(x, prec_bits: int) -> Interval:
    x = _coerce(x)
    assert x.lo >= 0
    return Interval(_sqrt_lower(x.lo, prec_bits), _sqrt_upper(x.hi, prec_bits))


def _sqrt_lower(x: Fraction, prec: int) -> Fraction:
    if x == 0:
        return Fraction(0)
    M = 1 << prec
    r = iroot(x.numerator * M * M // x.denominator, 2)
    lo = Fraction(r, M)
    while lo * lo > x:
        lo -= Fraction(1, M)
    return lo


def _sqrt_upper(x: Fraction, prec: int) -> Fraction:
    lo = _sqrt_lower(x, prec)
    hi = lo + Fraction(2, 1 << prec)
    assert hi * hi >= x
    return hi


def pow_interval(base: int, expo, prec_bits: int) -> Interval:
    """base^expo for an integer base >= 2 and an exponent interval.  The
    fractional part of the exponent goes through an iterated-square-root
    product at bounded precision, so no astronomically large powers are ever
    formed."""
    e = _coerce(expo)
    return Interval(_pow_lower(base, e.lo, prec_bits), _pow_upper(base, e.hi, prec_bits))


def _q_fracpow_bounds(q: int, t: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """Certified bounds for q^t with 0 <= t <= 1, via the binary expansion of
    t and directionally rounded square-root chains."""
    assert 0 <= t <= 1
    if t == 0:
        return Fraction(1), Fraction(1)
    if t == 1:
        return Fraction(q), Fraction(q)
    M = 1 << (prec + 16)

    def rdown(x: Fraction) -> Fraction:
        return Fraction((x.numerator * M) // x.denominator, M)

    def rup(x: Fraction) -> Fraction:
        return Fraction(-((-x.numerator * M) // x.denominator), M)

    lo, hi = Fraction(1), Fraction(1)
    s_lo = s_hi = Fraction(q)  # q^(2^0)
    rem = t
    for _ in range(prec + 2):
        s_lo = _sqrt_lower(s_lo, prec + 16)
        s_hi = _sqrt_upper(s_hi, prec + 16)
        rem *= 2
        if rem >= 1:
            rem -= 1
            lo, hi = rdown(lo * s_lo), rup(hi * s_hi)
        if rem == 0:
            return lo, hi
    # remaining exponent < 2^-(prec+2): bound the tail by the last root
    hi = rup(hi * s_hi)
    return lo, hi


def _pow_upper(q: int, e: Fraction, prec: int) -> Fraction:
    n = e.numerator // e.denominator
    assert abs(n) <= 10 ** 5, "exponent integer part unexpectedly large"
    t = e - n
    _, fhi = _q_fracpow_bounds(q, t, prec)
    return Fraction(q) ** n * fhi


def _pow_lower(q: int, e: Fraction, prec: int) -> Fraction:
    n = e.numerator // e.denominator
    assert abs(n) <= 10 ** 5, "exponent integer part unexpectedly large"
    t = e - n
    flo, _ = _q_fracpow_bounds(q, t, prec)
    return Fraction(q) ** n * flo


def log_interval(base: int, value: Fraction, prec_bits: int) -> Interval:
    """log_base(value) for value > 0: strip the integer part, then extract
    binary digits by certified interval squaring with bounded denominators."""
    v = Fraction(value)
    assert v > 0 and base >= 2
    e = 0
    while v >= base:
        v /= base
        e += 1
    while v < 1:
        v *= base
        e -= 1
    M = 1 << (prec_bits + 16)

    def rdown(x: Fraction) -> Fraction:
        return Fraction((x.numerator * M) // x.denominator, M)

    def rup(x: Fraction) -> Fraction:
        return Fraction(-((-x.numerator * M) // x.denominator), M)

    cur_lo, cur_hi = v, v
    frac = Fraction(0)
    scale = Fraction(1)
    for _ in range(prec_bits):
        scale /= 2
        cur_lo = rdown(cur_lo * cur_lo)
        cur_hi = rup(cur_hi * cur_hi)
        if cur_lo >= base:
            frac += scale
            cur_lo /= base
            cur_hi /= base
        elif cur_hi < base:
            pass
        else:
            break  # digit undecided at this precision; stop with a safe tail
        if cur_lo == cur_hi == 1:
            return Interval(Fraction(e) + frac, Fraction(e) + frac)
    return Interval(Fraction(e) + frac, Fraction(e) + frac + 2 * scale)


# 50 truncated decimal digits of pi; enough for any certified trig bound here
_PI_LO = Fraction(31415926535897932384626433832795028841971693993751, 10 ** 49)
_PI_HI = _PI_LO + Fraction(1, 10 ** 49)


def _cos_bounds(num: int, den: int, prec: int) -> Interval:
    """Certified bounds for cos(2 pi num/den), by Taylor series with an
    explicit remainder at a rational midpoint plus the pi uncertainty."""
    num %= den
    t = Fraction(num, den)
    x_mid = (_PI_LO + _PI_HI) * t  # = 2 * pi_mid * t
    # |cos(x) - cos(x_mid)| <= |x - x_mid| <= 2 t (pi_hi - pi_lo)
    slack = 2 * t * (_PI_HI - _PI_LO)
    M = 1 << (prec + 40)

    def rnd(x: Fraction) -> Fraction:
        return Fraction(round(x * M), M) if x.denominator > M else x

    # cos(x_mid) by Taylor with N terms; remainder <= x^(2N)/(2N)!; each
    # denominator cap adds <= 1/(2M), amplified by at most ~100 overall
    x_mid = rnd(x_mid)
    x2 = rnd(x_mid * x_mid)
    term = Fraction(1)
    total = Fraction(1)
    N = max(14, prec // 3 + 4)
    for j in range(1, N):
        term = rnd(term * x2 / (2 * j * (2 * j - 1)))
        total += term if j % 2 == 0 else -term
    rem = Fraction(7) ** (2 * N) / _factorial(2 * N)  # x <= 2 pi < 7
    err = rem + slack + Fraction(200 * N, M)
    return Interval(total - err, total + err)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def real_cyclo_interval(z, prec: int) -> Interval:
    """Certified bounds for a real cyclotomic number: sum of coefficients
    against certified cosine values (the sine parts cancel by realness)."""
    assert z.is_real(), "interval bounds are for real cyclotomic values"
    if z.is_rational():
        return Interval.point(z.rational_value())
    total = Interval.point(0)
    e = z.order
    for k, c in z.coeffs.items():
        total = total + _cos_bounds(k, e, prec) * c
    return total


def real_cyclo_leq(a, b, start_bits: int = 24, max_bits: int = 512) -> bool:
    """a <= b for real cyclotomic (or rational) values, decided exactly."""
    from .cyclotomic import Cyclo

    za = a if isinstance(a, Cyclo) else Cyclo.rational(a)
    zb = b if isinstance(b, Cyclo) else Cyclo.rational(b)
    if za == zb:
        return True
    diff = zb - za
    if diff.is_rational():
        return diff.rational_value() >= 0
    bits = start_bits
    while bits <= max_bits:
        iv = real_cyclo_interval(diff, bits)
        if iv.lo > 0:
            return True
        if iv.hi < 0:
            return False
        bits *= 2
    raise ArithmeticError("cyclotomic comparison undecided (values too close)")


def leq_certified(lhs: Fraction, rhs_fn, start_bits: int = 16, max_bits: int = 512) -> bool:
    """Decide lhs <= rhs where rhs_fn(prec) returns an Interval shrinking with
    precision; never decides from a side that more precision could flip."""
    lhs = Fraction(lhs)
    bits = start_bits
    while bits <= max_bits:
        r = rhs_fn(bits)
        if lhs <= r.lo:
            return True
        if lhs > r.hi:
            return False
        bits *= 2
    raise ArithmeticError("comparison undecided at maximum precision (exact tie?)")


def leq_certified_iv(lhs_fn, rhs_fn, start_bits: int = 24, max_bits: int = 512) -> bool:
    """Two-sided certified comparison of interval-valued quantities."""
    bits = start_bits
    while bits <= max_bits:
        a = lhs_fn(bits)
        b = rhs_fn(bits)
        if a.hi <= b.lo:
            return True
        if a.lo > b.hi:
            return False
        bits *= 2
    raise ArithmeticError("comparison undecided at maximum precision (exact tie?)")


def geq_certified(lhs: Fraction, rhs_fn, start_bits: int = 16, max_bits: int = 512) -> bool:
    lhs = Fraction(lhs)
    bits = start_bits
    while bits <= max_bits:
        r = rhs_fn(bits)
        if lhs >= r.hi:
            return True
        if lhs < r.lo:
            return False
        bits *= 2
    raise ArithmeticError("comparison undecided at maximum precision (exact tie?)")
