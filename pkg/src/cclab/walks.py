"""Random walks on conjugacy-class Cayley graphs.

The t-step distribution is computed two independent ways (class-algebra
convolution and character-sum inversion) and asserted equal, then compared
against the spectral upper bounds on both norms.  All distributions are exact
rationals; the bound terms with half-integer exponents go through certified
intervals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chartable import CharacterTable, build_table
from .classfun import ClassPartition, classes, convolution_matrix
from .cyclotomic import Cyclo
from .groups import GroupTable
from .intervals import Interval, iroot, sqrt_interval
from .reports import FAIL, NOT_APPLICABLE, PASS, BoundReport

WALK_T_CAP = 64


class DegenerateWalkError(ValueError):
    pass


def walk_distribution(table: GroupTable, class_id: int, t: int) -> list[Fraction]:
    """Exact class-level distribution of a product of t uniform elements of
    the class: P[k] = probability the product lies in class k (convolution)."""
    part = classes(table)
    assert 0 <= t <= WALK_T_CAP
    if int(part.sizes[class_id]) == 1 and class_id != int(part.class_of[0]):
        raise DegenerateWalkError("central class: the walk is stuck on a coset")
    c0 = int(part.class_of[0])
    P = [Fraction(0)] * part.k
    P[c0] = Fraction(1)
    if t == 0:
        return P
    B = convolution_matrix(part, class_id)  # B[k][i] = a_{i,c,k}
    size_c = int(part.sizes[class_id])
    for _ in range(t):
        newP = [Fraction(0)] * part.k
        for k in range(part.k):
            acc = Fraction(0)
            for i in range(part.k):
                if P[i] and B[k, i]:
                    acc += P[i] * int(B[k, i]) * int(part.sizes[k]) \
                        / (int(part.sizes[i]) * size_c)
            newP[k] = acc
        # normalize bookkeeping: the step above distributes elementwise mass
        P = newP
    assert sum(P) == 1, "walk distribution does not sum to 1"
    return P


def walk_distribution_fourier(table: GroupTable, class_id: int, t: int) -> list[Fraction]:
    """The same distribution via the character-sum inversion formula."""
    ct = build_table(table)
    part = ct.part
    g_val = [chi.values[class_id] for chi in ct.irreducibles]
    out = []
    order = table.order
    for k in range(part.k):
        acc = Cyclo.zero(1)
        for chi, gv in zip(ct.irreducibles, g_val):
            d = chi.degree().rational_value()
            term = (gv ** t) * chi.values[int(part.inverse_class[k])] * Fraction(1, int(d) ** (t - 1)) \
                if t >= 1 else chi.values[int(part.inverse_class[k])] * d
            acc = acc + term
        val = acc.rational_value() * Fraction(int(part.sizes[k]), order)
        out.append(val)
    assert sum(out) == 1
    return out


def exact_norms(table: GroupTable, P: list[Fraction]) -> tuple[Fraction, Fraction]:
    """(||P - U||_inf, ||P - U||_1) with the sup norm scaled by |G|."""
    part = classes(table)
    order = table.order
    linf = Fraction(0)
    l1 = Fraction(0)
    for k in range(part.k):
        point = P[k] / int(part.sizes[k])  # probability of a single element
        dev = abs(point - Fraction(1, order))
        linf = max(linf, order * dev)
        l1 += int(part.sizes[k]) * dev
    return linf, l1


@dataclass
class WalkReport:
    group: str
    class_id: int
    t: int
    linf: Fraction
    l1: Fraction
    reports: list[BoundReport] = field(default_factory=list)


def spectral_bound_interval(ct: CharacterTable, class_id: int, t: int,
                            doubled: bool, bits: int) -> Interval:
    """sum over nontrivial chi of (|chi(g)|/chi(1))^T chi(1)^2 with T = t
    (sup-norm bound) or T = 2t (the L1-squared bound), on certified
    intervals; |chi(g)|^2 is an exact real cyclotomic."""
    from cclab.intervals import real_cyclo_interval

    T = 2 * t if doubled else t
    total = Interval.point(0)
    for chi, deg in zip(ct.irreducibles, ct.degrees):
        if deg == 1 and all(v == Cyclo.rational(1) for v in chi.values):
            continue
        z = chi.values[class_id]
        n2 = z * z.conj()
        half = n2 ** (T // 2)
        iv = Interval.point(half.rational_value()) if half.is_rational() \
            else real_cyclo_interval(half, bits)
        if T % 2:
            base = Interval.point(n2.rational_value()) if n2.is_rational() \
                else real_cyclo_interval(n2, bits)
            base = Interval(max(Fraction(0), base.lo), max(Fraction(0), base.hi))
            iv = iv * sqrt_interval(base, bits)
        total = total + iv * Fraction(deg * deg, deg ** T)
    return total


def _certified_leq(lhs: Fraction, iv_fn, tag: str):
    bits = 32
    while True:
        iv = iv_fn(bits)
        if lhs <= iv.lo:
            return PASS, iv
        if lhs > iv.hi:
            return FAIL, iv
        bits *= 2
        if bits > 512:
            raise ArithmeticError(f"{tag} comparison undecided")


def mixing_bounds(table: GroupTable, class_id: int, t: int) -> WalkReport:
    """Exact norms, convolution/inversion agreement, and the two spectral
    upper bounds; all certified."""
    ct = build_table(table)
    P = walk_distribution(table, class_id, t)
    P2 = walk_distribution_fourier(table, class_id, t)
    agree = P == P2
    linf, l1 = exact_norms(table, P)
    reports = [BoundReport(
        check="walk-convolution-fourier-agree",
        params={"group": str(table.spec), "class": class_id, "t": t},
        lhs="convolution", rhs="inversion",
        verdict=PASS if agree else FAIL,
    )]
    verdict, iv = _certified_leq(
        linf, lambda b: spectral_bound_interval(ct, class_id, t, False, b), "sup-norm")
    reports.append(BoundReport(
        check="walk-inf-bound",
        params={"group": str(table.spec), "class": class_id, "t": t},
        lhs=linf, rhs=iv.hi, verdict=verdict,
    ))
    # Diaconis-Shahshahani: ||P-U||_1^2 <= sum (...)^(2t) chi(1)^2
    verdict2, ds = _certified_leq(
        l1 * l1, lambda b: spectral_bound_interval(ct, class_id, t, True, b), "L1")
    reports.append(BoundReport(
        check="walk-l1-bound",
        params={"group": str(table.spec), "class": class_id, "t": t},
        lhs=l1 * l1, rhs=ds.hi, verdict=verdict2,
    ))
    return WalkReport(str(table.spec), class_id, t, linf, l1, reports)


def mixing_time(table: GroupTable, class_id: int, threshold: Fraction = Fraction(1, 4),
                cap: int = WALK_T_CAP) -> int | None:
    """Least t with ||P^t - U||_1 < threshold (the stated convention)."""
    for t in range(1, cap + 1):
        P = walk_distribution(table, class_id, t)
        _, l1 = exact_norms(table, P)
        if l1 < threshold:
            return t
    return None


def witten_zeta(table: GroupTable, s: int) -> Fraction:
    """sum over irreducibles of chi(1)^(-s), exact for integer s."""
    ct = build_table(table)
    return sum((Fraction(1, d ** s) if s >= 0 else Fraction(d ** (-s))) for d in ct.degrees)


def witten_zeta_interval(table: GroupTable, s: Fraction, bits: int = 48) -> Interval:
    """Certified bounds for rational s = a/b: chi(1)^(-a/b) via integer roots."""
    s = Fraction(s)
    if s.denominator == 1:
        v = witten_zeta(table, s.numerator)
        return Interval.point(v)
    ct = build_table(table)
    total = Interval.point(0)
    a, b = s.numerator, s.denominator
    M = 1 << bits
    for d in ct.degrees:
        # d^(a/b) bounds
        r = iroot(d ** a * M ** b, b)
        lo_pow = Fraction(r, M)
        hi_pow = Fraction(r + 1, M)
        total = total + Interval(1 / hi_pow, 1 / lo_pow)
    return total
