from fractions import Fraction

import pytest

from cclab.classfun import classes
from cclab.walks import (DegenerateWalkError, exact_norms, mixing_bounds,
                         mixing_time, walk_distribution,
                         walk_distribution_fourier, witten_zeta,
                         witten_zeta_interval)


def test_walk_t0_point_mass(grp):
    g = grp("SL(2,3)")
    part = classes(g)
    P = walk_distribution(g, 6, 0)
    c0 = int(part.class_of[0])
    assert P[c0] == 1 and sum(P) == 1


def test_walk_convolution_equals_fourier(grp):
    for s in ("SL(2,3)", "SL(2,5)"):
        g = grp(s)
        part = classes(g)
        cls = [c for c in range(part.k) if int(part.sizes[c]) > 1]
        for c in cls[:2]:
            for t in range(1, 9):
                assert walk_distribution(g, c, t) == walk_distribution_fourier(g, c, t)


def test_central_class_rejected(grp):
    g = grp("SL(2,3)")
    part = classes(g)
    central = [c for c in range(part.k)
               if int(part.sizes[c]) == 1 and c != int(part.class_of[0])]
    with pytest.raises(DegenerateWalkError):
        walk_distribution(g, central[0], 2)


def test_mixing_bounds(grp):
    g = grp("SL(2,5)")
    part = classes(g)
    order5 = [c for c in range(part.k) if int(part.orders[c]) == 5][0]
    for t in (2, 3, 4):
        rep = mixing_bounds(g, order5, t)
        assert all(r.verdict == "pass" for r in rep.reports)
    # large t: exact norms near zero, still dominated
    rep = mixing_bounds(g, order5, 20)
    assert all(r.verdict == "pass" for r in rep.reports)
    assert rep.l1 < Fraction(1, 10 ** 6)


def test_mixing_time(grp):
    g = grp("SL(2,5)")
    part = classes(g)
    order5 = [c for c in range(part.k) if int(part.orders[c]) == 5][0]
    t = mixing_time(g, order5)
    assert t is not None and 1 <= t <= 16


def test_witten_zeta(grp):
    g = grp("SL(2,5)")
    assert witten_zeta(g, 0) == 9  # |Irr|
    want1 = sum(Fraction(1, d) for d in [1, 2, 2, 3, 3, 4, 4, 5, 6])
    assert witten_zeta(g, 1) == want1
    want2 = 1 + Fraction(2, 4) + Fraction(2, 9) + Fraction(2, 16) + Fraction(1, 25) + Fraction(1, 36)
    assert witten_zeta(g, 2) == want2
    # monotone decrease toward 1
    assert witten_zeta(g, 1) > witten_zeta(g, 2) > witten_zeta(g, 3) > 1
    iv = witten_zeta_interval(g, Fraction(3, 2))
    assert iv.lo <= witten_zeta(g, 1) and iv.hi >= witten_zeta(g, 2)


def test_walk_symmetry_class_function(grp):
    g = grp("SL(2,3)")
    part = classes(g)
    P = walk_distribution(g, 6, 3)
    # P is per-class; per-element probabilities are constant on classes by
    # construction, so the distribution sums to 1 as rationals
    assert sum(P) == 1
