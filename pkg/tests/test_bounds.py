from fractions import Fraction

import pytest

from cclab.bounds import (centralizer_bound_checks, centralizer_bruteforce,
                          delta_checks, delta_feasible, delta_solver,
                          epsilon_composition, floor_two_significant,
                          gauss_binom, gauss_binom_check, irr_count_check,
                          levi_sigma_rhs, min_degree_checks,
                          multiplicity_inequality_checks,
                          restriction_norm_checks, schur_centralizer_checks,
                          sigma_pair_rhs, spin_split_checks, spin_threshold,
                          tail_series_check, tensor_pair_rhs)
from cclab.classfun import classes
from cclab.groups import levi_gl_subgroup


def test_gauss_binomials():
    assert gauss_binom(2, 1, 2) == 3
    assert gauss_binom(4, 2, 3) == 130
    assert gauss_binom(5, 0, 7) == 1
    assert gauss_binom(4, 2, 3) < Fraction(32, 9) * 3 ** 4
    for j in range(7):
        for i in range(j + 1):
            for q in (2, 3, 4, 5):
                assert gauss_binom_check(j, i, q).verdict == "pass"


def test_tail_series():
    for q in (2, 3, 5):
        assert tail_series_check(q).verdict == "pass"


def test_centralizer_bounds(grp):
    for s in ("Sp(2,3)", "SO+(4,3)"):
        reps = centralizer_bound_checks(grp(s))
        assert all(r.verdict == "pass" for r in reps)
    # identity: |C| = |G| >= q^((k^2-3k)/2) trivially recorded
    g = grp("Sp(2,3)")
    part = classes(g)
    c0 = int(part.class_of[0])
    assert centralizer_bruteforce(g, c0) == g.order
    for c in range(part.k):
        assert centralizer_bruteforce(g, c) == part.centralizer_order(c)


def test_restriction_norm_sp(grp):
    reps = restriction_norm_checks(grp("Sp(4,3)"), "sp")
    assert reps and all(r.verdict == "pass" for r in reps)


def test_restriction_norm_so_informative(grp):
    reps = restriction_norm_checks(grp("SO(5,3)"), "so")
    # n = 2 < 3: the stated range excludes the desk group
    assert reps and all(r.verdict == "not-applicable" for r in reps)


def test_constant_evaluators():
    # rhs of the 705-constant at (n, L, q) = (9, 1, 3)
    iv = levi_sigma_rhs(705, 9, Fraction(1), 3)
    import math

    want = 3 ** math.sqrt(705 * 9)
    assert float(iv.lo) <= want <= float(iv.hi)
    # the boundary case L1 = L2 = 1/2 gives exactly q^5
    iv2 = sigma_pair_rhs(Fraction(1, 2), Fraction(1, 2), 3)
    assert iv2.lo == iv2.hi == 3 ** 5
    iv3 = tensor_pair_rhs(1, Fraction(1), 2)
    assert iv3.lo == iv3.hi == 8 * 2 ** 2


def test_multiplicity_informative_sweep(grp):
    g = grp("Sp(4,3)")
    levi = levi_gl_subgroup(g)
    reps = multiplicity_inequality_checks(g, levi)
    # n = 2 is far below the rank window: all informative
    assert reps and all(r.verdict == "not-applicable" for r in reps)
    assert all("holds=" in r.note for r in reps)


def test_delta_solver():
    assert delta_feasible(Fraction(99, 100), Fraction(11, 10000))
    assert delta_feasible(Fraction(9, 10), Fraction(36, 100000))
    assert not delta_feasible(Fraction(9, 10), Fraction(37, 100000))
    assert delta_solver(Fraction(99, 100)) >= Fraction(11, 10000)
    assert delta_solver(Fraction(9, 10)) >= Fraction(36, 100000)
    with pytest.raises(ValueError):
        delta_solver(Fraction(4, 5))
    # boundary degeneracy: gamma near 4/5 forces delta -> 0
    tiny = delta_solver(Fraction(4, 5) + Fraction(1, 10 ** 4))
    assert tiny == 0
    assert all(r.verdict == "pass" for r in delta_checks())


def test_epsilon_composition():
    es, d = epsilon_composition(Fraction(992, 1000))
    assert es == Fraction(99, 100) and d == Fraction(11, 10000)
    es2, d2 = epsilon_composition(Fraction(9, 10))
    assert es2 == Fraction(9, 20) + Fraction(2, 5)  # = 0.85
    assert d2 > 0
    with pytest.raises(ValueError):
        epsilon_composition(Fraction(1, 2))


def test_floor_two_significant():
    assert floor_two_significant(Fraction(569, 500000)) == Fraction(11, 10000)
    assert floor_two_significant(Fraction(91, 250000)) == Fraction(36, 100000)
    assert floor_two_significant(Fraction(125, 100)) == Fraction(12, 10)


def test_schur_centralizer(grp):
    for s in ("SL(2,3)", "Sp(4,2)", "SO+(4,3)"):
        reps = schur_centralizer_checks(grp(s))
        assert all(r.verdict == "pass" for r in reps)


def test_char_bound_gamma_gates(grp):
    from cclab.bounds import character_bound_predicate

    reps = character_bound_predicate(grp("Sp(2,3)"), Fraction(99, 100), Fraction(11, 10000))
    # g = 1 fails the centralizer gate; everything is informative at n = 1
    gated = [r for r in reps if r.note.startswith("hypothesis gate")]
    assert gated
    assert all(r.verdict == "not-applicable" for r in reps)


def test_spin_thresholds(grp):
    assert spin_threshold("even-split", 4, 3) == 2 * 3 ** 5
    assert spin_threshold("odd-faithful", 2, 3) == Fraction(27, 4)
    reps = spin_split_checks(grp("SO(5,3)"))
    # n = 2 meets the odd-dimensional range n >= 2: genuine verdicts
    assert reps and all(r.verdict == "pass" for r in reps)
    reps2 = spin_split_checks(grp("SO+(4,3)"))
    assert reps2 and all(r.verdict == "not-applicable" for r in reps2)


def test_irr_count(grp):
    r = irr_count_check(grp("Sp(4,3)"))
    assert r.verdict == "pass" and r.lhs == 34 and r.rhs == Fraction(152, 10) * 9
    r2 = irr_count_check(grp("SO(5,3)"))
    assert r2.verdict == "pass" and r2.rhs == Fraction(73, 10) * 9
    r3 = irr_count_check(grp("Sp(2,3)"))
    assert r3.verdict == "pass" and r3.lhs == 7


def test_min_degree(grp):
    reps = min_degree_checks(grp("Sp(4,3)"))
    formula = [r for r in reps if r.params.get("threshold") == "(q^n-1)/2"]
    assert formula and formula[0].verdict == "pass" and formula[0].lhs == 4
    informative = [r for r in reps if r.params.get("threshold") == "q^(4n/5)"]
    assert informative and informative[0].verdict == "not-applicable"
    # the desk group genuinely sits below that threshold: verified honest
    assert "holds=False" in informative[0].note
