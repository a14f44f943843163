from fractions import Fraction

import pytest

from cclab.classfun import classes
from cclab.groups import spec_from_string
from cclab.levels import (all_levels, all_ranks, bound_orthogonal, bound_sp_even,
                          bound_sp_odd, degree_bound_function, level_cap,
                          level_of, level_range_check, level_upper_bound,
                          main_window_check, rank_level_checks,
                          rank_restriction_checks, theta_value_set_check, urank)
from cclab.weil import tau_class_function
from cclab.classfun import ClassFunction


def test_level_examples_sp23(grp, tbl):
    g = grp("Sp(2,3)")
    ct = tbl("Sp(2,3)")
    levels = all_levels(g)
    by_deg = {}
    for r in levels:
        by_deg.setdefault(ct.degrees[r.index], []).append(r.level)
    # trivial character at level 0
    triv = [i for i, chi in enumerate(ct.irreducibles)
            if chi.degree().rational_value() == 1 and
            all(v == chi.values[0] for v in chi.values)]
    assert levels[triv[0]].level == 0
    # the two nontrivial linear characters are the small Weil constituents
    assert sorted(by_deg[1]) == [0, 1, 1]
    # Steinberg (degree 3) sits at level 2
    assert by_deg[3] == [2]
    assert max(r.level for r in levels) <= level_cap(g.spec) == 3


def test_level_caps():
    assert level_cap(spec_from_string("Sp(2,3)")) == 3
    assert level_cap(spec_from_string("Sp(4,3)")) == 5
    assert level_cap(spec_from_string("Sp(4,2)")) == 3
    assert level_cap(spec_from_string("SO+(4,3)")) == 3


def test_level_range_reports(grp):
    for s in ("Sp(2,3)", "Sp(4,2)", "SO+(4,3)", "Omega+(4,3)"):
        reps = level_range_check(grp(s))
        assert all(r.verdict == "pass" for r in reps)
    # the sharper window for subgroups of SO at odd q
    om = level_range_check(grp("Omega+(4,3)"))
    assert all(r.rhs == 2 for r in om)


def test_theta_value_sets(grp):
    for s in ("Sp(2,3)", "Sp(4,2)", "SO+(4,3)", "SO(5,3)"):
        reps = theta_value_set_check(grp(s))
        assert all(r.verdict == "pass" for r in reps)


def test_degree_bound_functions():
    assert bound_sp_odd(2, 1, 3) == 3  # q^(2-1) * ((q-1)/2)^1
    assert bound_sp_odd(1, 1, 3) == 1
    assert bound_orthogonal(8, 2, 3) == Fraction(3 ** 4 * 4, 2)
    assert bound_orthogonal(9, 2, 3) == Fraction(3 ** 5 * 8 * 2, 2)
    assert degree_bound_function("Sp-odd", 5, 0, 3) == 1
    assert level_upper_bound(spec_from_string("Sp(2,3)"), 1) == 2
    assert bound_sp_even(2, 1, 2) == Fraction(2 ** (4 - 3) * 1, 2)


def test_main_window_sp23(grp):
    reps = main_window_check(grp("Sp(2,3)"))
    assert all(r.verdict == "pass" for r in reps)
    # the degree-1 Weil constituent: l = 1, k = 1, window [1, 2]
    lows = [r for r in reps if r.params["level"] == 1 and r.lhs == 1]
    assert lows and all(r.rhs == 2 for r in lows)


def test_urank_examples(grp, tbl):
    g = grp("SO+(4,3)")
    ct = tbl("SO+(4,3)")
    part = classes(g)
    one = ClassFunction.trivial(part)
    assert urank(g, one).rank == 0
    tau = tau_class_function(g)
    assert urank(g, tau).rank == 2
    ranks = {r.rank for r in all_ranks(g)}
    assert ranks == {0, 2}


def test_urank_via_embedding(grp, tbl):
    g = grp("SO(5,3)")
    ct = tbl("SO(5,3)")
    r = urank(g, ct.irreducibles[0])
    assert r.rank in (0, 2) and r.rank % 2 == 0


def test_rank_checks(grp):
    reps = rank_level_checks(grp("SO+(4,3)"))
    assert all(r.verdict == "pass" for r in reps)
    mult = [r for r in reps if r.check == "rank-multiplicity"]
    assert mult and all(r.rhs == 24 for r in mult)  # |Sp_2(3)|
    reps2 = rank_restriction_checks(grp("SO+(4,3)"))
    assert all(r.verdict == "pass" for r in reps2)


def test_urank_rejects_even_q(grp):
    with pytest.raises(AssertionError):
        urank(grp("Sp(4,2)"), ClassFunction.trivial(classes(grp("Sp(4,2)"))))
