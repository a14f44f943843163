import pytest

from cclab.groups import pointwise_stabilizer
from cclab.levels import cached_parabolic
from cclab.multiplicities import (abelian_split_checks, induced_coset_checks,
                                  sigma_lambda_checks, theta_power_cover_check)


def test_sigma_lambda_small_pair(grp):
    G = grp("Sp(2,3)")
    H = pointwise_stabilizer(G, [0], name="stab-e1")
    reps = sigma_lambda_checks(G, H)
    assert reps and all(r.verdict == "pass" for r in reps)


def test_abelian_split_siegel(grp):
    pd = cached_parabolic(grp("Sp(4,3)"), 2)
    reps = abelian_split_checks(pd)
    assert all(r.verdict == "pass" for r in reps)
    pd_so = cached_parabolic(grp("SO+(4,3)"), 2)
    reps2 = abelian_split_checks(pd_so)
    assert all(r.verdict == "pass" for r in reps2)


def test_abelian_split_nonabelian_radical_gated(grp):
    pd = cached_parabolic(grp("Sp(4,3)"), 1)  # extraspecial-type radical
    reps = abelian_split_checks(pd)
    assert all(r.verdict == "not-applicable" for r in reps)


def test_induced_coset_bound(grp):
    G = grp("Sp(2,3)")
    H = pointwise_stabilizer(G, [0], name="stab-e1")
    reps = induced_coset_checks(G, H)
    assert reps and all(r.verdict == "pass" for r in reps)


def test_theta_power_cover(grp):
    for s in ("Sp(2,3)", "Sp(4,2)", "SO+(4,3)"):
        assert theta_power_cover_check(grp(s)).verdict == "pass"
