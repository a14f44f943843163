import pytest

from cclab.bounds import orbit_bound_checks
from cclab.orbits import OrbitBudgetError, isometry_signature_count, orbit_count


def test_orbit_counts_small(grp):
    assert orbit_count(grp("Sp(2,3)"), 1) == 2
    assert orbit_count(grp("GL(2,3)"), 1) == 2
    # GL orbit count on j-tuples is the number of admissible kernels
    from cclab.bounds import gauss_binom

    g = grp("GL(2,3)")
    for j in (1, 2):
        want = sum(gauss_binom(j, k, 3) for k in range(min(j, 2) + 1))
        assert orbit_count(g, j) == want


def test_orbit_counts_vs_signature_oracle(grp):
    for s, j in [("Sp(2,3)", 2), ("GO+(4,3)", 2), ("GO-(4,3)", 2), ("GU(2,2)", 2)]:
        t = grp(s)
        assert orbit_count(t, j) == isometry_signature_count(t, j)


def test_orbit_budget():
    from cclab.groups import enumerate_group, spec_from_string

    t = enumerate_group(spec_from_string("Sp(2,3)"))
    with pytest.raises(OrbitBudgetError):
        orbit_count(t, 2, budget=10)


def test_orbit_bound_reports(grp):
    for s, jmax in [("Sp(2,3)", 2), ("GL(2,3)", 2), ("GL(3,2)", 3),
                    ("GU(2,2)", 2), ("GO+(4,3)", 2), ("GO-(4,3)", 2)]:
        t = grp(s)
        for j in range(1, jmax + 1):
            reps = orbit_bound_checks(t, j)
            assert all(r.verdict == "pass" for r in reps), (s, j)


def test_orbit_lower_bound_present(grp):
    reps = orbit_bound_checks(grp("Sp(4,3)"), 2)
    kinds = {r.check for r in reps}
    assert "orbit-lower-isometry" in kinds and "orbit-upper-isometry" in kinds
    assert all(r.verdict == "pass" for r in reps)
