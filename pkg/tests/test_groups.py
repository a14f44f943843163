import random

import numpy as np
import pytest

from cclab import linalg as la
from cclab.groups import (GroupSpec, SpecError, derived_subgroup, enumerate_group,
                          fixed_space_dims, group_order, levi_gl_subgroup,
                          parabolic, pointwise_stabilizer, spec_from_string,
                          witt_index)

ORDERS = {
    "SL(2,3)": 24, "GL(2,3)": 48, "GL(1,5)": 4, "Sp(2,3)": 24, "Sp(4,2)": 720,
    "GU(2,2)": 18, "SU(2,2)": 6, "SO+(4,3)": 576, "SO-(4,3)": 720,
    "Omega+(4,3)": 288, "GO(3,3)": 48, "SO(3,3)": 24, "GO+(2,3)": 4,
}


@pytest.mark.parametrize("s,order", sorted(ORDERS.items()))
def test_group_orders_and_enumeration(s, order, grp):
    spec = spec_from_string(s)
    assert group_order(spec) == order
    t = grp(s)
    assert t.order == order


def test_sp_order_examples():
    assert group_order(spec_from_string("Sp(2,3)")) == 24
    assert group_order(spec_from_string("Sp(4,3)")) == 51840
    assert group_order(spec_from_string("SO(5,3)")) == 51840


def test_spec_parsing_and_validation():
    s = spec_from_string("Sp(4,3)")
    assert s.family == "Sp" and s.dim == 4 and s.q == 3
    assert spec_from_string("Omega+(4,3)").sign == 1
    assert spec_from_string("O+(4,3)").family == "GO"
    with pytest.raises(SpecError):
        spec_from_string("SO(5,2)")  # odd-dimensional needs odd q
    with pytest.raises(SpecError):
        spec_from_string("Sp(3,2)")
    with pytest.raises(SpecError):
        spec_from_string("SO(4,3)")  # even dimension needs a sign
    with pytest.raises(SpecError):
        spec_from_string("XX(2,3)")
    with pytest.raises(SpecError):
        spec_from_string("GL(2,6)")  # not a prime power


def test_identity_first_inverse_involution(grp):
    t = grp("SL(2,3)")
    assert np.array_equal(t.matrix(0), la.identity(t.field, 2))
    assert np.array_equal(t.inv_ids[t.inv_ids], np.arange(t.order))


def test_closure_exhaustive_small(grp):
    t = grp("SL(2,3)")
    for i in range(t.order):
        for j in range(t.order):
            t.mul(i, j)  # raises on any product outside the table


def test_closure_random_larger(grp):
    t = grp("Sp(4,2)")
    rng = random.Random(1)
    for _ in range(500):
        i, j = rng.randrange(t.order), rng.randrange(t.order)
        t.mul(i, j)


def test_standard_subgroups(grp):
    sp4 = grp("Sp(4,3)")
    h = pointwise_stabilizer(sp4, [1, 3], name="Sp(2,3)std")
    assert h.order == 24
    levi = levi_gl_subgroup(sp4)
    assert levi.order == 48
    so4 = grp("SO+(4,3)")
    om = derived_subgroup(so4)
    assert om.order == 288 and so4.order // om.order == 2


def test_parabolic_structure(grp):
    sp4 = grp("Sp(4,3)")
    pd = parabolic(sp4, 2)
    assert pd.P.order == 1296 and pd.U.order == 27 and pd.L.order == 48
    assert pd.U.order * pd.L.order == pd.P.order
    assert pd.Z.order == 27  # symmetric 2x2 over F_3
    so4 = grp("SO+(4,3)")
    pd2 = parabolic(so4, 2)
    assert pd2.Z.order == 3  # antisymmetric 2x2 over F_3
    pd1 = parabolic(so4, 1)
    assert pd1.Z.order == 1  # 1x1 antisymmetric zero-diagonal is 0
    with pytest.raises(SpecError):
        parabolic(so4, 3)
    # central elements commute with the whole radical
    for zi in range(pd2.Z.order):
        zu = int(pd2.Z.parent_ids[zi])
        for u in range(pd2.U.order):
            assert pd2.U.mul(zu, u) == pd2.U.mul(u, zu)


def test_fixed_space_dims(grp):
    sp4 = grp("Sp(4,3)")
    F = sp4.field
    assert fixed_space_dims(F, la.identity(F, 4)) == (4, 0)
    minus = (la.identity(F, 4) * 2).astype(np.int16)
    assert fixed_space_dims(F, minus) == (0, 4)
    # a transvection fixes a hyperplane
    t = la.identity(F, 4)
    t[0, 2] = 1  # e1 -> e1, f1 -> f1 + e1 in the Witt basis
    assert sp4.contains_matrix(t)
    assert fixed_space_dims(F, t) == (3, 0)


def test_witt_lemma_orbit_invariants(grp):
    """Tuples with equal isometric data are in one orbit (full isometry
    groups, small dimensions, exhaustive)."""
    from cclab.orbits import isometry_signature_count, orbit_count

    for s in ("Sp(2,2)", "Sp(2,3)", "GO+(4,3)", "GO-(4,3)", "GO(3,3)"):
        t = enumerate_group(spec_from_string(s))
        for j in (1, 2):
            assert orbit_count(t, j) == isometry_signature_count(t, j)


def test_witt_index():
    assert witt_index(spec_from_string("Sp(4,3)")) == 2
    assert witt_index(spec_from_string("SO+(4,3)")) == 2
    assert witt_index(spec_from_string("SO-(4,3)")) == 1
    assert witt_index(spec_from_string("SO(5,3)")) == 2


def test_quadratic_form_types(grp):
    # the minus form must be anisotropic on the last plane
    t = grp("SO-(4,3)")
    form = t.form
    F = t.field
    for a in range(F.q):
        for b in range(F.q):
            v = np.zeros(4, dtype=np.int16)
            v[2], v[3] = a, b
            if (a, b) != (0, 0):
                assert form.quad_value(v) != 0
