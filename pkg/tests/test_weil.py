import random
from fractions import Fraction

import numpy as np
import pytest

from cclab import linalg as la
from cclab.classfun import classes, inner, profile
from cclab.chartable import build_table
from cclab.cyclotomic import Cyclo
from cclab.fields import field
from cclab.groups import enumerate_group, spec_from_string
from cclab.weil import (WeilModel, dual_pair, dual_pair_decompose,
                        dual_pair_full_check, dual_pair_trace_table,
                        omega_pair, symplectic_change_of_basis,
                        tau_class_function, theta_class_function,
                        zeta_class_function)


def test_tau_zeta_values(grp):
    g = grp("Sp(2,3)")
    tau = tau_class_function(g)
    zeta = zeta_class_function(g)
    assert tau.degree().rational_value() == 9   # q^dim A
    assert zeta.degree().rational_value() == 9  # even dimension: sign cancels
    part = tau.part
    for c in range(part.k):
        m = g.matrix(int(part.reps[c]))
        if np.array_equal(m, (la.identity(g.field, 2) * 2).astype(np.int16)):
            assert tau.values[c].rational_value() == 1  # Ker(-1-1) = 0
        tr = (int(m[0, 0]) + int(m[1, 1])) % 3
        if tr == 2 and not np.array_equal(m, la.identity(g.field, 2)):
            pass  # unipotent: tau = 3, covered below
    # unipotent representative: tau = q
    u = la.identity(g.field, 2)
    u[0, 1] = 1
    c = int(part.class_of[g.id_of(u)])
    assert tau.values[c].rational_value() == 3
    assert zeta.values[c].rational_value() == -3


def test_zeta_equals_tau_on_special_orthogonal(grp):
    for s in ("SO+(4,3)", "SO-(4,3)", "SO(5,3)"):
        g = grp(s)
        assert tau_class_function(g) == zeta_class_function(g)


def test_model_identity_and_dimensions():
    F = field(3)
    m = WeilModel(F, 1)
    op1 = m.op(la.identity(F, 2))
    assert op1.is_identity()
    assert op1.trace().rational_value() == 3


def test_exhaustive_homomorphism_sp23(grp):
    g = grp("Sp(2,3)")
    F = g.field
    for tw in (1, 2):
        m = WeilModel(F, 1, tw)
        ops = [m.op(g.matrix(i)) for i in range(g.order)]
        for i in range(g.order):
            for j in range(g.order):
                assert ops[i] * ops[j] == ops[g.mul(i, j)]


@pytest.mark.parametrize("s,pairs", [("Sp(2,5)", 1000), ("Sp(4,3)", 1000)])
def test_random_homomorphism(s, pairs, grp):
    g = grp(s)
    F = g.field
    N = g.dim // 2
    rng = random.Random(11)
    for tw in (1, F.least_nonsquare()):
        m = WeilModel(F, N, tw)
        for _ in range(pairs // 2):
            i, j = rng.randrange(g.order), rng.randrange(g.order)
            assert m.op(g.matrix(i)) * m.op(g.matrix(j)) == m.op(g.matrix(g.mul(i, j)))


def test_trace_norm_identity_per_element(grp):
    # |trace(op(g))|^2 = q^(dim ker(g-1)) is asserted inside the sweep
    for s in ("Sp(2,3)", "Sp(2,5)"):
        omega_pair(grp(s))


def test_product_identities_q3(grp):
    g = grp("Sp(2,3)")
    om, oms = omega_pair(g)
    tau, zeta = tau_class_function(g), zeta_class_function(g)
    assert om * om == zeta and oms * oms == zeta and om * oms == tau
    assert om.conj() == oms


def test_product_identities_q5(grp):
    g = grp("Sp(2,5)")
    om, oms = omega_pair(g)
    tau, zeta = tau_class_function(g), zeta_class_function(g)
    assert om * om == tau and oms * oms == tau and om * oms == zeta
    assert om.conj() == om and oms.conj() == oms


def test_theta_square_identity(grp):
    g = grp("Sp(2,3)")
    theta = theta_class_function(g)
    tau, zeta = tau_class_function(g), zeta_class_function(g)
    assert theta * theta == (tau + zeta) * 2


def test_theta_for_even_q(grp):
    g = grp("Sp(4,2)")
    theta = theta_class_function(g)
    assert theta.degree().rational_value() == 2 * 2 ** 4
    vals = {v.rational_value() for v in theta.values}
    assert vals <= {0, 2, 2 * 4, 2 * 16}


def test_weil_constituent_degrees(grp, tbl):
    g = grp("Sp(2,5)")
    ct = tbl("Sp(2,5)")
    theta = theta_class_function(g)
    prof = profile(theta, ct)
    degs = sorted(ct.degrees[i] for i in prof.decomposition)
    assert degs == [2, 2, 3, 3]  # (q^n - 1)/2 twice, (q^n + 1)/2 twice


def test_symplectic_basis_reduction():
    F = field(3)
    rng = random.Random(3)
    for trial in range(5):
        M = 3
        # random alternating nondegenerate form
        while True:
            J = la.zeros(F, 2 * M, 2 * M)
            for i in range(2 * M):
                for j in range(i + 1, 2 * M):
                    v = rng.randrange(3)
                    J[i, j] = v
                    J[j, i] = F.neg(v)
            if la.det(F, J) != 0:
                break
        symplectic_change_of_basis(F, J)  # asserts the standard Gram inside


def test_dual_pair_decomposition_identity(grp):
    G, S = grp("SO+(4,3)"), grp("Sp(2,3)")
    setup = dual_pair(G, S, "b")
    cs = build_table(S)
    assert dual_pair_full_check(setup, cs.irreducibles)
    # dimension accounting
    traces = dual_pair_trace_table(setup)
    assert traces[int(classes(G).class_of[0])][0].rational_value() == 81


def test_dual_pair_tau_restriction(grp):
    G, S = grp("SO+(4,3)"), grp("Sp(2,3)")
    setup = dual_pair(G, S, "b")
    tau = tau_class_function(G)
    traces = dual_pair_trace_table(setup)
    partG = classes(G)
    for c in range(partG.k):
        assert traces[c][0] == tau.values[c]


def test_side_a_restriction_is_weil_product(grp):
    """On the symplectic side, the big model restricts to a product of the
    small Weil characters; the exponent split is determined empirically."""
    G, S = grp("Sp(2,3)"), grp("GO+(2,3)")
    setup = dual_pair(G, S, "a")
    om, oms = omega_pair(G)
    partG = classes(G)
    traces = dual_pair_trace_table(setup)
    restr = [traces[c][0] for c in range(partG.k)]
    m = S.dim
    candidates = {
        "omega^m": om ** m,
        "omega^(m-1) omega*": (om ** (m - 1)) * oms,
    }
    matches = [name for name, cf in candidates.items()
               if all(cf.values[c] == restr[c] for c in range(partG.k))]
    assert len(matches) == 1
