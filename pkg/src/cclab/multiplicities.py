"""Multiplicity-sum calculus over recorded subgroup embeddings.

sigma(rho, G) = total multiplicity of irreducible constituents, lambda(rho, G)
the linear part; the suite sweeps the comparison inequalities between a group
and a recorded subgroup, the split-extension multiplicity-one property, the
induced-coset bound, and the covering of Irr(G) by powers of a separating
character.
"""

from __future__ import annotations

from fractions import Fraction

from .chartable import build_table
from .classfun import (ClassFunction, classes, double_cosets, induce, inner,
                       profile, restrict)
from .cyclotomic import Cyclo
from .groups import GroupTable, ParabolicData
from .reports import FAIL, NOT_APPLICABLE, PASS, BoundReport


def _sigma_lambda(rho: ClassFunction, ct) -> tuple[int, int, Fraction]:
    prof = profile(rho, ct)
    assert prof.is_character, "sigma of a non-character"
    return prof.sigma, prof.lam, inner(rho, rho)


def test_characters(table: GroupTable) -> list[ClassFunction]:
    """Irreducibles plus a couple of structured reducible characters."""
    ct = build_table(table)
    part = ct.part
    chars = list(ct.irreducibles)
    chars.append(ClassFunction.regular(part))
    if len(ct.irreducibles) >= 3:
        chars.append(ct.irreducibles[1] * ct.irreducibles[2])
    from .weil import tau_class_function

    if table.form is not None and table.spec is not None and not table.spec.is_unitary:
        chars.append(tau_class_function(table))
    return chars


def sigma_lambda_checks(G: GroupTable, H: GroupTable) -> list[BoundReport]:
    """The two comparison chains between G and a recorded subgroup H."""
    ctG = build_table(G)
    ctH = build_table(H)
    partH = classes(H)
    out = []
    name = {"group": str(G.spec) or G.name, "subgroup": H.name or str(H.spec)}
    index = G.order // H.order
    # per-irreducible data reused by the max-factor chain
    irr_sigma_H = []
    for chi in ctG.irreducibles:
        s, _, _ = _sigma_lambda(restrict(chi, partH), ctH)
        irr_sigma_H.append(s)
    for label, rho in enumerate(test_characters(G)):
        sG, lamG, norm = _sigma_lambda(rho, ctG)
        resH = restrict(rho, partH)
        sH, lamH, _ = _sigma_lambda(resH, ctH)
        ok1 = lamG <= sG <= norm
        out.append(BoundReport(
            check="sigma-lambda-basic",
            params=dict(name, character=label),
            lhs=(lamG, sG), rhs=norm,
            verdict=PASS if ok1 else FAIL,
        ))
        prof = profile(rho, ctG)
        maxfac = max((irr_sigma_H[i] for i in prof.decomposition), default=0)
        ok2 = sH <= sG * maxfac
        out.append(BoundReport(
            check="sigma-restriction-factor",
            params=dict(name, character=label),
            lhs=sH, rhs=sG * maxfac,
            verdict=PASS if ok2 else FAIL,
        ))
        ok3 = sG <= sH <= sG * index
        out.append(BoundReport(
            check="sigma-restriction-window",
            params=dict(name, character=label),
            lhs=sH, rhs=(sG, sG * index),
            verdict=PASS if ok3 else FAIL,
        ))
    for label, phi in enumerate(test_characters(H)):
        sH, _, _ = _sigma_lambda(phi, ctH)
        ind = induce(phi, classes(G))
        sInd, _, _ = _sigma_lambda(ind, ctG)
        ok = sH <= sInd <= sH * index
        out.append(BoundReport(
            check="sigma-induction-window",
            params=dict(name, character=label),
            lhs=sInd, rhs=(sH, sH * index),
            verdict=PASS if ok else FAIL,
        ))
    return out


def abelian_split_checks(pdata: ParabolicData) -> list[BoundReport]:
    """In P = Q x| L with Q abelian: every irreducible of P meets every linear
    character of L at most once."""
    P, L, U = pdata.P, pdata.L, pdata.U
    # the statement needs the radical abelian
    abelian = all(U.mul(a, b) == U.mul(b, a) for a in U.gen_ids for b in U.gen_ids)
    ctP = build_table(P)
    ctL = build_table(L)
    partL_in_P = classes(L)
    out = []
    linear = [i for i, d in enumerate(ctL.degrees) if d == 1]
    worst = 0
    for chi in ctP.irreducibles:
        res = restrict(chi, partL_in_P)
        for i in linear:
            m = inner(res, ctL.irreducibles[i])
            assert m.denominator == 1 and m >= 0
            worst = max(worst, int(m))
    out.append(BoundReport(
        check="abelian-split-mult",
        params={"parabolic": f"{pdata.group.spec} j={pdata.j}",
                "radical_abelian": abelian},
        lhs=worst, rhs=1,
        verdict=(PASS if worst <= 1 else FAIL) if abelian else NOT_APPLICABLE,
        note="" if abelian else "radical not abelian; statement out of scope",
    ))
    return out


def induced_coset_checks(G: GroupTable, H: GroupTable) -> list[BoundReport]:
    """[Ind lambda, Ind lambda] <= [Ind 1, Ind 1] = |H\\G/H| for every linear
    character of the subgroup."""
    partG = classes(G)
    partH = classes(H)
    ctH = build_table(H)
    dc = double_cosets(partG, H)
    out = []
    for i, lam in enumerate(ctH.irreducibles):
        if ctH.degrees[i] != 1:
            continue
        ind = induce(lam, partG)
        norm = inner(ind, ind)
        out.append(BoundReport(
            check="induced-coset-bound",
            params={"group": str(G.spec) or G.name, "subgroup": H.name, "linear": i},
            lhs=norm, rhs=dc,
            verdict=PASS if norm <= dc else FAIL,
        ))
    return out


def theta_power_cover_check(table: GroupTable) -> BoundReport:
    """A generalized character separating the identity covers Irr(G) within
    N-1 powers, N the number of distinct values."""
    from .levels import all_levels
    from .weil import theta_class_function

    theta = theta_class_function(table)
    ct = build_table(table)
    values = {v.min_order().key() for v in theta.values}
    N = len(values)
    c0 = int(theta.part.class_of[0])
    separating = all(
        theta.values[c] != theta.values[c0] for c in range(theta.part.k) if c != c0
    )
    levels = all_levels(table)
    cover = max(r.level for r in levels)
    ok = separating and cover <= N - 1
    return BoundReport(
        check="theta-power-cover",
        params={"group": str(table.spec), "distinct_values": N, "max_level": cover},
        lhs=cover, rhs=N - 1,
        verdict=PASS if ok else FAIL,
    )
