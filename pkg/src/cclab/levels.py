"""Character levels and unipotent-center ranks.

The level of an irreducible is the least k with [Theta^k, chi] > 0; the rank
of a character is the largest rank of an antisymmetric parameter matrix Y
whose center character lambda_Y occurs in a restriction to Z(U_j).  Both are
computed exactly, together with the degree windows and rank/level
inequalities they satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg as la
from .chartable import CharacterTable, build_table
from .classfun import ClassFunction, classes, inner, profile
from .cyclotomic import Cyclo
from .groups import (GroupSpec, GroupTable, ParabolicData, enumerate_group,
                     parabolic, pointwise_stabilizer, witt_index)
from .reports import FAIL, NOT_APPLICABLE, PASS, BoundReport
from .weil import theta_class_function


# ---------------------------------------------------------------------------
# levels
# ---------------------------------------------------------------------------


@dataclass
class LevelResult:
    index: int            # position in the character table
    level: int
    multiplicity: int     # [Theta^level, chi]


def level_cap(spec: GroupSpec) -> int:
    """A priori bound on the level, per family."""
    if spec.family == "Sp":
        n = spec.dim // 2
        return 2 * n + 1 if spec.q % 2 else n + 1
    if spec.is_orthogonal:
        return spec.dim // 2 + 1
    raise ValueError(f"levels are defined for Sp/orthogonal families, not {spec.family}")


def sharper_cap_applies(spec: GroupSpec) -> bool:
    """The tighter floor(n/2) window: subgroups of SO for odd q, Omega for even."""
    if not spec.is_orthogonal:
        return False
    if spec.q % 2:
        return spec.family in ("SO", "Omega")
    return spec.family == "Omega"


def theta_powers(table: GroupTable, k: int) -> ClassFunction:
    """Theta^k, cached pointwise powers."""
    cache = table._cache.setdefault("theta_powers", {})
    if k not in cache:
        if k == 0:
            cache[k] = ClassFunction.trivial(classes(table))
        else:
            cache[k] = theta_powers(table, k - 1) * theta_class_function(table)
    return cache[k]


def level_of(table: GroupTable, chi: ClassFunction, index: int = -1) -> LevelResult:
    cap = level_cap(table.spec)
    for k in range(cap + 1):
        m = inner(theta_powers(table, k), chi)
        assert m.denominator == 1 and m >= 0
        if m > 0:
            return LevelResult(index, k, int(m))
    raise AssertionError(
        f"level exceeded the a priori cap {cap} (this would falsify the theory)"
    )


def all_levels(table: GroupTable) -> list[LevelResult]:
    key = "levels"
    if key not in table._cache:
        ct = build_table(table)
        table._cache[key] = [
            level_of(table, chi, i) for i, chi in enumerate(ct.irreducibles)
        ]
    return table._cache[key]


def level_range_check(table: GroupTable) -> list[BoundReport]:
    """Every level inside the stated family window, with the sharper branch
    where it applies."""
    spec = table.spec
    cap = level_cap(spec)
    if sharper_cap_applies(spec):
        cap = spec.dim // 2
    out = []
    for res in all_levels(table):
        out.append(BoundReport(
            check="level-range",
            params={"group": str(spec), "character": res.index},
            lhs=res.level, rhs=cap,
            verdict=PASS if res.level <= cap else FAIL,
            margin=cap - res.level,
        ))
    return out


def theta_value_set_check(table: GroupTable) -> list[BoundReport]:
    """Theta values lie in the predicted set and hit the top value only at 1."""
    spec = table.spec
    q = spec.q
    theta = theta_class_function(table)
    part = theta.part
    if spec.family == "Sp" and q % 2:
        n = spec.dim // 2
        allowed = {0} | {s * 2 * q ** j for j in range(n) for s in (1, -1)} | {2 * q ** n}
        top = 2 * q ** n
    else:
        d = spec.dim  # dimension of the natural module
        if d % 2 == 0:
            allowed = {0} | {2 * q ** (2 * i) for i in range(d // 2 + 1)}
        else:
            allowed = {0} | {2 * q ** (2 * i + 1) for i in range((d + 1) // 2)}
        top = 2 * q ** d
    out = []
    vals = [v.rational_value() for v in theta.values]
    inside = all(v in allowed for v in vals)
    out.append(BoundReport(
        check="theta-value-set",
        params={"group": str(spec), "values": sorted(set(map(str, vals)))},
        lhs="values", rhs="allowed-set",
        verdict=PASS if inside else FAIL,
    ))
    c0 = int(part.class_of[0])
    top_only_at_one = vals[c0] == top and all(
        v != top for c, v in enumerate(vals) if c != c0
    )
    out.append(BoundReport(
        check="theta-top-value-only-at-identity",
        params={"group": str(spec)},
        lhs=str(vals[c0]), rhs=str(top),
        verdict=PASS if top_only_at_one else FAIL,
    ))
    return out


# ---------------------------------------------------------------------------
# degree bound functions and the level-degree window
# ---------------------------------------------------------------------------


def bound_sp_odd(n: int, k: int, q: int) -> Fraction:
    return Fraction(q) ** (n * k - k * (k + 1) // 2) * Fraction(q - 1, 2) ** k


def bound_sp_even(n: int, k: int, q: int) -> Fraction:
    return Fraction(q) ** (2 * n * k - k * (2 * k + 1)) * Fraction((q - 1) ** 2, 2) ** k


def bound_orthogonal(n: int, k: int, q: int) -> Fraction:
    if (n, k) == (8, 2):
        return Fraction(q ** 4 * (q - 1) ** 2, 2 if q % 2 else 1)
    if (n, k) == (9, 2):
        return Fraction(q ** 5 * (q ** 2 - 1) * (q - 1), 2)
    return Fraction(q) ** (n * k - 2 * k * (k + 1)) * Fraction(q - 1) ** k


def degree_bound_function(family: str, n: int, k: int, q: int) -> Fraction:
    if k == 0:
        return Fraction(1)
    if family == "Sp-odd":
        return bound_sp_odd(n, k, q)
    if family == "Sp-even":
        return bound_sp_even(n, k, q)
    if family == "orthogonal":
        return bound_orthogonal(n, k, q)
    raise ValueError(family)


def level_upper_bound(spec: GroupSpec, ell: int) -> Fraction:
    q = spec.q
    if spec.family == "Sp" and q % 2:
        n = spec.dim // 2
        return Fraction(q ** n + 1, 2) ** ell
    if spec.family == "Sp":
        n = spec.dim // 2
        return Fraction(q ** (2 * n) - 1, q - 1) ** ell
    n = spec.dim
    return Fraction(q ** n - 1, q - 1) ** ell


def main_window_check(table: GroupTable) -> list[BoundReport]:
    """For every irreducible of level l and k = floor((l+2)/3), the family's
    displayed lower and upper degree bounds hold exactly."""
    spec = table.spec
    q = spec.q
    ct = build_table(table)
    applicable, family, n = _window_gate(spec)
    out = []
    for res in all_levels(table):
        ell = res.level
        k = (ell + 2) // 3
        deg = Fraction(ct.degrees[res.index])
        lower = degree_bound_function(family, n, k, q) if applicable else None
        upper = level_upper_bound(spec, ell)
        if not applicable:
            out.append(BoundReport(
                check="level-degree-window",
                params={"group": str(spec), "character": res.index, "level": ell, "k": k},
                lhs=deg, rhs=upper,
                verdict=NOT_APPLICABLE,
                note="family/dimension outside the stated range; informative only",
            ))
            continue
        ok = lower <= deg <= upper
        out.append(BoundReport(
            check="level-degree-window",
            params={"group": str(spec), "character": res.index, "level": ell, "k": k},
            lhs=lower, rhs=upper,
            verdict=PASS if ok else FAIL,
            margin=deg,
            note=f"degree {deg}",
        ))
    return out


def _window_gate(spec: GroupSpec):
    q = spec.q
    if spec.family == "Sp" and q % 2:
        n = spec.dim // 2
        return n >= 1, "Sp-odd", n
    if spec.family == "Sp":
        n = spec.dim // 2
        return n >= 2, "Sp-even", n
    if spec.family == "Omega":
        n = spec.dim
        return n >= 6 and (n, q) not in ((8, 2), (9, 2)), "orthogonal", n
    return False, "orthogonal", spec.dim


def level_lower_contrapositive_check(table: GroupTable) -> list[BoundReport]:
    """chi(1) < b(n,k) forces level <= 3(k-1), swept over every character and
    every k in the window range."""
    spec = table.spec
    applicable, family, n = _window_gate(spec)
    ct = build_table(table)
    out = []
    for res in all_levels(table):
        deg = Fraction(ct.degrees[res.index])
        for k in range(1, level_cap(spec) + 2):
            b = degree_bound_function(family, n, k, spec.q)
            if deg < b:
                ok = res.level <= 3 * (k - 1)
                out.append(BoundReport(
                    check="level-lower-contrapositive",
                    params={"group": str(spec), "character": res.index, "k": k},
                    lhs=res.level, rhs=3 * (k - 1),
                    verdict=(PASS if ok else FAIL) if applicable else NOT_APPLICABLE,
                ))
                break
    return out


# ---------------------------------------------------------------------------
# U-rank
# ---------------------------------------------------------------------------


@dataclass
class RankResult:
    index: int
    rank: int
    witness_j: int
    witness_param: np.ndarray | None  # the antisymmetric Y realizing the rank
    multiplicity: Fraction | None


def center_character_value(F, X: np.ndarray, Y: np.ndarray) -> Cyclo:
    """lambda_Y([I_j, X]) = zeta_p^(Tr tr(XY))."""
    j = X.shape[0]
    t = 0
    for a in range(j):
        for b in range(j):
            t = F.add(t, F.mul(int(X[a, b]), int(Y[b, a])))
    return Cyclo.root(F.p, F.trace_to_prime(t))


def center_constituents(chi: ClassFunction, pdata: ParabolicData) -> list[tuple[np.ndarray, int, Fraction]]:
    """(Y, rank Y, multiplicity of lambda_Y in chi|_Z(U_j)) for every
    antisymmetric zero-diagonal parameter Y."""
    G = pdata.group
    F = G.field
    Z = pdata.Z
    part = chi.part
    zn = Z.order
    z_group_ids = Z.ids_in_ancestor(G)
    chi_on_z = [chi.values[int(part.class_of[g])] for g in z_group_ids]
    out = []
    for Y in _antisymmetric_params(F, pdata.j):
        acc = Cyclo.zero(1)
        for t in range(zn):
            lam = center_character_value(F, pdata.z_params[t], Y)
            acc = acc + chi_on_z[t] * lam.conj()
        m = acc.rational_value() / zn
        assert m.denominator == 1 and m >= 0, "non-integral center multiplicity"
        out.append((Y, la.rank(F, Y), m))
    return out


def _antisymmetric_params(F, j: int):
    slots = [(a, b) for a in range(j) for b in range(a + 1, j)]
    total = F.q ** len(slots)
    for code in range(total):
        Y = la.zeros(F, j, j)
        rem = code
        for (a, b) in slots:
            v = rem % F.q
            rem //= F.q
            Y[a, b] = v
            Y[b, a] = F.neg(int(v))
        yield Y


def urank(table: GroupTable, chi: ClassFunction, index: int = -1) -> RankResult:
    """The largest center-character rank over all parabolic levels j; for the
    odd-dimensional / minus-type groups the standard plus-type subgroup is
    used, per the embedding definition."""
    spec = table.spec
    assert spec.q % 2, "rank theory is for odd characteristic"
    if spec.is_orthogonal and (spec.dim % 2 == 1 or spec.sign == -1):
        sub_table, sub_chi = restrict_to_standard_soplus(table, chi)
        res = urank(sub_table, sub_chi, index)
        return RankResult(index, res.rank, res.witness_j, res.witness_param, res.multiplicity)
    assert spec.family in ("SO", "Omega", "GO") and spec.sign == 1, \
        "rank is defined for plus-type orthogonal groups"
    n = witt_index(spec)
    best = RankResult(index, 0, 0, None, None)
    for j in range(1, n + 1):
        pdata = cached_parabolic(table, j)
        for Y, r, m in center_constituents(chi, pdata):
            if m > 0 and r > best.rank:
                best = RankResult(index, r, j, Y, m)
    assert best.rank % 2 == 0, "odd rank (antisymmetric ranks are even)"
    return best


def cached_parabolic(table: GroupTable, j: int) -> ParabolicData:
    cache = table._cache.setdefault("parabolics", {})
    if j not in cache:
        cache[j] = parabolic(table, j)
    return cache[j]


def restrict_to_standard_soplus(table: GroupTable, chi: ClassFunction):
    """Restrict to the standard SO+ subgroup fixing the trailing anisotropic
    coordinates, transported onto a standalone plus-type table."""
    spec = table.spec
    d = spec.dim
    drop = 1 if d % 2 == 1 else 2
    key = ("std_soplus", drop)
    if key not in table._cache:
        sub = pointwise_stabilizer(table, list(range(d - drop, d)), name="SO+std")
        target_spec = GroupSpec("SO", d - drop, spec.q, 1)
        std = enumerate_group(target_spec)
        # the subgroup consists of block-diag(M, I_drop); match by truncation
        mapping = np.zeros(std.order, dtype=np.int64)
        for i in range(std.order):
            M = la.identity(table.field, d)
            M[: d - drop, : d - drop] = std.matrix(i)
            mapping[i] = table.id_of(M)
        assert sub.order == std.order
        table._cache[key] = (std, mapping)
    std, mapping = table._cache[key]
    part = chi.part
    std_part = classes(std)
    vals = [chi.values[int(part.class_of[mapping[int(r)]])] for r in std_part.reps]
    return std, ClassFunction(std_part, vals)


def all_ranks(table: GroupTable) -> list[RankResult]:
    key = "uranks"
    if key not in table._cache:
        ct = build_table(table)
        table._cache[key] = [urank(table, chi, i) for i, chi in enumerate(ct.irreducibles)]
    return table._cache[key]


def rank_level_checks(table: GroupTable) -> list[BoundReport]:
    """rank even and <= min(2*level, n); the rank-multiplicity law for the
    top-rank center characters; additivity of rank on products."""
    spec = table.spec
    n = witt_index(spec)
    q = spec.q
    ct = build_table(table)
    out = []
    ranks = all_ranks(table)
    levels = all_levels(table)
    for res, lev in zip(ranks, levels):
        cap = min(2 * lev.level, n)
        ok = res.rank % 2 == 0 and res.rank <= cap
        out.append(BoundReport(
            check="rank-even-min",
            params={"group": str(spec), "character": res.index,
                    "level": lev.level, "rank": res.rank},
            lhs=res.rank, rhs=cap,
            verdict=PASS if ok else FAIL,
        ))
    # multiplicity law: each rank-2r lambda occurs in tau^r|_Z(U_2r) with
    # multiplicity q^(2r(n-2r)) |Sp_2r(q)|
    from .weil import tau_class_function
    from .groups import group_order

    tau = tau_class_function(table)
    for r in range(1, n // 2 + 1):
        j = 2 * r
        pdata = cached_parabolic(table, j)
        want = Fraction(q ** (2 * r * (n - 2 * r)) * group_order(GroupSpec("Sp", 2 * r, q)))
        taur = tau ** r
        for Y, rk, m in center_constituents(taur, pdata):
            if rk != 2 * r:
                continue
            out.append(BoundReport(
                check="rank-multiplicity",
                params={"group": str(spec), "r": r, "j": j},
                lhs=m, rhs=want,
                verdict=PASS if m == want else FAIL,
            ))
    # additivity on products with rank sum within the Witt index
    for i1, r1 in enumerate(ranks):
        for i2, r2 in enumerate(ranks):
            if i2 < i1:
                continue
            if r1.rank + r2.rank > n:
                continue
            prod = ct.irreducibles[i1] * ct.irreducibles[i2]
            got = urank(table, prod)
            out.append(BoundReport(
                check="rank-product-add",
                params={"group": str(spec), "chars": (i1, i2)},
                lhs=got.rank, rhs=r1.rank + r2.rank,
                verdict=PASS if got.rank == r1.rank + r2.rank else FAIL,
            ))
    return out


def rank_restriction_checks(table: GroupTable) -> list[BoundReport]:
    """rank(chi) = l implies the restriction to P_l, P_n and to the standard
    plus-type subgroup of rank l all have rank exactly l."""
    spec = table.spec
    n = witt_index(spec)
    ct = build_table(table)
    out = []
    for res in all_ranks(table):
        l = res.rank
        if l == 0:
            continue
        chi = ct.irreducibles[res.index]
        # restriction to the parabolic levels: recomputing over Z(U_j) for
        # j in {l, n} reproduces the rank
        for j in (l, n):
            pdata = cached_parabolic(table, j)
            got = max(
                (rk for _, rk, m in center_constituents(chi, pdata) if m > 0),
                default=0,
            )
            out.append(BoundReport(
                check="rank-restrict",
                params={"group": str(spec), "character": res.index, "j": j},
                lhs=got, rhs=l,
                verdict=PASS if got == l else FAIL,
            ))
    return out
