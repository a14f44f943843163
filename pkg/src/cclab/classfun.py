"""Conjugacy classes and exact class functions.

Class numbering is deterministic: classes sorted by (size, minimal element
byte-encoding), so tables and reports are reproducible.  All values live in
Q(zeta_e) for e the group exponent; inner products are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from . import linalg as la
from .cyclotomic import Cyclo, sort_key
from .groups import GroupTable


@dataclass
class ClassPartition:
    group: GroupTable
    class_of: np.ndarray          # element id -> class id
    reps: np.ndarray              # class id -> element id (minimal in class)
    sizes: np.ndarray
    inverse_class: np.ndarray
    orders: np.ndarray            # order of a representative
    exponent: int
    power_classes: list[list[int]]  # power_classes[c][t] = class of rep_c^t

    @property
    def k(self):
        return len(self.reps)

    def centralizer_order(self, c: int) -> int:
        return self.group.order // int(self.sizes[c])

    def class_ids(self, c: int) -> np.ndarray:
        return np.nonzero(self.class_of == c)[0]


def classes(table: GroupTable) -> ClassPartition:
    """Exact conjugation-orbit partition (cached on the table)."""
    if "classes" in table._cache:
        return table._cache["classes"]
    n = table.order
    class_of = np.full(n, -1, dtype=np.int64)
    orbits = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        ids = np.unique(table.conjugate_all(x))
        class_of[ids] = len(orbits)
        orbits.append(ids)
    # deterministic renumbering: (size, id of minimal element)
    order_key = sorted(range(len(orbits)), key=lambda c: (len(orbits[c]), int(orbits[c].min())))
    remap = np.zeros(len(orbits), dtype=np.int64)
    for new, old in enumerate(order_key):
        remap[old] = new
    class_of = remap[class_of]
    orbits = [orbits[c] for c in order_key]
    reps = np.array([int(o.min()) for o in orbits], dtype=np.int64)
    sizes = np.array([len(o) for o in orbits], dtype=np.int64)
    assert int(sizes.sum()) == n
    assert all(n % int(s) == 0 for s in sizes)
    inverse_class = np.array([class_of[table.inv(int(r))] for r in reps], dtype=np.int64)
    assert np.array_equal(inverse_class[inverse_class], np.arange(len(reps)))
    F = table.field
    orders = np.array(
        [la.matrix_order(F, table.matrix(int(r))) for r in reps], dtype=np.int64
    )
    exponent = 1
    for o in orders:
        exponent = lcm(exponent, int(o))
    power_classes = []
    for c, r in enumerate(reps):
        o = int(orders[c])
        row = [class_of[0]]
        cur = int(r)
        for _ in range(1, o):
            row.append(int(class_of[cur]))
            cur = table.mul(cur, int(r))
        power_classes.append(row)
    part = ClassPartition(
        table, class_of, reps, sizes, inverse_class, orders, exponent, power_classes
    )
    table._cache["classes"] = part
    return part


class ClassFunction:
    """Exact class function; values indexed by class id."""

    __slots__ = ("part", "values")

    def __init__(self, part: ClassPartition, values):
        self.part = part
        self.values = [v if isinstance(v, Cyclo) else Cyclo.rational(v) for v in values]
        assert len(self.values) == part.k

    @staticmethod
    def trivial(part: ClassPartition) -> "ClassFunction":
        return ClassFunction(part, [1] * part.k)

    @staticmethod
    def regular(part: ClassPartition) -> "ClassFunction":
        vals = [0] * part.k
        vals[int(part.class_of[0])] = part.group.order
        return ClassFunction(part, vals)

    def value_at_element(self, element_id: int) -> Cyclo:
        return self.values[int(self.part.class_of[element_id])]

    def degree(self) -> Cyclo:
        return self.values[int(self.part.class_of[0])]

    def __add__(self, other):
        assert self.part is other.part
        return ClassFunction(self.part, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        assert self.part is other.part
        return ClassFunction(self.part, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            assert self.part is other.part
            return ClassFunction(self.part, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.part, [v * other for v in self.values])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return ClassFunction(self.part, [v ** n for v in self.values])

    def conj(self):
        return ClassFunction(self.part, [v.conj() for v in self.values])

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and self.part is other.part and \
            all(a == b for a, b in zip(self.values, other.values))

    def __hash__(self):
        return hash(tuple(v.key() for v in self.values))

    def sort_vector(self):
        return tuple(sort_key(v, self.part.exponent) for v in self.values)

    def __repr__(self):
        return f"ClassFunction({[str(v) for v in self.values]})"


def inner(f: ClassFunction, g: ClassFunction) -> Fraction:
    """Exact scalar product (1/|G|) sum |C| f(C) conj(g(C)); rational output."""
    assert f.part is g.part, "class functions on different groups"
    part = f.part
    total = Cyclo.zero(1)
    for c in range(part.k):
        total = total + f.values[c] * g.values[c].conj() * int(part.sizes[c])
    val = total.rational_value() / part.group.order
    return val


def inner_cyclo(f: ClassFunction, g: ClassFunction) -> Cyclo:
    part = f.part
    total = Cyclo.zero(1)
    for c in range(part.k):
        total = total + f.values[c] * g.values[c].conj() * int(part.sizes[c])
    return total / part.group.order


# ---------------------------------------------------------------------------
# subgroup fusion, restriction, induction
# ---------------------------------------------------------------------------


def class_fusion(sub_part: ClassPartition, part: ClassPartition) -> np.ndarray:
    """sub class id -> ambient class id (subgroup recorded via parent chain)."""
    sub = sub_part.group
    amb_ids = sub.ids_in_ancestor(part.group)
    return np.array(
        [int(part.class_of[amb_ids[int(r)]]) for r in sub_part.reps], dtype=np.int64
    )


def restrict(f: ClassFunction, sub_part: ClassPartition) -> ClassFunction:
    fusion = class_fusion(sub_part, f.part)
    return ClassFunction(sub_part, [f.values[int(c)] for c in fusion])


def induce(f: ClassFunction, part: ClassPartition) -> ClassFunction:
    """Induction from a recorded subgroup, via class fusion."""
    sub_part = f.part
    fusion = class_fusion(sub_part, part)
    H = sub_part.group.order
    G = part.group.order
    vals = []
    for c in range(part.k):
        acc = Cyclo.zero(1)
        for hc in range(sub_part.k):
            if int(fusion[hc]) == c:
                acc = acc + f.values[hc] * int(sub_part.sizes[hc])
        # Ind f (c) = [G:H] / |C| * sum over fused subgroup classes
        vals.append(acc * Fraction(G, H * int(part.sizes[c])))
    return ClassFunction(part, vals)


def double_cosets(part: ClassPartition, sub: GroupTable) -> int:
    """|H\\G/H| by orbit counting on cosets; cross-checked by [Ind 1, Ind 1]."""
    G = part.group
    F = G.field
    h_ids = sub.ids_in_ancestor(G)
    h_mats = G.elements[h_ids]
    # label each coset gH by the minimal element id it contains
    coset_label = np.full(G.order, -1, dtype=np.int64)
    labels = []
    for g in range(G.order):
        if coset_label[g] >= 0:
            continue
        prods = la.mat_mul_batch(F, np.broadcast_to(G.matrix(g), h_mats.shape).copy(), h_mats)
        ids = G.ids_of_batch(prods)
        lab = int(ids.min())
        coset_label[ids] = lab
        labels.append(lab)
    # H acts on cosets by left multiplication; count orbits
    seen = set()
    orbits = 0
    for lab in labels:
        if lab in seen:
            continue
        orbits += 1
        stack = [lab]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            prods = la.mat_mul_batch(F, h_mats, np.broadcast_to(G.matrix(cur), h_mats.shape).copy())
            for nxt in np.unique(coset_label[G.ids_of_batch(prods)]):
                if int(nxt) not in seen:
                    stack.append(int(nxt))
    sub_part = classes(sub)
    ind1 = induce(ClassFunction.trivial(sub_part), part)
    check = inner(ind1, ind1)
    assert check == orbits, f"double coset count {orbits} != [Ind1,Ind1] = {check}"
    return orbits


# ---------------------------------------------------------------------------
# multiplicity profiles
# ---------------------------------------------------------------------------


@dataclass
class MultiplicityProfile:
    decomposition: dict[int, Fraction]  # irreducible index -> multiplicity
    sigma: int | None
    lam: int | None
    is_character: bool

    def multiplicity(self, i: int) -> Fraction:
        return self.decomposition.get(i, Fraction(0))


def profile(rho: ClassFunction, chartable) -> MultiplicityProfile:
    """Decompose against a character table; negative or fractional
    multiplicities mark a non-character (a first-class outcome)."""
    decomp = {}
    ok = True
    for i, chi in enumerate(chartable.irreducibles):
        m = inner(rho, chi)
        if m:
            decomp[i] = m
        if m.denominator != 1 or m < 0:
            ok = False
    if not ok:
        return MultiplicityProfile(decomp, None, None, False)
    sigma = sum(int(m) for m in decomp.values())
    lam = sum(
        int(m) for i, m in decomp.items()
        if chartable.irreducibles[i].degree() == Cyclo.rational(1)
    )
    return MultiplicityProfile(decomp, sigma, lam, True)


def sigma_of(rho: ClassFunction, chartable) -> int:
    p = profile(rho, chartable)
    assert p.is_character, "sigma of a non-character"
    return p.sigma


# ---------------------------------------------------------------------------
# class multiplication structure constants
# ---------------------------------------------------------------------------


def class_mult_coeffs(part: ClassPartition, c1: int, c2: int) -> list[int]:
    """a_{c1,c2,k} = #{(x,y) in C1 x C2 : xy = rep_k}, exact, for all k."""
    G = part.group
    F = G.field
    ids1 = part.class_ids(c1)
    out = []
    inv_first = G.elements[[G.inv(int(i)) for i in ids1]]
    for k in range(part.k):
        z = G.matrix(int(part.reps[k]))
        prods = la.mat_mul(F, inv_first, z)
        pids = G.ids_of_batch(prods)
        out.append(int(np.count_nonzero(part.class_of[pids] == c2)))
    return out


def class_matrix(part: ClassPartition, i: int) -> np.ndarray:
    """M_i[j, k] = a_{i,j,k}; the class-algebra right multiplication matrix."""
    key = ("class_matrix", i)
    if key in part.group._cache:
        return part.group._cache[key]
    G = part.group
    F = G.field
    k = part.k
    M = np.zeros((k, k), dtype=np.int64)
    ids_i = part.class_ids(i)
    inv_i = G.elements[[G.inv(int(t)) for t in ids_i]]
    for kk in range(k):
        z = G.matrix(int(part.reps[kk]))
        prods = la.mat_mul(F, inv_i, z)
        pids = G.ids_of_batch(prods)
        cls, counts = np.unique(part.class_of[pids], return_counts=True)
        M[cls, kk] = counts
    part.group._cache[key] = M
    return M


def convolution_matrix(part: ClassPartition, c: int) -> np.ndarray:
    """B[k, i] = #{y in C_c : rep_k y^{-1} in C_i}  ( = a_{i,c,k} )."""
    G = part.group
    F = G.field
    ids_c = part.class_ids(c)
    invs = G.elements[[G.inv(int(t)) for t in ids_c]]
    k = part.k
    B = np.zeros((k, k), dtype=np.int64)
    for kk in range(k):
        z = G.matrix(int(part.reps[kk]))
        prods = la.mat_mul_batch(F, np.broadcast_to(z, invs.shape).copy(), invs)
        pids = G.ids_of_batch(prods)
        cls, counts = np.unique(part.class_of[pids], return_counts=True)
        B[kk, cls] = counts
    return B
