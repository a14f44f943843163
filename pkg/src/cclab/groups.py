"""Finite classical matrix groups over F_q, fully enumerated.

Families: GL, SL, GU, SU, Sp, GO, SO, Omega (unitary groups live over
F_{q^2}).  A group is represented by its complete sorted element list with a
hash index, so everything downstream (classes, characters, parabolic data)
is exact.  Element ordering: identity first, then canonical byte order.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from fractions import Fraction

import numpy as np

from . import linalg as la
from .fields import GF, field, field_for_q, prime_power

ENUMERATION_BUDGET = 2 * 10 ** 7
UNITARY_FILTER_BUDGET = 2 ** 24

FAMILIES = ("GL", "SL", "GU", "SU", "Sp", "GO", "SO", "Omega")


@dataclass(frozen=True)
class GroupSpec:
    family: str
    dim: int
    q: int
    sign: int = 0  # +1 / -1 for even-dimensional orthogonal types, else 0

    def __post_init__(self):
        validate_spec(self)

    def __str__(self):
        s = {1: "+", -1: "-", 0: ""}[self.sign]
        return f"{self.family}{s}({self.dim},{self.q})"

    @property
    def is_unitary(self):
        return self.family in ("GU", "SU")

    @property
    def is_orthogonal(self):
        return self.family in ("GO", "SO", "Omega")

    def matrix_field(self) -> GF:
        p, f = prime_power(self.q)
        return field(p, 2 * f) if self.is_unitary else field(p, f)


class SpecError(ValueError):
    pass


def validate_spec(spec: GroupSpec):
    fam, d, q, s = spec.family, spec.dim, spec.q, spec.sign
    if fam not in FAMILIES:
        raise SpecError(f"unknown family {fam!r}")
    try:
        prime_power(q)
    except AssertionError:
        raise SpecError(f"q = {q} is not a prime power") from None
    if d < 1:
        raise SpecError("dimension must be positive")
    if fam in ("GL", "SL", "GU", "SU"):
        if s != 0:
            raise SpecError(f"{fam} takes no type sign")
        return
    if fam == "Sp":
        if d % 2 or d < 2:
            raise SpecError("symplectic groups need even dimension >= 2")
        if s != 0:
            raise SpecError("Sp takes no type sign")
        return
    # orthogonal families
    if d % 2 == 0:
        if s not in (1, -1):
            raise SpecError(f"{fam}({d},{q}) needs a type sign + or -")
        if d < 2:
            raise SpecError("orthogonal dimension too small")
    else:
        if s != 0:
            raise SpecError("odd-dimensional orthogonal groups take no sign")
        if q % 2 == 0:
            raise SpecError("odd-dimensional orthogonal groups require odd q")


@dataclass
class FormSpec:
    """A bilinear/quadratic/hermitian form on F_q^n (gram + optional Q-diagonal)."""

    kind: str  # symplectic | quadratic | hermitian
    dim: int
    field: GF
    gram: np.ndarray
    quad_diag: np.ndarray | None = None  # Q(e_i); with gram determines Q

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> int:
        F = self.field
        total = 0
        for i in range(self.dim):
            if not x[i]:
                continue
            row = 0
            for j in range(self.dim):
                if self.gram[i, j] and y[j]:
                    row = F.add(row, F.mul(int(self.gram[i, j]), int(y[j])))
            total = F.add(total, F.mul(int(x[i]), row))
        return total

    def evaluate_conj(self, x: np.ndarray, y: np.ndarray, conj_k: int) -> int:
        """Hermitian pairing sum x_i gram_ij y_j^(p^conj_k)."""
        F = self.field
        yy = np.array([F.frobenius(int(t), conj_k) for t in y], dtype=np.int16)
        return self.evaluate(x, yy)

    def quad_value(self, x: np.ndarray) -> int:
        """Q(x) from the stored diagonal and the polarization B(e_i,e_j)."""
        assert self.quad_diag is not None
        F = self.field
        total = 0
        for i in range(self.dim):
            if x[i]:
                total = F.add(total, F.mul(F.mul(int(x[i]), int(x[i])), int(self.quad_diag[i])))
        for i in range(self.dim):
            if not x[i]:
                continue
            for j in range(i + 1, self.dim):
                if x[j] and self.gram[i, j]:
                    total = F.add(total, F.mul(F.mul(int(x[i]), int(x[j])), int(self.gram[i, j])))
        return total

    def nondegenerate(self) -> bool:
        return la.det(self.field, self.gram) != 0


def build_form(spec: GroupSpec) -> FormSpec | None:
    F = spec.matrix_field()
    d = spec.dim
    if spec.family == "Sp":
        n = d // 2
        g = la.zeros(F, d, d)
        for i in range(n):
            g[i, n + i] = 1
            g[n + i, i] = F.neg(1)
        return FormSpec("symplectic", d, F, g)
    if spec.is_unitary:
        return FormSpec("hermitian", d, F, la.identity(F, d))
    if spec.is_orthogonal:
        return _orthogonal_form(spec, F)
    return None


def _orthogonal_form(spec: GroupSpec, F: GF) -> FormSpec:
    d = spec.dim
    g = la.zeros(F, d, d)
    qd = np.zeros(d, dtype=np.int16)
    if d % 2 == 1:
        n = d // 2
        for i in range(n):
            g[i, n + i] = g[n + i, i] = 1
            qd[i] = qd[n + i] = 0
        qd[d - 1] = 1
        g[d - 1, d - 1] = F.add(1, 1)  # B(a,a) = 2 Q(a)
        return FormSpec("quadratic", d, F, g, qd)
    n = d // 2
    npairs = n if spec.sign == 1 else n - 1
    for i in range(npairs):
        g[i, npairs + i] = g[npairs + i, i] = 1
    if spec.sign == -1:
        # anisotropic plane in the last two coordinates
        i, j = d - 2, d - 1
        if F.p != 2:
            nu = F.least_nonsquare()
            qd[i] = 1
            qd[j] = F.neg(nu)
            g[i, i] = F.add(1, 1)
            g[j, j] = F.neg(F.add(nu, nu))
        else:
            c = _least_trace_one(F)
            qd[i] = 1
            qd[j] = c
            g[i, j] = g[j, i] = 1
    form = FormSpec("quadratic", d, F, g, qd)
    assert form.nondegenerate()
    assert _quadratic_type(form) == spec.sign, "constructed form has the wrong type"
    return form


def _least_trace_one(F: GF) -> int:
    for a in range(1, F.q):
        if F.trace_to_prime(a) == 1:
            return a
    raise AssertionError("no trace-one element (internal fault)")


def _quadratic_type(form: FormSpec) -> int:
    """Type sign read off the count of nonzero singular vectors."""
    F, d = form.field, form.dim
    assert d % 2 == 0
    n = d // 2
    q = F.q
    count = 0
    for v in _all_vectors(F, d):
        if form.quad_value(v) == 0:
            count += 1
    count -= 1  # drop v = 0
    plus = (q ** (n - 1) + 1) * (q ** n - 1)
    minus = (q ** (n - 1) - 1) * (q ** n + 1)
    if count == plus:
        return 1
    if count == minus:
        return -1
    raise AssertionError("singular-vector count matches neither orthogonal type")


def _all_vectors(F: GF, d: int):
    idx = np.indices((F.q,) * d).reshape(d, -1).T.astype(np.int16)
    return idx


# ---------------------------------------------------------------------------
# order formulas
# ---------------------------------------------------------------------------


def group_order(spec: GroupSpec) -> int:
    fam, d, q = spec.family, spec.dim, spec.q
    if fam == "GL":
        return _order_gl(d, q)
    if fam == "SL":
        return _order_gl(d, q) // (q - 1)
    if fam == "GU":
        return _order_gu(d, q)
    if fam == "SU":
        return _order_gu(d, q) // (q + 1)
    if fam == "Sp":
        n = d // 2
        o = q ** (n * n)
        for i in range(1, n + 1):
            o *= q ** (2 * i) - 1
        return o
    # orthogonal
    if d % 2 == 1:
        n = d // 2
        o = q ** (n * n)
        for i in range(1, n + 1):
            o *= q ** (2 * i) - 1
        so = o
        full = 2 * so
        if fam == "GO":
            return full
        if fam == "SO":
            return so
        return so // 2  # Omega, q odd enforced by validate_spec
    n = d // 2
    eps = spec.sign
    o = 2 * q ** (n * (n - 1)) * (q ** n - eps)
    for i in range(1, n):
        o *= q ** (2 * i) - 1
    full = o
    if q % 2 == 0:
        # char 2: det is identically 1, SO = GO = O; Omega has index 2
        if fam in ("GO", "SO"):
            return full
        return full // 2
    if fam == "GO":
        return full
    if fam == "SO":
        return full // 2
    return full // 4


def _order_gl(d, q):
    o = 1
    for i in range(d):
        o *= q ** d - q ** i
    return o


def _order_gu(d, q):
    o = q ** (d * (d - 1) // 2)
    for i in range(1, d + 1):
        o *= q ** i - (-1) ** i
    return o


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def _sl_generators(F: GF, d: int) -> list[np.ndarray]:
    gens = []
    basis = [F.encode([1 if j == i else 0 for j in range(F.f)]) for i in range(F.f)]
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            for b in basis:
                A = la.identity(F, d)
                A[i, j] = b
                gens.append(A)
    return gens


def _gl_generators(F: GF, d: int) -> list[np.ndarray]:
    gens = _sl_generators(F, d)
    xi = F.primitive_element()
    A = la.identity(F, d)
    A[0, 0] = xi
    gens.append(A)
    return gens


def symplectic_levi(F: GF, n: int, A: np.ndarray) -> np.ndarray:
    """diag(A, A^{-T}) in the Witt basis (e_1..e_n, f_1..f_n)."""
    M = la.zeros(F, 2 * n, 2 * n)
    M[:n, :n] = A
    M[n:, n:] = la.transpose(la.mat_inv(F, A))
    return M


def symplectic_unipotent(F: GF, n: int, S: np.ndarray) -> np.ndarray:
    """[[I, S], [0, I]] for symmetric S."""
    assert np.array_equal(S, la.transpose(S))
    M = la.identity(F, 2 * n)
    M[:n, n:] = S
    return M


def symplectic_weyl(F: GF, n: int) -> np.ndarray:
    """e_i -> -f_i? No: x -> (0,-I;I,0) x: e_i -> f_i, f_i -> -e_i."""
    M = la.zeros(F, 2 * n, 2 * n)
    for i in range(n):
        M[i, n + i] = F.neg(1)
        M[n + i, i] = 1
    return M


def _sp_generators(F: GF, n: int) -> list[np.ndarray]:
    gens = [symplectic_levi(F, n, A) for A in _gl_generators(F, n)]
    basis = [F.encode([1 if j == i else 0 for j in range(F.f)]) for i in range(F.f)]
    for b in basis:
        for i in range(n):
            S = la.zeros(F, n, n)
            S[i, i] = b
            gens.append(symplectic_unipotent(F, n, S))
        for i in range(n):
            for j in range(i + 1, n):
                S = la.zeros(F, n, n)
                S[i, j] = S[j, i] = b
                gens.append(symplectic_unipotent(F, n, S))
    gens.append(symplectic_weyl(F, n))
    return gens


def _orthogonal_generator_stream(form: FormSpec):
    """Reflections (q odd) or orthogonal transvections (q even), one per
    projective nonsingular vector, in canonical order."""
    F, d = form.field, form.dim
    for v in _all_vectors(F, d):
        nz = next((i for i in range(d) if v[i]), None)
        if nz is None or v[nz] != 1:
            continue  # projective representative: first nonzero coordinate = 1
        qv = form.quad_value(v)
        if qv == 0:
            continue
        yield _orthogonal_transvection(form, v, qv)


def _orthogonal_transvection(form: FormSpec, v: np.ndarray, qv: int) -> np.ndarray:
    """x -> x - B(x,v)/Q(v) * v; a reflection for odd q, a transvection for even."""
    F, d = form.field, form.dim
    inv = F.inv(qv)
    M = la.identity(F, d)
    Bv = la.mat_vec(F, form.gram, v)  # column j: B(e_j, v)
    for j in range(d):
        c = F.mul(int(Bv[j]), inv)
        if not c:
            continue
        for i in range(d):
            if v[i]:
                M[i, j] = F.sub(int(M[i, j]), F.mul(c, int(v[i])))
    return M


def _unitary_generators(spec: GroupSpec, form: FormSpec) -> list[np.ndarray]:
    F, d = form.field, form.dim
    p, f2 = F.p, F.f
    f = f2 // 2
    conj_k = f
    # trace-zero line for transvection scalars: lambda + lambda^q = 0
    tzero = [a for a in range(1, F.q) if F.add(a, F.frobenius(a, conj_k)) == 0]
    gens = []
    if d >= 2:
        for v in _all_vectors(F, d):
            nz = next((i for i in range(d) if v[i]), None)
            if nz is None or v[nz] != 1:
                continue
            if form.evaluate_conj(v, v, conj_k) != 0:
                continue
            for lam in tzero[: max(1, f)]:
                gens.append(_unitary_transvection(F, d, v, lam, conj_k))
    if spec.family == "GU":
        # norm-one torus element diag(zeta, 1, ..., 1), zeta of order q+1
        qsub = p ** f
        zeta = F.pow(F.primitive_element(), qsub - 1)
        A = la.identity(F, d)
        A[0, 0] = zeta
        gens.append(A)
    return gens


def _unitary_transvection(F: GF, d: int, v: np.ndarray, lam: int, conj_k: int) -> np.ndarray:
    """x -> x + lam * h(x, v) * v for isotropic v, Tr(lam) = 0 (identity gram)."""
    M = la.identity(F, d)
    vbar = [F.frobenius(int(t), conj_k) for t in v]
    for j in range(d):
        c = F.mul(lam, vbar[j])
        if not c:
            continue
        for i in range(d):
            if v[i]:
                M[i, j] = F.add(int(M[i, j]), F.mul(c, int(v[i])))
    return M


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


class TooLargeError(RuntimeError):
    pass


@dataclass
class GroupTable:
    """A fully enumerated matrix group."""

    spec: GroupSpec | None
    field: GF
    dim: int
    elements: np.ndarray  # (order, dim, dim) int16
    index: dict[bytes, int]
    order: int
    gen_ids: list[int]
    inv_ids: np.ndarray
    bfs_parent: np.ndarray | None = None  # (order, 2): parent id, generator id
    form: FormSpec | None = None
    parent: "GroupTable | None" = None  # for recorded subgroups
    parent_ids: np.ndarray | None = None  # sub id -> parent id
    name: str = ""
    _cache: dict = dfield(default_factory=dict)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"GroupTable({self.name or self.spec}, order={self.order})"

    def id_of(self, M: np.ndarray) -> int:
        return self.index[la.encode_matrix(M)]

    def matrix(self, i: int) -> np.ndarray:
        return self.elements[i]

    def mul(self, i: int, j: int) -> int:
        return self.id_of(la.mat_mul(self.field, self.elements[i], self.elements[j]))

    def inv(self, i: int) -> int:
        return int(self.inv_ids[i])

    def ids_of_batch(self, batch: np.ndarray) -> np.ndarray:
        idx = self.index
        return np.fromiter(
            (idx[k] for k in la.encode_batch(batch)), dtype=np.int64, count=len(batch)
        )

    def conjugate_all(self, i: int) -> np.ndarray:
        """ids of g^-1 x_i g for every g, as an array over g-ids."""
        F = self.field
        x = self.elements[i]
        left = la.mat_mul_batch(F, self.elements[self.inv_ids], np.broadcast_to(x, self.elements.shape))
        prods = la.mat_mul_batch(F, left, self.elements)
        return self.ids_of_batch(prods)

    def generators(self) -> list[np.ndarray]:
        if not self.gen_ids and self.order > 1:
            self.gen_ids = _find_generators(self)
        return [self.elements[i] for i in self.gen_ids]

    def contains_matrix(self, M: np.ndarray) -> bool:
        return la.encode_matrix(M) in self.index

    def ids_in_ancestor(self, ancestor: "GroupTable") -> np.ndarray:
        """Map this table's ids into an ancestor table along the subgroup chain."""
        ids = np.arange(self.order, dtype=np.int64)
        t = self
        while t is not ancestor:
            assert t.parent is not None, "no recorded embedding into the ancestor"
            ids = t.parent_ids[ids]
            t = t.parent
        return ids


def _finalize(spec, F, dim, mats: dict[bytes, np.ndarray], gens, form,
              parent_tree=None, name="") -> GroupTable:
    ident = la.identity(F, dim)
    ikey = la.encode_matrix(ident)
    assert ikey in mats
    keys = sorted(k for k in mats if k != ikey)
    keys.insert(0, ikey)
    order = len(keys)
    elements = np.stack([mats[k] for k in keys]).astype(np.int16)
    index = {k: i for i, k in enumerate(keys)}
    inv_ids = np.zeros(order, dtype=np.int64)
    for i in range(order):
        inv_ids[i] = index[la.encode_matrix(la.mat_inv(F, elements[i]))]
    gen_ids = []
    for g in gens:
        k = la.encode_matrix(g)
        if k in index and index[k] != 0 and index[k] not in gen_ids:
            gen_ids.append(index[k])
    bfs = None
    if parent_tree is not None:
        bfs = np.full((order, 2), -1, dtype=np.int64)
        for key, (pk, gi) in parent_tree.items():
            if pk is None:
                continue
            bfs[index[key]] = (index[pk], gi)
    return GroupTable(
        spec=spec, field=F, dim=dim, elements=elements, index=index, order=order,
        gen_ids=gen_ids, inv_ids=inv_ids, bfs_parent=bfs, form=form, name=name,
    )


def _bfs_closure(F: GF, dim: int, gens: list[np.ndarray], target: int | None,
                 budget: int, seed=None) -> tuple[dict, dict]:
    """Breadth-first closure; returns (elements-by-key, parent tree)."""
    ident = la.identity(F, dim)
    if seed and seed[0]:
        mats, tree = dict(seed[0]), dict(seed[1])
        frontier = list(mats.values())
    else:
        mats = {la.encode_matrix(ident): ident}
        tree = {la.encode_matrix(ident): (None, -1)}
        frontier = [ident]
    gen_arr = [np.asarray(g, dtype=np.int16) for g in gens]
    while frontier:
        batch = np.stack(frontier)
        new = []
        pkeys = la.encode_batch(batch)
        for gi, g in enumerate(gen_arr):
            prods = la.mat_mul(F, batch, g)
            keys = la.encode_batch(prods)
            for pk, k, M in zip(pkeys, keys, prods):
                if k not in mats:
                    mats[k] = M
                    tree[k] = (pk, gi)
                    new.append(M)
        if len(mats) > budget:
            raise TooLargeError(f"closure exceeded budget {budget}")
        if target is not None and len(mats) > target:
            raise AssertionError("closure exceeded the predicted group order")
        frontier = new
    return mats, tree


def _closure_with_extension(F, dim, gen_stream, target, budget):
    """BFS closure, appending generators from the stream until the target
    order is reached (used for reflection-generated orthogonal groups).
    The closed set so far is reused as the seed when a generator is added."""
    gens = []
    stream = iter(gen_stream)
    for _ in range(4):
        try:
            gens.append(next(stream))
        except StopIteration:
            break
    mats = tree = None
    while True:
        mats, tree = _bfs_closure(F, dim, gens, target, budget, seed=(mats, tree))
        if len(mats) == target:
            return mats, tree, gens
        extended = False
        for g in stream:
            if la.encode_matrix(g) not in mats:
                gens.append(g)
                extended = True
                break
        if not extended:
            raise AssertionError(
                f"generator stream exhausted at order {len(mats)} < {target}"
            )


def enumerate_group(spec: GroupSpec, budget: int = ENUMERATION_BUDGET) -> GroupTable:
    order = group_order(spec)
    if order > budget:
        raise TooLargeError(f"{spec} has order {order} > budget {budget}")
    F = spec.matrix_field()
    d = spec.dim
    form = build_form(spec)
    fam = spec.family

    if fam in ("GL", "SL"):
        gens = _gl_generators(F, d) if fam == "GL" else _sl_generators(F, d)
        mats, tree = _bfs_closure(F, d, gens, order, budget)
        assert len(mats) == order
        return _finalize(spec, F, d, mats, gens, form, tree, str(spec))

    if fam == "Sp":
        gens = _sp_generators(F, d // 2)
        mats, tree = _bfs_closure(F, d, gens, order, budget)
        assert len(mats) == order
        return _finalize(spec, F, d, mats, gens, form, tree, str(spec))

    if fam in ("GU", "SU"):
        gens = _unitary_generators(spec, form)
        try:
            mats, tree = _bfs_closure(F, d, gens, order, budget)
            if len(mats) != order:
                raise AssertionError
        except AssertionError:
            mats, tree = _unitary_filter(spec, form, order)
            gens = []
        assert len(mats) == order
        return _finalize(spec, F, d, mats, gens, form, tree, str(spec))

    # orthogonal families: enumerate the full isometry group first
    full_order = group_order(GroupSpec("GO", d, spec.q, spec.sign))
    try:
        mats, tree, gens = _closure_with_extension(
            F, d, _orthogonal_generator_stream(form), full_order, budget
        )
    except AssertionError:
        if F.q ** (d * d) <= UNITARY_FILTER_BUDGET:
            mats, tree = _isometry_filter(form, full_order)
            gens = []
        else:
            raise
    go = _finalize(GroupSpec("GO", d, spec.q, spec.sign), F, d, mats, gens, form, tree)
    if fam == "GO":
        return go
    if F.p == 2:
        so = go
    else:
        dets = np.array([la.det(F, go.elements[i]) for i in range(go.order)])
        so = subgroup_from_mask(go, dets == 1)
    if fam == "SO":
        table = _retable(so, spec)
        assert table.order == order
        return table
    omega = derived_subgroup(so)
    table = _retable(omega, spec)
    assert table.order == order, f"Omega order {table.order} != {order}"
    return table


def _retable(t: GroupTable, spec: GroupSpec) -> GroupTable:
    """Detach a filtered subgroup into a standalone table for the given spec."""
    return GroupTable(
        spec=spec, field=t.field, dim=t.dim, elements=t.elements, index=t.index,
        order=t.order, gen_ids=t.gen_ids, inv_ids=t.inv_ids, bfs_parent=None,
        form=t.form, name=str(spec),
    )


def _unitary_filter(spec: GroupSpec, form: FormSpec, order: int):
    F, d = form.field, form.dim
    assert F.q ** (d * d) <= UNITARY_FILTER_BUDGET, "unitary group too large to filter"
    conj_k = F.f // 2
    CONJ = np.array([F.frobenius(a, conj_k) for a in range(F.q)], dtype=np.int16)
    ident = la.identity(F, d)
    mats = {}
    for B in _matrix_batches(F, d):
        Mc = np.ascontiguousarray(CONJ[B].transpose(0, 2, 1))
        herm = la.mat_mul_batch(F, Mc, B)
        ok = (herm == ident[None]).all(axis=(1, 2))
        for M in B[ok]:
            if spec.family == "SU" and la.det(F, M) != 1:
                continue
            mats[la.encode_matrix(M)] = M.astype(np.int16)
    assert len(mats) == order
    return mats, None


def _isometry_filter(form: FormSpec, order: int):
    F, d = form.field, form.dim
    assert F.q ** (d * d) <= UNITARY_FILTER_BUDGET, "isometry group too large to filter"
    mats = {}
    for B in _matrix_batches(F, d):
        MT = np.ascontiguousarray(B.transpose(0, 2, 1))
        G2 = la.mat_mul_batch(F, la.mat_mul_batch(F, MT, np.broadcast_to(form.gram, B.shape)), B)
        ok = (G2 == form.gram[None]).all(axis=(1, 2))
        for M in B[ok]:
            if form.quad_diag is not None and not all(
                form.quad_value(M[:, i]) == form.quad_diag[i] for i in range(d)
            ):
                continue
            mats[la.encode_matrix(M)] = M.astype(np.int16)
    assert len(mats) == order
    return mats, None


def _matrix_batches(F: GF, d: int, chunk: int = 1 << 14):
    total = F.q ** (d * d)
    digits = None
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        out = np.zeros((len(idx), d * d), dtype=np.int16)
        rem = idx.copy()
        for t in range(d * d):
            out[:, t] = rem % F.q
            rem //= F.q
        yield out.reshape(-1, d, d)


def _is_isometry(form: FormSpec, M: np.ndarray) -> bool:
    F = form.field
    MT = la.transpose(M)
    G2 = la.mat_mul(F, la.mat_mul(F, MT, form.gram), M)
    if not np.array_equal(G2, form.gram):
        return False
    if form.quad_diag is not None:
        for i in range(form.dim):
            if form.quad_value(M[:, i]) != form.quad_diag[i]:
                return False
    return True


def closure_ids(t: GroupTable, gen_ids: list[int]) -> np.ndarray:
    """ids of the subgroup generated by the given element ids (batched BFS)."""
    seen = np.zeros(t.order, dtype=bool)
    seen[0] = True
    frontier = np.array(sorted(set(gen_ids) - {0}), dtype=np.int64)
    seen[frontier] = True
    F = t.field
    while len(frontier):
        new = []
        batch = t.elements[frontier]
        for g in gen_ids:
            prods = la.mat_mul(F, batch, t.elements[g])
            ids = t.ids_of_batch(prods)
            fresh = ids[~seen[ids]]
            if len(fresh):
                seen[np.unique(fresh)] = True
                new.append(np.unique(fresh))
        frontier = np.unique(np.concatenate(new)) if new else np.array([], dtype=np.int64)
    return np.nonzero(seen)[0]


def derived_subgroup_ids(t: GroupTable) -> np.ndarray:
    """ids of [G, G]: subgroup closure of generator commutators, then a
    normal-closure loop adding conjugates of the generating commutators."""
    gens = t.gen_ids if t.gen_ids else _find_generators(t)
    seeds = set()
    for a in gens:
        for b in gens:
            seeds.add(t.mul(t.mul(t.inv(a), t.inv(b)), t.mul(a, b)))
    seeds.discard(0)
    while True:
        ids = closure_ids(t, sorted(seeds))
        inside = set(map(int, ids))
        grew = False
        for s in sorted(seeds):
            for g in gens:
                c = t.mul(t.mul(t.inv(g), s), g)
                if c not in inside:
                    seeds.add(c)
                    grew = True
        if not grew:
            return ids


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------


def subgroup_from_mask(parent: GroupTable, mask: np.ndarray, name: str = "") -> GroupTable:
    ids = np.nonzero(mask)[0]
    sub_elems = parent.elements[ids]
    keys = la.encode_batch(sub_elems)
    ikey = la.encode_matrix(la.identity(parent.field, parent.dim))
    pairs = sorted(zip(keys, ids), key=lambda kv: (kv[0] != ikey, kv[0]))
    sorted_keys = [k for k, _ in pairs]
    parent_ids = np.array([i for _, i in pairs], dtype=np.int64)
    elements = parent.elements[parent_ids]
    index = {k: i for i, k in enumerate(sorted_keys)}
    order = len(sorted_keys)
    inv_ids = np.zeros(order, dtype=np.int64)
    pindex = {int(p): i for i, p in enumerate(parent_ids)}
    for i, p in enumerate(parent_ids):
        ip = parent.inv(int(p))
        assert ip in pindex, "subgroup mask not closed under inversion"
        inv_ids[i] = pindex[ip]
    t = GroupTable(
        spec=None, field=parent.field, dim=parent.dim, elements=elements,
        index=index, order=order, gen_ids=[], inv_ids=inv_ids, form=parent.form,
        parent=parent, parent_ids=parent_ids, name=name,
    )
    t.gen_ids = _find_generators(t)
    return t


def _find_generators(t: GroupTable) -> list[int]:
    """A small generating set by greedy batched closure."""
    if t.order == 1:
        return []
    gens: list[int] = []
    have = np.zeros(t.order, dtype=bool)
    have[0] = True
    while not have.all():
        cand = int(np.nonzero(~have)[0][0])
        gens.append(cand)
        ids = closure_ids(t, gens)
        have[:] = False
        have[ids] = True
    return gens


def pointwise_stabilizer(parent: GroupTable, basis_indices: list[int], name: str = "") -> GroupTable:
    """Subgroup fixing the listed standard basis vectors pointwise."""
    d = parent.dim
    cols = parent.elements[:, :, basis_indices]
    want = la.identity(parent.field, d)[:, basis_indices]
    mask = (cols == want[None, :, :]).all(axis=(1, 2))
    return subgroup_from_mask(parent, mask, name or f"stab{basis_indices}")


def setwise_block_stabilizer(parent: GroupTable, span_indices: list[int], name: str = "") -> GroupTable:
    """Stabilizer of the coordinate subspace spanned by the listed basis vectors."""
    d = parent.dim
    other = [i for i in range(d) if i not in span_indices]
    block = parent.elements[:, other][:, :, span_indices]
    mask = (block == 0).all(axis=(1, 2))
    return subgroup_from_mask(parent, mask, name or f"stab<{span_indices}>")


def levi_gl_subgroup(parent: GroupTable, name: str = "levi") -> GroupTable:
    """Siegel Levi: block-diagonal elements diag(A, *) in a Witt basis."""
    d = parent.dim
    n = d // 2
    e = parent.elements
    mask = ((e[:, :n, n:] == 0).all(axis=(1, 2)) & (e[:, n:, :n] == 0).all(axis=(1, 2)))
    return subgroup_from_mask(parent, mask, name)


def derived_subgroup(parent: GroupTable, name: str = "derived") -> GroupTable:
    ids = derived_subgroup_ids(parent)
    mask = np.zeros(parent.order, dtype=bool)
    mask[ids] = True
    return subgroup_from_mask(parent, mask, name)


# ---------------------------------------------------------------------------
# parabolic subgroups
# ---------------------------------------------------------------------------


@dataclass
class ParabolicData:
    group: GroupTable
    j: int
    P: GroupTable
    U: GroupTable
    L: GroupTable
    Z: GroupTable          # center of U
    z_params: list[np.ndarray]  # Z element id -> the j x j parameter matrix X


def witt_index(spec: GroupSpec) -> int:
    if spec.family == "Sp":
        return spec.dim // 2
    if spec.is_orthogonal:
        if spec.dim % 2 == 1:
            return spec.dim // 2
        return spec.dim // 2 if spec.sign == 1 else spec.dim // 2 - 1
    raise SpecError(f"no Witt index for family {spec.family}")


def parabolic(parent: GroupTable, j: int) -> ParabolicData:
    """P_j = Stab(<u_1..u_j>) = U_j x| L_j, with Z(U_j) parameterized per the
    antisymmetric/symmetric block shape of the Witt basis."""
    spec = parent.spec
    assert spec is not None
    n = witt_index(spec)
    if not 1 <= j <= n:
        raise SpecError(f"j = {j} exceeds the Witt index {n}")
    F, d = parent.field, parent.dim
    iso = list(range(j))

    P = setwise_block_stabilizer(parent, iso, name=f"P_{j}")

    # unipotent radical: trivial on U, on Uperp/U and on V/Uperp
    perp = _perp_complement_indices(parent, j)
    mask = np.ones(P.order, dtype=bool)
    e = P.elements
    ident = la.identity(F, d)
    # fixes u_1..u_j pointwise
    mask &= (e[:, :, iso] == ident[:, iso][None]).all(axis=(1, 2))
    # acts trivially on Uperp/U: columns of the middle block agree mod U
    mid = perp
    sel = [i for i in range(d) if i not in iso]
    mask &= (e[:, sel][:, :, mid] == ident[sel][:, mid][None]).all(axis=(1, 2))
    U = subgroup_from_mask(P, mask, name=f"U_{j}")

    # Levi: preserves <u_i>, <v_i> and the middle block
    vco = _dual_indices(parent, j)
    midc = [i for i in range(d) if i not in iso and i not in vco]
    le = P.elements
    lmask = np.ones(P.order, dtype=bool)
    for rows, cols in (
        (midc + vco, iso), (iso + vco, midc), (iso + midc, vco),
    ):
        if rows and cols:
            lmask &= (le[:, rows][:, :, cols] == 0).all(axis=(1, 2))
    L = subgroup_from_mask(P, lmask, name=f"L_{j}")

    assert U.order * L.order == P.order, "P != U x| L"
    # product map bijective: U cap L = 1 suffices given the order match
    common = set(map(int, U.parent_ids)) & set(map(int, L.parent_ids))
    assert common == {0}, "U cap L nontrivial"

    Z, params = _center_with_params(parent, U, j)
    return ParabolicData(parent, j, P, U, L, Z, params)


def _dual_indices(parent: GroupTable, j: int) -> list[int]:
    """Indices of v_1..v_j paired with u_1..u_j in the Witt basis."""
    spec = parent.spec
    d = parent.dim
    if spec.family == "Sp":
        n = d // 2
        return list(range(n, n + j))
    if d % 2 == 1:
        n = d // 2
        return list(range(n, n + j))
    npairs = witt_index(spec)
    return list(range(npairs, npairs + j))


def _perp_complement_indices(parent: GroupTable, j: int) -> list[int]:
    """Basis indices spanning a complement of U inside U^perp."""
    iso = set(range(j))
    dual = set(_dual_indices(parent, j))
    return [i for i in range(parent.dim) if i not in iso and i not in dual]


def _center_with_params(parent: GroupTable, U: GroupTable, j: int):
    """The block-shape central subgroup of U_j: elements [I_j, X] with X
    antisymmetric zero-diagonal (orthogonal case) or symmetric (symplectic).
    Built directly from the parameter matrices, then verified to be central
    and elementary abelian inside U_j."""
    F = parent.field
    fam = parent.spec.family
    dual = _dual_indices(parent, j)
    params = list(_center_parameter_matrices(F, j, symmetric=(fam == "Sp")))
    umask = np.zeros(U.order, dtype=bool)
    uidx = {int(p): i for i, p in enumerate(U.ids_in_ancestor(parent))}
    for X in params:
        R = la.identity(F, parent.dim)
        R[np.ix_(range(j), dual)] = X
        pid = parent.index.get(la.encode_matrix(R))
        assert pid is not None, "block-shape element not in the group"
        assert pid in uidx, "block-shape element not in the unipotent radical"
        umask[uidx[pid]] = True
    Z = subgroup_from_mask(U, umask, name=f"Z(U_{j})")
    assert Z.order == len(params)
    ident = la.identity(F, parent.dim)
    for zi in range(Z.order):
        zu = int(Z.parent_ids[zi])
        for g in U.gen_ids:
            assert U.mul(zu, g) == U.mul(g, zu), "Z(U_j) element not central in U_j"
        assert np.array_equal(la.mat_pow(F, Z.elements[zi], F.p), ident), \
            "Z(U_j) not elementary abelian"
    # parameters aligned with Z's own element order
    ordered = [Z.elements[i][np.ix_(range(j), dual)].copy() for i in range(Z.order)]
    return Z, ordered


def _center_parameter_matrices(F: GF, j: int, symmetric: bool):
    """All j x j symmetric, or antisymmetric zero-diagonal, matrices."""
    if symmetric:
        slots = [(a, b) for a in range(j) for b in range(a, j)]
    else:
        slots = [(a, b) for a in range(j) for b in range(a + 1, j)]
    for vals in _all_vectors(F, len(slots)) if slots else [np.zeros(0, dtype=np.int16)]:
        X = la.zeros(F, j, j)
        for (a, b), v in zip(slots, vals):
            X[a, b] = v
            X[b, a] = v if symmetric else F.neg(int(v))
        yield X


# ---------------------------------------------------------------------------
# fixed spaces
# ---------------------------------------------------------------------------


def fixed_space_dims(F: GF, M: np.ndarray) -> tuple[int, int]:
    """(dim ker(g - 1), dim ker(g + 1)) by exact rank computation."""
    d = M.shape[0]
    I = la.identity(F, d)
    dplus = la.kernel_dim(F, la.mat_sub(F, M, I))
    dminus = la.kernel_dim(F, la.mat_add(F, M, I))
    return dplus, dminus


def spec_from_string(s: str) -> GroupSpec:
    """Parse 'Sp(4,3)', 'SO+(4,3)', 'Omega-(6,2)', 'O+(4,3)' etc."""
    s = s.strip()
    fam = None
    rest = None
    for name in ("Omega", "GL", "SL", "GU", "SU", "Sp", "SO", "GO", "O"):
        if s.startswith(name):
            fam, rest = name, s[len(name):]
            break
    if fam is None:
        raise SpecError(f"cannot parse group spec {s!r}: unknown family at position 0")
    sign = 0
    if rest[:1] in ("+", "-"):
        sign = 1 if rest[0] == "+" else -1
        rest = rest[1:]
    if fam == "O":
        fam = "GO"
    if not (rest.startswith("(") and rest.endswith(")")):
        raise SpecError(f"cannot parse {s!r}: expected '(n,q)' at position {len(fam)}")
    body = rest[1:-1].split(",")
    if len(body) != 2:
        raise SpecError(f"cannot parse {s!r}: expected two comma-separated integers")
    try:
        dim, q = int(body[0]), int(body[1])
    except ValueError:
        raise SpecError(f"cannot parse {s!r}: non-integer parameters") from None
    return GroupSpec(fam, dim, q, sign)
