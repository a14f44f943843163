"""An explicit q^N-dimensional model of the oscillator representation of
Sp_{2N}(q), q odd, with exact matrix entries in Z[zeta_p] * q^(-m).

The space is C[Y] for Y a Lagrangian in the split basis; the Siegel parabolic
acts monomially and the Weyl element by a Gauss-sum-normalized Fourier
transform.  A general element is factored through the big cell, and the one
residual sign of the Fourier factor is pinned by a multiplicativity probe
(exactly one sign extends to a homomorphism, since these groups have no
order-2 linear character).

Also here: the permutation-style class functions on the natural module, the
tensor-product dual pairs, and their decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg as la
from .classfun import ClassFunction, ClassPartition, classes, inner, profile
from .cyclotomic import Cyclo
from .fields import GF
from .groups import GroupTable, ParabolicData, fixed_space_dims


# ---------------------------------------------------------------------------
# permutation-style class functions on the natural module
# ---------------------------------------------------------------------------


def tau_class_function(table: GroupTable) -> ClassFunction:
    """g -> q^dim ker(g - 1), the point-count character of the natural module."""
    part = classes(table)
    F = table.field
    q = F.q
    vals = []
    for r in part.reps:
        dplus, _ = fixed_space_dims(F, table.matrix(int(r)))
        vals.append(q ** dplus)
    return ClassFunction(part, vals)


def zeta_class_function(table: GroupTable) -> ClassFunction:
    """g -> (-1)^dim (-q)^dim ker(g - 1), the signed companion of tau."""
    part = classes(table)
    F = table.field
    q = F.q
    n = table.dim
    vals = []
    for r in part.reps:
        dplus, _ = fixed_space_dims(F, table.matrix(int(r)))
        vals.append((-1) ** n * (-q) ** dplus)
    return ClassFunction(part, vals)


# ---------------------------------------------------------------------------
# exact operators over Z[zeta_p] with a positive rational scale
# ---------------------------------------------------------------------------


class WeilOperator:
    """dim x dim matrix with entries sum_t coeffs[i,j,t] zeta_p^t, times scale."""

    __slots__ = ("coeffs", "scale", "p")

    def __init__(self, coeffs: np.ndarray, scale: Fraction, normalize: bool = True):
        self.p = coeffs.shape[2]
        if normalize:
            coeffs, scale = self._canonical(coeffs, Fraction(scale))
        self.coeffs = coeffs
        self.scale = scale

    @staticmethod
    def _canonical(coeffs: np.ndarray, scale: Fraction):
        # kill the zeta^(p-1) coordinate via 1 + zeta + ... + zeta^(p-1) = 0
        coeffs = coeffs - coeffs[:, :, -1:]
        g = int(np.gcd.reduce(np.abs(coeffs), axis=None))
        if g > 1:
            coeffs = coeffs // g
            scale = scale * g
        return np.ascontiguousarray(coeffs), scale

    def __mul__(self, other: "WeilOperator") -> "WeilOperator":
        p = self.p
        A, B = self.coeffs, other.coeffs
        dim = A.shape[0]
        out = np.zeros((dim, dim, p), dtype=np.int64)
        for a in range(p):
            Aa = A[:, :, a]
            if not Aa.any():
                continue
            for b in range(p):
                Bb = B[:, :, b]
                if not Bb.any():
                    continue
                out[:, :, (a + b) % p] += Aa @ Bb
        return WeilOperator(out, self.scale * other.scale)

    def __eq__(self, other):
        return self.scale == other.scale and np.array_equal(self.coeffs, other.coeffs)

    def neg(self) -> "WeilOperator":
        return WeilOperator(-self.coeffs, self.scale, normalize=False)

    def is_identity(self) -> bool:
        dim = self.coeffs.shape[0]
        ident = np.zeros_like(self.coeffs)
        ident[np.arange(dim), np.arange(dim), 0] = 1
        return self.scale == 1 and np.array_equal(self.coeffs, ident)

    def trace(self) -> Cyclo:
        diag = self.coeffs[np.arange(self.coeffs.shape[0]), np.arange(self.coeffs.shape[0])]
        tot = diag.sum(axis=0)
        return Cyclo.from_exponents(
            self.p, {t: self.scale * int(c) for t, c in enumerate(tot) if c}
        )

    def trace_mul(self, other: "WeilOperator") -> Cyclo:
        """tr(self * other) without forming the product."""
        p = self.p
        exps = [0] * p
        BT = other.coeffs.transpose(1, 0, 2)
        for a in range(p):
            Aa = self.coeffs[:, :, a]
            if not Aa.any():
                continue
            for b in range(p):
                s = int((Aa * BT[:, :, b]).sum())
                if s:
                    exps[(a + b) % p] += s
        sc = self.scale * other.scale
        return Cyclo.from_exponents(p, {t: sc * c for t, c in enumerate(exps) if c})


# ---------------------------------------------------------------------------
# the model
# ---------------------------------------------------------------------------

OPERATOR_DIM_BUDGET = 2000


class ModelBudgetError(RuntimeError):
    pass


class WeilModel:
    """Oscillator model for Sp_{2N}(q), q odd, on functions on F_q^N.

    twist = 1 gives the standard additive character psi, twist = a nonsquare
    the companion model; the pair of traces are the two degree-q^N characters.
    """

    def __init__(self, F: GF, N: int, twist: int = 1):
        assert F.p != 2, "the oscillator model needs odd q"
        self.F = F
        self.N = N
        self.twist = twist
        self.dim = F.q ** N
        if self.dim > OPERATOR_DIM_BUDGET:
            raise ModelBudgetError(f"model dimension {self.dim} exceeds budget")
        self.p = F.p
        q = F.q
        self.vectors = np.zeros((self.dim, N), dtype=np.int16)
        rem = np.arange(self.dim)
        for t in range(N):
            self.vectors[:, t] = rem % q
            rem //= q
        self.half = F.half()
        # psi exponent of a field element
        self.exp_of = np.array(
            [F.trace_to_prime(F.mul(twist, a)) for a in range(q)], dtype=np.int64
        )
        gv = F.gauss_sum_vector(twist)
        gn = np.zeros(self.p, dtype=np.int64)
        gn[0] = 1
        for _ in range(N):
            gn = self._conv(gn, gv)
        self._gauss_pow = gn
        self._op_cache: dict[bytes, WeilOperator] = {}
        self.weyl_sign = 1
        self._w_plus = self._fourier_operator(1)
        self.weyl_sign = self._calibrate_sign()
        self._op_w = self._fourier_operator(self.weyl_sign)

    def _conv(self, a, b):
        out = np.zeros(self.p, dtype=np.int64)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[(i + j) % self.p] += ai * bj
        return out

    # -- indexing ------------------------------------------------------------

    def index_of(self, vec) -> int:
        idx = 0
        for t in range(self.N - 1, -1, -1):
            idx = idx * self.F.q + int(vec[t])
        return idx

    def _dot(self, u, v) -> int:
        F = self.F
        acc = 0
        for a, b in zip(u, v):
            acc = F.add(acc, F.mul(int(a), int(b)))
        return acc

    # -- generator operators ---------------------------------------------------

    def op_unipotent(self, S: np.ndarray) -> WeilOperator:
        """[[I, S], [0, I]] acts diagonally by psi(c^T S c / 2)."""
        F = self.F
        coeffs = np.zeros((self.dim, self.dim, self.p), dtype=np.int64)
        for ci in range(self.dim):
            c = self.vectors[ci]
            Sc = la.mat_vec(F, S, c)
            val = F.mul(self.half, self._dot(c, Sc))
            coeffs[ci, ci, int(self.exp_of[val])] = 1
        return WeilOperator(coeffs, Fraction(1))

    def op_levi(self, A: np.ndarray) -> WeilOperator:
        """diag(A, A^-T) permutes delta functions, signed by the quadratic
        character of det A."""
        F = self.F
        sgn = F.quadratic_character(la.det(F, A))
        assert sgn != 0
        M = la.transpose(la.mat_inv(F, A))
        coeffs = np.zeros((self.dim, self.dim, self.p), dtype=np.int64)
        for ci in range(self.dim):
            target = la.mat_vec(F, M, self.vectors[ci])
            coeffs[self.index_of(target), ci, 0] = sgn
        return WeilOperator(coeffs, Fraction(1))

    def _fourier_operator(self, sign: int) -> WeilOperator:
        """The Weyl element x_i -> y_i -> -x_i acts by the normalized Fourier
        transform delta_c -> gamma sum_d psi(-c.d) delta_d."""
        F = self.F
        coeffs = np.zeros((self.dim, self.dim, self.p), dtype=np.int64)
        for ci in range(self.dim):
            c = self.vectors[ci]
            for di in range(self.dim):
                e = int(self.exp_of[F.neg(self._dot(c, self.vectors[di]))])
                vec = np.roll(self._gauss_pow, e)
                coeffs[di, ci, :] += sign * vec
        return WeilOperator(coeffs, Fraction(1, F.q ** self.N))

    # -- matrices of the generators (for factorizations) ------------------------

    def mat_unipotent(self, S):
        M = la.identity(self.F, 2 * self.N)
        M[: self.N, self.N:] = S
        return M

    def mat_levi(self, A):
        M = la.zeros(self.F, 2 * self.N, 2 * self.N)
        M[: self.N, : self.N] = A
        M[self.N:, self.N:] = la.transpose(la.mat_inv(self.F, A))
        return M

    def mat_weyl(self):
        F = self.F
        M = la.zeros(F, 2 * self.N, 2 * self.N)
        for i in range(self.N):
            M[i, self.N + i] = F.neg(1)
            M[self.N + i, i] = 1
        return M

    def mat_weyl_inv(self):
        return la.mat_inv(self.F, self.mat_weyl())

    # -- factorization ---------------------------------------------------------

    def _blocks(self, g):
        N = self.N
        return g[:N, :N], g[:N, N:], g[N:, :N], g[N:, N:]

    def op(self, g: np.ndarray) -> WeilOperator:
        """The operator of an arbitrary symplectic matrix, via the big cell."""
        key = la.encode_matrix(g)
        got = self._op_cache.get(key)
        if got is not None:
            return got
        out = self._op_uncached(np.asarray(g, dtype=np.int16))
        self._op_cache[key] = out
        return out

    def _op_uncached(self, g) -> WeilOperator:
        F = self.F
        A, B, C, D = self._blocks(g)
        if not C.any():
            Ai = la.mat_inv(F, A)
            S = la.mat_mul(F, Ai, B)
            assert np.array_equal(S, la.transpose(S))
            op = self.op_levi(A) * self.op_unipotent(S)
            assert np.array_equal(
                la.mat_mul(F, self.mat_levi(A), self.mat_unipotent(S)), g
            )
            return op
        if la.det(F, C) != 0:
            Ci = la.mat_inv(F, C)
            X = la.mat_mul(F, A, Ci)
            S = la.mat_mul(F, Ci, D)
            assert np.array_equal(X, la.transpose(X)) and np.array_equal(S, la.transpose(S))
            op = (
                self.op_unipotent(X)
                * self._op_w
                * self.op_levi(C)
                * self.op_unipotent(S)
            )
            recon = la.mat_mul(
                F,
                la.mat_mul(F, self.mat_unipotent(X), self.mat_weyl()),
                la.mat_mul(F, self.mat_levi(C), self.mat_unipotent(S)),
            )
            assert np.array_equal(recon, g), "big-cell factorization failed"
            return op
        if la.det(F, D) != 0:
            gw = la.mat_mul(F, g, self.mat_weyl_inv())
            return self._op_uncached(gw) * self._op_w
        S = self._transversal_symmetric(C, D)
        gu = la.mat_mul(F, g, self.mat_unipotent(S))
        guw = la.mat_mul(F, gu, self.mat_weyl_inv())
        negS = la.mat_neg(F, S)
        return self._op_uncached(guw) * self._op_w * self.op_unipotent(negS)

    def _transversal_symmetric(self, C, D):
        """A symmetric S with det(C S + D) != 0 (always exists over a field)."""
        F, N = self.F, self.N
        for S in _symmetric_stream(F, N):
            CS = la.mat_mul(F, C, S)
            if la.det(F, la.mat_add(F, CS, D)) != 0:
                return S
        raise AssertionError("no symmetric transversal found (internal fault)")

    def _calibrate_sign(self) -> int:
        """Pin the Fourier sign by a big-cell multiplicativity probe: the
        product (w u(I))(w u(I)) has an odd w-parity mismatch with its
        factorization, so exactly one sign agrees."""
        F = self.F
        I = la.identity(F, self.N)
        wu = la.mat_mul(F, self.mat_weyl(), self.mat_unipotent(I))
        g = la.mat_mul(F, wu, wu)
        _, _, C, _ = self._blocks(g)
        assert la.det(F, C) != 0, "calibration element not in the big cell"
        opu = self.op_unipotent(I)
        lhs = self._w_plus * opu * self._w_plus * opu  # sign-free (even w-count)
        self.weyl_sign = 1
        self._op_w = self._w_plus
        rhs_plus = self._op_uncached(g)
        if lhs == rhs_plus:
            return 1
        assert lhs == rhs_plus.neg(), "sign calibration inconclusive (internal fault)"
        return -1

    # -- whole-group sweeps -----------------------------------------------------

    def trace_values(self, table: GroupTable, check_norm: bool = True) -> list[Cyclo]:
        """Per-element traces, propagated down the enumeration tree; verifies
        |trace(g)|^2 = q^(dim ker(g-1)) for every element when asked."""
        assert table.bfs_parent is not None, "table lacks an enumeration tree"
        F = self.F
        n = table.order
        gen_ops = [self.op(gmat) for gmat in table.generators()]
        children: list[list[int]] = [[] for _ in range(n)]
        for i in range(n):
            pidx = int(table.bfs_parent[i, 0])
            if pidx >= 0:
                children[pidx].append(i)
        traces: list[Cyclo | None] = [None] * n
        ident = np.zeros((self.dim, self.dim, self.p), dtype=np.int64)
        ident[np.arange(self.dim), np.arange(self.dim), 0] = 1
        root_op = WeilOperator(ident, Fraction(1))
        stack = [(0, root_op)]
        while stack:
            i, op = stack.pop()
            traces[i] = op.trace()
            for ch in children[i]:
                gi = int(table.bfs_parent[ch, 1])
                stack.append((ch, op * gen_ops[gi]))
        assert all(t is not None for t in traces)
        if check_norm:
            q = F.q
            for i in range(n):
                dplus, _ = fixed_space_dims(F, table.matrix(i))
                t = traces[i]
                assert t * t.conj() == Cyclo.rational(Fraction(q) ** dplus), \
                    f"|trace|^2 != q^dim ker(g-1) at element {i}"
        return traces

    def trace_class_function(self, table: GroupTable, check_norm: bool = True) -> ClassFunction:
        part = classes(table)
        traces = self.trace_values(table, check_norm=check_norm)
        vals: list[Cyclo | None] = [None] * part.k
        for i, t in enumerate(traces):
            c = int(part.class_of[i])
            if vals[c] is None:
                vals[c] = t
            else:
                assert vals[c] == t, "model trace not constant on a class"
        e = part.exponent
        assert e % self.p == 0, "group exponent not divisible by p"
        return ClassFunction(part, [v.promote(e) if e % v.order == 0 else v for v in vals])


def _symmetric_stream(F: GF, N: int):
    """Canonical stream of symmetric N x N matrices: basis elements, then all."""
    basis = []
    for i in range(N):
        S = la.zeros(F, N, N)
        S[i, i] = 1
        basis.append(S)
    for i in range(N):
        for j in range(i + 1, N):
            S = la.zeros(F, N, N)
            S[i, j] = S[j, i] = 1
            basis.append(S)
    ident = la.identity(F, N)
    yield ident
    for S in basis:
        yield S
    slots = [(a, b) for a in range(N) for b in range(a, N)]
    total = F.q ** len(slots)
    for code in range(total):
        S = la.zeros(F, N, N)
        rem = code
        for (a, b) in slots:
            v = rem % F.q
            rem //= F.q
            S[a, b] = v
            S[b, a] = v
        yield S


# ---------------------------------------------------------------------------
# Theta and the Weil constituents
# ---------------------------------------------------------------------------


def weil_models(table: GroupTable) -> tuple[WeilModel, WeilModel]:
    key = "weil_models"
    if key not in table._cache:
        F = table.field
        spec = table.spec
        assert spec is not None and spec.family == "Sp" and F.p != 2
        N = spec.dim // 2
        table._cache[key] = (WeilModel(F, N, 1), WeilModel(F, N, F.least_nonsquare()))
    return table._cache[key]


def omega_pair(table: GroupTable, check_norm: bool = True) -> tuple[ClassFunction, ClassFunction]:
    """The two degree-q^N trace characters (standard twist first)."""
    key = "omega_pair"
    if key not in table._cache:
        m1, m2 = weil_models(table)
        table._cache[key] = (
            m1.trace_class_function(table, check_norm=check_norm),
            m2.trace_class_function(table, check_norm=check_norm),
        )
    return table._cache[key]


def theta_class_function(table: GroupTable) -> ClassFunction:
    """Theta: omega + omega* for odd-q symplectic groups, tau + zeta otherwise."""
    key = "theta"
    if key in table._cache:
        return table._cache[key]
    spec = table.spec
    if spec is not None and spec.family == "Sp" and table.field.p != 2:
        om, oms = omega_pair(table)
        theta = om + oms
        _cross_validate_theta(table, theta)
    else:
        theta = tau_class_function(table) + zeta_class_function(table)
    table._cache[key] = theta
    return theta


def _cross_validate_theta(table: GroupTable, theta: ClassFunction):
    """Secondary identification: the model Theta must decompose into exactly
    four multiplicity-one table irreducibles with the two companion degrees,
    two of each; discrepancy is a hard failure."""
    from .chartable import build_table

    ct = build_table(table)
    q = table.field.q
    n = table.spec.dim // 2
    prof = profile(theta, ct)
    assert prof.is_character, "model Theta is not a character"
    assert all(m == 1 for m in prof.decomposition.values()), "Theta constituent multiplicity != 1"
    degs = sorted(ct.degrees[i] for i in prof.decomposition)
    want = sorted([(q ** n - 1) // 2, (q ** n - 1) // 2, (q ** n + 1) // 2, (q ** n + 1) // 2])
    assert degs == want, f"Theta constituent degrees {degs} != {want}"
    total = None
    for i in prof.decomposition:
        total = ct.irreducibles[i] if total is None else total + ct.irreducibles[i]
    assert total == theta, "model Theta disagrees with the table identification"


# ---------------------------------------------------------------------------
# dual pairs
# ---------------------------------------------------------------------------


def field_kron(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if F.f == 1:
        return (np.kron(A.astype(np.int64), B.astype(np.int64)) % F.p).astype(np.int16)
    ra, ca = A.shape
    rb, cb = B.shape
    out = la.zeros(F, ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            if A[i, j]:
                for k in range(rb):
                    for l in range(cb):
                        out[i * rb + k, j * cb + l] = F.mul(int(A[i, j]), int(B[k, l]))
    return out


def symplectic_change_of_basis(F: GF, J: np.ndarray) -> np.ndarray:
    """P with P^T J P the standard [[0, I], [-I, 0]] Gram."""
    M2 = J.shape[0]
    assert M2 % 2 == 0
    M = M2 // 2
    vectors = [np.eye(M2, dtype=np.int16)[:, i] for i in range(M2)]
    xs, ys = [], []
    while vectors:
        e = vectors.pop(0)
        fi = next((i for i, v in enumerate(vectors) if _form(F, J, e, v) != 0), None)
        assert fi is not None, "degenerate symplectic form"
        f = vectors.pop(fi)
        scale = F.inv(_form(F, J, e, f))
        f = np.array([F.mul(scale, int(t)) for t in f], dtype=np.int16)
        xs.append(e)
        ys.append(f)
        remaining = []
        for v in vectors:
            a = F.neg(_form(F, J, v, f))
            b = _form(F, J, v, e)
            w = v.copy()
            for t in range(M2):
                w[t] = F.add(int(w[t]), F.add(F.mul(a, int(e[t])), F.mul(b, int(f[t]))))
            if w.any():
                remaining.append(w)
        vectors = remaining
    P = np.stack(xs + ys, axis=1).astype(np.int16)
    # verify the standard Gram
    std = la.zeros(F, M2, M2)
    for i in range(M):
        std[i, M + i] = 1
        std[M + i, i] = F.neg(1)
    got = la.mat_mul(F, la.mat_mul(F, la.transpose(P), J), P)
    assert np.array_equal(got, std), "symplectic basis reduction failed"
    return P


def _form(F: GF, J: np.ndarray, u: np.ndarray, v: np.ndarray) -> int:
    acc = 0
    for i in range(len(u)):
        if u[i]:
            row = 0
            for j in range(len(v)):
                if J[i, j] and v[j]:
                    row = F.add(row, F.mul(int(J[i, j]), int(v[j])))
            acc = F.add(acc, F.mul(int(u[i]), row))
    return acc


@dataclass
class DualPairSetup:
    """A commuting pair inside Sp(A (x) B): side 'a' has the symplectic group
    as G and the orthogonal as S, side 'b' the reverse."""

    side: str
    G: GroupTable
    S: GroupTable
    model: WeilModel
    emb_G_cache: dict[int, np.ndarray]
    emb_S_cache: dict[int, np.ndarray]
    basis: np.ndarray
    basis_inv: np.ndarray

    def emb_G(self, gid: int) -> np.ndarray:
        if gid not in self.emb_G_cache:
            self.emb_G_cache[gid] = self._embed(self.G.matrix(gid), g_side=True)
        return self.emb_G_cache[gid]

    def emb_S(self, sid: int) -> np.ndarray:
        if sid not in self.emb_S_cache:
            self.emb_S_cache[sid] = self._embed(self.S.matrix(sid), g_side=False)
        return self.emb_S_cache[sid]

    def _embed(self, m: np.ndarray, g_side: bool) -> np.ndarray:
        F = self.model.F
        sp_first = (self.side == "a") == g_side
        if sp_first:
            # m acts on the symplectic factor A
            other_dim = (self.G if self.side == "b" else self.S).dim
            big = field_kron(F, m, la.identity(F, other_dim))
        else:
            sp_dim = (self.G if self.side == "a" else self.S).dim
            big = field_kron(F, la.identity(F, sp_dim), m)
        out = la.mat_mul(F, la.mat_mul(F, self.basis_inv, big), self.basis)
        return out


def dual_pair(G: GroupTable, S: GroupTable, side: str) -> DualPairSetup:
    """Build Sp(A (x) B) and the embeddings; side 'b': G orthogonal, S
    symplectic (the natural-module tensor square picture)."""
    assert side in ("a", "b")
    sp = G if side == "a" else S
    orth = S if side == "a" else G
    assert sp.spec.family == "Sp" and orth.spec.is_orthogonal
    F = sp.field
    JA = sp.form.gram
    KB = orth.form.gram
    JW = field_kron(F, JA, KB)
    assert np.array_equal(JW, la.mat_neg(F, la.transpose(JW))), "tensor form not alternating"
    P = symplectic_change_of_basis(F, JW)
    Pinv = la.mat_inv(F, P)
    NW = JW.shape[0] // 2
    model = WeilModel(F, NW, 1)
    setup = DualPairSetup(side, G, S, model, {}, {}, P, Pinv)
    # embeddings must commute and be symplectic
    g0 = G.gen_ids[0] if G.gen_ids else 0
    s0 = S.gen_ids[0] if S.gen_ids else 0
    eg, es = setup.emb_G(g0), setup.emb_S(s0)
    assert np.array_equal(la.mat_mul(F, eg, es), la.mat_mul(F, es, eg))
    return setup


def dual_pair_trace_table(setup: DualPairSetup) -> list[list[Cyclo]]:
    """omega(g_c * s) for every G-class representative c and every s in S."""
    key = "dp_traces"
    cache = setup.G._cache.setdefault(key, {})
    ck = (setup.side, id(setup.S))
    if ck in cache:
        return cache[ck]
    partG = classes(setup.G)
    model = setup.model
    ops_g = [model.op(setup.emb_G(int(r))) for r in partG.reps]
    ops_s = [model.op(setup.emb_S(s)) for s in range(setup.S.order)]
    out = [[og.trace_mul(os_) for os_ in ops_s] for og in ops_g]
    cache[ck] = out
    return out


def dual_pair_decompose(setup: DualPairSetup, alpha: ClassFunction) -> ClassFunction:
    """D_alpha(g) = (1/|S|) sum_s omega(gs) conj(alpha(s)) as an exact class
    function on G."""
    partG = classes(setup.G)
    partS = alpha.part
    traces = dual_pair_trace_table(setup)
    Ssize = setup.S.order
    vals = []
    for c in range(partG.k):
        acc = Cyclo.zero(1)
        for s in range(Ssize):
            a = alpha.values[int(partS.class_of[s])].conj()
            acc = acc + traces[c][s] * a
        vals.append(acc / Ssize)
    e = partG.exponent
    out_vals = []
    for v in vals:
        assert e % v.order == 0, "dual-pair value outside the group cyclotomic field"
        out_vals.append(v.promote(e))
    return ClassFunction(partG, out_vals)


def dual_pair_full_check(setup: DualPairSetup, alphas: list[ClassFunction]) -> bool:
    """Pointwise check omega(gs) = sum_alpha D_alpha(g) alpha(s)."""
    partG = classes(setup.G)
    partS = classes(setup.S)
    traces = dual_pair_trace_table(setup)
    Ds = [dual_pair_decompose(setup, a) for a in alphas]
    for c in range(partG.k):
        for s in range(setup.S.order):
            acc = Cyclo.zero(1)
            sc = int(partS.class_of[s])
            for D, a in zip(Ds, alphas):
                acc = acc + D.values[c] * a.values[sc]
            if not acc == traces[c][s]:
                return False
    return True
