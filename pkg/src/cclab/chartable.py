"""Exact character tables by the class-matrix eigenvector method.

Common eigenspaces of the class-algebra multiplication matrices are split
over F_ell (ell = 1 mod exponent, ell > 2|G|), consumed in ascending class
order so builds are bit-reproducible; character values are lifted to exact
cyclotomics by a discrete Fourier transform against a fixed order-e root of
unity mod ell.  Row and column orthogonality are verified exactly before a
table is released.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .classfun import ClassFunction, ClassPartition, classes, inner
from .cyclotomic import Cyclo
from .groups import GroupTable

CLASS_BUDGET = 400


class ClassBudgetError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# modular utilities
# ---------------------------------------------------------------------------


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime ell = 1 (mod exponent) with ell > 2|G|."""
    ell = (2 * order // exponent + 1) * exponent + 1
    while not is_probable_prime(ell):
        ell += exponent
    return ell


def _factorize(n: int) -> dict[int, int]:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def primitive_root(ell: int) -> int:
    fac = _factorize(ell - 1)
    for g in range(2, ell):
        if all(pow(g, (ell - 1) // p, ell) != 1 for p in fac):
            return g
    raise AssertionError("no primitive root (internal fault)")


# polynomial arithmetic mod ell, coefficient lists low-degree-first
def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, ell):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % ell
    return _ptrim(out)


def _pmod(a, m, ell):
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], ell - 2, ell)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % ell
        off = len(a) - 1 - dm
        for j in range(dm + 1):
            a[off + j] = (a[off + j] - c * m[j]) % ell
        _ptrim(a)
    return a


def _pgcd(a, b, ell):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a = _pmod(a, b, ell)
        a, b = b, _ptrim(a)
    if a:
        inv = pow(a[-1], ell - 2, ell)
        a = [x * inv % ell for x in a]
    return a


def _ppowmod(base, e, m, ell):
    out = [1]
    base = _pmod(list(base), m, ell)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, base, ell), m, ell)
        base = _pmod(_pmul(base, base, ell), m, ell)
        e >>= 1
    return out


def poly_roots_mod(f: list[int], ell: int) -> list[int]:
    """Distinct roots in F_ell of f, by gcd with x^ell - x and deterministic
    equal-degree splitting."""
    f = _ptrim(list(f))
    assert f
    xq = _ppowmod([0, 1], ell, f, ell)
    xq_minus_x = list(xq) + [0] * (2 - len(xq))
    xq_minus_x[1] = (xq_minus_x[1] - 1) % ell
    g = _pgcd(xq_minus_x, f, ell)
    roots: list[int] = []
    _split_linear(g, ell, roots, shift=0)
    return sorted(roots)


def _split_linear(g, ell, roots, shift):
    g = _ptrim(list(g))
    deg = len(g) - 1
    if deg <= 0:
        return
    if deg == 1:
        # root of c0 + c1 x
        roots.append((-g[0]) * pow(g[1], ell - 2, ell) % ell)
        return
    a = shift
    while True:
        h = _ppowmod([a, 1], (ell - 1) // 2, g, ell)
        h = list(h) + [0] * (1 - len(h))
        h[0] = (h[0] - 1) % ell
        d = _pgcd(h, g, ell)
        if 0 < len(d) - 1 < deg:
            q = _polydiv_mod(g, d, ell)
            _split_linear(d, ell, roots, a + 1)
            _split_linear(q, ell, roots, a + 1)
            return
        a += 1


def _polydiv_mod(num, den, ell):
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    inv = pow(den[-1], ell - 2, ell)
    quo = [0] * (dn - dd + 1)
    for i in range(dn - dd, -1, -1):
        c = num[i + dd] * inv % ell
        quo[i] = c
        if c:
            for j in range(dd + 1):
                num[i + j] = (num[i + j] - c * den[j]) % ell
    return _ptrim(quo)


def charpoly_mod(A: np.ndarray, ell: int) -> list[int]:
    """Characteristic polynomial det(xI - A) mod ell (Faddeev-LeVerrier)."""
    n = A.shape[0]
    A = A % ell
    M = np.eye(n, dtype=object)
    cs = [1]
    Ak = A.astype(object)
    for k in range(1, n + 1):
        AM = (Ak @ M) % ell
        c = (-int(np.trace(AM)) * pow(k, ell - 2, ell)) % ell
        cs.append(c)
        M = AM + c * np.eye(n, dtype=object)
        M %= ell
    # coefficients: x^n + cs[1] x^(n-1) + ... + cs[n]
    return list(reversed(cs))


def _mod_rref(M: np.ndarray, ell: int):
    """Reduced row echelon form over F_ell; returns (matrix, pivots)."""
    M = (M % ell).astype(object)
    rows, cols = M.shape
    piv = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if M[i, c]), None)
        if pr is None:
            continue
        M[[r, pr]] = M[[pr, r]]
        M[r] = (M[r] * pow(int(M[r, c]), ell - 2, ell)) % ell
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % ell
        piv.append(c)
        r += 1
        if r == rows:
            break
    return M, piv


def nullspace_mod(A: np.ndarray, ell: int) -> np.ndarray:
    """Row basis of the right kernel of A over F_ell."""
    rows, cols = A.shape
    R, piv = _mod_rref(A, ell)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for fc in free:
        v = np.zeros(cols, dtype=object)
        v[fc] = 1
        for i, pc in enumerate(piv):
            v[pc] = (-int(R[i, fc])) % ell
        basis.append(v)
    return np.array(basis, dtype=object).reshape(len(basis), cols)


def solve_mod(A: np.ndarray, B: np.ndarray, ell: int) -> np.ndarray:
    """Solve A X = B over F_ell (A full column rank)."""
    rows, cols = A.shape
    aug = np.concatenate([A.astype(object), B.astype(object)], axis=1)
    R, piv = _mod_rref(aug, ell)
    assert piv[: cols] == list(range(cols)), "restriction solve failed"
    return R[:cols, cols:]


# ---------------------------------------------------------------------------
# the table
# ---------------------------------------------------------------------------


@dataclass
class CharacterTable:
    group: GroupTable
    part: ClassPartition
    irreducibles: list[ClassFunction]
    degrees: list[int]
    exponent: int
    modulus: int          # the Dixon prime used for the build
    mod_root: int         # the order-e root of unity mod ell
    mod_values: list[list[int]]  # chi values mod ell, aligned with irreducibles

    @property
    def k(self):
        return len(self.irreducibles)

    def centralizer_orders(self) -> list[int]:
        return [self.part.centralizer_order(c) for c in range(self.part.k)]

    def verify(self):
        verify_table(self)
        return self


def build_table(table: GroupTable, class_budget: int = CLASS_BUDGET) -> CharacterTable:
    """Complete exact character table; deterministic character ordering."""
    if "chartable" in table._cache:
        return table._cache["chartable"]
    part = classes(table)
    k = part.k
    if k > class_budget:
        raise ClassBudgetError(f"{k} classes exceed the budget {class_budget}")
    e = part.exponent
    ell = dixon_prime(table.order, e)
    w = pow(primitive_root(ell), (ell - 1) // e, ell)
    assert pow(w, e, ell) == 1 and all(pow(w, e // p, ell) != 1 for p in _factorize(e))

    # split common eigenspaces of the class matrices, ascending class order
    spaces = [np.eye(k, dtype=object)]
    from .classfun import class_matrix

    for i in range(k):
        if all(s.shape[0] == 1 for s in spaces):
            break
        M = class_matrix(part, i).astype(object) % ell
        new_spaces = []
        for W in spaces:
            if W.shape[0] == 1:
                new_spaces.append(W)
                continue
            # restriction R of M to the row space of W: W M^T = R W
            WM = (W @ M.T) % ell
            R = solve_mod(W.T.astype(object), WM.T.astype(object), ell).T
            roots = poly_roots_mod(charpoly_mod(np.array(R, dtype=object), ell), ell)
            for lam in sorted(roots):
                Rl = (np.array(R, dtype=object) - lam * np.eye(W.shape[0], dtype=object)) % ell
                NB = nullspace_mod(Rl.T, ell)
                if NB.shape[0]:
                    new_spaces.append((NB @ W) % ell)
        spaces = new_spaces
    assert all(s.shape[0] == 1 for s in spaces) and len(spaces) == k, \
        "eigenspace splitting incomplete (internal fault)"

    # A common eigenvector, normalized at the identity class, IS the vector
    # of central-character values omega_i = |C_i| chi(g_i)/chi(1) mod ell.
    sizes = [int(s) for s in part.sizes]
    inv_cls = [int(c) for c in part.inverse_class]
    order = table.order
    c0 = int(part.class_of[0])
    rows = []
    for W in spaces:
        v = W[0]
        assert v[c0], "eigenvector vanishes at the identity class (internal fault)"
        v0_inv = pow(int(v[c0]), ell - 2, ell)
        rows.append([int(x) * v0_inv % ell for x in v])

    maxdeg = isqrt(order)
    chars = []
    for om in rows:
        s = 0
        for i in range(k):
            s = (s + om[i] * om[inv_cls[i]] * pow(sizes[i], ell - 2, ell)) % ell
        d2 = order % ell * pow(s, ell - 2, ell) % ell
        deg = next((d for d in range(1, maxdeg + 1) if d * d % ell == d2), None)
        assert deg is not None, "degree recovery failed (internal fault)"
        chi_mod = [deg * om[i] % ell * pow(sizes[i], ell - 2, ell) % ell for i in range(k)]
        chars.append((deg, chi_mod))

    irreducibles = []
    mod_values = []
    for deg, chi_mod in chars:
        values = []
        for j in range(k):
            o = int(part.orders[j])
            zj = pow(w, e // o, ell)
            oinv = pow(o, ell - 2, ell)
            exps: dict[int, Fraction] = {}
            for t in range(o):
                m = 0
                for s in range(o):
                    cls = part.power_classes[j][s]
                    m = (m + chi_mod[cls] * pow(zj, (-t * s) % o, ell)) % ell
                m = m * oinv % ell
                assert m <= deg, "multiplicity lift out of range (internal fault)"
                if m:
                    exps[(t * (e // o)) % e] = Fraction(m)
            values.append(Cyclo.from_exponents(e, exps))
        chi = ClassFunction(part, values)
        assert chi.degree() == Cyclo.rational(deg)
        irreducibles.append(chi)
        mod_values.append(chi_mod)

    # deterministic ordering: by degree, then by canonical value vector
    order_key = sorted(
        range(k), key=lambda i: (chars[i][0], irreducibles[i].sort_vector())
    )
    irreducibles = [irreducibles[i] for i in order_key]
    mod_values = [mod_values[i] for i in order_key]
    degrees = [chars[i][0] for i in order_key]

    ct = CharacterTable(table, part, irreducibles, degrees, e, ell, w, mod_values)
    verify_table(ct)
    table._cache["chartable"] = ct
    return ct


def verify_table(ct: CharacterTable):
    """Exact row + column orthogonality, degree sum, degree divisibility,
    plus the independent mod-ell projection cross-check."""
    part = ct.part
    k = part.k
    assert len(ct.irreducibles) == k, "character count != class count"
    g_order = part.group.order
    assert sum(d * d for d in ct.degrees) == g_order, "degree squares do not sum to |G|"
    for d in ct.degrees:
        assert g_order % d == 0, "degree does not divide the group order"
    for i, chi in enumerate(ct.irreducibles):
        for j in range(i, k):
            want = Fraction(1 if i == j else 0)
            got = inner(chi, ct.irreducibles[j])
            assert got == want, f"row orthogonality failed at ({i},{j}): {got}"
    for c1 in range(k):
        for c2 in range(c1, k):
            s = Cyclo.zero(1)
            for chi in ct.irreducibles:
                s = s + chi.values[c1] * chi.values[c2].conj()
            want = Fraction(part.centralizer_order(c1)) if c1 == c2 else Fraction(0)
            assert s.rational_value() == want, f"column orthogonality failed at ({c1},{c2})"
    _verify_mod_projection(ct)


def _verify_mod_projection(ct: CharacterTable):
    """Each exact value must reduce to the stored mod-ell value under
    zeta_e -> mod_root; catches canonicalization bugs cheaply."""
    ell, w, e = ct.modulus, ct.mod_root, ct.exponent
    for chi, row in zip(ct.irreducibles, ct.mod_values):
        for c, val in enumerate(chi.values):
            acc = 0
            for exp, coeff in val.promote(e).coeffs.items():
                assert coeff.denominator == 1
                acc = (acc + coeff.numerator * pow(w, exp, ell)) % ell
            assert acc == row[c] % ell, "mod-ell projection mismatch"


def character_by_degree(ct: CharacterTable, degree: int) -> list[int]:
    return [i for i, d in enumerate(ct.degrees) if d == degree]


def min_nontrivial_degree(ct: CharacterTable) -> int:
    nontrivial = [d for d, chi in zip(ct.degrees, ct.irreducibles)
                  if not all(v == Cyclo.rational(1) for v in chi.values)]
    return min(nontrivial) if nontrivial else 1
