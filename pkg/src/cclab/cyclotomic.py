"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Elements are stored as sparse Q-linear combinations of powers of zeta_e,
canonicalized modulo the e-th cyclotomic polynomial, so equality is exact.
No floating point enters any computation; a float projection exists only
for human-readable reports.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_e, low degree first, monic."""
    assert e >= 1
    # Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, exact division over Z.
    num = [0] * (e + 1)
    num[0], num[e] = -1, 1
    for d in range(1, e):
        if e % d == 0:
            num = _polydiv_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    assert den[dd] == 1
    quo = [0] * (dn - dd + 1)
    for i in range(dn - dd, -1, -1):
        c = num[i + dd]
        quo[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return quo


@lru_cache(maxsize=None)
def _reduction_rows(e: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Rewrite rows: zeta^k for k in [deg, e) as integer vectors on 1..zeta^(deg-1)."""
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    rows = []
    # zeta^deg = -(phi[0] + phi[1] x + ... + phi[deg-1] x^(deg-1))
    cur = [-c for c in phi[:deg]]
    rows.append(tuple(cur))
    for _ in range(deg + 1, e):
        nxt = [0] + cur[:-1]
        top = cur[-1]
        if top:
            base = rows[0]
            for i in range(deg):
                nxt[i] += top * base[i]
        cur = nxt
        rows.append(tuple(cur))
    return deg, tuple(rows)


class Cyclo:
    """An element of Q(zeta_e), reduced to the power basis 1..zeta^(phi(e)-1)."""

    __slots__ = ("order", "coeffs", "_key")

    def __init__(self, order: int, coeffs: dict[int, Fraction], reduce: bool = True):
        self.order = order
        if reduce:
            coeffs = self._reduce(order, coeffs)
        self.coeffs = coeffs
        self._key = None

    @staticmethod
    def _reduce(e: int, raw: dict[int, Fraction]) -> dict[int, Fraction]:
        deg, rows = _reduction_rows(e)
        out: dict[int, Fraction] = {}
        for k, c in raw.items():
            if not c:
                continue
            k %= e
            if k < deg:
                out[k] = out.get(k, Fraction(0)) + c
            else:
                row = rows[k - deg]
                for i, r in enumerate(row):
                    if r:
                        out[i] = out.get(i, Fraction(0)) + c * r
        return {k: v for k, v in out.items() if v}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order: int = 1) -> "Cyclo":
        return Cyclo(order, {}, reduce=False)

    @staticmethod
    def rational(value, order: int = 1) -> "Cyclo":
        v = Fraction(value)
        return Cyclo(order, {0: v} if v else {}, reduce=False)

    @staticmethod
    def root(order: int, power: int = 1) -> "Cyclo":
        """zeta_order^power."""
        return Cyclo(order, {power % order: Fraction(1)})

    @staticmethod
    def from_exponents(order: int, exps: dict[int, Fraction]) -> "Cyclo":
        return Cyclo(order, {k: Fraction(v) for k, v in exps.items()})

    # -- structure ---------------------------------------------------------

    def promote(self, order: int) -> "Cyclo":
        assert order % self.order == 0
        if order == self.order:
            return self
        m = order // self.order
        return Cyclo(order, {k * m: c for k, c in self.coeffs.items()})

    def _common(self, other: "Cyclo"):
        e = self.order * other.order // gcd(self.order, other.order)
        return self.promote(e), other.promote(e)

    def key(self):
        if self._key is None:
            items = tuple(sorted((k, v.numerator, v.denominator) for k, v in self.coeffs.items()))
            self._key = (self.order, items)
        return self._key

    def __hash__(self):
        # keys of equal values with different stored orders coincide only after
        # promotion, so hash via a minimal-order canonical form
        return hash(self.min_order().key())

    def min_order(self) -> "Cyclo":
        """Rewrite over the smallest cyclotomic field Q(zeta_d), d | order, containing self."""
        for d in sorted(_divisors(self.order)):
            if self.order % d:
                continue
            cand = self._try_descend(d)
            if cand is not None:
                return cand
        return self

    def _try_descend(self, d: int):
        if d == self.order:
            return self
        cand = _project_to_suborder(self, d)
        if cand is not None and cand.promote(self.order) == self:
            return cand
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Cyclo):
            other = Cyclo.rational(other)
        a, b = self._common(other)
        out = dict(a.coeffs)
        for k, c in b.coeffs.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Cyclo(a.order, out, reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.order, {k: -c for k, c in self.coeffs.items()}, reduce=False)

    def __sub__(self, other):
        if not isinstance(other, Cyclo):
            other = Cyclo.rational(other)
        return self + (-other)

    def __rsub__(self, other):
        return Cyclo.rational(other) - self

    def __mul__(self, other):
        if not isinstance(other, Cyclo):
            c = Fraction(other)
            if not c:
                return Cyclo.zero(self.order)
            return Cyclo(self.order, {k: v * c for k, v in self.coeffs.items()}, reduce=False)
        a, b = self._common(other)
        raw: dict[int, Fraction] = {}
        e = a.order
        for k1, c1 in a.coeffs.items():
            for k2, c2 in b.coeffs.items():
                k = k1 + k2
                if k >= e:
                    k -= e
                raw[k] = raw.get(k, Fraction(0)) + c1 * c2
        return Cyclo(e, raw)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        assert n >= 0
        out = Cyclo.rational(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __truediv__(self, other):
        c = Fraction(other)
        return Cyclo(self.order, {k: v / c for k, v in self.coeffs.items()}, reduce=False)

    def conj(self) -> "Cyclo":
        """Complex conjugation zeta -> zeta^(-1)."""
        e = self.order
        return Cyclo(e, {(-k) % e: c for k, c in self.coeffs.items()})

    def norm2(self) -> Fraction:
        """|self|^2 as an exact rational (asserts the product is rational)."""
        return (self * self.conj()).rational_value()

    # -- predicates / extraction -------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return all(k == 0 for k in self.coeffs)

    def is_real(self) -> bool:
        return self == self.conj()

    def rational_value(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        assert self.is_rational(), f"not rational: {self}"
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.rational_value().denominator == 1

    def integer_value(self) -> int:
        v = self.rational_value()
        assert v.denominator == 1, f"not an integer: {v}"
        return v.numerator

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.rational(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        if self.is_zero():
            return "0"
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            t = f"z{self.order}^{k}" if k else "1"
            terms.append(f"{c}*{t}" if c != 1 or k == 0 else t)
        return " + ".join(terms)

    def approx(self) -> complex:
        """Float projection, for reporting only."""
        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * k / self.order)
            for k, c in self.coeffs.items()
        ) if self.coeffs else 0j


def _divisors(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _project_to_suborder(z: Cyclo, d: int):
    """Try to rewrite z in Q(zeta_d); return None if it does not lie there."""
    e, m = z.order, z.order // d
    # Solve z = sum_j a_j zeta_d^j over the basis of Q(zeta_d): express each
    # zeta_d^j = zeta_e^(jm) in the reduced e-basis and match coefficients.
    degd = len(cyclotomic_polynomial(d)) - 1
    basis = [Cyclo.root(e, j * m) for j in range(degd)]
    # Gaussian elimination over Q on the sparse system.
    rows: dict[int, list[Fraction]] = {}
    for j, b in enumerate(basis):
        for k, c in b.coeffs.items():
            rows.setdefault(k, [Fraction(0)] * degd)[j] = c
    target = dict(z.coeffs)
    for k in target:
        rows.setdefault(k, [Fraction(0)] * degd)
    # solve rows * a = target by exact elimination
    idxs = sorted(rows)
    mat = [rows[k][:] + [target.get(k, Fraction(0))] for k in idxs]
    ncols = degd
    piv = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        piv.append(c)
        r += 1
        if r == len(mat):
            break
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv):
        sol[c] = mat[i][-1]
    for i in range(r, len(mat)):
        if mat[i][-1]:
            return None
    cand = Cyclo(d, {j: sol[j] for j in range(ncols) if sol[j]})
    return cand


def cyclo_sum(terms, order: int = 1) -> Cyclo:
    out = Cyclo.zero(order)
    for t in terms:
        out = out + t
    return out


def sort_key(z: Cyclo, order: int):
    """Deterministic total-order key for values promoted to a fixed order."""
    assert order % z.order == 0
    zz = z.promote(order)
    deg = len(cyclotomic_polynomial(order)) - 1
    vec = []
    for k in range(deg):
        c = zz.coeffs.get(k, Fraction(0))
        vec.append((c.numerator, c.denominator))
    return tuple(vec)
