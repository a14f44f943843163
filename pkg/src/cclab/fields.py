"""Exact arithmetic in F_{p^f}.

Elements are integers 0..q-1 encoding coefficient vectors base p (the value
itself in the prime-field case).  The modulus is the lexicographically least
monic irreducible polynomial of degree f, so fields are canonical.  Small
fields (q <= 1024) carry full add/mul lookup tables, which is what the matrix
layer uses; that covers everything at desk scale.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cyclotomic import Cyclo

TABLE_LIMIT = 1024
SIZE_LIMIT = 2 ** 20


def is_prime(n: int) -> bool:
    """Trial division; moduli here never exceed 2^20 so this is plenty."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while any(b):
        a = _pmod(a, b, p)
        a, b = b, a
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    while b and b[-1] == 0:
        b = b[:-1]
    db = len(b) - 1
    binv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * binv % p
        for j in range(db + 1):
            a[da - db + j] = (a[da - db + j] - c * b[j]) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _pmulmod(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, m, p)


def _is_irreducible(m: list[int], p: int) -> bool:
    """gcd test against x^(p^i) - x for i <= f/2."""
    f = len(m) - 1
    if f == 1:
        return True
    xp = [0, 1]
    for i in range(1, f // 2 + 1):
        # xp <- xp^p mod m, so that xp = x^(p^i) mod m
        acc, res, e = xp, [1], p
        while e:
            if e & 1:
                res = _pmulmod(res, acc, m, p)
            acc = _pmulmod(acc, acc, m, p)
            e >>= 1
        xp = res
        diff = list(xp)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(diff, m, p)
        if len(g) - 1 >= 1:
            return False
    return True


def _find_modulus(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically least (c_0, ..., c_{f-1}) monic irreducible x^f + sum c_i x^i."""
    if f == 1:
        return (0,)
    from itertools import product

    for coeffs in product(range(p), repeat=f):
        m = list(coeffs) + [1]
        if m[0] == 0:
            continue  # reducible: x divides
        if _is_irreducible(m, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found (internal fault)")


class GF:
    """The field F_{p^f} with canonical modulus and integer-encoded elements."""

    def __init__(self, p: int, f: int = 1):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if f < 1 or p ** f > SIZE_LIMIT:
            raise ValueError(f"illegal field size p={p} f={f}")
        self.p = p
        self.f = f
        self.q = p ** f
        self.modulus = _find_modulus(p, f)
        self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.f})" if self.f > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash((self.p, self.f))

    # -- encoding ------------------------------------------------------------

    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return out

    def encode(self, coeffs) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + c % self.p
        return a

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    # -- tables ----------------------------------------------------------------

    def _build_tables(self):
        p, f, q = self.p, self.f, self.q
        if q > TABLE_LIMIT:
            self.ADD = self.MUL = None
            return
        if f == 1:
            ar = np.arange(q, dtype=np.int64)
            self.ADD = ((ar[:, None] + ar[None, :]) % p).astype(np.int16)
            self.MUL = ((ar[:, None] * ar[None, :]) % p).astype(np.int16)
        else:
            add = np.zeros((q, q), dtype=np.int16)
            mul = np.zeros((q, q), dtype=np.int16)
            mod = list(self.modulus) + [1]
            polys = [self.coeffs(a) for a in range(q)]
            for a in range(q):
                ca = polys[a]
                for b in range(a, q):
                    cb = polys[b]
                    s = self.encode((x + y) % p for x, y in zip(ca, cb))
                    add[a, b] = add[b, a] = s
                    prod = [0] * (2 * f - 1)
                    for i, x in enumerate(ca):
                        if x:
                            for j, y in enumerate(cb):
                                prod[i + j] = (prod[i + j] + x * y) % p
                    r = _pmod(prod, mod, p)
                    r += [0] * (f - len(r))
                    m = self.encode(r)
                    mul[a, b] = mul[b, a] = m
            self.ADD = add
            self.MUL = mul
        self.NEG = self._neg_vec()
        inv = np.zeros(self.q, dtype=np.int16)
        for a in range(1, self.q):
            inv[a] = self.pow(a, self.q - 2)
        self.INV = inv

    def _neg_vec(self):
        out = np.zeros(self.q, dtype=np.int16)
        for a in range(self.q):
            out[a] = self.encode((-c) % self.p for c in self.coeffs(a))
        return out

    # -- scalar arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.ADD is not None:
            return int(self.ADD[a, b])
        return self.encode((x + y) % self.p for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        if self.ADD is not None:
            return int(self.NEG[a])
        return self.encode((-c) % self.p for c in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.MUL is not None:
            return int(self.MUL[a, b])
        mod = list(self.modulus) + [1]
        r = _pmulmod(self.coeffs(a), self.coeffs(b), mod, self.p)
        r += [0] * (self.f - len(r))
        return self.encode(r)

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 1 if n == 0 else 0
        n %= self.q - 1
        out, base = 1, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def inv(self, a: int) -> int:
        assert a != 0, "division by zero"
        if self.MUL is not None and hasattr(self, "INV"):
            return int(self.INV[a])
        return self.pow(a, self.q - 2)

    def frobenius(self, a: int, k: int = 1) -> int:
        """a^(p^k)."""
        if a == 0:
            return 0
        return self.pow(a, pow(self.p, k, self.q - 1))

    # -- traces and characters --------------------------------------------------

    def trace_to_prime(self, a: int) -> int:
        """Tr_{F_q/F_p}(a) = sum a^(p^i), landing in 0..p-1."""
        t = 0
        cur = a
        for _ in range(self.f):
            t = self.add(t, cur)
            cur = self.pow(cur, self.p)
        assert t < self.p, "trace left the prime field (internal fault)"
        return t

    def additive_character(self, a: int, twist: int = 1) -> Cyclo:
        """psi(a) = zeta_p^(Tr(twist * a)), an exact order-p root of unity."""
        return Cyclo.root(self.p, self.trace_to_prime(self.mul(twist, a)))

    def primitive_element(self) -> int:
        for a in range(1, self.q):
            if self.element_order(a) == self.q - 1:
                return a
        raise AssertionError("no primitive element (internal fault)")

    def element_order(self, a: int) -> int:
        assert a != 0
        cur, n = a, 1
        while cur != 1:
            cur = self.mul(cur, a)
            n += 1
        return n

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        if self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def quadratic_character(self, a: int) -> int:
        """1 on nonzero squares, -1 on nonsquares, 0 at 0 (q odd)."""
        assert self.p != 2
        if a == 0:
            return 0
        return 1 if self.is_square(a) else -1

    def least_nonsquare(self) -> int:
        assert self.p != 2
        for a in range(1, self.q):
            if not self.is_square(a):
                return a
        raise AssertionError("no nonsquare in odd field (internal fault)")

    def half(self) -> int:
        """The element 1/2 (q odd)."""
        assert self.p != 2
        return self.inv(self.add(1, 1))

    def gauss_sum_vector(self, twist: int = 1) -> np.ndarray:
        """Coefficient vector over zeta_p exponents of sum_x psi_twist(x^2)."""
        v = np.zeros(self.p, dtype=np.int64)
        for x in range(self.q):
            v[self.trace_to_prime(self.mul(twist, self.mul(x, x)))] += 1
        return v


@lru_cache(maxsize=None)
def field(p: int, f: int = 1) -> GF:
    return GF(p, f)


@lru_cache(maxsize=None)
def subfield_embedding(p: int, f: int, f2: int) -> tuple[int, ...]:
    """The canonical embedding GF(p^f) -> GF(p^f2) (f | f2), as an image
    table; the generator goes to the least root of the small modulus."""
    assert f2 % f == 0
    F, E = field(p, f), field(p, f2)
    if f == 1:
        return tuple(range(p))
    modulus = list(F.modulus) + [1]
    root = None
    for r in range(E.q):
        acc = 0
        for c in reversed(modulus):
            acc = E.add(E.mul(acc, r), c % p)
        if acc == 0:
            root = r
            break
    assert root is not None, "modulus has no root in the extension (internal fault)"
    emb = []
    for a in range(F.q):
        acc = 0
        for c in reversed(F.coeffs(a)):
            acc = E.add(E.mul(acc, root), c)
        emb.append(acc)
    # ring homomorphism spot check
    for a in (1, F.q - 1, F.q // 2):
        for b in (1, F.q - 1):
            assert emb[F.mul(a, b)] == E.mul(emb[a], emb[b])
            assert emb[F.add(a, b)] == E.add(emb[a], emb[b])
    return tuple(emb)


def field_for_q(q: int) -> GF:
    """The canonical field with q = p^f elements."""
    p = None
    for d in range(2, q + 1):
        if q % d == 0:
            p = d
            break
    assert p is not None and is_prime(p), f"q = {q} is not a prime power"
    f = 0
    m = q
    while m > 1:
        assert m % p == 0, f"q = {q} is not a prime power"
        m //= p
        f += 1
    return field(p, f)


def prime_power(q: int) -> tuple[int, int]:
    F = field_for_q(q)
    return F.p, F.f


def make_field_spec(p: int, f: int) -> dict:
    """Field construction record: prime, exponent, canonical modulus."""
    F = field(p, f)
    return {"p": p, "f": f, "q": F.q, "modulus": list(F.modulus) + [1]}


def rational_q_power(q: int, expo: Fraction) -> Fraction | None:
    """q^expo as an exact rational when the exponent is an integer, else None."""
    e = Fraction(expo)
    if e.denominator != 1:
        return None
    return Fraction(q) ** e.numerator
