"""Matrix arithmetic over GF(q) with integer-encoded entries.

Prime fields use plain numpy matmul mod p; extension fields go through the
field's lookup tables.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

import numpy as np

from .fields import GF


def identity(F: GF, n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int16)


def zeros(F: GF, r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=np.int16)


def mat_mul(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix product; supports batched A of shape (..., r, s) with B (s, t)."""
    if F.f == 1:
        return (A.astype(np.int64) @ B.astype(np.int64) % F.p).astype(np.int16)
    s = A.shape[-1]
    prod = F.MUL[A[..., :, 0, None], B[None, 0, :]].astype(np.int16)
    for k in range(1, s):
        prod = F.ADD[prod, F.MUL[A[..., :, k, None], B[None, k, :]]]
    return prod


def mat_mul_batch(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Batched product of (N, r, s) with (N, s, t)."""
    if F.f == 1:
        return (np.matmul(A.astype(np.int64), B.astype(np.int64)) % F.p).astype(np.int16)
    s = A.shape[-1]
    prod = F.MUL[A[..., :, 0, None], B[..., None, 0, :]].astype(np.int16)
    for k in range(1, s):
        prod = F.ADD[prod, F.MUL[A[..., :, k, None], B[..., None, k, :]]]
    return prod


def mat_vec(F: GF, A: np.ndarray, v: np.ndarray) -> np.ndarray:
    return mat_mul(F, A, v.reshape(-1, 1)).reshape(-1)


def mat_neg(F: GF, A: np.ndarray) -> np.ndarray:
    return F.NEG[A].astype(np.int16) if F.f > 1 else ((-A.astype(np.int64)) % F.p).astype(np.int16)


def mat_add(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if F.f == 1:
        return ((A.astype(np.int64) + B) % F.p).astype(np.int16)
    return F.ADD[A, B].astype(np.int16)


def mat_sub(F: GF, A, B):
    return mat_add(F, A, mat_neg(F, B))


def _eliminate(F: GF, M: np.ndarray):
    """Row echelon form; returns (matrix, pivot column list)."""
    M = M.astype(np.int64).copy()
    rows, cols = M.shape
    piv = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if M[i, c]:
                pr = i
                break
        if pr is None:
            continue
        M[[r, pr]] = M[[pr, r]]
        inv = F.inv(int(M[r, c]))
        M[r] = [F.mul(inv, int(x)) for x in M[r]]
        for i in range(rows):
            if i != r and M[i, c]:
                f = int(M[i, c])
                M[i] = [F.sub(int(x), F.mul(f, int(y))) for x, y in zip(M[i], M[r])]
        piv.append(c)
        r += 1
        if r == rows:
            break
    return M.astype(np.int16), piv


def rank(F: GF, A: np.ndarray) -> int:
    _, piv = _eliminate(F, A)
    return len(piv)


def kernel_dim(F: GF, A: np.ndarray) -> int:
    return A.shape[1] - rank(F, A)


def mat_inv(F: GF, A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    aug = np.concatenate([A, identity(F, n)], axis=1)
    red, piv = _eliminate(F, aug)
    assert piv == list(range(n)), "matrix not invertible"
    return red[:, n:].copy()


def det(F: GF, A: np.ndarray) -> int:
    M = A.astype(np.int64).copy()
    n = M.shape[0]
    d = 1
    for c in range(n):
        pr = None
        for i in range(c, n):
            if M[i, c]:
                pr = i
                break
        if pr is None:
            return 0
        if pr != c:
            M[[c, pr]] = M[[pr, c]]
            d = F.neg(d)
        d = F.mul(d, int(M[c, c]))
        inv = F.inv(int(M[c, c]))
        M[c] = [F.mul(inv, int(x)) for x in M[c]]
        for i in range(c + 1, n):
            if M[i, c]:
                f = int(M[i, c])
                M[i] = [F.sub(int(x), F.mul(f, int(y))) for x, y in zip(M[i], M[c])]
    return d


def solve(F: GF, A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution of A x = b, or None."""
    n, m = A.shape
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    red, piv = _eliminate(F, aug)
    for i in range(len(piv), n):
        if red[i, m]:
            return None
    x = np.zeros(m, dtype=np.int16)
    for i, c in enumerate(piv):
        if c < m:
            x[c] = red[i, m]
        elif red[i, m]:
            return None
    return x


def kernel_basis(F: GF, A: np.ndarray) -> np.ndarray:
    """Rows span ker(A) (right kernel: A v = 0)."""
    rows, cols = A.shape
    red, piv = _eliminate(F, A)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for fc in free:
        v = np.zeros(cols, dtype=np.int16)
        v[fc] = 1
        for i, pc in enumerate(piv):
            v[pc] = F.neg(int(red[i, fc]))
        basis.append(v)
    return np.array(basis, dtype=np.int16).reshape(len(basis), cols)


def mat_pow(F: GF, A: np.ndarray, n: int) -> np.ndarray:
    out = identity(F, A.shape[0])
    base = A
    while n:
        if n & 1:
            out = mat_mul(F, out, base)
        base = mat_mul(F, base, base)
        n >>= 1
    return out


def matrix_order(F: GF, A: np.ndarray, cap: int = 10 ** 6) -> int:
    I = identity(F, A.shape[0])
    cur = A
    n = 1
    while not np.array_equal(cur, I):
        cur = mat_mul(F, cur, A)
        n += 1
        assert n <= cap, "order cap exceeded"
    return n


def transpose(A: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(A.T)


def encode_matrix(A: np.ndarray) -> bytes:
    return np.ascontiguousarray(A, dtype=np.uint16).tobytes()


def encode_batch(batch: np.ndarray) -> list[bytes]:
    flat = np.ascontiguousarray(batch, dtype=np.uint16).reshape(batch.shape[0], -1)
    return [row.tobytes() for row in flat]


def decode_matrix(data: bytes, n: int) -> np.ndarray:
    return np.frombuffer(data, dtype=np.uint16).reshape(n, n).astype(np.int16)
