"""Exact orbit counts of classical groups on tuples of vectors.

The group acts diagonally on j-tuples; orbits are enumerated by a chunked
flood fill over the packed tuple space (digit-wise application of the
generators' single-vector permutations), which realizes the same partition a
union-find over the induced action would produce.  Budgeted by |V|^j.
"""

from __future__ import annotations

import numpy as np

from . import linalg as la
from .fields import GF
from .groups import GroupTable

TUPLE_BUDGET = 10 ** 8


class OrbitBudgetError(RuntimeError):
    pass


def vector_permutations(table: GroupTable) -> list[np.ndarray]:
    """For each generator, the permutation it induces on the point set of the
    natural module (indexed base-q by coordinate encodings)."""
    F = table.field
    d = table.dim
    q = F.q
    npts = q ** d
    coords = np.zeros((npts, d), dtype=np.int16)
    rem = np.arange(npts)
    for t in range(d):
        coords[:, t] = rem % q
        rem //= q
    perms = []
    weights = q ** np.arange(d, dtype=np.int64)
    for g in table.generators():
        imgs = la.mat_mul(F, coords, la.transpose(g))  # rows: g @ v for each v
        perms.append((imgs.astype(np.int64) @ weights))
    return perms


def orbit_count(table: GroupTable, j: int, budget: int = TUPLE_BUDGET) -> int:
    """Number of orbits on ordered j-tuples of vectors, exactly."""
    F = table.field
    npts = F.q ** table.dim
    total = npts ** j
    if total > budget:
        raise OrbitBudgetError(f"|V|^j = {total} exceeds budget {budget}")
    perms = vector_permutations(table)
    if not perms:
        return total  # trivial group
    visited = np.zeros(total, dtype=bool)
    weights = npts ** np.arange(j, dtype=np.int64)
    count = 0
    next_seed = 0
    chunk_cap = 1 << 20
    while next_seed < total:
        if visited[next_seed]:
            next_seed += 1
            continue
        count += 1
        frontier = np.array([next_seed], dtype=np.int64)
        visited[next_seed] = True
        while len(frontier):
            new_parts = []
            for start in range(0, len(frontier), chunk_cap):
                chunk = frontier[start:start + chunk_cap]
                digits = np.empty((len(chunk), j), dtype=np.int64)
                rem = chunk.copy()
                for t in range(j):
                    digits[:, t] = rem % npts
                    rem //= npts
                for P in perms:
                    imgs = (P[digits] * weights).sum(axis=1)
                    fresh = imgs[~visited[imgs]]
                    if len(fresh):
                        fresh = np.unique(fresh)
                        visited[fresh] = True
                        new_parts.append(fresh)
            frontier = np.concatenate(new_parts) if new_parts else np.array([], dtype=np.int64)
    return count


def isometry_signature_count(table: GroupTable, j: int) -> int:
    """Independent oracle for small cases: count distinct (dependency pattern,
    isometric data) signatures over all j-tuples; for the full isometry groups
    this equals the orbit count by the extension lemma for isometries."""
    F = table.field
    d = table.dim
    q = F.q
    npts = q ** d
    assert npts ** j <= 10 ** 6, "oracle reserved for small cases"
    coords = np.zeros((npts, d), dtype=np.int16)
    rem = np.arange(npts)
    for t in range(d):
        coords[:, t] = rem % q
        rem //= q
    form = table.form
    sigs = set()
    idx = np.zeros(j, dtype=np.int64)
    unitary = table.spec is not None and table.spec.is_unitary
    conj_k = F.f // 2 if unitary else 0
    while True:
        vecs = [coords[i] for i in idx]
        sig = _tuple_signature(F, form, vecs, unitary, conj_k)
        sigs.add(sig)
        t = 0
        while t < j:
            idx[t] += 1
            if idx[t] < npts:
                break
            idx[t] = 0
            t += 1
        if t == j:
            break
    return len(sigs)


def _tuple_signature(F: GF, form, vecs, unitary: bool, conj_k: int):
    """Kernel pattern of the tuple plus the pairwise form/quadratic data on it."""
    j = len(vecs)
    M = np.stack(vecs, axis=1).astype(np.int16)  # d x j, columns the vectors
    ker = la.kernel_basis(F, M)
    # canonical kernel: reduced echelon rows as a tuple
    kkey = tuple(map(tuple, _echelon_rows(F, ker)))
    if form is None:
        return (kkey,)
    gram = []
    for a in range(j):
        for b in range(j):
            if unitary:
                gram.append(form.evaluate_conj(vecs[a], vecs[b], conj_k))
            else:
                gram.append(form.evaluate(vecs[a], vecs[b]))
    quad = tuple(form.quad_value(v) for v in vecs) if form.quad_diag is not None else ()
    return (kkey, tuple(gram), quad)


def _echelon_rows(F: GF, rows: np.ndarray):
    if rows.shape[0] == 0:
        return rows
    red, _ = la._eliminate(F, rows)
    red = red[(red != 0).any(axis=1)]
    return red
