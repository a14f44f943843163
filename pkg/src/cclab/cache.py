"""Persistent character-table cache.

Tables are serialized with their class data and a content hash, keyed by
(spec string, schema version, engine code hash); a reload is only accepted
after the class ordering matches the freshly enumerated group and the full
orthogonality gate passes again.  Corrupt or stale entries trigger a rebuild
with a warning.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .chartable import CharacterTable, build_table, verify_table
from .classfun import ClassFunction, classes
from .cyclotomic import Cyclo
from .groups import GroupTable, enumerate_group, spec_from_string

CACHE_SCHEMA = "cclab-table/1"
CACHE_ENV = "CCLAB_CACHE_DIR"


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "cclab"


def engine_hash() -> str:
    """Hash of the table-engine sources, so exactness bugs never survive a
    code change through the cache."""
    import cclab.chartable as eng
    import cclab.cyclotomic as cyc

    h = hashlib.sha256()
    for mod in (eng, cyc):
        with open(mod.__file__, "rb") as f:
            h.update(f.read())
    return h.hexdigest()[:16]


def _serialize(ct: CharacterTable) -> dict:
    part = ct.part
    doc = {
        "schema": CACHE_SCHEMA,
        "engine": engine_hash(),
        "spec": str(ct.group.spec),
        "order": ct.group.order,
        "exponent": ct.exponent,
        "modulus": ct.modulus,
        "mod_root": ct.mod_root,
        "class_sizes": [int(s) for s in part.sizes],
        "class_reps": [ct.group.elements[int(r)].astype(int).flatten().tolist()
                       for r in part.reps],
        "characters": [
            [
                sorted(
                    (exp, str(c.numerator), str(c.denominator))
                    for exp, c in v.promote(ct.exponent).coeffs.items()
                )
                for v in chi.values
            ]
            for chi in ct.irreducibles
        ],
        "mod_values": ct.mod_values,
        "degrees": ct.degrees,
    }
    doc["content_hash"] = content_hash(doc)
    return doc


def content_hash(doc: dict) -> str:
    body = {k: v for k, v in doc.items() if k != "content_hash"}
    return hashlib.sha256(
        json.dumps(body, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()


def cache_path(spec_str: str) -> Path:
    safe = spec_str.replace("(", "_").replace(")", "").replace(",", "_")
    return cache_dir() / f"{safe}.{engine_hash()}.json"


def save_table(ct: CharacterTable) -> Path:
    path = cache_path(str(ct.group.spec))
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        json.dump(_serialize(ct), f)
    return path


def load_table(table: GroupTable) -> CharacterTable | None:
    """Rebuild a CharacterTable from cache onto a freshly enumerated group;
    returns None on any mismatch."""
    path = cache_path(str(table.spec))
    if not path.exists():
        return None
    try:
        with open(path) as f:
            doc = json.load(f)
        if doc.get("schema") != CACHE_SCHEMA or doc.get("engine") != engine_hash():
            return None
        if doc.get("content_hash") != content_hash(doc):
            print(f"warning: corrupt cache entry {path}; rebuilding", file=sys.stderr)
            return None
        if doc["order"] != table.order:
            return None
        part = classes(table)
        if [int(s) for s in part.sizes] != doc["class_sizes"]:
            return None
        for r, flat in zip(part.reps, doc["class_reps"]):
            if table.elements[int(r)].astype(int).flatten().tolist() != flat:
                return None
        e = doc["exponent"]
        if e != part.exponent:
            return None
        irreducibles = []
        for rows in doc["characters"]:
            vals = []
            for entries in rows:
                coeffs = {int(exp): Fraction(int(nu), int(de)) for exp, nu, de in entries}
                vals.append(Cyclo.from_exponents(e, coeffs))
            irreducibles.append(ClassFunction(part, vals))
        ct = CharacterTable(
            group=table, part=part, irreducibles=irreducibles,
            degrees=list(doc["degrees"]), exponent=e,
            modulus=doc["modulus"], mod_root=doc["mod_root"],
            mod_values=[list(map(int, row)) for row in doc["mod_values"]],
        )
        verify_table(ct)  # orthogonality re-verified before use
        return ct
    except (KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"warning: unreadable cache entry {path} ({exc}); rebuilding", file=sys.stderr)
        return None


_GROUP_MEMO: dict[str, GroupTable] = {}


def group(spec_str: str) -> GroupTable:
    """Enumerate (memoized per process)."""
    if spec_str not in _GROUP_MEMO:
        _GROUP_MEMO[spec_str] = enumerate_group(spec_from_string(spec_str))
    return _GROUP_MEMO[spec_str]


def table(spec_str: str, use_cache: bool = True) -> CharacterTable:
    """Character table through the disk cache."""
    g = group(spec_str)
    if "chartable" in g._cache:
        return g._cache["chartable"]
    if use_cache:
        ct = load_table(g)
        if ct is not None:
            g._cache["chartable"] = ct
            return ct
    ct = build_table(g)
    if use_cache:
        try:
            save_table(ct)
        except OSError:
            pass
    return ct
