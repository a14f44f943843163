"""Structured verification records and their serialization.

Every check produces a BoundReport binding a named inequality to exact
computed quantities with a pass / fail / not-applicable verdict.  JSON is
canonical; exact rationals are serialized as numerator/denominator strings
plus a 12-significant-digit decimal for skimming.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import Decimal, getcontext
from fractions import Fraction

REPORT_SCHEMA = "cclab-report/1"

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class BoundReport:
    check: str                      # stable content-named id of the inequality
    params: dict
    lhs: object                     # Fraction | int | str
    rhs: object
    verdict: str
    margin: object = None
    note: str = ""

    def __post_init__(self):
        assert self.verdict in (PASS, FAIL, NOT_APPLICABLE)

    @property
    def ok(self) -> bool:
        return self.verdict != FAIL

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": {k: _encode_value(v) for k, v in sorted(self.params.items())},
            "lhs": _encode_value(self.lhs),
            "rhs": _encode_value(self.rhs),
            "verdict": self.verdict,
            "margin": _encode_value(self.margin),
            "note": self.note,
        }


def _decimal_str(x: Fraction, digits: int = 12) -> str:
    getcontext().prec = digits
    if x == 0:
        return "0"
    d = Decimal(x.numerator) / Decimal(x.denominator)
    return str(+d)


def _encode_value(v):
    if v is None:
        return None
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return {"num": str(v), "den": "1", "dec": _decimal_str(Fraction(v))}
    if isinstance(v, Fraction):
        return {"num": str(v.numerator), "den": str(v.denominator), "dec": _decimal_str(v)}
    if isinstance(v, (list, tuple)):
        return [_encode_value(t) for t in v]
    return str(v)


@dataclass
class ReportBundle:
    items: list[BoundReport] = field(default_factory=list)

    def extend(self, reports):
        self.items.extend(reports)

    def add(self, report: BoundReport):
        self.items.append(report)

    @property
    def exit_code(self) -> int:
        return 1 if any(r.verdict == FAIL for r in self.items) else 0

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0}
        for r in self.items:
            out[r.verdict] += 1
        return out

    def to_json(self) -> str:
        doc = {
            "schema": REPORT_SCHEMA,
            "counts": self.counts(),
            "items": [r.to_dict() for r in self.items],
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["check", "params", "lhs", "rhs", "verdict", "margin", "note"])
        for r in self.items:
            d = r.to_dict()
            w.writerow([
                d["check"], json.dumps(d["params"], sort_keys=True),
                _flat(d["lhs"]), _flat(d["rhs"]), d["verdict"], _flat(d["margin"]), d["note"],
            ])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for r in self.items:
            lines.append(
                f"[{r.verdict:>14}] {r.check}  lhs={_flat(_encode_value(r.lhs))} "
                f"rhs={_flat(_encode_value(r.rhs))}  {_params_short(r.params)}"
                + (f"  # {r.note}" if r.note else "")
            )
        c = self.counts()
        lines.append(f"-- {c[PASS]} pass, {c[FAIL]} fail, {c[NOT_APPLICABLE]} not-applicable")
        return "\n".join(lines)


def _flat(v):
    if isinstance(v, dict) and "dec" in v:
        return v["dec"]
    if isinstance(v, list):
        return ";".join(_flat(t) for t in v)
    return "" if v is None else str(v)


def _params_short(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(params.items()))
