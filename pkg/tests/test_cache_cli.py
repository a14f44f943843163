import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from cclab import cache
from cclab.cli import RunConfig, load_config_file, main, run_suite
from cclab.groups import SpecError
from cclab.reports import BoundReport, ReportBundle


def test_cache_roundtrip(grp, tmp_path, monkeypatch):
    monkeypatch.setenv("CCLAB_CACHE_DIR", str(tmp_path))
    g = grp("SL(2,3)")
    g._cache.pop("chartable", None)
    ct = cache.table("SL(2,3)")
    path = cache.cache_path("SL(2,3)")
    assert path.exists()
    doc1 = json.loads(path.read_text())
    # reload must reproduce identical ordering and values
    g._cache.pop("chartable", None)
    ct2 = cache.table("SL(2,3)")
    assert ct2.degrees == ct.degrees
    for a, b in zip(ct.irreducibles, ct2.irreducibles):
        assert a == b
    doc2 = json.loads(path.read_text())
    assert doc1["content_hash"] == doc2["content_hash"]


def test_cache_tamper_rejected(grp, tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CCLAB_CACHE_DIR", str(tmp_path))
    g = grp("SL(2,5)")
    g._cache.pop("chartable", None)
    cache.table("SL(2,5)")
    path = cache.cache_path("SL(2,5)")
    doc = json.loads(path.read_text())
    doc["degrees"][0] = 2  # tamper
    path.write_text(json.dumps(doc))
    assert cache.load_table(g) is None  # hash mismatch -> rejected


def test_cache_schema_bump_misses(grp, tmp_path, monkeypatch):
    monkeypatch.setenv("CCLAB_CACHE_DIR", str(tmp_path))
    g = grp("SL(2,3)")
    g._cache.pop("chartable", None)
    cache.table("SL(2,3)")
    path = cache.cache_path("SL(2,3)")
    doc = json.loads(path.read_text())
    doc["schema"] = "cclab-table/0"
    doc["content_hash"] = cache.content_hash(doc)
    path.write_text(json.dumps(doc))
    assert cache.load_table(g) is None


def test_run_config_validation():
    cfg = RunConfig(groups=["Sp(2,3)"], suites=["level"])
    cfg.validate()
    with pytest.raises(SpecError):
        RunConfig(suites=["nonsense"]).validate()
    with pytest.raises(SpecError):
        RunConfig(suites=["level"], workers=0).validate()


def test_config_file(tmp_path):
    p = tmp_path / "cfg"
    p.write_text("groups = Sp(2,3) SL(2,3)\nsuites = level delta\nworkers = 2\n"
                 "output_format = json\ngamma = 9/10\n")
    cfg = RunConfig()
    load_config_file(str(p), cfg)
    assert cfg.groups == ["Sp(2,3)", "SL(2,3)"]
    assert cfg.suites == ["level", "delta"]
    assert cfg.workers == 2


def test_run_suite_and_exit_codes():
    cfg = RunConfig(groups=["Sp(2,3)"], suites=["level"])
    bundle = run_suite(cfg)
    assert bundle.items and bundle.exit_code == 0
    empty = RunConfig(groups=[], suites=[])
    assert run_suite(empty).exit_code == 0 and not run_suite(empty).items


def test_report_serialization():
    from fractions import Fraction

    b = ReportBundle()
    b.add(BoundReport(check="demo", params={"q": 3}, lhs=Fraction(1, 3), rhs=2,
                      verdict="pass"))
    doc = json.loads(b.to_json())
    assert doc["schema"] == "cclab-report/1"
    lhs = doc["items"][0]["lhs"]
    assert lhs["num"] == "1" and lhs["den"] == "3"
    assert lhs["dec"].startswith("0.3333333333")  # 12 significant digits
    csv_text = b.to_csv()
    assert "demo" in csv_text
    text = b.to_text()
    assert "pass" in text


def test_cli_main_table(capsys):
    rc = main(["table", "SL(2,3)", "--no-cache"])
    out = capsys.readouterr().out
    assert rc == 0 and "7 classes" in out


def test_cli_bad_spec(capsys):
    rc = main(["table", "SO(5,2)"])
    assert rc == 2


def test_cli_verify_delta(capsys):
    rc = main(["verify", "delta", "--gamma", "99/100"])
    out = capsys.readouterr().out
    assert rc == 0 and "delta-feasibility" in out


def test_determinism_same_bundle_twice():
    cfg = RunConfig(groups=["SL(2,3)"], suites=["product-one"])
    a = run_suite(cfg).to_json()
    b = run_suite(cfg).to_json()
    assert a == b
