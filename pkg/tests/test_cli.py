"""Golden-file tests for every CLI path.  Set REPWILD_REGEN=1 to rewrite the goldens."""

import json
import os
from pathlib import Path

import pytest

from repwild import io
from repwild.cli import main
from repwild.combinatorics import quantum_datum

GOLDEN = Path(__file__).parent / "golden"

SETUP = [
    ["zoo", "build", "truncated_poly", "ell=5", "-o", "tp5.json"],
    ["zoo", "build", "truncated_poly", "ell=3", "field=F3", "-o", "tp3.json"],
    ["zoo", "build", "truncated_poly", "ell=2", "field=Q", "-o", "tp2.json"],
    ["zoo", "build", "cyclic_group", "n=3", "field=C3", "-o", "z3.json"],
    ["zoo", "build", "upper_triangular", "n=2", "-o", "t2.json"],
    ["zoo", "build", "elementary_abelian", "p=2", "r=3", "-o", "ea23.json"],
]

CASES = {
    "zoo_build": (["zoo", "build", "truncated_poly", "ell=2", "-o", "x.json", "--format", "json"], 0),
    "validate": (["validate", "tp5.json", "--module", "tp5.trivial.json"], 0),
    "validate_bad": (["validate", "bad.json"], 2),
    "blocks": (["blocks", "z3.json", "--format", "json"], 0),
    "selfinj": (["selfinj", "t2.json"], 0),
    "resolve": (["resolve", "tp3.json", "--window", "6", "--format", "json"], 0),
    "ext": (["ext", "tp3.json", "--window", "6"], 0),
    "hh": (["hh", "tp2.json", "--window", "4", "--oracle"], 0),
    "cx": (["cx", "--algebra", "tp5.json", "--module", "tp5.trivial.json", "--window", "20"], 0),
    "cx_json": (["cx", "tp3.json", "--window", "8", "--consistency", "--format", "json"], 0),
    "report_wild": (["report", "ea23.json", "--window", "10"], 0),
    "report_na": (["report", "t2.json", "--module", "t2.simple0.json", "--window", "6", "--format", "json"], 0),
    "report_batch": (["report", "--batch", "batch.json", "--format", "json"], 2),
    "hecke_blocks": (["hecke-blocks", "--r", "6", "--ell", "2", "--format", "json"], 0),
    "hecke_blocks_text": (["hecke-blocks", "--r", "3", "--ell", "5"], 0),
    "bd_verdict": (["bd-verdict", "--r", "9", "--ell", "3"], 0),
    "bd_verdict_even": (["bd-verdict", "--r", "9", "--ell", "4"], 2),
    "pointed": (["pointed-check", "datum.json", "--format", "json"], 0),
    "usage": (["cx", "tp5.json", "--window", "2"], 1),
    "usage_unknown": (["frobnicate"], 1),
}


def prepare(tmp, capsys):
    for argv in SETUP:
        assert main(argv) == 0
    capsys.readouterr()
    bad = json.loads((tmp / "tp3.json").read_text())
    bad["structure"][-1][3] = 2
    (tmp / "bad.json").write_text(io.dumps(bad))
    io.store_datum(quantum_datum([[2, -1], [-1, 2]], 5), tmp / "datum.json")
    batch = [{"algebra": "tp5.json", "window": 8}, {"algebra": "missing.json"},
             {"algebra": "t2.json", "module": "t2.simple1.json", "window": 6}]
    (tmp / "batch.json").write_text(json.dumps(batch))


def run(name, capsys):
    argv, code = CASES[name]
    assert main(argv) == code
    out = capsys.readouterr()
    return out.out + ("" if code == 0 else "--- stderr\n" + out.err)


@pytest.fixture
def workdir(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    prepare(tmp_path, capsys)
    return tmp_path


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, workdir, capsys):
    first = run(name, capsys)
    second = run(name, capsys)
    assert first == second
    path = GOLDEN / f"{name}.out"
    if os.environ.get("REPWILD_REGEN"):
        path.write_text(first)
    assert first == path.read_text()


def test_zoo_files(workdir):
    names = sorted(p.name for p in workdir.iterdir())
    assert "tp5.trivial.json" in names and "z3.simple2.json" in names
    assert "t2.trivial.json" not in names


def test_bad_validate_has_witness(workdir, capsys):
    main(["validate", "bad.json", "--format", "json"])
    obj = json.loads(capsys.readouterr().out)
    assert not obj["ok"] and obj["violations"][0]["kind"] == "associativity"
