import pytest

from repwild import io, zoo
from repwild.fields import GF
from repwild.modrep import simple_modules, trivial_module
from repwild.report import batch_report, wildness_report


def test_elementary_abelian_is_wild():
    A = zoo.elementary_abelian_group_algebra(2, 3, GF(2))
    v = wildness_report(A, trivial_module(A), 12, consistency=False)
    assert v.verdict == "wild" and v.cx.gamma == 3 and v.confidence == "exact"


def test_truncated_is_silent():
    A = zoo.truncated_poly(5)
    v = wildness_report(A, trivial_module(A), 20)
    assert v.verdict == "criterion-silent" and v.cx.gamma == 1
    assert v.notes and v.notes[0].startswith("maincor")
    assert v.consistency.values() == [1, 1, 1]


def test_upper_triangular_not_applicable():
    T = zoo.upper_triangular(2)
    for S in simple_modules(T).simples:
        v = wildness_report(T, S, 8)
        assert v.verdict == "not-applicable" and "self-injective" in v.failed


def test_fg_override():
    A = zoo.truncated_poly(3)
    A.family = None  # strip the certificate
    v = wildness_report(A, trivial_module(A), 8, consistency=False)
    assert v.verdict == "not-applicable" and v.failed == ["fg"]
    v = wildness_report(A, trivial_module(A), 8, fg_override=True, consistency=False)
    assert v.verdict == "criterion-silent" and v.fg.status == "asserted"


def test_no_tame_claims():
    for A in (zoo.truncated_poly(2), zoo.matrix_units(2), zoo.cyclic_group_algebra(3, GF(3))):
        v = wildness_report(A, trivial_module(A) if A.augmentation else simple_modules(A).simples[0], 8)
        assert v.verdict in ("wild", "criterion-silent", "not-applicable")
        assert "tame" not in v.verdict


def test_window_monotonicity():
    A = zoo.elementary_abelian_group_algebra(2, 3, GF(2))
    small = wildness_report(A, trivial_module(A), 10, consistency=False)
    big = wildness_report(A, trivial_module(A), 14, consistency=False)
    assert small.verdict == big.verdict == "wild"


def test_block_consistency():
    A = zoo.truncated_poly(2, GF(7))
    B = zoo.cyclic_group_algebra(3, GF(7))
    from repwild.algebra import direct_product
    P = direct_product(A, B)
    S = [s for s in simple_modules(P).simples if s.dim == 1]
    for M in S:
        v = wildness_report(P, M, 8, consistency=False)
        assert v.cx.gamma in (0, 1)


def write_inputs(tmp_path):
    io.store_algebra(zoo.truncated_poly(5), tmp_path / "tp5.json")
    io.store_algebra(zoo.upper_triangular(2), tmp_path / "t2.json")
    io.store_module(simple_modules(zoo.upper_triangular(2)).simples[0], tmp_path / "s0.json")


def test_batch(tmp_path):
    write_inputs(tmp_path)
    entries = [
        {"algebra": {"family": "elementary_abelian", "p": 2, "r": 3}, "window": 10},
        {"algebra": "tp5.json", "window": 12},
        {"algebra": "t2.json", "module": "s0.json", "window": 6},
    ]
    out = batch_report(entries, base=tmp_path)
    assert [r["index"] for r in out] == [0, 1, 2]
    assert [r["verdict"]["verdict"] for r in out] == ["wild", "criterion-silent", "not-applicable"]


def test_batch_missing_file(tmp_path):
    write_inputs(tmp_path)
    out = batch_report([{"algebra": "nope.json"}, {"algebra": "tp5.json", "window": 8}], base=tmp_path)
    assert not out[0]["ok"] and "nope.json" in out[0]["error"]
    assert out[1]["ok"]


def test_batch_empty():
    assert batch_report([]) == []


def test_batch_parallel_matches_serial(tmp_path):
    write_inputs(tmp_path)
    entries = [{"algebra": "tp5.json", "window": 8}, {"algebra": "t2.json", "module": "s0.json", "window": 6}]
    assert batch_report(entries, tmp_path, workers=2) == batch_report(entries, tmp_path, workers=1)
