"""Acceptance criteria.  Each test prints one PASS/FAIL line; all equalities are exact."""

import random
import time
from math import comb, lcm

import pytest

from repwild import zoo
from repwild import algebra as alg
from repwild.combinatorics import (PointedDatum, hecke_blocks_typeA, pointed_datum_check,
                                   principal_block_BD_verdict, quantum_datum)
from repwild.fields import GF, QQ, cyclotomic
from repwild.growth import complexity, cx_consistency, gamma
from repwild.hochschild import bar_hh_oracle, hh_dims, hh_product_check
from repwild.modrep import restrict_to_block, simple_modules, trivial_module, block_of_module
from repwild.report import wildness_report
from repwild.resolution import minimal_resolution


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def a2():
    A = zoo.quantum_nilpotent("A2", 3)
    k = trivial_module(A)
    return A, k, complexity(A, k, 12)


def test_criterion_01_truncated_baseline(verdict):
    results = []
    for ell in (2, 3, 5):
        t = time.perf_counter()
        A = zoo.truncated_poly(ell)
        k = trivial_module(A)
        res = minimal_resolution(k, 20)
        dims = res.dims[:21]
        rep = complexity(A, k, 20)
        ok = (dims == [ell] * 21 and rep.gamma == 1 and rep.mode == "exact"
              and bool(alg.is_self_injective(A)) and len(alg.block_decomposition(A)) == 1)
        results.append((ell, ok, time.perf_counter() - t))
    ok = all(r[1] and r[2] < 1 for r in results)
    verdict(1, ok, ", ".join(f"ell={e} {'ok' if g else 'bad'} {s:.2f}s" for e, g, s in results))


def test_criterion_02_kunneth(verdict):
    t = time.perf_counter()
    oracle = [2] * 16
    conv = [1] + [0] * 15
    cxs = []
    for r in (1, 2, 3):
        conv = [sum(conv[i] * oracle[n - i] for i in range(n + 1)) for n in range(16)]
        A = zoo.elementary_abelian_group_algebra(2, r, GF(2))
        k = trivial_module(A)
        rep = complexity(A, k, 16)
        cxs.append(rep.gamma)
        if r == 3:
            dims = minimal_resolution(k, 15).dims[:16]
    ok = cxs == [1, 2, 3] and dims == conv and conv == [8 * comb(n + 2, 2) for n in range(16)]
    ok = ok and time.perf_counter() - t < 30
    verdict(2, ok, f"cx {cxs}; r=3 dims {dims[:5]}... match the convolution oracle up to n=15")


def test_criterion_03_consistency_chain(verdict, a2):
    runs = [
        (zoo.truncated_poly(2), 12),
        (zoo.truncated_poly(3), 12),
        (zoo.elementary_abelian_group_algebra(2, 2, GF(2)), 12),
        (zoo.elementary_abelian_group_algebra(2, 3, GF(2)), 12),
        (zoo.restricted_enveloping(zoo.sl2_data(3), GF(3)), 10),
    ]
    seen = []
    ok = True
    for A, w in runs:
        c = cx_consistency(A, trivial_module(A), w)
        v = c.values()
        seen.append(f"{A.name} {v}")
        ok = ok and None not in v and len(set(v)) == 1
    A, k, rep = a2
    c = cx_consistency(A, k, 10, res=rep.resolution)
    seen.append(f"{A.name} {c.values()}")
    ok = ok and c.values() == [3, 3, 3]
    verdict(3, ok, "; ".join(seen))


def test_criterion_04_quantum_a2(verdict, a2):
    t = time.perf_counter()
    A, k, rep = a2
    v = wildness_report(A, k, 12, consistency=False)
    ok = (A.dim == 27 and alg.validate(A).ok and bool(alg.is_self_injective(A))
          and rep.gamma == 3 and rep.mode == "exact" and v.verdict == "wild"
          and v.fg.status == "certified" and v.fg.citation.startswith("fguqn"))
    verdict(4, ok, f"dim {A.dim}, cx {rep.gamma} {rep.mode}, verdict {v.verdict}, fg {v.fg.citation.split(':')[0]}"
                   f" (report {time.perf_counter() - t:.0f}s)")


def test_criterion_05_rank_one(verdict):
    ok = True
    for ell in (3, 5):
        Q = zoo.quantum_nilpotent("A1", ell)
        T = zoo.truncated_poly(ell, Q.field)
        ok = ok and Q.struct == T.struct and Q.unit == T.unit and Q.augmentation == T.augmentation
        v = wildness_report(Q, trivial_module(Q), 16, consistency=False)
        ok = ok and v.verdict == "criterion-silent" and v.cx.gamma == 1
    verdict(5, ok, "A1 tables equal truncated_poly for ell=3,5; reports criterion-silent with cx 1")


def test_criterion_06_smash(verdict):
    F = cyclotomic(3)
    R = zoo.truncated_poly(3, F)
    S = zoo.smash_group(R, [3], [zoo.scaling_action(R, F.gen)])
    cr = complexity(R, trivial_module(R), 16)
    cs = complexity(S, trivial_module(S), 16)
    ok = alg.validate(S).ok and cr.gamma == cs.gamma == 1 and cr.mode == cs.mode == "exact"
    verdict(6, ok, f"cx_R(k) = {cr.gamma}, cx_(R#kG)(k) = {cs.gamma}, smash table valid")


def test_criterion_07_hochschild(verdict):
    t = time.perf_counter()
    A = zoo.truncated_poly(2)
    dims = hh_dims(A, 4).dims
    oracle = bar_hh_oracle(A, 4).dims
    ok = dims == [2, 1, 1, 1, 1] == oracle
    centers = []
    for B in (zoo.truncated_poly(3), zoo.matrix_units(2), zoo.upper_triangular(2),
              zoo.cyclic_group_algebra(3, cyclotomic(3)), zoo.elementary_abelian_group_algebra(2, 2, GF(2)),
              zoo.quantum_nilpotent("A1", 3), zoo.hecke_typeA(3, QQ()(5)),
              zoo.restricted_enveloping(zoo.abelian_data(1), GF(3))):
        h0, z = hh_dims(B, 0).dims[0], len(alg.center(B))
        centers.append(h0 == z)
    ok = ok and all(centers)
    ok = ok and hh_product_check(A, 3).ok
    P = alg.direct_product(A, zoo.matrix_units(2))
    ok = ok and hh_dims(P, 3).dims == [a + b for a, b in zip(hh_dims(A, 3).dims, hh_dims(zoo.matrix_units(2), 3).dims)]
    el = time.perf_counter() - t
    verdict(7, ok and el < 60, f"HH {dims} = oracle {oracle}; HH^0 = center on {len(centers)} algebras; "
                               f"products graded commutative; block additivity ({el:.1f}s)")


def test_criterion_08_blocks(verdict):
    Z = zoo.cyclic_group_algebra(3, cyclotomic(3))
    bd = alg.block_decomposition(Z)
    ok = len(bd) == 3 and bd.check() == []
    F = GF(7)
    P = alg.direct_product(zoo.truncated_poly(2, F), zoo.cyclic_group_algebra(3, F))
    blocks = alg.block_decomposition(P)
    same = []
    for S in simple_modules(P).simples:
        i = block_of_module(S, blocks)
        full = complexity(P, S, 10).gamma
        local = complexity(blocks.blocks[i], restrict_to_block(S, blocks, i), 10).gamma
        same.append((full, local))
    ok = ok and all(a == b for a, b in same) and sorted(same) == [(0, 0)] * 3 + [(1, 1)]
    selfinj = []
    for A in (zoo.truncated_poly(3), zoo.cyclic_group_algebra(3, GF(3)), zoo.matrix_units(2),
              zoo.hecke_typeA(3, QQ()(-1)), zoo.quantum_nilpotent("A1xA1", 3), P, Z):
        assert alg.is_self_injective(A)
        selfinj.append(all(alg.is_self_injective(B) for B in alg.block_decomposition(A).blocks))
    ok = ok and all(selfinj)
    verdict(8, ok, f"Z/3 over Q(z3): {len(bd)} blocks, axioms exact; cx full/block {same}; "
                   f"blocks self-injective on {len(selfinj)} algebras")


def test_criterion_09_hecke(verdict):
    t = time.perf_counter()
    H5 = zoo.hecke_typeA(3, QQ()(5))
    Hm = zoo.hecke_typeA(3, QQ()(-1))
    ok = alg.is_semisimple(H5) and not alg.is_semisimple(Hm) and bool(alg.is_self_injective(Hm))
    rep = hecke_blocks_typeA(6, 2)
    b = next(b for b in rep.blocks if b.core == ())
    ok = ok and b.weight == 3 and b.verdict == "wild"
    ok = ok and principal_block_BD_verdict(9, 3).verdict == "wild"
    ok = ok and principal_block_BD_verdict(5, 3).verdict == "representation-finite"
    el = time.perf_counter() - t
    verdict(9, ok and el < 10, f"H(3,5) semisimple, H(3,-1) self-injective non-semisimple; "
                               f"empty core weight {b.weight} {b.verdict}; BD rules ({el:.1f}s)")


def test_criterion_10_pointed(verdict):
    v = pointed_datum_check(quantum_datum([[2, -1], [-1, 2]], 5))
    w = pointed_datum_check(PointedDatum([5], [(1,), (1,)], [(1,), (4,)], [[2, 0], [0, 2]]))
    ok = (v.verdict == "wild" and v.vectors_checked == 4 and w.verdict == "criterion inapplicable"
          and w.witness == (1, 1) and w.vectors_checked == 4)
    verdict(10, ok, f"A2/ell=5: {v.verdict}; engineered: {w.verdict}, witness {w.witness}; 2^2 vectors each")


def quasi_poly(rng, c, L, n, head=True):
    """Non-negative sequence of growth degree c - 1 whose coefficients depend on m mod L.

    With c = 0 the sequence is eventually zero, after an optional irregular head.
    """
    if c == 0:
        head = rng.randint(0, 3) if head else 0
        return [rng.randint(1, 5) for _ in range(head)] + [0] * (n - head)
    coeffs = [[rng.randint(0, 4) for _ in range(c)] for _ in range(L)]
    for row in coeffs:
        row[-1] = rng.randint(1, 3)
    return [sum(a * m ** e for e, a in enumerate(coeffs[m % L])) for m in range(n)]


def test_criterion_11_growth(verdict):
    rng = random.Random(11)
    bad = []
    trials = 0
    pairs = 0
    for c in range(5):
        for L in range(1, 5):
            for _ in range(25):
                trials += 1
                seq = quasi_poly(rng, c, L, 24)
                g = gamma(seq)
                if g.gamma != c or g.mode != "exact":
                    bad.append(("recover", c, L, seq))
                s = rng.choice([2, 3, 7])
                if gamma([s * x for x in seq]).gamma != c:
                    bad.append(("scale", c, L))
                sh = rng.randint(1, 3)
                if gamma(seq[sh:]).gamma != c:
                    bad.append(("shift", c, L))
                # pairs are quasi-polynomial from the first term: the exact rule looks back
                # c * L terms from the tail, so an irregular head can mask a long lag
                c2, L2 = rng.randint(0, 4), rng.randint(1, 4)
                first = seq if c else [0] * 24
                other = quasi_poly(rng, c2, L2, 24, head=False)
                summed = gamma([x + y for x, y in zip(first, other)])
                period = lcm(L, L2) if c and c2 else max(L if c else 1, L2 if c2 else 1)
                if summed.mode == "exact":
                    pairs += 1
                    if summed.gamma != max(c, c2):
                        bad.append(("sum", c, L, c2, L2))
                elif period <= 6 and max(c, c2) * period <= 12:
                    bad.append(("sum not exact", c, L, c2, L2))
    ok = not bad and pairs >= 250 and gamma([0] * 24).gamma == 0
    verdict(11, ok, f"{trials} synthetic sequences; recover, scale, shift; sum = max on {pairs} exact pairs; zeros; "
                    f"failures {bad[:3]}")


def test_criterion_12_determinism(verdict, tmp_path, monkeypatch, capsys):
    import test_cli

    monkeypatch.chdir(tmp_path)
    test_cli.prepare(tmp_path, capsys)
    diff = []
    for name in sorted(test_cli.CASES):
        a = test_cli.run(name, capsys)
        b = test_cli.run(name, capsys)
        gold = (test_cli.GOLDEN / f"{name}.out").read_text()
        if not a == b == gold:
            diff.append(name)
    verdict(12, not diff, f"{len(test_cli.CASES)} CLI goldens byte-identical across two runs; mismatches {diff}")
