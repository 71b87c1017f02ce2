import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repwild.combinatorics import (Partition, PointedDatum, ell_core, ell_weight, hecke_blocks_typeA,
                                   is_ell_regular, is_finite_type, partitions, pointed_datum_check,
                                   principal_block_BD_verdict, quantum_datum)
from repwild.errors import BadOrderHypothesis, EvenEll, InvalidDatum


def diagram_core(lam, ell):
    """Oracle: strip rim hooks straight off the Young diagram via hook lengths."""
    lam = list(lam)
    while True:
        conj = [sum(1 for p in lam if p > j) for j in range(lam[0] if lam else 0)]
        hit = None
        for i, row in enumerate(lam):
            for j in range(row):
                if row - j + conj[j] - i - 1 == ell:
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            return tuple(lam)
        i, j = hit
        k = conj[j] - 1
        new = lam[:i] + [lam[r + 1] - 1 for r in range(i, k)] + [j] + lam[k + 1:]
        lam = [p for p in new if p > 0]


def test_core_examples():
    assert ell_core((6,), 2) == ()
    assert ell_core((3,), 2) == (1,)
    assert ell_core((2, 1), 5) == (2, 1)
    assert ell_core((4, 3, 1), 3) == (2,)


@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_core_matches_diagram_oracle(ell):
    for r in range(1, 12):
        for lam in partitions(r):
            assert tuple(ell_core(lam, ell)) == diagram_core(lam, ell), lam


@given(st.lists(st.integers(1, 9), max_size=7), st.integers(2, 6), st.integers(0, 1000))
@settings(max_examples=150, deadline=None)
def test_core_properties(parts, ell, seed):
    lam = Partition(sorted(parts, reverse=True))
    core = ell_core(lam, ell, seed=seed)
    assert ell_core(core, ell) == core
    assert (lam.size - core.size) % ell == 0
    assert ell_weight(lam, ell) == (lam.size - core.size) // ell


def test_regular():
    assert not is_ell_regular((2, 2, 2), 3)
    assert all(is_ell_regular((3, 2, 1), ell) for ell in range(2, 6))
    assert not is_ell_regular((1, 1), 2)


def test_partition_counts():
    assert [len(list(partitions(r))) for r in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    # 2-regular partitions of r are equinumerous with partitions into odd parts
    for r in range(1, 13):
        regular = sum(1 for p in partitions(r) if is_ell_regular(p, 2))
        odd = sum(1 for p in partitions(r) if all(x % 2 for x in p))
        assert regular == odd


def test_hecke_blocks_r6_ell2():
    rep = hecke_blocks_typeA(6, 2)
    principal = next(b for b in rep.blocks if b.core == ())
    assert principal.weight == 3 and principal.verdict == "wild"
    assert principal.rule == "heckealgtypA"
    members = sorted(m for b in rep.blocks for m in b.members)
    assert members == sorted(p for p in partitions(6) if is_ell_regular(p, 2))
    for b in rep.blocks:
        assert b.core.size + 2 * b.weight == 6


def test_hecke_blocks_small():
    rep = hecke_blocks_typeA(3, 5)
    assert "semisimple" in rep.tags
    rep = hecke_blocks_typeA(2, 2)
    assert len(rep.blocks) == 1
    b = rep.blocks[0]
    assert b.members == [(2,)] and b.weight == 1 and b.verdict == "criterion silent"


def test_bd_verdicts():
    assert principal_block_BD_verdict(9, 3).verdict == "wild"
    assert principal_block_BD_verdict(5, 3).verdict == "representation-finite"
    assert principal_block_BD_verdict(7, 3).verdict == "undetermined"
    with pytest.raises(EvenEll):
        principal_block_BD_verdict(9, 4)


def test_finite_type():
    assert is_finite_type([[2, -1], [-1, 2]])
    assert is_finite_type([[2, -1], [-3, 2]])
    assert not is_finite_type([[2, -2], [-2, 2]])
    assert not is_finite_type([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])


def test_pointed_a2():
    v = pointed_datum_check(quantum_datum([[2, -1], [-1, 2]], 5))
    assert v.verdict == "wild" and v.N == [5, 5]
    assert v.vectors_checked == 4 and v.solutions == [(0, 0)]


def test_pointed_witness():
    D = PointedDatum([5], [(1,), (1,)], [(1,), (4,)], [[2, 0], [0, 2]])
    v = pointed_datum_check(D)
    assert v.verdict == "criterion inapplicable" and v.witness == (1, 1)
    assert v.vectors_checked == 4


def test_pointed_brute_force_is_exhaustive():
    D = quantum_datum([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], 7)
    v = pointed_datum_check(D)
    assert v.vectors_checked == 8
    # independent recount over all group elements, not just generators
    import cmath
    z = lambda a: cmath.exp(2j * cmath.pi * float(a))
    sols = []
    for c in itertools.product((0, 1), repeat=3):
        ok = all(abs(z(sum(ci * D.angle(i, g) for i, ci in enumerate(c))) - 1) < 1e-9
                 for g in itertools.product(range(7), repeat=3))
        if ok:
            sols.append(c)
    assert sols == v.solutions


def test_pointed_g2():
    assert pointed_datum_check(quantum_datum([[2, -1], [-3, 2]], 7)).verdict == "wild"
    with pytest.raises(BadOrderHypothesis):
        pointed_datum_check(quantum_datum([[2, -1], [-3, 2]], 9))


def test_pointed_invalid():
    with pytest.raises(InvalidDatum):
        pointed_datum_check(PointedDatum([5], [(1,), (1,)], [(0,), (0,)], [[2, -1], [-1, 2]]))
    with pytest.raises(BadOrderHypothesis):
        pointed_datum_check(quantum_datum([[2, -1], [-1, 2]], 4))


def test_random_reorderings_agree():
    rng = random.Random(3)
    for _ in range(50):
        lam = Partition(sorted((rng.randint(1, 8) for _ in range(rng.randint(1, 6))), reverse=True))
        ell = rng.randint(2, 5)
        assert len({ell_core(lam, ell, seed=s) for s in range(4)}) == 1
