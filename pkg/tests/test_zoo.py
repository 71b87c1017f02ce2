import itertools

import pytest

from repwild import algebra as alg
from repwild import zoo
from repwild.errors import (BadOrder, CharacteristicMismatch, EvenEll, InvalidRestrictedData, NoSuchRoot,
                            NotAutomorphism)
from repwild.fields import GF, QQ, cyclotomic


def test_truncated_poly():
    A = zoo.truncated_poly(4)
    assert A.dim == 4 and alg.radical(A).dim == 3
    assert alg.validate(A).ok
    assert alg.is_self_injective(zoo.truncated_poly(2))


def test_elementary_abelian():
    A = zoo.elementary_abelian_group_algebra(2, 3, GF(2))
    assert A.dim == 8 and alg.validate(A).ok
    B = zoo.elementary_abelian_group_algebra(3, 1, GF(3))
    assert B.struct == zoo.truncated_poly(3, GF(3)).struct
    with pytest.raises(CharacteristicMismatch):
        zoo.elementary_abelian_group_algebra(2, 2, GF(3))


def test_restricted_abelian_is_truncated():
    A = zoo.restricted_enveloping(zoo.abelian_data(3), GF(2))
    assert A.dim == 8
    # commutative with x^p = 0 on every generator
    for i, j in itertools.product(range(8), repeat=2):
        assert A.product(i, j) == A.product(j, i)


def test_restricted_sl2(sl2_u):
    assert sl2_u.dim == 27 and alg.validate(sl2_u).ok


def test_restricted_with_chi():
    # x^2 = c with zero p-map: u is k[x]/(x - c)^2, never semisimple in char 2
    A = zoo.restricted_enveloping(zoo.abelian_data(1, [1]), GF(2))
    assert A.augmentation is None and not alg.is_semisimple(A)
    # toral p-map x^[2] = x: x^2 = x + 1 is separable over F_2
    B = zoo.restricted_enveloping(zoo.abelian_data(1, [1], toral=True), GF(2))
    assert alg.validate(B).ok


def test_bad_restricted_data():
    data = zoo.sl2_data(3)
    data.pmap = {0: {1: 1}, 1: {1: 1}, 2: {}}  # e^[p] = h breaks ad-compatibility
    with pytest.raises(InvalidRestrictedData):
        zoo.restricted_enveloping(data, GF(3))


def test_quantum_rank_one():
    A = zoo.quantum_nilpotent("A1", 3)
    T = zoo.truncated_poly(3, A.field)
    assert A.dim == 3 and A.struct == T.struct and A.unit == T.unit


def test_quantum_a2(qa2):
    assert qa2.dim == 27 and alg.validate(qa2).ok
    assert qa2.augmentation is not None


def test_quantum_a1xa1():
    A = zoo.quantum_nilpotent("A1xA1", 3)
    assert A.dim == 9 and alg.validate(A).ok


def test_quantum_over_prime_field():
    A = zoo.quantum_nilpotent("A2", 3, GF(7), 2)
    assert A.dim == 27 and alg.validate(A).ok


def test_quantum_errors():
    with pytest.raises(EvenEll):
        zoo.quantum_nilpotent("A2", 4)
    with pytest.raises(NoSuchRoot):
        zoo.quantum_nilpotent("A1", 3, GF(5))


def test_smash_taft():
    R = zoo.truncated_poly(3, cyclotomic(3))
    q = cyclotomic(3).gen
    S = zoo.smash_group(R, [3], [zoo.scaling_action(R, q)])
    assert S.dim == 9 and alg.validate(S).ok
    F = S.field
    # basis r_i g^b has index i * 3 + b; g E = q E g
    gE = S.product(0 * 3 + 1, 1 * 3 + 0)
    Eg = S.product(1 * 3 + 0, 0 * 3 + 1)
    assert gE == {4: q} and Eg == {4: F.one}


def test_smash_trivial_action_is_tensor():
    R = zoo.truncated_poly(2, GF(3))
    S = zoo.smash_group(R, [2], [GF(3).eye(2)])
    T = alg.tensor_product(R, zoo.cyclic_group_algebra(2, GF(3)))
    assert S.struct == T.struct


def test_smash_errors():
    R = zoo.truncated_poly(3, GF(3))
    with pytest.raises(BadOrder):
        zoo.smash_group(R, [3], [GF(3).eye(3)])
    F = QQ()
    R = zoo.truncated_poly(3)
    bad = F.array([[1, 0, 0], [1, 1, 0], [0, 0, 1]])  # sends X to X + 1
    with pytest.raises(NotAutomorphism):
        zoo.smash_group(R, [2], [bad])


def test_hecke():
    H = zoo.hecke_typeA(3, QQ()(5))
    assert H.dim == 6 and alg.validate(H).ok
    assert zoo.hecke_typeA(4, QQ()(2)).dim == 24
    Hm = zoo.hecke_typeA(3, QQ()(-1))
    assert not alg.is_semisimple(Hm) and alg.is_self_injective(Hm)


def test_hecke_quadratic_relation():
    F = QQ()
    q = F(3)
    H = zoo.hecke_typeA(3, q)
    s = H.labels.index("T_1")
    e = H.unit_index
    # T_s^2 = (q - 1) T_s + q
    assert H.product(s, s) == {s: q - 1, e: q}


def test_augmentations_multiplicative(qa2):
    for A in (qa2, zoo.hecke_typeA(3, QQ()(5)), zoo.truncated_poly(3)):
        assert not [v for v in alg.validate(A).violations if v["kind"] == "augmentation"]


def test_fg_certificates(qa2, sl2_u):
    assert zoo.fg_certificate(qa2).status == "certified"
    assert zoo.fg_certificate(qa2).citation.startswith("fguqn")
    assert zoo.fg_certificate(sl2_u).citation.startswith("fgredenvalg")
    assert zoo.fg_certificate(zoo.upper_triangular(2)).status == "unknown"
    assert zoo.fg_certificate(zoo.upper_triangular(2), asserted=True).status == "asserted"
    assert zoo.fg_certificate(zoo.hecke_typeA(3, QQ()(-1))).status == "certified"
