import itertools

import pytest

from repwild import algebra as alg
from repwild import linalg as la
from repwild import zoo
from repwild.algebra import AlgebraTable
from repwild.errors import ValidationError
from repwild.fields import GF, QQ, cyclotomic


def perturbed(A, key, k, value):
    struct = {ij: dict(row) for ij, row in A.struct.items()}
    struct.setdefault(key, {})[k] = value
    return AlgebraTable(A.field, A.dim, struct, A.unit, A.labels, A.augmentation, A.grading, "bad")


def test_validate_ok(tp3):
    assert alg.validate(tp3).ok


def test_validate_associativity_witness(tp3):
    bad = perturbed(tp3, (1, 2), 2, 1)  # X * X^2 = X^2 instead of 0
    diag = alg.validate(bad)
    assert not diag.ok
    assert any(v["kind"] == "associativity" for v in diag.violations)
    i, j, k = next(v["witness"] for v in diag.violations if v["kind"] == "associativity")
    lhs = alg._sparse_mul_vec(bad, bad.product(i, j), k)
    rhs = alg._sparse_mul_vec(bad, bad.product(j, k), i, left=False)
    assert lhs != rhs
    with pytest.raises(ValidationError):
        alg.check_valid(bad)


def test_validate_unit(tp3):
    bad = AlgebraTable(tp3.field, 3, tp3.struct, [0, 1, 0], name="bad unit")
    assert any(v["kind"] == "unit" for v in alg.validate(bad).violations)


def test_opposite_commutative(tp3):
    assert alg.opposite(tp3).struct == tp3.struct


def test_enveloping(tp2):
    E = alg.enveloping(tp2)
    assert E.dim == 4
    assert alg.validate(E).ok
    u = E.unit_vector()
    F = E.field
    assert la.is_zero(F, la.sub(F, E.left_mult(u), F.eye(4)))


def test_center(tp3, m2):
    assert alg.center(tp3).shape[0] == 3
    assert alg.center(m2).shape[0] == 1
    P = alg.direct_product(tp3, m2)
    assert alg.center(P).shape[0] == 4


def test_radical(tp3, m2):
    assert alg.radical(tp3).dim == 2
    assert alg.radical(m2).dim == 0
    T = alg.tensor_product(zoo.truncated_poly(2), zoo.truncated_poly(2))
    assert alg.radical(T).dim == 3


def test_radical_positive_characteristic():
    # k[Z/2 x Z/2] in char 2 is local, radical = augmentation ideal
    A = zoo.elementary_abelian_group_algebra(2, 2, GF(2))
    assert alg.radical(A).dim == 3
    # F_3[Z/2] is semisimple
    assert alg.is_semisimple(zoo.cyclic_group_algebra(2, GF(3)))


def test_radical_is_nilpotent_ideal(sl2_u):
    J = alg.radical(sl2_u)
    assert alg.is_two_sided_ideal(sl2_u, J.basis)
    dims = alg.ideal_power_dims(sl2_u, J.basis)
    assert dims[-1] == 0


def test_semisimple_hecke():
    assert alg.is_semisimple(zoo.hecke_typeA(3, QQ()(5)))
    assert not alg.is_semisimple(zoo.hecke_typeA(3, QQ()(-1)))
    assert not alg.is_semisimple(zoo.truncated_poly(2))


def test_blocks_z3(z3_cyc):
    B = alg.block_decomposition(z3_cyc)
    assert len(B) == 3
    assert [b.dim for b in B.blocks] == [1, 1, 1]
    assert B.check() == []


def test_blocks_local_and_product(tp3):
    assert len(alg.block_decomposition(tp3)) == 1
    P = alg.direct_product(tp3, zoo.truncated_poly(2))
    B = alg.block_decomposition(P)
    assert len(B) == 2 and B.check() == []


def test_block_idempotents_primitive(z3_cyc):
    # re-running the splitter on a single block finds nothing further
    for b in alg.block_decomposition(z3_cyc).blocks:
        assert len(alg.central_primitive_idempotents(b)) == 1


def test_self_injective(tp3, sl2_u):
    assert alg.is_self_injective(tp3)
    assert not alg.is_self_injective(zoo.upper_triangular(2))
    assert alg.is_self_injective(sl2_u)


def test_tensor_monomials():
    A, B = zoo.truncated_poly(2), zoo.truncated_poly(3)
    T = alg.tensor_product(A, B)
    assert T.dim == 6
    # basis index a * 3 + b is x^a y^b; x^a y^b * x^c y^d = x^{a+c} y^{b+d} or 0
    for (a, b), (c, d) in itertools.product(itertools.product(range(2), range(3)), repeat=2):
        got = T.product(a * 3 + b, c * 3 + d)
        want = {(a + c) * 3 + b + d: 1} if a + c < 2 and b + d < 3 else {}
        assert {k: int(v) for k, v in got.items()} == want
    assert alg.opposite(T).struct == T.struct


def test_tensor_grading_concat():
    T = alg.tensor_product(zoo.truncated_poly(2), zoo.truncated_poly(2))
    assert T.rank == 2
    assert alg.validate(T).ok


def test_minimal_polynomial_z3(z3_cyc):
    F = z3_cyc.field
    g = z3_cyc.basis_vector(1)
    f = alg.minimal_polynomial(z3_cyc, g)
    assert [F(c) for c in f] == [F(-1), F(0), F(0), F(1)]


def test_require_same():
    from repwild.errors import AlgebraMismatch
    with pytest.raises(AlgebraMismatch):
        alg.require_same(zoo.truncated_poly(2), zoo.truncated_poly(3))
