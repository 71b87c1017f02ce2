import pytest

from repwild import algebra as alg
from repwild import linalg as la
from repwild import zoo
from repwild.errors import OracleTooLarge
from repwild.fields import QQ
from repwild.hochschild import as_bimodule, bar_hh_oracle, hh_dims, hh_product_check


def field_itself():
    F = QQ()
    return alg.AlgebraTable(F, 1, {(0, 0): {0: 1}}, [1], ["1"], name="k")


def test_bimodule_shape(tp2):
    M = as_bimodule(tp2)
    F = tp2.field
    assert M.dim == 2 and M.validate() == []
    Ae = M.algebra
    assert la.is_zero(F, la.sub(F, M.act_matrix(Ae.unit_vector()), F.eye(2)))
    # a (x) 1 and 1 (x) a act alike on a commutative algebra
    d = tp2.dim
    for a in range(d):
        left = M.actions()[a * d + tp2.unit_index]
        right = M.actions()[tp2.unit_index * d + a]
        assert la.is_zero(F, la.sub(F, left, right))


def test_hh_truncated_two(tp2):
    assert hh_dims(tp2, 4).dims == [2, 1, 1, 1, 1]
    assert bar_hh_oracle(tp2, 4).dims == [2, 1, 1, 1, 1]


def test_hh_truncated_three(tp3):
    assert hh_dims(tp3, 4).dims == bar_hh_oracle(tp3, 4).dims
    assert hh_dims(tp3, 0).dims[0] == 3


def test_hh_matrix_units(m2):
    assert hh_dims(m2, 3).dims == [1, 0, 0, 0]


def test_oracle_on_field():
    assert bar_hh_oracle(field_itself(), 3).dims == [1, 0, 0, 0]


def test_oracle_matches_on_nonbasic_unit_order():
    T = zoo.upper_triangular(2)
    assert hh_dims(T, 3).dims == bar_hh_oracle(T, 3).dims


def test_oracle_limits(sl2_u):
    with pytest.raises(OracleTooLarge):
        bar_hh_oracle(sl2_u, 2)


def test_hh0_is_center(tp3, m2, z3_cyc):
    for A in (tp3, m2, z3_cyc, zoo.upper_triangular(2), zoo.hecke_typeA(3, QQ()(-1))):
        assert hh_dims(A, 0).dims[0] == alg.center(A).shape[0]


def test_block_additivity(tp2):
    A = zoo.truncated_poly(3)
    P = alg.direct_product(A, tp2)
    total = [a + b for a, b in zip(hh_dims(A, 3).dims, hh_dims(tp2, 3).dims)]
    assert hh_dims(P, 3).dims == total
    blocks = alg.block_decomposition(P).blocks
    assert [sum(t) for t in zip(*(hh_dims(b, 3).dims for b in blocks))] == total


def test_product_check(tp2):
    rep = hh_product_check(tp2, 3)
    assert rep.ok and rep.pairs_checked > 0
