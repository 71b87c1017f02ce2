import numpy as np

from repwild import linalg as la
from repwild.fields import GF, QQ, cyclotomic


def test_rank_and_nullspace_q():
    F = QQ()
    M = F.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert la.rank(F, M) == 2
    N = la.nullspace(F, M)
    assert N.dim == 1
    assert la.is_zero(F, la.matmul(F, M, N.basis.T))


def test_nullspace_mod_p():
    F = GF(3)
    M = F.array([[1, 1, 1], [1, 2, 0]])
    N = la.nullspace(F, M)
    assert N.dim == 1
    assert la.is_zero(F, la.matmul(F, M, N.basis.T))


def test_solve_and_inverse():
    F = QQ()
    M = F.array([[2, 1], [1, 1]])
    b = F.array([3, 2])
    x = la.solve(F, M, b)
    assert list(la.matvec(F, M, x)) == list(b)
    inv = la.inverse(F, M)
    assert la.is_zero(F, la.sub(F, la.matmul(F, M, inv), F.eye(2)))


def test_solve_inconsistent():
    F = GF(5)
    M = F.array([[1, 1], [2, 2]])
    assert la.solve(F, M, F.array([1, 0])) is None


def test_subspace_membership_cyclotomic():
    F = cyclotomic(3)
    z = F.gen
    S = la.Subspace.from_rows(F, F.array([[F.one, z], [z, z * z]]), 2)
    assert S.dim == 1
    assert S.contains(F.array([z * z, F.one]))
    assert not S.contains(F.array([F.one, F.one]))


def test_complement_basis():
    F = QQ()
    sub = F.array([[1, 1, 0]])
    idx = la.complement_basis(F, sub, F.eye(3), 3)
    rows = np.concatenate([sub, F.eye(3)[idx]])
    assert la.rank(F, rows) == 3 and len(idx) == 2
