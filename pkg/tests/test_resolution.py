import pytest

from repwild import algebra as alg
from repwild import linalg as la
from repwild import zoo
from repwild.errors import ResourceBudgetExceeded
from repwild.fields import GF
from repwild.modrep import direct_sum, hom_space, regular_module, simple_modules, trivial_module
from repwild.resolution import (Resolution, ext_basis, ext_dims, identity_class, minimal_resolution,
                                projective_cover, yoneda_compose)


def convolve(a, b):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(min(len(a), len(b)))]


def test_cover_of_trivial(tp3):
    c = projective_cover(trivial_module(tp3))
    assert c.projective.dim == 3 and c.kernel.dim == 2


def test_cover_of_projective(tp3):
    assert projective_cover(regular_module(tp3)).kernel.dim == 0


def test_cover_of_simple_is_radical(sl2_u):
    S = simple_modules(sl2_u)
    for Si, Pi in zip(S.simples, S.projectives):
        c = projective_cover(Si)
        assert c.projective.dim == Pi.dim
        assert c.kernel.dim == Pi.dim - Si.dim


def test_periodic(tp2):
    assert minimal_resolution(trivial_module(tp2), 8).dims == [2] * 9


def test_kunneth_two_factors():
    A = zoo.elementary_abelian_group_algebra(2, 2, GF(2))
    assert minimal_resolution(trivial_module(A), 7).dims == [4 * (n + 1) for n in range(8)]


def test_kunneth_mixed_factors():
    A, B = zoo.truncated_poly(2, GF(3)), zoo.truncated_poly(3, GF(3))
    T = alg.tensor_product(A, B)
    da = minimal_resolution(trivial_module(A), 6).dims
    db = minimal_resolution(trivial_module(B), 6).dims
    assert minimal_resolution(trivial_module(T), 6).dims == convolve(da, db)


def test_semisimple_resolution(m2):
    S = simple_modules(m2).simples[0]
    assert minimal_resolution(S, 3).dims == [2, 0, 0, 0]


def test_exact_and_minimal(sl2_u):
    res = minimal_resolution(trivial_module(sl2_u), 4)
    F = sl2_u.field
    for n in range(1, 5):
        d = res.differential_matrix(n)
        if n >= 2:
            assert la.is_zero(F, la.matmul(F, res.differential_matrix(n - 1), d))
        # rank d_n = dim P_n - dim ker, and im d_{n+1} = ker d_n
        assert la.rank(F, d) == res.dims[n] - res.covers[n].kernel.dim


def test_multiplicities_match_ext_with_simples(sl2_u):
    k = trivial_module(sl2_u)
    res = Resolution(k).ensure(5)
    S = simple_modules(sl2_u)
    for i, Si in enumerate(S.simples):
        ext = ext_dims(k, Si, 5, res=res).dims
        # End(S_i) is k, so dim Ext^n(M, S_i) counts copies of P_i in P_n
        assert ext == [m[i] for m in res.multiplicities][:6]
    total = [sum(P.dim * m[i] for i, P in enumerate(S.projectives)) for m in res.multiplicities]
    assert total == res.dims


def test_ext_truncated(tp2):
    k = trivial_module(tp2)
    assert ext_dims(k, k, 6).dims == [1] * 7


def test_ext0_is_hom(sl2_u):
    S = simple_modules(sl2_u)
    M = direct_sum(S.simples[0], S.simples[1])
    for N in S.simples:
        assert ext_dims(M, N, 0).dims[0] == len(hom_space(M, N))


def test_ext_of_projective_vanishes(tp3):
    R = regular_module(tp3)
    k = trivial_module(tp3)
    assert ext_dims(R, k, 4).dims[1:] == [0, 0, 0, 0]


def test_yoneda_identity(tp2):
    k = trivial_module(tp2)
    res = Resolution(k).ensure(4)
    e = identity_class(res)
    for xi in ext_basis(res, k, 2):
        assert not (yoneda_compose(xi, e) + xi.scale(tp2.field(-1))).coordinates().any()


def test_ext1_generator_squares_nonzero(tp2):
    k = trivial_module(tp2)
    res = Resolution(k).ensure(4)
    (x,) = ext_basis(res, k, 1)
    sq = yoneda_compose(x, x)
    assert sq.degree == 2 and sq.is_cocycle() and not sq.is_zero_class()


def test_yoneda_bilinear_and_associative():
    A = zoo.elementary_abelian_group_algebra(2, 2, GF(2))
    k = trivial_module(A)
    res = Resolution(k).ensure(5)
    F = A.field
    b1 = ext_basis(res, k, 1)
    assert len(b1) == 2
    x, y = b1
    lhs = yoneda_compose(x, y + x)
    rhs = yoneda_compose(x, y) + yoneda_compose(x, x)
    assert (lhs + rhs.scale(F(-1))).is_zero_class()
    a = yoneda_compose(yoneda_compose(x, y), x)
    b = yoneda_compose(x, yoneda_compose(y, x))
    assert (a + b.scale(F(-1))).is_zero_class()


def test_budget_exceeded(sl2_u):
    with pytest.raises(ResourceBudgetExceeded):
        minimal_resolution(trivial_module(sl2_u), 3, budget=2)


def test_block_locality(z3_cyc):
    B = alg.block_decomposition(z3_cyc)
    S = simple_modules(z3_cyc)
    from repwild.modrep import block_of_module
    for Si in S.simples:
        i = block_of_module(Si, B)
        res = minimal_resolution(Si, 2)
        for c in res.covers:
            if c.projective.dim:
                assert block_of_module(c.projective, B) == i
