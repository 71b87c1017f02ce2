"""Hochschild cohomology as Ext over the enveloping algebra, plus a bar-complex oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import algebra as alg
from . import linalg as la
from .errors import OracleTooLarge, ValidationError
from .modrep import ModuleRep
from .resolution import CochainComplex, ExtTable, Resolution, ext_basis, ext_dims, yoneda_compose

ORACLE_MAX_DIM = 6
ORACLE_MAX_STEPS = 4
ORACLE_MAX_ENTRIES = 3_000_000


def enveloping_of(A):
    return A.cached("enveloping", lambda: alg.enveloping(A))


def as_bimodule(A):
    """A as a left A^e-module: (a (x) b) . x = a x b.  Basis index of a(x)b is i*dim A + j."""
    def build():
        Ae = enveloping_of(A)
        F = A.field
        L, R = A.left_matrices(), A.right_matrices()
        mats = [la.matmul(F, L[i], R[j]) for i in range(A.dim) for j in range(A.dim)]
        return ModuleRep.from_matrices(Ae, mats, A.grading if A.is_graded else None, A.name)
    return A.cached("bimodule", build)


def hh_resolution(A, budget=None):
    key = ("hh_resolution", budget)
    return A.cached(key, lambda: Resolution(as_bimodule(A), budget=budget))


def hh_dims(A, steps, budget=None):
    M = as_bimodule(A)
    table = ext_dims(M, M, steps, res=hh_resolution(A, budget))
    table.kind = "hochschild"
    return table


def _with_unit_basis(A):
    """Return a table isomorphic to A whose basis element 0 is the unit."""
    if A.unit_index == 0:
        return A
    F = A.field
    u = A.unit_vector()
    others = la.complement_basis(F, u.reshape(1, -1), F.eye(A.dim), A.dim)
    rows = np.concatenate([u.reshape(1, -1), F.eye(A.dim)[others]], axis=0)
    # subalgebra_table re-echelonises, so rebuild the structure constants directly
    inv = la.inverse(F, rows.T.copy())
    struct = {}
    for a in range(A.dim):
        La = A.left_mult(rows[a])
        prods = la.matmul(F, inv, la.matmul(F, La, rows.T))
        for b in range(A.dim):
            row = {c: F.decode(prods[c, b]) for c in range(A.dim)
                   if (prods[c, b] != 0 if F.is_prime_field else bool(prods[c, b]))}
            if row:
                struct[(a, b)] = row
    unit = [F.one] + [F.zero] * (A.dim - 1)
    return alg.AlgebraTable(F, A.dim, struct, unit, name=A.name)


def bar_hh_oracle(A, steps):
    """HH^n(A), n = 0..steps, from normalised Hochschild cochains Hom(W^{(x)n}, A), W = A / k1."""
    d = A.dim
    if d > ORACLE_MAX_DIM or steps > ORACLE_MAX_STEPS:
        raise OracleTooLarge(f"bar oracle limited to dim <= {ORACLE_MAX_DIM}, steps <= {ORACLE_MAX_STEPS}")
    w = d - 1
    biggest = (w ** (steps + 1) * d) * (w ** steps * d)
    if biggest > ORACLE_MAX_ENTRIES:
        raise OracleTooLarge(f"bar complex matrix would have {biggest} entries")
    B = _with_unit_basis(A)
    F = B.field
    W = list(range(1, d))

    def widx(t):
        out = 0
        for a in t:
            out = out * w + (a - 1)
        return out

    def delta(n):
        rows = w ** (n + 1) * d
        cols = w ** n * d
        M = F.zeros((rows, cols))
        for t in itertools.product(W, repeat=n):
            tcol = widx(t) * d
            for k in range(d):
                col = tcol + k
                # a1 . f(a2..)
                for a1 in W:
                    r0 = widx((a1,) + t) * d
                    for m, c in B.product(a1, k).items():
                        M[r0 + m, col] = F.encode(F.decode(M[r0 + m, col]) + c)
                # (-1)^i f(.., a_i a_{i+1}, ..)
                for i in range(1, n + 1):
                    sign = F.one if i % 2 == 0 else -F.one
                    target = t[i - 1]
                    for x in W:
                        for y in W:
                            c = B.product(x, y).get(target)
                            if c is None:
                                continue
                            r0 = widx(t[:i - 1] + (x, y) + t[i:]) * d
                            M[r0 + k, col] = F.encode(F.decode(M[r0 + k, col]) + sign * c)
                # (-1)^{n+1} f(a1..an) a_{n+1}
                sign = F.one if (n + 1) % 2 == 0 else -F.one
                for y in W:
                    r0 = widx(t + (y,)) * d
                    for m, c in B.product(k, y).items():
                        M[r0 + m, col] = F.encode(F.decode(M[r0 + m, col]) + sign * c)
        return M

    ranks = []
    for n in range(steps + 1):
        Dn = delta(n)
        ranks.append(la.rank(F, Dn) if Dn.size else 0)
    dims = []
    for n in range(steps + 1):
        cn = w ** n * d
        dims.append(cn - ranks[n] - (ranks[n - 1] if n else 0))
    table = ExtTable(dims, steps, A.name, A.name)
    table.kind = "hochschild-bar"
    return table


@dataclass
class ProductCheck:
    ok: bool
    pairs_checked: int
    violations: list

    def to_json(self):
        return {"ok": self.ok, "pairs_checked": self.pairs_checked, "violations": self.violations}


def hh_product_check(A, maxdeg, budget=None):
    """Check xi.eta = (-1)^{|xi||eta|} eta.xi on basis classes with |xi| + |eta| <= maxdeg."""
    if maxdeg > 3:
        raise ValueError("hh_product_check supports maxdeg <= 3")
    M = as_bimodule(A)
    res = hh_resolution(A, budget)
    res.ensure(maxdeg + 1)
    F = A.field
    bases = {n: ext_basis(res, M, n) for n in range(maxdeg + 1)}
    # the Yoneda product xi.eta needs xi on the resolution of the target of eta, which is A again
    checked = 0
    viol = []
    for i in range(maxdeg + 1):
        for j in range(maxdeg + 1 - i):
            for a, xi in enumerate(bases[i]):
                for b, eta in enumerate(bases[j]):
                    lhs = yoneda_compose(xi, eta)
                    rhs = yoneda_compose(eta, xi)
                    sign = -1 if (i * j) % 2 else 1
                    diff = lhs + rhs.scale(F(-sign))
                    checked += 1
                    if not diff.is_zero_class():
                        viol.append({"degrees": [i, j], "classes": [a, b]})
    report = ProductCheck(not viol, checked, viol)
    if viol:
        raise ValidationError(f"graded commutativity fails for {len(viol)} pairs", viol)
    return report
