"""Finite dimensional associative algebras given by structure constants.

An :class:`AlgebraTable` stores e_i e_j = sum_k c_ij^k e_k sparsely, together
with the unit vector, an optional augmentation and an optional grading by
Z^r (one integer tuple per basis element; the empty tuple means ungraded).
Gradings are only a performance device: every homological computation splits
into homogeneous pieces when the inputs are graded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from . import poly
from .errors import AlgebraMismatch, FieldMismatch, NotSplit, UnsupportedCharacteristic, ValidationError
from .fields import GF, field_from_json

EXHAUSTIVE_LIMIT = 40


def _add_deg(a, b):
    return tuple(x + y for x, y in zip(a, b)) if a else b


class AlgebraTable:
    """Structure-constant table of a finite dimensional algebra."""

    def __init__(self, field, dim, structure, unit, labels=None, augmentation=None,
                 grading=None, name=None, family=None, generators=None):
        self.field = field if not isinstance(field, dict) else field_from_json(field)
        F = self.field
        self.dim = int(dim)
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(self.dim))
        struct = {}
        for (i, j), row in structure.items():
            clean = {k: F(c) for k, c in row.items() if not F.is_zero(F(c))}
            if clean:
                struct[(i, j)] = clean
        self.struct = struct
        self.unit = tuple(F(c) for c in unit)
        self.augmentation = None if augmentation is None else tuple(F(c) for c in augmentation)
        if grading is None:
            grading = [()] * self.dim
        self.grading = tuple(tuple(int(x) for x in g) for g in grading)
        self.name = name or "algebra"
        self.family = family
        self.generators = tuple(generators) if generators is not None else tuple(range(self.dim))
        self._cache = {}
        if len(self.unit) != self.dim or len(self.labels) != self.dim or len(self.grading) != self.dim:
            raise ValidationError("unit, labels and grading must have length dim")

    # -- basic data -------------------------------------------------------
    @property
    def rank(self):
        return len(self.grading[0]) if self.dim else 0

    @property
    def is_graded(self):
        return self.rank > 0

    @property
    def zero_degree(self):
        return (0,) * self.rank

    def __repr__(self):
        return f"<AlgebraTable {self.name} dim={self.dim} over {self.field}>"

    def product(self, i, j):
        return self.struct.get((i, j), {})

    def unit_vector(self):
        return self.field.array(list(self.unit))

    def basis_vector(self, i):
        v = self.field.zeros((self.dim,))
        v[i] = self.field.encode(self.field.one) if self.field.is_prime_field else self.field.one
        return v

    @property
    def unit_index(self):
        F = self.field
        nz = [i for i, c in enumerate(self.unit) if not F.is_zero(c)]
        if len(nz) == 1 and self.unit[nz[0]] == F.one:
            return nz[0]
        return None

    def tensor(self):
        """Dense array C[i, j, k] = c_ij^k (field array dtype)."""
        if "tensor" not in self._cache:
            F = self.field
            C = F.zeros((self.dim, self.dim, self.dim))
            for (i, j), row in self.struct.items():
                for k, c in row.items():
                    C[i, j, k] = F.encode(c)
            self._cache["tensor"] = C
        return self._cache["tensor"]

    def left_matrix(self, i):
        """Matrix of x -> e_i x."""
        return self.left_matrices()[i]

    def left_matrices(self):
        if "L" not in self._cache:
            C = self.tensor()
            # L_i[k, j] = c_ij^k
            self._cache["L"] = [np.ascontiguousarray(C[i].T) for i in range(self.dim)]
        return self._cache["L"]

    def right_matrices(self):
        if "R" not in self._cache:
            C = self.tensor()
            # R_j[k, i] = c_ij^k
            self._cache["R"] = [np.ascontiguousarray(C[:, j, :].T) for j in range(self.dim)]
        return self._cache["R"]

    def combo(self, coeffs, mats):
        """sum_i coeffs[i] * mats[i] over the nonzero coefficients."""
        F = self.field
        out = None
        for i, c in enumerate(coeffs):
            if (c != 0) if F.is_prime_field else bool(c):
                term = mats[i] * c
                out = term if out is None else out + term
        if out is None:
            return F.zeros(mats[0].shape) if len(mats) else F.zeros((0, 0))
        return F.reduce(out)

    def _support(self, x):
        F = self.field
        return [(i, F.decode(x[i])) for i in range(self.dim)
                if (x[i] != 0 if F.is_prime_field else bool(x[i]))]

    def _sparse_matrix(self, x, left):
        """L_x (left) or R_x (right) assembled from the structure constants."""
        key = "by_left" if left else "by_right"
        if key not in self._cache:
            idx = {}
            for (i, j), row in self.struct.items():
                if left:
                    idx.setdefault(i, []).append((j, row))
                else:
                    idx.setdefault(j, []).append((i, row))
            self._cache[key] = idx
        F = self.field
        acc = {}
        for i, a in self._support(x):
            for j, row in self._cache[key].get(i, ()):
                for k, c in row.items():
                    v = a * c
                    acc[(k, j)] = acc[(k, j)] + v if (k, j) in acc else v
        out = F.zeros((self.dim, self.dim))
        for pos, v in acc.items():
            out[pos] = F.encode(v)
        return out

    def left_mult(self, x):
        """Matrix of y -> x y."""
        if self.field.is_prime_field:
            return self.combo(x, self.left_matrices())
        return self._sparse_matrix(x, True)

    def right_mult(self, x):
        """Matrix of y -> y x."""
        if self.field.is_prime_field:
            return self.combo(x, self.right_matrices())
        return self._sparse_matrix(x, False)

    def mul(self, x, y):
        F = self.field
        d = self.dim
        if F.is_prime_field and d * d * F.p ** 3 < 2 ** 62:
            C = self.tensor().reshape(d * d, d)
            return (np.outer(x, y).reshape(-1) @ C) % F.p
        # sparse sum over the structure constants; far cheaper than forming L_x
        xs = [(i, x[i]) for i in range(d) if (x[i] != 0 if F.is_prime_field else bool(x[i]))]
        ys = [(j, y[j]) for j in range(d) if (y[j] != 0 if F.is_prime_field else bool(y[j]))]
        acc = {}
        for i, a in xs:
            a = F.decode(a)
            for j, b in ys:
                row = self.struct.get((i, j))
                if row:
                    ab = a * F.decode(b)
                    for k, c in row.items():
                        acc[k] = acc[k] + ab * c if k in acc else ab * c
        out = F.zeros((d,))
        for k, v in acc.items():
            out[k] = F.encode(v)
        return out

    def power(self, x, n, one=None):
        out = self.unit_vector() if one is None else one
        for _ in range(n):
            out = self.mul(out, x)
        return out

    def degree_of(self, x):
        """Degree of a homogeneous vector, None if inhomogeneous, zero degree if x = 0."""
        F = self.field
        degs = {self.grading[i] for i in range(self.dim) if (x[i] != 0 if F.is_prime_field else bool(x[i]))}
        if not degs:
            return self.zero_degree
        return degs.pop() if len(degs) == 1 else None

    def epsilon(self, x):
        F = self.field
        if self.augmentation is None:
            raise ValueError(f"{self.name} has no augmentation")
        acc = F.zero
        for i in range(self.dim):
            acc = acc + F.decode(x[i]) * self.augmentation[i]
        return acc

    def subspace_degrees(self, rows):
        return [self.degree_of(r) for r in rows]

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def with_name(self, name, family=None):
        A = AlgebraTable(self.field, self.dim, self.struct, self.unit, self.labels, self.augmentation,
                         self.grading, name, family if family is not None else self.family, self.generators)
        return A

    def ungraded(self):
        return AlgebraTable(self.field, self.dim, self.struct, self.unit, self.labels, self.augmentation,
                            None, self.name, self.family, self.generators)


# -- validation ------------------------------------------------------------

@dataclass
class Diagnostics:
    ok: bool
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _sparse_mul_vec(A, vec, j, left=True):
    """(sum_m vec[m] e_m) * e_j  (or e_j * ... when left is False) as a dict."""
    out = {}
    for m, c in vec.items():
        prod = A.product(m, j) if left else A.product(j, m)
        for k, d in prod.items():
            out[k] = out.get(k, 0) + c * d
    F = A.field
    return {k: v for k, v in out.items() if not F.is_zero(F(v))}


def validate(A, max_witnesses=10, seed=0):
    """Check associativity, unit, augmentation and grading; never raises."""
    F = A.field
    d = A.dim
    viol = []
    for (i, j), row in A.struct.items():
        if not (0 <= i < d and 0 <= j < d) or any(not 0 <= k < d for k in row):
            viol.append({"kind": "index", "witness": [i, j]})
    if viol:
        return Diagnostics(False, viol)
    if d <= EXHAUSTIVE_LIMIT:
        triples = itertools.product(range(d), repeat=3)
    else:
        rng = np.random.default_rng(seed)
        triples = [tuple(int(t) for t in rng.integers(0, d, 3)) for _ in range(4000)]
    bad = 0
    for i, j, k in triples:
        lhs = _sparse_mul_vec(A, A.product(i, j), k, left=True)
        rhs = _sparse_mul_vec(A, A.product(j, k), i, left=False)
        keys = set(lhs) | set(rhs)
        if any(F(lhs.get(t, 0)) != F(rhs.get(t, 0)) for t in keys):
            bad += 1
            if bad <= max_witnesses:
                viol.append({"kind": "associativity", "witness": [i, j, k]})
    unit = {i: c for i, c in enumerate(A.unit) if not F.is_zero(c)}
    for i in range(d):
        for side in (True, False):
            got = _sparse_mul_vec(A, unit, i, left=side)
            want = {i: F.one}
            keys = set(got) | set(want)
            if any(F(got.get(t, 0)) != F(want.get(t, 0)) for t in keys):
                viol.append({"kind": "unit", "witness": [i, "left" if not side else "right"]})
                break
    if A.augmentation is not None:
        eps = A.augmentation
        if sum((eps[i] * c for i, c in unit.items()), F.zero) != F.one:
            viol.append({"kind": "augmentation", "witness": ["unit"]})
        for i in range(d):
            for j in range(d):
                val = sum((eps[k] * c for k, c in A.product(i, j).items()), F.zero)
                if val != eps[i] * eps[j]:
                    viol.append({"kind": "augmentation", "witness": [i, j]})
                    break
    if A.is_graded:
        for (i, j), row in A.struct.items():
            want = _add_deg(A.grading[i], A.grading[j])
            if any(A.grading[k] != want for k in row):
                viol.append({"kind": "grading", "witness": [i, j]})
                break
        z = A.zero_degree
        if any(A.grading[i] != z for i in unit):
            viol.append({"kind": "grading", "witness": ["unit"]})
    return Diagnostics(not viol, viol)


def check_valid(A):
    diag = validate(A)
    if not diag.ok:
        raise ValidationError(f"{A.name} is not a valid algebra table: {diag.violations[:3]}", diag.violations)
    return A


# -- constructions ---------------------------------------------------------

def opposite(A):
    struct = {(j, i): row for (i, j), row in A.struct.items()}
    return AlgebraTable(A.field, A.dim, struct, A.unit, A.labels, A.augmentation, A.grading,
                        f"{A.name}^op", None, A.generators)


def tensor_product(A, B, grading="concat"):
    """A (x) B with (a x b)(a' x b') = aa' x bb'; basis index i*dim B + j."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    F = A.field
    dA, dB = A.dim, B.dim
    struct = {}
    for (i1, j1), r1 in A.struct.items():
        for (i2, j2), r2 in B.struct.items():
            row = {}
            for k1, c1 in r1.items():
                for k2, c2 in r2.items():
                    row[k1 * dB + k2] = c1 * c2
            struct[(i1 * dB + i2, j1 * dB + j2)] = row
    unit = [a * b for a in A.unit for b in B.unit]
    aug = None
    if A.augmentation is not None and B.augmentation is not None:
        aug = [a * b for a in A.augmentation for b in B.augmentation]
    labels = [f"{a}*{b}" if a and b else a or b for a in A.labels for b in B.labels]
    if grading == "sum" and A.rank == B.rank:
        grad = [_add_deg(ga, gb) for ga in A.grading for gb in B.grading]
    else:
        grad = [ga + gb for ga in A.grading for gb in B.grading]
    gens = None
    ua, ub = A.unit_index, B.unit_index
    if ua is not None and ub is not None:
        gens = sorted({g * dB + ub for g in A.generators} | {ua * dB + g for g in B.generators})
    return AlgebraTable(F, dA * dB, struct, unit, labels, aug, grad, f"({A.name} x {B.name})",
                        None, gens)


def enveloping(A):
    """A^e = A (x) A^op, graded by the sum of degrees so that A is a graded A^e-module."""
    Ae = tensor_product(A, opposite(A), grading="sum")
    Ae.name = f"{A.name}^e"
    return Ae


def direct_product(A, B):
    """A x B; the augmentation (if any) is taken from the first factor with one."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    F = A.field
    dA = A.dim
    struct = dict(A.struct)
    for (i, j), row in B.struct.items():
        struct[(i + dA, j + dA)] = {k + dA: c for k, c in row.items()}
    unit = list(A.unit) + list(B.unit)
    aug = None
    if A.augmentation is not None:
        aug = list(A.augmentation) + [F.zero] * B.dim
    elif B.augmentation is not None:
        aug = [F.zero] * dA + list(B.augmentation)
    grad = list(A.grading) + list(B.grading) if A.rank == B.rank else None
    labels = [f"{l}|0" for l in A.labels] + [f"{l}|1" for l in B.labels]
    return AlgebraTable(F, dA + B.dim, struct, unit, labels, aug, grad, f"({A.name} * {B.name})")


def subalgebra_table(A, rows, unit_row, name, augment=False):
    """Algebra on span(rows) (a sub-ring with its own unit ``unit_row``)."""
    F = A.field
    S = la.Subspace.from_rows(F, rows, A.dim)
    n = S.dim
    basis = S.basis
    struct = {}
    for a in range(n):
        La = A.left_mult(basis[a])
        prods = la.matmul(F, La, basis.T)  # columns = basis[a] * basis[b]
        if not S.contains(prods):
            raise ValidationError("span is not closed under multiplication")
        coords = S.coords(prods)  # (n, n): coords[c, b]
        for b in range(n):
            row = {c: F.decode(coords[c, b]) for c in range(n) if (coords[c, b] != 0 if F.is_prime_field else bool(coords[c, b]))}
            if row:
                struct[(a, b)] = row
    unit = [F.decode(v) for v in S.coords(unit_row)]
    aug = None
    if augment and A.augmentation is not None:
        aug = [A.epsilon(basis[a]) for a in range(n)]
    degs = [A.degree_of(basis[a]) for a in range(n)]
    grading = degs if all(g is not None for g in degs) else None
    labels = [_vector_label(A, basis[a]) for a in range(n)]
    T = AlgebraTable(F, n, struct, unit, labels, aug, grading, name)
    T._cache["embedding"] = basis
    return T


def _vector_label(A, v):
    F = A.field
    nz = [i for i in range(A.dim) if (v[i] != 0 if F.is_prime_field else bool(v[i]))]
    if len(nz) == 1 and F.decode(v[nz[0]]) == F.one:
        return A.labels[nz[0]]
    return "+".join(A.labels[i] for i in nz[:3]) + ("+..." if len(nz) > 3 else "")


# -- center, radical, semisimplicity ----------------------------------------

def center(A):
    """Basis (rows) of Z(A) = {z : z e_i = e_i z for every generator e_i}."""
    def compute():
        F = A.field
        L, R = A.left_matrices(), A.right_matrices()
        stacked = np.concatenate([la.sub(F, R[i], L[i]) for i in A.generators], axis=0)
        return la.nullspace(F, stacked, A.dim).basis
    return A.cached("center", compute)


@dataclass
class Ideal:
    algebra: AlgebraTable
    basis: np.ndarray

    @property
    def dim(self):
        return self.basis.shape[0]


def _trace_form(A):
    F = A.field
    t = [F.zero] * A.dim
    for (k, j), row in A.struct.items():
        if j in row:
            t[k] = t[k] + row[j]
    T = [[F.zero] * A.dim for _ in range(A.dim)]
    for (i, j), row in A.struct.items():
        T[i][j] = sum((c * t[k] for k, c in row.items()), F.zero)
    return F.array(T)


def _radical_char0(A):
    F = A.field
    return la.nullspace(F, _trace_form(A), A.dim).basis


def _radical_prime(A):
    """Friedl-Ronyai iterated trace method over F_p."""
    F = A.field
    p = F.p
    n = A.dim
    if n == 0:
        return F.zeros((0, 0))
    L = A.left_matrices()
    # I_{-1} = A; I_i = {a in I_{i-1} : g_i(ab) = 0 for all basis b}
    cur = F.eye(n)
    i = 0
    while p ** i <= n:
        if cur.shape[0] == 0:
            break
        modulus = p ** (i + 1)
        if i == 0:
            # g_0 is the ordinary trace form
            G = la.matmul(F, cur, _trace_form(A))
            ker = la.left_nullspace(F, G)
            cur = la.rref(F, la.matmul(F, ker.basis, cur))[0] if ker.dim else F.zeros((0, n))
            i += 1
            continue
        wide = n * modulus * modulus >= 2 ** 62
        cols = []
        for a in cur:
            La = A.combo(a, L)
            row = []
            for b in range(n):
                Lab = (La @ L[b]) % p
                tr = _trace_of_power(Lab.astype(object) if wide else Lab, p ** i, modulus)
                if tr % (p ** i):
                    raise UnsupportedCharacteristic(
                        f"trace of a p^{i}-th power not divisible by p^{i}; radical method inapplicable")
                row.append((tr // p ** i) % p)
            cols.append(row)
        G = np.array(cols, dtype=np.int64)  # G[a, b] = g_i(a_k b)
        # coefficient vectors c with sum_k c_k G[k, b] = 0 for all b
        ker = la.nullspace(F, G.T.copy(), cur.shape[0]).basis
        cur = la.matmul(F, ker, cur) if ker.shape[0] else F.zeros((0, n))
        if cur.shape[0]:
            cur = la.rref(F, cur)[0]
        i += 1
    return cur


def _trace_of_power(M, e, modulus):
    """trace(M^e) mod modulus with Python-integer entries."""
    n = M.shape[0]
    result = None
    base = M % modulus
    first = True
    while e:
        if e & 1:
            result = base if first else (result.dot(base)) % modulus
            first = False
        e >>= 1
        if e:
            base = (base.dot(base)) % modulus
    return int(sum(result[k, k] for k in range(n))) % modulus


def _restriction_of_scalars(A):
    """A over F_q viewed as an F_p-algebra; basis t^a e_i at index i*n + a."""
    F = A.field
    n = F.n
    Fp = GF(F.p)
    struct = {}
    tpow = [F.one]
    for _ in range(2 * n):
        tpow.append(tpow[-1] * F.gen)
    for (i, j), row in A.struct.items():
        for a in range(n):
            for b in range(n):
                out = {}
                for k, c in row.items():
                    val = tpow[a + b] * c
                    for m, coef in enumerate(val.c):
                        if coef:
                            out[k * n + m] = out.get(k * n + m, 0) + coef
                struct[(i * n + a, j * n + b)] = out
    unit = []
    for c in A.unit:
        unit.extend(int(v) for v in F(c).c)
    return AlgebraTable(Fp, A.dim * n, struct, unit, name=f"{A.name}|F_{F.p}")


def radical(A):
    """Jacobson radical as an :class:`Ideal` (basis rows in reduced echelon form)."""
    def compute():
        F = A.field
        kind = F.descriptor.kind
        if kind in ("rationals", "cyclotomic"):
            basis = _radical_char0(A)
        elif kind == "prime":
            basis = _radical_prime(A)
        else:
            Ar = _restriction_of_scalars(A)
            rb = _radical_prime(Ar)
            n = F.n
            rows = []
            for r in rb:
                vec = [F.from_coeffs([int(r[i * n + a]) for a in range(n)]) for i in range(A.dim)]
                rows.append(vec)
            basis = la.rref(F, F.array(rows))[0] if rows else F.zeros((0, A.dim))
        if basis.shape[0]:
            basis = la.rref(F, basis)[0]
        return Ideal(A, basis)
    return A.cached("radical", compute)


def is_semisimple(A):
    return radical(A).dim == 0


def ideal_power_dims(A, ideal_basis, limit=None):
    """Dimensions of J, J^2, J^3, ... until the sequence stabilises."""
    F = A.field
    limit = limit or A.dim + 1
    dims = []
    cur = la.Subspace.from_rows(F, ideal_basis, A.dim)
    dims.append(cur.dim)
    for _ in range(limit):
        if cur.dim == 0:
            break
        prods = []
        for a in cur.basis:
            La = A.left_mult(a)
            prods.append(la.matmul(F, La, ideal_basis.T).T)
        nxt = la.Subspace.from_rows(F, np.concatenate(prods, axis=0), A.dim)
        if nxt.dim == cur.dim:
            dims.append(nxt.dim)
            break
        dims.append(nxt.dim)
        cur = nxt
    return dims


def is_two_sided_ideal(A, basis):
    F = A.field
    S = la.Subspace.from_rows(F, basis, A.dim)
    if S.dim == 0:
        return True
    for i in range(A.dim):
        if not S.contains(la.matmul(F, A.left_matrix(i), S.basis.T)):
            return False
        if not S.contains(la.matmul(F, A.right_matrices()[i], S.basis.T)):
            return False
    return True


def quotient(A, ideal_basis, name=None):
    """A / I with basis the standard basis vectors outside the pivot columns of I."""
    F = A.field
    I = la.Subspace.from_rows(F, ideal_basis, A.dim)
    piv = set(I.pivots)
    keep = [i for i in range(A.dim) if i not in piv]
    pos = {k: t for t, k in enumerate(keep)}

    def reduce(v):
        if I.dim:
            v = la.sub(F, v, la.matvec(F, I.basis.T, I.coords(v)))
        return v

    struct = {}
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            v = F.zeros((A.dim,))
            for k, c in A.product(i, j).items():
                v[k] = F.encode(c)
            v = reduce(v)
            row = {pos[k]: F.decode(v[k]) for k in keep if (v[k] != 0 if F.is_prime_field else bool(v[k]))}
            if row:
                struct[(a, b)] = row
    u = reduce(A.unit_vector())
    unit = [F.decode(u[k]) for k in keep]
    aug = None if A.augmentation is None else [A.augmentation[k] for k in keep]
    Q = AlgebraTable(F, len(keep), struct, unit, [A.labels[k] for k in keep], aug,
                     [A.grading[k] for k in keep], name or f"{A.name}/I")
    Q._cache["quotient_of"] = (A, keep, I)
    return Q


def project_to_quotient(Q, v):
    A, keep, I = Q._cache["quotient_of"]
    F = A.field
    if I.dim:
        v = la.sub(F, v, la.matvec(F, I.basis.T, I.coords(v)))
    return v[keep]


def lift_from_quotient(Q, w):
    A, keep, _ = Q._cache["quotient_of"]
    v = A.field.zeros((A.dim,))
    v[keep] = w
    return v


# -- idempotents -----------------------------------------------------------

def minimal_polynomial(A, x, one=None):
    """Minimal polynomial of x over the field, relative to the identity ``one``."""
    F = A.field
    one = A.unit_vector() if one is None else one
    powers = [one]
    Lx = A.left_mult(x)
    while True:
        nxt = la.matvec(F, Lx, powers[-1])
        P = np.stack(powers, axis=1)
        sol = la.solve(F, P, nxt)
        if sol is not None:
            # x^m = sum sol_i x^i
            coeffs = [-F.decode(s) for s in sol] + [F.one]
            return coeffs
        powers.append(nxt)
        if len(powers) > A.dim + 2:  # pragma: no cover
            raise RuntimeError("minimal polynomial search did not terminate")


def eval_poly(A, f, x, one=None):
    F = A.field
    one = A.unit_vector() if one is None else one
    Lx = A.left_mult(x)
    acc = F.zeros((A.dim,))
    for c in reversed(f):
        acc = la.matvec(F, Lx, acc)
        acc = la.add(F, acc, la.scale(F, c, one))
    return acc


def is_idempotent(A, e):
    return la.is_zero(A.field, la.sub(A.field, A.mul(e, e), e))


def split_by_element(A, e, y):
    """Split idempotent e using y in eAe.  Returns the list of pieces (len 1: no split)."""
    F = A.field
    m = minimal_polynomial(A, y, one=e)
    roots, rest = poly.linear_factorization(F, m)
    if poly.degree(F, rest) > 0:
        raise NotSplit(f"minimal polynomial of a central element has an irreducible factor of degree "
                       f"{poly.degree(F, rest)} over {F}")
    if len(roots) <= 1:
        return [e]
    factors = [poly.power(F, [-r, F.one], mlt) for r, mlt in roots]
    hs = poly.crt_idempotents(F, factors)
    return [eval_poly(A, h, y, one=e) for h in hs]


def central_primitive_idempotents(A):
    """Central primitive idempotents of A, split over A's field."""
    def compute():
        F = A.field
        Z = center(A)
        idems = [A.unit_vector()]
        for z in Z:
            new = []
            for e in idems:
                new.extend(split_by_element(A, e, A.mul(e, z)))
            idems = new
        # fixpoint check: nothing splits further
        for e in idems:
            for z in Z:
                if len(split_by_element(A, e, A.mul(e, z))) != 1:  # pragma: no cover
                    raise RuntimeError("central idempotent splitting did not reach a fixpoint")
        return idems
    return A.cached("central_idempotents", compute)


@dataclass
class BlockDecomposition:
    algebra: AlgebraTable
    idempotents: list
    blocks: list
    principal: int | None

    def __len__(self):
        return len(self.idempotents)

    def check(self):
        """Exact verification of the block idempotent axioms; returns a list of failures."""
        A = self.algebra
        F = A.field
        fails = []
        total = F.zeros((A.dim,))
        for i, e in enumerate(self.idempotents):
            total = la.add(F, total, e)
            if not is_idempotent(A, e):
                fails.append(("idempotent", i))
            for j, f in enumerate(self.idempotents):
                if i != j and not la.is_zero(F, A.mul(e, f)):
                    fails.append(("orthogonal", i, j))
            Le = A.left_mult(e)
            Re = A.right_mult(e)
            if not la.is_zero(F, la.sub(F, Le, Re)):
                fails.append(("central", i))
        if not la.is_zero(F, la.sub(F, total, A.unit_vector())):
            fails.append(("complete",))
        if self.principal is not None:
            ones = [i for i, e in enumerate(self.idempotents) if A.epsilon(e) == F.one]
            if ones != [self.principal]:
                fails.append(("principal", ones))
        return fails


def block_decomposition(A):
    def compute():
        F = A.field
        idems = central_primitive_idempotents(A)
        blocks = []
        principal = None
        for t, e in enumerate(idems):
            rows = la.matmul(F, A.left_mult(e), F.eye(A.dim)).T  # e * e_k
            is_principal = A.augmentation is not None and A.epsilon(e) == F.one
            if is_principal:
                principal = t
            B = subalgebra_table(A, rows, e, f"{A.name}[block {t}]", augment=is_principal)
            B._cache["block_idempotent"] = e
            blocks.append(B)
        return BlockDecomposition(A, idems, blocks, principal)
    return A.cached("blocks", compute)


# -- self-injectivity --------------------------------------------------------

@dataclass
class SelfInjectivity:
    value: bool
    dim_dual: int
    dim_cover: int
    cover_multiplicities: list

    def __bool__(self):
        return self.value

    def to_json(self):
        return {"self_injective": self.value, "dim_dual": self.dim_dual,
                "dim_projective_cover": self.dim_cover, "multiplicities": self.cover_multiplicities}


def is_self_injective(A):
    """A is self-injective iff the left module A* is projective.

    The certificate compares dim A* with the dimension of its projective cover.
    """
    def compute():
        from .modrep import dual_regular_module
        from .resolution import projective_cover

        D = dual_regular_module(A)
        cover = projective_cover(D)
        return SelfInjectivity(cover.projective.dim == D.dim, D.dim, cover.projective.dim,
                               list(cover.multiplicities))
    return A.cached("self_injective", compute)


def same_algebra(A, B):
    if A is B:
        return True
    return (A.field == B.field and A.dim == B.dim and A.struct == B.struct and A.unit == B.unit)


def require_same(A, B):
    if not same_algebra(A, B):
        raise AlgebraMismatch(f"{A.name} and {B.name} differ")
