"""Modules over structure-constant algebras.

A :class:`ModuleRep` stores one action matrix per algebra basis element.  When
both the algebra and the module carry a grading the matrices are kept as
homogeneous blocks ``blocks[k][d]`` mapping the degree-d part to the degree
d + deg(e_k) part, which is what keeps long resolutions affordable.  An
ungraded module is the special case with a single degree ``()``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import algebra as alg
from . import linalg as la
from .errors import AlgebraMismatch, NotSplit, ValidationError


def _dadd(a, b):
    return tuple(x + y for x, y in zip(a, b)) if a else ()


def _dsub(a, b):
    return tuple(x - y for x, y in zip(a, b)) if a else ()


def _nonzero(F, c):
    return (c != 0) if F.is_prime_field else bool(c)


class ModuleRep:
    """Left module given by (blocked) action matrices on column vectors."""

    def __init__(self, algebra, degrees, blocks, name="M"):
        self.algebra = algebra
        self.F = algebra.field
        self.degrees = [tuple(d) for d in degrees]
        if any(self.degrees[i] > self.degrees[i + 1] for i in range(len(self.degrees) - 1)):
            raise ValueError("module basis must be sorted by degree")
        self.graded = bool(self.degrees) and len(self.degrees[0]) > 0
        if self.graded and len(self.degrees[0]) != algebra.rank:
            raise ValueError("module degrees do not match the algebra grading")
        self.blocks = blocks
        self.name = name
        self.slices = {}
        start = 0
        for i, d in enumerate(self.degrees):
            if i == len(self.degrees) - 1 or self.degrees[i + 1] != d:
                self.slices[d] = slice(start, i + 1)
                start = i + 1
        self._dense = {}

    # -- basics ----------------------------------------------------------------
    @property
    def dim(self):
        return len(self.degrees)

    def __repr__(self):
        return f"<ModuleRep {self.name} dim={self.dim} over {self.algebra.name}>"

    def degree_list(self):
        return list(self.slices)

    def block_dim(self, d):
        s = self.slices.get(d)
        return 0 if s is None else s.stop - s.start

    def alg_degree(self, k):
        return self.algebra.grading[k] if self.graded else ()

    def block(self, k, d):
        return self.blocks[k].get(d)

    def action(self, k):
        if k not in self._dense:
            F = self.F
            M = F.zeros((self.dim, self.dim))
            for d, B in self.blocks[k].items():
                t = _dadd(d, self.alg_degree(k))
                M[self.slices[t], self.slices[d]] = B
            self._dense[k] = M
        return self._dense[k]

    def actions(self):
        return [self.action(k) for k in range(self.algebra.dim)]

    def apply(self, k, v):
        F = self.F
        out = F.zeros((self.dim,))
        for d, B in self.blocks[k].items():
            t = _dadd(d, self.alg_degree(k))
            out[self.slices[t]] = la.add(F, out[self.slices[t]], la.matvec(F, B, v[self.slices[d]]))
        return out

    def act(self, x, v):
        """rho(x) v for an algebra element x."""
        F = self.F
        out = F.zeros((self.dim,))
        for k in range(self.algebra.dim):
            if _nonzero(F, x[k]):
                out = la.add(F, out, la.scale(F, F.decode(x[k]), self.apply(k, v)))
        return out

    def act_matrix(self, x):
        F = self.F
        out = F.zeros((self.dim, self.dim))
        for k in range(self.algebra.dim):
            if _nonzero(F, x[k]):
                out = la.add(F, out, la.scale(F, F.decode(x[k]), self.action(k)))
        return out

    def act_blocks(self, x):
        """Blocks of rho(x) for a homogeneous x: {d: matrix M_d -> M_{d+deg x}}."""
        F = self.F
        out = {}
        for k in range(self.algebra.dim):
            if not _nonzero(F, x[k]):
                continue
            c = F.decode(x[k])
            for d, B in self.blocks[k].items():
                term = la.scale(F, c, B)
                out[d] = term if d not in out else la.add(F, out[d], term)
        return out

    # -- constructors ----------------------------------------------------------
    @classmethod
    def from_matrices(cls, A, mats, degrees=None, name="M"):
        F = A.field
        mats = [la.as_array(F, m) if not isinstance(m, np.ndarray) else m for m in mats]
        if len(mats) != A.dim:
            raise ValidationError(f"expected {A.dim} action matrices, got {len(mats)}")
        n = mats[0].shape[0] if mats else 0
        if degrees is None or not A.is_graded:
            degrees = [()] * n
        degrees = [tuple(d) for d in degrees]
        order = sorted(range(n), key=lambda i: degrees[i])
        if order != list(range(n)):
            mats = [m[np.ix_(order, order)] for m in mats]
            degrees = [degrees[i] for i in order]
        graded = bool(degrees) and len(degrees[0]) > 0
        tmp = cls(A, degrees, [{} for _ in range(A.dim)], name)
        blocks = []
        for k, m in enumerate(mats):
            if m.shape != (n, n):
                raise ValidationError(f"action matrix {k} has shape {m.shape}, expected {(n, n)}")
            row = {}
            covered = F.zeros((n, n)) if graded else None
            for d, s in tmp.slices.items():
                t = _dadd(d, A.grading[k]) if graded else ()
                if t not in tmp.slices:
                    continue
                B = m[tmp.slices[t], s]
                if graded:
                    covered[tmp.slices[t], s] = B
                if not la.is_zero(F, B):
                    row[d] = np.array(B, copy=True)
            if graded and not la.is_zero(F, la.sub(F, m, covered)):
                raise ValidationError(f"action of basis element {k} is not homogeneous")
            blocks.append(row)
        M = cls(A, degrees, blocks, name)
        M.permutation = order
        return M

    def forget_grading(self):
        if not self.graded:
            return self
        M = ModuleRep.from_matrices(self.algebra, self.actions(), None, self.name)
        return M

    def shift(self, s):
        if not self.graded:
            return self
        degs = [_dadd(d, s) for d in self.degrees]
        blocks = [{_dadd(d, s): B for d, B in row.items()} for row in self.blocks]
        return ModuleRep(self.algebra, degs, blocks, self.name)

    # -- checks ------------------------------------------------------------------
    def validate(self):
        """Violations of rho(1) = I and rho(e_i) rho(e_j) = sum c_ij^k rho(e_k)."""
        A, F = self.algebra, self.F
        viol = []
        diff = F.to_list(la.sub(F, self.act_matrix(A.unit_vector()), F.eye(self.dim)))
        bad = [[r, c] for r, row in enumerate(diff) for c, x in enumerate(row) if x != F.zero]
        if bad:
            viol.append({"kind": "unit", "witness": bad[0]})
        mats = self.actions()
        pairs = [(i, j) for i in range(A.dim) for j in range(A.dim)]
        if A.dim > alg.EXHAUSTIVE_LIMIT:
            rng = np.random.default_rng(0)
            pairs = [tuple(int(t) for t in rng.integers(0, A.dim, 2)) for _ in range(2000)]
        zero = F.zeros((self.dim, self.dim))
        for i, j in pairs:
            lhs = la.matmul(F, mats[i], mats[j])
            rhs = zero
            for k, c in A.product(i, j).items():
                rhs = la.add(F, rhs, la.scale(F, c, mats[k]))
            if not la.is_zero(F, la.sub(F, lhs, rhs)):
                viol.append({"kind": "relation", "witness": [i, j]})
                if len(viol) >= 10:
                    break
        return viol


# -- standard modules ------------------------------------------------------------

def regular_module(A):
    return ModuleRep.from_matrices(A, A.left_matrices(), A.grading, f"{A.name}")


def dual_regular_module(A):
    """A* with (a.f)(b) = f(ba); the action of e_k is R_k^T."""
    mats = [np.ascontiguousarray(R.T) for R in A.right_matrices()]
    degs = [tuple(-x for x in g) for g in A.grading]
    return ModuleRep.from_matrices(A, mats, degs, f"{A.name}*")


def trivial_module(A):
    F = A.field
    if A.augmentation is None:
        raise ValueError(f"{A.name} has no augmentation, so no trivial module")
    mats = [F.array([[c]]) for c in A.augmentation]
    graded = A.is_graded and all(A.grading[k] == A.zero_degree
                                 for k, c in enumerate(A.augmentation) if not F.is_zero(c))
    return ModuleRep.from_matrices(A, mats, [A.zero_degree] if graded else None, "k")


def coerce_pair(M, N):
    alg.require_same(M.algebra, N.algebra)
    if M.graded != N.graded:
        return M.forget_grading(), N.forget_grading()
    return M, N


def direct_sum(*mods):
    """Block diagonal sum.  ``parts`` on the result maps each summand to its global indices."""
    if not mods:
        raise ValueError("direct_sum needs at least one module")
    A = mods[0].algebra
    for M in mods[1:]:
        alg.require_same(A, M.algebra)
    if len({M.graded for M in mods}) > 1:
        mods = [M.forget_grading() for M in mods]
    F = A.field
    degs = sorted({d for M in mods for d in M.slices})
    # offsets[c][d] = offset of summand c inside degree block d
    offsets = []
    sizes = {d: 0 for d in degs}
    for M in mods:
        off = {}
        for d in M.slices:
            off[d] = sizes[d]
            sizes[d] += M.block_dim(d)
        offsets.append(off)
    degrees = [d for d in degs for _ in range(sizes[d])]
    graded = mods[0].graded
    blocks = []
    for k in range(A.dim):
        row = {}
        delta = A.grading[k] if graded else ()
        for c, M in enumerate(mods):
            for d, B in M.blocks[k].items():
                t = _dadd(d, delta)
                if d not in row:
                    row[d] = F.zeros((sizes[t], sizes[d]))
                r0, c0 = offsets[c][t], offsets[c][d]
                row[d][r0:r0 + B.shape[0], c0:c0 + B.shape[1]] = B
        blocks.append(row)
    S = ModuleRep(A, degrees, blocks, "+".join(M.name for M in mods))
    starts = {}
    pos = 0
    for d in degs:
        starts[d] = pos
        pos += sizes[d]
    parts = []
    for c, M in enumerate(mods):
        idx = np.empty(M.dim, dtype=np.int64)
        for d, s in M.slices.items():
            base = starts[d] + offsets[c][d]
            idx[s] = np.arange(base, base + (s.stop - s.start))
        parts.append(idx)
    S.parts = parts
    return S


def submodule(M, spaces, name=None, check=True):
    """Submodule spanned degreewise by ``spaces`` ({degree: Subspace in local coords}).

    The result carries ``spaces`` (its basis inside M) for converting vectors.
    """
    A, F = M.algebra, M.F
    degs = [d for d in sorted(spaces) if spaces[d].dim]
    degrees = [d for d in degs for _ in range(spaces[d].dim)]
    blocks = []
    for k in range(A.dim):
        row = {}
        delta = M.alg_degree(k)
        for d in degs:
            B = M.blocks[k].get(d)
            if B is None:
                continue
            t = _dadd(d, delta)
            image = la.matmul(F, B, spaces[d].basis.T)
            tgt = spaces.get(t)
            if tgt is None or tgt.dim == 0:
                if check and not la.is_zero(F, image):
                    raise ValidationError("subspace is not a submodule")
                continue
            if check and not tgt.contains(image):
                raise ValidationError("subspace is not a submodule")
            C = tgt.coords(image)
            if not la.is_zero(F, C):
                row[d] = np.ascontiguousarray(C)
        blocks.append(row)
    S = ModuleRep(A, degrees, blocks, name or f"sub({M.name})")
    S.spaces = {d: spaces[d] for d in degs}
    S.parent = M
    return S


def sub_to_parent(S, v):
    """Vector of a submodule (global coords) -> vector of its parent."""
    M = S.parent
    F = M.F
    out = F.zeros((M.dim,))
    for d, sp in S.spaces.items():
        out[M.slices[d]] = la.matvec(F, sp.basis.T, v[S.slices[d]])
    return out


def parent_to_sub(S, w):
    """Coordinates in S of a vector of the parent lying in S (no membership check)."""
    F = S.F
    out = F.zeros((S.dim,))
    for d, sp in S.spaces.items():
        out[S.slices[d]] = sp.coords(w[S.parent.slices[d]])
    return out


def quotient_module(M, spaces, name=None):
    """M / U for a submodule U given degreewise by ``spaces``."""
    A, F = M.algebra, M.F
    keep = {}
    for d in M.slices:
        sp = spaces.get(d)
        piv = set(sp.pivots) if sp is not None else set()
        keep[d] = [i for i in range(M.block_dim(d)) if i not in piv]
    degs = [d for d in M.slices if keep[d]]
    degrees = [d for d in degs for _ in keep[d]]
    blocks = []
    for k in range(A.dim):
        row = {}
        delta = M.alg_degree(k)
        for d in degs:
            B = M.blocks[k].get(d)
            if B is None:
                continue
            t = _dadd(d, delta)
            if not keep.get(t):
                continue
            img = B[:, keep[d]]
            sp = spaces.get(t)
            if sp is not None and sp.dim:
                img = la.sub(F, img, la.matmul(F, sp.basis.T, img[sp.pivots, :]))
            C = img[keep[t], :]
            if not la.is_zero(F, C):
                row[d] = np.ascontiguousarray(C)
        blocks.append(row)
    Q = ModuleRep(A, degrees, blocks, name or f"{M.name}/U")
    Q.keep = keep
    return Q


def image_spaces(M, x_list):
    """Degreewise span of rho(x) M over homogeneous x in ``x_list``."""
    F = M.F
    A = M.algebra
    cols = {}
    for x in x_list:
        dx = A.degree_of(x) if M.graded else ()
        if dx is None:
            raise ValueError("inhomogeneous element in a graded computation")
        for d, B in M.act_blocks(x).items():
            t = _dadd(d, dx)
            cols.setdefault(t, []).append(B)
    out = {}
    for t, Bs in cols.items():
        stacked = np.concatenate(Bs, axis=1)
        out[t] = la.Subspace.from_rows(F, stacked.T.copy(), M.block_dim(t))
    return out


def radical_generators(A):
    """Homogeneous lift of a basis of J / J^2; these generate J as a right ideal."""
    def compute():
        F = A.field
        J = alg.radical(A).basis
        if J.shape[0] == 0:
            return F.zeros((0, A.dim))
        if F.is_prime_field:
            prods = [la.matmul(F, A.left_mult(a), J.T).T for a in J]
        else:
            prods = [np.stack([A.mul(a, b) for b in J]) for a in J]
        J2 = la.Subspace.from_rows(F, np.concatenate(prods, axis=0), A.dim)
        chosen = la.complement_basis(F, J2.basis, J, A.dim)
        return J[chosen]
    return A.cached("radical_generators", compute)


def radical_submodule(M):
    """Jac(A) M as a submodule."""
    X = radical_generators(M.algebra)
    if M.graded and any(M.algebra.degree_of(x) is None for x in X):
        M = M.forget_grading()
    sp = image_spaces(M, list(X))
    return submodule(M, sp, f"rad({M.name})", check=False)


def top(M):
    X = radical_generators(M.algebra)
    if M.graded and any(M.algebra.degree_of(x) is None for x in X):
        M = M.forget_grading()
    return quotient_module(M, image_spaces(M, list(X)), f"top({M.name})")


# -- hom spaces ----------------------------------------------------------------

def hom_space(M, N):
    """Basis of Hom_A(M, N) as dense (dim N x dim M) matrices."""
    M, N = coerce_pair(M, N)
    A, F = M.algebra, M.F
    gens = list(A.generators)
    shifts = sorted({_dsub(e, d) for d in M.slices for e in N.slices})
    result = []
    for s in shifts:
        # unknown blocks X_d : M_d -> N_{d+s}
        unknowns = []
        offset = {}
        total = 0
        for d in M.slices:
            t = _dadd(d, s)
            if t in N.slices:
                offset[d] = total
                total += M.block_dim(d) * N.block_dim(t)
                unknowns.append(d)
        if total == 0:
            continue
        eqs = []
        for k in gens:
            delta = A.grading[k] if M.graded else ()
            for d in M.slices:
                # X_{d+delta} rho_M(k)_d - rho_N(k)_{d+s} X_d  : M_d -> N_{d+s+delta}
                tgt = _dadd(_dadd(d, s), delta)
                if tgt not in N.slices:
                    continue
                m_d = M.block_dim(d)
                n_t = N.block_dim(tgt)
                E = F.zeros((n_t * m_d, total))
                B = M.blocks[k].get(d)
                dd = _dadd(d, delta)
                if B is not None and dd in offset:
                    m_dd = M.block_dim(dd)
                    # (X B)[a, b] = sum_c X[a, c] B[c, b]; X row-major index a*m_dd + c
                    E[:, offset[dd]:offset[dd] + n_t * m_dd] = np.kron(F.eye(n_t), B.T) if not F.is_prime_field \
                        else np.kron(np.eye(n_t, dtype=np.int64), B.T) % F.p
                C = N.blocks[k].get(_dadd(d, s))
                if C is not None and d in offset:
                    term = np.kron(C, F.eye(m_d)) if not F.is_prime_field \
                        else np.kron(C, np.eye(m_d, dtype=np.int64)) % F.p
                    sl = slice(offset[d], offset[d] + N.block_dim(_dadd(d, s)) * m_d)
                    E[:, sl] = la.sub(F, E[:, sl], term)
                if not la.is_zero(F, E):
                    eqs.append(E)
        sol = la.nullspace(F, np.concatenate(eqs, axis=0), total) if eqs else la.Subspace.full(F, total)
        for vec in sol.basis:
            phi = F.zeros((N.dim, M.dim))
            for d in unknowns:
                t = _dadd(d, s)
                block = vec[offset[d]:offset[d] + M.block_dim(d) * N.block_dim(t)]
                phi[N.slices[t], M.slices[d]] = block.reshape(N.block_dim(t), M.block_dim(d))
            result.append(phi)
    return result


def is_homomorphism(M, N, phi):
    F = M.F
    for k in range(M.algebra.dim):
        lhs = la.matmul(F, phi, M.action(k))
        rhs = la.matmul(F, N.action(k), phi)
        if not la.is_zero(F, la.sub(F, lhs, rhs)):
            return False
    return True


# -- simple modules -------------------------------------------------------------

@dataclass
class SimpleSet:
    algebra: alg.AlgebraTable
    simples: list
    idempotents: list
    projectives: list
    proj_bases: list
    proj_gens: list
    all_idempotents: list
    classes: list
    top_functionals: list
    graded_ok: bool
    quotient: alg.AlgebraTable = None
    extras: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.simples)

    @property
    def dims(self):
        return [S.dim for S in self.simples]


def _left_ideal_module(A, f, name, homogeneous=True):
    """A f as a module; returns (module, basis rows sorted by degree, coords of f)."""
    F = A.field
    rows = np.ascontiguousarray(_right_mult(A, f).T)
    sp = la.Subspace.from_rows(F, rows, A.dim)
    basis, piv = sp.basis, sp.pivots
    degs = [A.degree_of(b) for b in basis] if homogeneous and A.is_graded else [()] * len(basis)
    if any(d is None for d in degs):
        degs = [()] * len(basis)
    order = sorted(range(len(basis)), key=lambda i: degs[i])
    basis = basis[order]
    piv = [piv[i] for i in order]
    degs = [degs[i] for i in order]
    sp = la.Subspace(F, basis, piv, A.dim)
    if F.is_prime_field:
        imgs = [la.matmul(F, A.left_matrix(k), basis.T) for k in range(A.dim)]
    else:
        imgs = [F.zeros((A.dim, len(basis))) for _ in range(A.dim)]
        for col, b in enumerate(basis):
            for k in range(A.dim):
                imgs[k][:, col] = A.mul(A.basis_vector(k), b)
    mats = [sp.coords(img) for img in imgs]
    M = ModuleRep.from_matrices(A, mats, degs if degs and degs[0] != () else None, name)
    return M, sp, sp.coords(f)


def _right_mult(A, f):
    return A.right_mult(f)


def _split_primitive(Q, e, rng_seed=0):
    """Complete list of primitive orthogonal idempotents of Q summing to e (Q semisimple)."""
    F = Q.field
    corner = la.rank(F, np.stack([Q.mul(Q.mul(e, Q.basis_vector(b)), e) for b in range(Q.dim)]))
    if corner <= 1:
        return [e]
    for y in _candidates(Q, e, rng_seed):
        pieces = _split_off_root(Q, e, y)
        if pieces is not None:
            out = []
            for piece in pieces:
                out.extend(_split_primitive(Q, piece, rng_seed))
            return out
    raise NotSplit(f"no primitive idempotent found in a corner of dimension {corner}; "
                   f"the semisimple quotient does not split over {F}")


def _candidates(Q, e, seed):
    F = Q.field
    order = sorted(range(Q.dim), key=lambda b: (Q.grading[b] != Q.zero_degree, b))
    basis = [Q.basis_vector(b) for b in order]
    for b in basis:
        yield Q.mul(Q.mul(e, b), e)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            yield Q.mul(Q.mul(e, la.add(F, basis[i], basis[j])), e)
    for i in range(len(basis)):
        for j in range(len(basis)):
            yield Q.mul(Q.mul(e, Q.mul(basis[i], basis[j])), e)
    rng = np.random.default_rng(seed)
    zero_deg = [Q.basis_vector(b) for b in order if Q.grading[b] == Q.zero_degree]
    pool = zero_deg or basis
    for _ in range(64):
        x = F.zeros((Q.dim,))
        for b in pool:
            x = la.add(F, x, la.scale(F, F.random_element(rng), b))
        yield Q.mul(Q.mul(e, x), e)


def _split_off_root(Q, e, y):
    """Split e by the generalised eigenspace of y for its first root, if y has two eigen-factors."""
    from . import poly
    F = Q.field
    m = alg.minimal_polynomial(Q, y, one=e)
    roots, rest = poly.linear_factorization(F, m)
    if not roots or (len(roots) == 1 and poly.degree(F, rest) <= 0):
        return None
    lam, mult = roots[0]
    lin = poly.power(F, [-lam, F.one], mult)
    other, rem = poly.divmod_(F, m, lin)
    h = poly.crt_idempotents(F, [lin, other])[0]
    e1 = alg.eval_poly(Q, h, y, one=e)
    return [e1, la.sub(F, e, e1)]


def _newton_lift(A, x, limit=64):
    F = A.field
    for _ in range(limit):
        x2 = A.mul(x, x)
        if la.is_zero(F, la.sub(F, x2, x)):
            return x
        x3 = A.mul(x2, x)
        x = la.sub(F, la.scale(F, 3, x2), la.scale(F, 2, x3))
    raise RuntimeError("idempotent lifting did not converge")


def simple_modules(A):
    """Simple modules, lifted primitive idempotents and projective indecomposables."""
    return A.cached("simples", lambda: _compute_simples(A))


def _compute_simples(A):
    F = A.field
    J = alg.radical(A)
    Q = alg.quotient(A, J.basis, f"{A.name}/J")
    comps = alg.central_primitive_idempotents(Q)
    prims = []
    for c in comps:
        pieces = _split_primitive(Q, c)
        n = len(pieces)
        dim_c = la.rank(F, la.matmul(F, Q.left_mult(c), F.eye(Q.dim)))
        if dim_c != n * n:
            raise NotSplit(f"simple component of dimension {dim_c} is not a full matrix algebra over {F}")
        prims.extend(pieces)
    for f in prims:
        corner = la.rank(F, np.stack([Q.mul(Q.mul(f, Q.basis_vector(b)), f) for b in range(Q.dim)]))
        if corner != 1:
            raise NotSplit("End(S) has dimension > 1")
    # simples Q f as A-modules
    proj = [alg.project_to_quotient(Q, A.basis_vector(k)) for k in range(A.dim)]
    simple_of = []
    for f in prims:
        SQ, _, _ = _left_ideal_module(Q, f, "S")
        mats = [SQ.act_matrix(q) for q in proj]
        degs = SQ.degrees if SQ.graded else None
        simple_of.append(ModuleRep.from_matrices(A, mats, degs, "S"))
    # isomorphism classes via hom dimension
    classes = []
    reps = []
    for t, S in enumerate(simple_of):
        for c, r in enumerate(reps):
            if len(hom_space(simple_of[r], S)) == 1:
                classes.append(c)
                break
        else:
            classes.append(len(reps))
            reps.append(t)
    # lift a complete orthogonal set to A
    lifted = []
    s = F.zeros((A.dim,))
    one = A.unit_vector()
    for t, fbar in enumerate(prims):
        if t == len(prims) - 1:
            lifted.append(la.sub(F, one, s))
            break
        x = alg.lift_from_quotient(Q, fbar)
        comp = la.sub(F, one, s)
        x = A.mul(A.mul(comp, x), comp)
        x = _newton_lift(A, x)
        lifted.append(x)
        s = la.add(F, s, x)
    graded_ok = A.is_graded and all(A.degree_of(f) == A.zero_degree for f in lifted)
    simples, idems, projs, bases, gens, tops = [], [], [], [], [], []
    for c, r in enumerate(reps):
        S = simple_of[r]
        S.name = f"S{c}"
        f = lifted[r]
        P, sp, g = _left_ideal_module(A, f, f"P{c}", homogeneous=graded_ok)
        if not graded_ok and S.graded:
            S = S.forget_grading()
        simples.append(S)
        idems.append(f)
        projs.append(P)
        bases.append(sp)
        gens.append(g)
        rad = radical_submodule(P)
        # functionals killing rad P: rows y with y . v = 0 for all v in rad P
        radrows = np.concatenate([sub_to_parent_rows(rad)], axis=0)
        tops.append(la.left_nullspace(F, radrows.T.copy()).basis if radrows.shape[0] else F.eye(P.dim))
    return SimpleSet(A, simples, idems, projs, bases, gens, lifted, classes, tops, graded_ok, Q)


def sub_to_parent_rows(S):
    """Basis of a submodule as rows in parent (global) coordinates."""
    M = S.parent
    F = M.F
    rows = F.zeros((S.dim, M.dim))
    for d, sp in S.spaces.items():
        rows[S.slices[d], M.slices[d]] = sp.basis
    return rows


# -- blocks ---------------------------------------------------------------------

def block_of_module(M, blocks):
    """Index of the block containing M, or ("mixed", [nonzero components])."""
    F = M.F
    nonzero = []
    for i, e in enumerate(blocks.idempotents):
        R = M.act_matrix(e)
        if la.is_zero(F, la.sub(F, R, F.eye(M.dim))):
            return i
        if not la.is_zero(F, R):
            nonzero.append(i)
    return ("mixed", nonzero)


def block_component(M, e, name=None):
    """e M for a central idempotent e, as a submodule of M."""
    F = M.F
    R = M.act_blocks(e) if M.graded else {(): M.act_matrix(e)}
    spaces = {d: la.Subspace.from_rows(F, B.T.copy(), M.block_dim(d)) for d, B in R.items()}
    return submodule(M, spaces, name or f"e{M.name}", check=False)


def restrict_to_block(M, blocks, i):
    """M (lying in block i) as a module over the block algebra."""
    B = blocks.blocks[i]
    emb = B._cache["embedding"]
    mats = [M.act_matrix(emb[k]) for k in range(B.dim)]
    degs = M.degrees if (M.graded and B.is_graded) else None
    return ModuleRep.from_matrices(B, mats, degs, M.name)


def is_projective(M):
    from .resolution import projective_cover
    return projective_cover(M).projective.dim == M.dim
