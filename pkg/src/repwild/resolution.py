"""Minimal projective resolutions, Ext dimensions and Yoneda products.

Every projective in a resolution is a direct sum of (shifted) indecomposables
P_i = A f_i.  A map out of such a sum is determined by where it sends the
generators f_i, which is how cochains Hom(P_n, N) are stored.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .errors import NotComposable, ResourceBudgetExceeded
from .modrep import (ModuleRep, _dadd, direct_sum, image_spaces, parent_to_sub, radical_generators,
                     simple_modules, sub_to_parent, sub_to_parent_rows, submodule)

DEFAULT_BUDGET = 200_000


def step_budget():
    """Per-step cap on the total size of the kernel systems (env REPWILD_BUDGET)."""
    raw = os.environ.get("REPWILD_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _projectives(S, graded):
    key = "ungraded_projectives"
    if graded or not S.graded_ok:
        return S.projectives
    if key not in S.extras:
        S.extras[key] = [P.forget_grading() for P in S.projectives]
    return S.extras[key]


def _zero_module(A):
    return ModuleRep(A, [], [{} for _ in range(A.dim)], "0")


class Cover:
    """Minimal projective cover P -> M.

    ``gens[g] = (i, d)`` says generator g is a copy of P_i shifted to degree d;
    ``gen_vectors[g]`` is its image in M.  The kernel is computed on demand.
    """

    def __init__(self, module, projective, gens, gen_vectors, maps, simples, budget=None):
        self.module = module
        self.projective = projective
        self.gens = gens
        self.gen_vectors = gen_vectors
        self.maps = maps  # degree -> matrix P_D -> M_D (local coordinates)
        self.simples = simples
        self.budget = budget
        self._kernel = None

    @property
    def multiplicities(self):
        m = [0] * len(self.simples)
        for i, _ in self.gens:
            m[i] += 1
        return m

    @property
    def kernel(self):
        if self._kernel is None:
            self._kernel = self._compute_kernel()
        return self._kernel

    def _compute_kernel(self):
        P, M = self.projective, self.module
        F = P.F
        cost = sum(M.block_dim(D) * P.block_dim(D) for D in P.slices)
        limit = self.budget if self.budget is not None else step_budget()
        if cost > limit:
            raise ResourceBudgetExceeded(
                f"kernel systems need {cost} entries, above the per-step budget {limit}")
        spaces = {}
        for D in P.slices:
            mat = self.maps.get(D)
            n = P.block_dim(D)
            if mat is None or mat.shape[0] == 0:
                spaces[D] = la.Subspace.full(F, n)
            else:
                spaces[D] = la.nullspace(F, mat, n)
        self._check_minimal(spaces)
        K = submodule(P, spaces, f"Omega({M.name})", check=False)
        return K

    def _check_minimal(self, spaces):
        """Kernel inside rad P: every top functional of every summand vanishes on it."""
        P, S = self.projective, self.simples
        F = P.F
        for D, sp in spaces.items():
            if sp.dim == 0:
                continue
            start = P.slices[D].start
            for g, (i, _) in enumerate(self.gens):
                idx = P.parts[g]
                mask = (idx >= start) & (idx < P.slices[D].stop)
                if not mask.any():
                    continue
                local = idx[mask] - start
                T = S.top_functionals[i][:, np.flatnonzero(mask)]
                vals = la.matmul(F, sp.basis[:, local], T.T)
                if not la.is_zero(F, vals):
                    raise AssertionError("projective cover is not minimal")

    def map_matrix(self):
        """Dense (dim M x dim P) matrix of the cover map."""
        P, M = self.projective, self.module
        F = P.F
        out = F.zeros((M.dim, P.dim))
        for D, mat in self.maps.items():
            if M.block_dim(D):
                out[M.slices[D], P.slices[D]] = mat
        return out

    def decompose(self, y):
        """Split y in P into algebra elements alpha_g with y = sum alpha_g . gen_g."""
        F = self.projective.F
        out = []
        for g, (i, _) in enumerate(self.gens):
            coords = y[self.projective.parts[g]]
            out.append(la.matvec(F, self.simples.proj_bases[i].basis.T, coords))
        return out


def projective_cover(M, kernel=True, budget=None):
    """Minimal projective cover of M (generators chosen degree by degree)."""
    A = M.algebra
    F = A.field
    S = simple_modules(A)
    if M.graded and not S.graded_ok:
        M = M.forget_grading()
    if M.dim == 0:
        c = Cover(M, _zero_module(A), [], [], {}, S, budget)
        return c
    X = radical_generators(A)
    rad = image_spaces(M, list(X))
    gens, vecs = [], []
    for i, f in enumerate(S.idempotents):
        Rf = M.act_blocks(f)
        for d in M.slices:
            B = Rf.get(d)
            if B is None:
                continue
            cand = np.ascontiguousarray(B.T)
            sp = rad.get(d)
            base = la.matmul(F, B, sp.basis.T).T if sp is not None and sp.dim else F.zeros((0, B.shape[0]))
            for c in la.complement_basis(F, base, cand, B.shape[0]):
                v = F.zeros((M.dim,))
                v[M.slices[d]] = cand[c]
                gens.append((i, d))
                vecs.append(v)
    projs = _projectives(S, M.graded)
    P = direct_sum(*[projs[i].shift(d) for i, d in gens])
    maps = {D: F.zeros((M.block_dim(D), P.block_dim(D))) for D in P.slices}
    for g, (i, d) in enumerate(gens):
        basis = S.proj_bases[i].basis
        vloc = vecs[g][M.slices[d]]
        cache = {}
        for b in range(basis.shape[0]):
            gi = int(P.parts[g][b])
            D = P.degrees[gi]
            if M.block_dim(D) == 0:
                continue
            acc = F.zeros((M.block_dim(D),))
            for k in np.flatnonzero(basis[b] if F.is_prime_field else np.array([bool(x) for x in basis[b]])):
                k = int(k)
                if k not in cache:
                    Bk = M.blocks[k].get(d)
                    cache[k] = None if Bk is None else la.matvec(F, Bk, vloc)
                if cache[k] is not None:
                    acc = la.add(F, acc, la.scale(F, F.decode(basis[b][k]), cache[k]))
            maps[D][:, gi - P.slices[D].start] = acc
    for D in M.slices:
        if D not in maps or la.rank(F, maps[D]) != M.block_dim(D):
            raise AssertionError("projective cover map is not surjective")
    cover = Cover(M, P, gens, vecs, maps, S, budget)
    if kernel:
        cover.kernel  # noqa: B018  (computes and checks)
    return cover


@dataclass
class Resolution:
    module: ModuleRep
    covers: list = field(default_factory=list)
    budget: int | None = None
    minimal: bool = True

    @property
    def dims(self):
        return [c.projective.dim for c in self.covers]

    @property
    def multiplicities(self):
        return [c.multiplicities for c in self.covers]

    @property
    def steps(self):
        return len(self.covers) - 1

    def ensure(self, n):
        """Compute covers P_0..P_n."""
        while len(self.covers) <= n:
            src = self.module if not self.covers else self.covers[-1].kernel
            self.covers.append(projective_cover(src, kernel=False, budget=self.budget))
        return self

    def syzygy(self, n):
        """Omega^n as an explicit module (Omega^0 = M)."""
        if n == 0:
            return self.module
        self.ensure(n - 1)
        return self.covers[n - 1].kernel

    def differential(self, n):
        """Images in P_{n-1} (global coords) of the generators of P_n, n >= 1."""
        self.ensure(n)
        K = self.covers[n - 1].kernel
        return [sub_to_parent(K, v) for v in self.covers[n].gen_vectors]

    def differential_matrix(self, n):
        """Dense matrix of d_n : P_n -> P_{n-1}."""
        self.ensure(n)
        K = self.covers[n - 1].kernel
        F = K.F
        incl = sub_to_parent_rows(K).T
        return la.matmul(F, incl, self.covers[n].map_matrix())

    def to_json(self):
        return {"dims": self.dims, "steps": self.steps, "minimal": self.minimal,
                "multiplicities": self.multiplicities}


def minimal_resolution(M, steps, budget=None):
    if steps < 0:
        raise ValueError("steps must be non-negative")
    return Resolution(M, budget=budget).ensure(steps)


# -- Ext -------------------------------------------------------------------------

class CochainComplex:
    """Hom(P_n, N) with P_n from a minimal resolution; C^n = sum over gens of f_i N."""

    def __init__(self, res, N):
        self.res = res
        self.N = N if not N.graded else N.forget_grading()
        F = N.F
        S = simple_modules(N.algebra)
        self.S = S
        self.fN = []
        self.Y = []
        for f in S.idempotents:
            R = self.N.act_matrix(f)
            sp = la.Subspace.from_rows(F, R.T.copy(), self.N.dim)
            self.fN.append(sp)
            self.Y.append(None)
        self._d = {}

    def _Y(self, i):
        if self.Y[i] is None:
            F = self.N.F
            Bt = self.fN[i].basis.T
            self.Y[i] = [la.matmul(F, self.N.action(k), Bt) for k in range(self.N.algebra.dim)]
        return self.Y[i]

    def offsets(self, n):
        self.res.ensure(n)
        offs = [0]
        for i, _ in self.res.covers[n].gens:
            offs.append(offs[-1] + self.fN[i].dim)
        return offs

    def dim(self, n):
        return self.offsets(n)[-1]

    def d(self, n):
        """Matrix of d^n : C^n -> C^{n+1}."""
        if n in self._d:
            return self._d[n]
        F = self.N.F
        res = self.res
        res.ensure(n + 1)
        src, tgt = res.covers[n], res.covers[n + 1]
        o_src, o_tgt = self.offsets(n), self.offsets(n + 1)
        D = F.zeros((o_tgt[-1], o_src[-1]))
        images = res.differential(n + 1)
        for h, u in enumerate(images):
            ih = tgt.gens[h][0]
            piv = self.fN[ih].pivots
            alphas = src.decompose(u)
            for g, alpha in enumerate(alphas):
                ig = src.gens[g][0]
                if self.fN[ig].dim == 0 or self.fN[ih].dim == 0:
                    continue
                Y = self._Y(ig)
                acc = None
                for k in range(len(alpha)):
                    c = alpha[k]
                    if (c != 0) if F.is_prime_field else bool(c):
                        term = la.scale(F, F.decode(c), Y[k])
                        acc = term if acc is None else la.add(F, acc, term)
                if acc is None:
                    continue
                D[o_tgt[h]:o_tgt[h + 1], o_src[g]:o_src[g + 1]] = acc[piv, :]
        self._d[n] = D
        return D

    def to_vector(self, n, values):
        F = self.N.F
        offs = self.offsets(n)
        out = F.zeros((offs[-1],))
        for g, (i, _) in enumerate(self.res.covers[n].gens):
            sp = self.fN[i]
            out[offs[g]:offs[g + 1]] = sp.coords(values[g])
            if not sp.contains(values[g]):
                raise ValueError("cochain value does not lie in f_i N")
        return out

    def from_vector(self, n, vec):
        F = self.N.F
        offs = self.offsets(n)
        vals = []
        for g, (i, _) in enumerate(self.res.covers[n].gens):
            sp = self.fN[i]
            vals.append(la.matvec(F, sp.basis.T, vec[offs[g]:offs[g + 1]]) if sp.dim else F.zeros((self.N.dim,)))
        return vals

    def cohomology(self, n):
        """(cocycle space, coboundary space, complement rows) in C^n coordinates."""
        F = self.N.F
        dn = self.d(n)
        Z = la.nullspace(F, dn, self.dim(n)) if dn.shape[0] else la.Subspace.full(F, self.dim(n))
        if n == 0:
            B = la.Subspace.zero(F, self.dim(0))
        else:
            B = la.Subspace.from_rows(F, self.d(n - 1).T.copy(), self.dim(n))
        chosen = la.complement_basis(F, B.basis, Z.basis, self.dim(n))
        return Z, B, Z.basis[chosen]

    def ext_dim(self, n):
        F = self.N.F
        dn = self.d(n)
        r_out = la.rank(F, dn) if dn.size else 0
        r_in = 0
        if n > 0:
            dp = self.d(n - 1)
            r_in = la.rank(F, dp) if dp.size else 0
        return self.dim(n) - r_out - r_in


@dataclass
class ExtTable:
    dims: list
    window: int
    module: str = ""
    target: str = ""

    def to_json(self):
        return {"dims": self.dims, "window": self.window, "module": self.module, "target": self.target}


def ext_dims(M, N, steps, res=None, budget=None):
    """dim Ext^n_A(M, N) for n = 0..steps."""
    res = res or Resolution(M, budget=budget)
    C = CochainComplex(res, N)
    dims = [C.ext_dim(n) for n in range(steps + 1)]
    return ExtTable(dims, steps, M.name, N.name)


# -- Yoneda composition -------------------------------------------------------------

@dataclass
class ExtClass:
    """Cocycle in Hom(P_n, N): ``values[g]`` is the image of generator g of P_n."""

    res: Resolution
    degree: int
    target: ModuleRep
    values: list

    def complex(self):
        key = id(self.target)
        cache = self.res.__dict__.setdefault("_complexes", {})
        if key not in cache:
            cache[key] = (self.target, CochainComplex(self.res, self.target))
        return cache[key][1]

    def vector(self):
        return self.complex().to_vector(self.degree, self.values)

    def is_cocycle(self):
        F = self.target.F
        return la.is_zero(F, la.matvec(F, self.complex().d(self.degree), self.vector()))

    def coordinates(self):
        """Coordinates modulo coboundaries in the complement basis of ``cohomology``."""
        F = self.target.F
        Z, B, H = self.complex().cohomology(self.degree)
        basis = np.concatenate([B.basis, H], axis=0) if B.dim else H
        sol = la.solve(F, basis.T.copy(), self.vector())
        if sol is None:
            raise ValueError("not a cocycle")
        return sol[B.dim:]

    def is_zero_class(self):
        return la.is_zero(self.target.F, self.coordinates())

    def __add__(self, other):
        F = self.target.F
        return ExtClass(self.res, self.degree, self.target,
                        [la.add(F, a, b) for a, b in zip(self.values, other.values)])

    def scale(self, c):
        F = self.target.F
        return ExtClass(self.res, self.degree, self.target, [la.scale(F, c, a) for a in self.values])


def ext_basis(res, N, n):
    """Cocycle representatives of a basis of Ext^n(M, N)."""
    C = CochainComplex(res, N)
    _, _, H = C.cohomology(n)
    cls = []
    for row in H:
        e = ExtClass(res, n, N, C.from_vector(n, row))
        res.__dict__.setdefault("_complexes", {})[id(N)] = (N, C)
        cls.append(e)
    return cls


def identity_class(res):
    """The class of id_M in Ext^0(M, M)."""
    return ExtClass(res, 0, res.module, list(res.ensure(0).covers[0].gen_vectors))


def _apply_from_projective(cover, values, X, y):
    """Evaluate the map P -> X sending generator g to values[g] at y in P."""
    F = X.F
    out = F.zeros((X.dim,))
    for alpha, x in zip(cover.decompose(y), values):
        out = la.add(F, out, X.act(alpha, x))
    return out


def lift_chain_map(eta, resN, m):
    """Lift eta in Hom(P^M_n, N) to maps eta_j : P^M_{n+j} -> P^N_j, j = 0..m."""
    resM, n = eta.res, eta.degree
    F = eta.target.F
    resM.ensure(n + m)
    resN.ensure(m)
    S = resN.covers[0].simples
    maps = []
    prev_vals = None
    for j in range(m + 1):
        coverN = resN.covers[j]
        P = coverN.projective
        if j == 0:
            target_map = coverN.map_matrix()
            targets = eta.values
        else:
            target_map = resN.differential_matrix(j)
            prevP = resN.covers[j - 1].projective
            targets = [
                _apply_from_projective(resM.covers[n + j - 1], prev_vals, prevP, u)
                for u in resM.differential(n + j)
            ]
        vals = []
        for g, (i, _) in enumerate(resM.covers[n + j].gens):
            y = la.solve(F, target_map, targets[g])
            if y is None:
                raise AssertionError("chain map lifting failed")
            vals.append(P.act(S.idempotents[i], y))
        maps.append(vals)
        prev_vals = vals
    return maps


def yoneda_compose(xi, eta):
    """xi in Ext^m(N, L), eta in Ext^n(M, N)  ->  xi . eta in Ext^{m+n}(M, L)."""
    resN = xi.res
    if resN.module is not eta.target and not _same_module(resN.module, eta.target):
        raise NotComposable("the target of eta is not the module resolved by xi")
    m = xi.degree
    chain = lift_chain_map(eta, resN, m)
    top = chain[m]
    L = xi.target
    coverN = resN.covers[m]
    values = [_apply_from_projective(coverN, xi.values, L, y) for y in top]
    return ExtClass(eta.res, eta.degree + m, L, values)


def _same_module(M, N):
    if M.dim != N.dim or M.algebra is not N.algebra:
        return False
    F = M.F
    return all(la.is_zero(F, la.sub(F, M.action(k), N.action(k))) for k in range(M.algebra.dim))
