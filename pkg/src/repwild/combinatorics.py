"""Partitions, l-cores and weights for Hecke blocks, and the pointed Hopf datum checker.

Roots of unity are kept as their angles in Q/Z (a Fraction in [0, 1)), so
character arithmetic is exact: products add angles, powers multiply them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadOrderHypothesis, EvenEll, InvalidDatum

CORE_SHUFFLES = 3


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts if int(p) != 0]
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be positive")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def size(self):
        return sum(self)

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")" if self else "()"


def partitions(r):
    """All partitions of r, in reverse lexicographic order."""
    def rec(n, cap):
        if n == 0:
            yield ()
            return
        for k in range(min(n, cap), 0, -1):
            for rest in rec(n - k, k):
                yield (k,) + rest
    return [Partition(p) for p in rec(r, r)]


def is_ell_regular(lam, ell):
    if ell < 2:
        raise ValueError("ell must be at least 2")
    lam = Partition(lam)
    return all(lam.count(p) < ell for p in set(lam))


def beta_numbers(lam, n=None):
    lam = Partition(lam)
    n = len(lam) if n is None else n
    padded = list(lam) + [0] * (n - len(lam))
    return [padded[i] + n - 1 - i for i in range(n)]


def from_beta(beads):
    beads = sorted(beads, reverse=True)
    n = len(beads)
    return Partition(b - (n - 1 - i) for i, b in enumerate(beads))


def _slide(beads, ell, order):
    beads = set(beads)
    moved = True
    while moved:
        moved = False
        for b in order(sorted(beads)):
            if b - ell >= 0 and b - ell not in beads:
                beads.remove(b)
                beads.add(b - ell)
                moved = True
                break
    return beads


def ell_core(lam, ell, seed=0):
    """Remove rim ell-hooks until none is left (beads slide up the ell-runners of the abacus)."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    beads = beta_numbers(lam)
    core = from_beta(_slide(beads, ell, lambda bs: bs))
    rng = random.Random(seed)
    for _ in range(CORE_SHUFFLES):
        def shuffled(bs):
            bs = list(bs)
            rng.shuffle(bs)
            return bs
        other = from_beta(_slide(beads, ell, shuffled))
        if other != core:
            raise AssertionError(f"core of {lam} depends on removal order: {core} vs {other}")
    return core


def ell_weight(lam, ell):
    lam = Partition(lam)
    return (lam.size - ell_core(lam, ell).size) // ell


@dataclass
class HeckeBlock:
    core: Partition
    weight: int
    members: list
    verdict: str
    rule: str | None

    def to_json(self):
        return {"core": list(self.core), "weight": self.weight,
                "members": [list(m) for m in self.members], "verdict": self.verdict, "rule": self.rule}


@dataclass
class HeckeBlockReport:
    r: int
    ell: int
    blocks: list
    tags: list = field(default_factory=list)

    def to_json(self):
        return {"r": self.r, "ell": self.ell, "tags": list(self.tags),
                "blocks": [b.to_json() for b in self.blocks]}

    def __str__(self):
        lines = [f"type A Hecke blocks, r={self.r}, ell={self.ell}" + (f" [{', '.join(self.tags)}]" if self.tags else "")]
        for b in self.blocks:
            mem = " ".join(repr(m) for m in b.members)
            lines.append(f"  core {b.core!r} weight {b.weight}: {b.verdict}; {mem}")
        return "\n".join(lines)


def hecke_blocks_typeA(r, ell):
    """Group the ell-regular partitions of r by ell-core."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if r < 0:
        raise ValueError("r must be non-negative")
    groups = {}
    for lam in partitions(r):
        if is_ell_regular(lam, ell):
            groups.setdefault(ell_core(lam, ell), []).append(lam)
    blocks = []
    for core in sorted(groups, key=lambda c: (c.size, tuple(c))):
        w, rem = divmod(r - core.size, ell)
        assert rem == 0 and w >= 0
        if w >= 3:
            verdict, rule = "wild", "heckealgtypA"
        else:
            verdict, rule = "criterion silent", None
        blocks.append(HeckeBlock(core, w, groups[core], verdict, rule))
    tags = ["semisimple"] if ell > r else []
    return HeckeBlockReport(r, ell, blocks, tags)


@dataclass
class BDVerdict:
    r: int
    ell: int
    verdict: str  # wild | representation-finite | undetermined
    rule: str

    def to_json(self):
        return {"r": self.r, "ell": self.ell, "verdict": self.verdict, "rule": self.rule}

    def __str__(self):
        return f"principal block, r={self.r}, ell={self.ell}: {self.verdict} ({self.rule})"


def principal_block_BD_verdict(r, ell):
    """Types B and D with ell odd: wild once r >= 3 ell, representation-finite exactly when r < 2 ell."""
    if ell % 2 == 0:
        raise EvenEll(f"ell must be odd, got {ell}")
    if ell <= 1:
        raise ValueError("ell must exceed 1")
    if r >= 3 * ell:
        return BDVerdict(r, ell, "wild", "heckealgtypBD: r >= 3 ell")
    if r < 2 * ell:
        return BDVerdict(r, ell, "representation-finite", "r < 2 ell")
    return BDVerdict(r, ell, "undetermined", "2 ell <= r < 3 ell is not covered")


# ---------------------------------------------------------------- pointed data

def _minor_det(M):
    """Determinant over Q by fraction-free elimination."""
    M = [[Fraction(x) for x in row] for row in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def cartan_components(a):
    n = len(a)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and a[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def symmetrizer(a):
    """Positive d with d_i a_ij = d_j a_ji, or None when a is not symmetrisable."""
    n = len(a)
    d = [None] * n
    for comp in cartan_components(a):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if a[i][j] == 0 or i == j:
                    continue
                val = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = val
                    stack.append(j)
                elif d[j] != val:
                    return None
    return d


def is_finite_type(a):
    n = len(a)
    if any(len(row) != n for row in a):
        return False
    for i in range(n):
        if a[i][i] != 2:
            return False
        for j in range(n):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                return False
    d = symmetrizer(a)
    if d is None:
        return False
    sym = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    return all(_minor_det([row[:k] for row in sym[:k]]) > 0 for k in range(1, n + 1))


def is_G2_component(a, comp):
    return len(comp) == 2 and a[comp[0]][comp[1]] * a[comp[1]][comp[0]] == 3


@dataclass
class PointedDatum:
    """(G, g_i, chi_i, a_ij).  G = Z/n_1 x ... x Z/n_m; chi_i(e_k) = exp(2 pi i chars[i][k] / n_k)."""

    orders: list
    elements: list
    chars: list
    cartan: list

    @property
    def theta(self):
        return len(self.elements)

    def angle(self, i, g):
        """chi_i(g) as an element of Q/Z."""
        return sum(Fraction(c * x, n) for c, x, n in zip(self.chars[i], g, self.orders)) % 1

    def N(self, i):
        return self.angle(i, self.elements[i]).denominator

    def generators(self):
        m = len(self.orders)
        return [tuple(int(k == j) for k in range(m)) for j in range(m)]

    def validate(self):
        m, t = len(self.orders), self.theta
        if any(n < 1 for n in self.orders):
            raise InvalidDatum("invariant factors must be positive")
        if len(self.chars) != t or len(self.cartan) != t:
            raise InvalidDatum("need one character and one Cartan row per g_i")
        for v in list(self.elements) + list(self.chars):
            if len(v) != m:
                raise InvalidDatum(f"exponent vector {v} does not match G of rank {m}")
        if not is_finite_type(self.cartan):
            raise InvalidDatum("Cartan matrix is not of finite type")
        for i in range(t):
            if self.angle(i, self.elements[i]) == 0:
                raise InvalidDatum(f"chi_{i + 1}(g_{i + 1}) = 1")
        for i in range(t):
            for j in range(t):
                lhs = (self.angle(j, self.elements[i]) + self.angle(i, self.elements[j])) % 1
                rhs = (self.cartan[i][j] * self.angle(i, self.elements[i])) % 1
                if lhs != rhs:
                    raise InvalidDatum(f"compatibility fails at (i, j) = ({i + 1}, {j + 1})")

    def to_json(self):
        return {"schema": 1, "kind": "pointed_datum", "orders": list(self.orders),
                "elements": [list(g) for g in self.elements], "chars": [list(c) for c in self.chars],
                "cartan": [list(r) for r in self.cartan]}

    @classmethod
    def from_json(cls, d):
        return cls([int(x) for x in d["orders"]], [tuple(int(x) for x in g) for g in d["elements"]],
                   [tuple(int(x) for x in c) for c in d["chars"]], [list(map(int, r)) for r in d["cartan"]])


def quantum_datum(cartan, ell, pairing=None):
    """G = (Z/ell)^theta, g_i the generators, chi_i(g_j) = q^{(alpha_i, alpha_j)}."""
    t = len(cartan)
    if pairing is None:
        d = symmetrizer(cartan)
        if d is None:
            raise InvalidDatum("Cartan matrix is not symmetrisable")
        scale = 1
        for x in d:
            scale = scale * x.denominator // _gcd(scale, x.denominator)
        pairing = [[int(d[i] * scale) * cartan[i][j] for j in range(t)] for i in range(t)]
    elements = [tuple(int(k == i) for k in range(t)) for i in range(t)]
    chars = [tuple(pairing[i][j] % ell for j in range(t)) for i in range(t)]
    return PointedDatum([ell] * t, elements, chars, [list(r) for r in cartan])


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@dataclass
class PointedVerdict:
    verdict: str  # wild | criterion inapplicable
    rule: str
    N: list
    chars_trivial: bool
    solutions: list
    vectors_checked: int
    witness: tuple | None

    def to_json(self):
        return {"verdict": self.verdict, "rule": self.rule, "N": self.N, "chars_trivial": self.chars_trivial,
                "solutions": [list(s) for s in self.solutions], "vectors_checked": self.vectors_checked,
                "witness": list(self.witness) if self.witness is not None else None}

    def __str__(self):
        s = f"{self.verdict} ({self.rule}); N = {self.N}; {self.vectors_checked} vectors checked"
        if self.witness is not None:
            s += f"; witness {tuple(self.witness)}"
        return s


def pointed_datum_check(D):
    """Hypotheses for wildness of the Nichols algebra R and its bosonisation u(D)."""
    D.validate()
    t = D.theta
    if t < 2:
        raise InvalidDatum("theta must be at least 2")
    N = [D.N(i) for i in range(t)]
    g2 = set()
    for comp in cartan_components(D.cartan):
        if is_G2_component(D.cartan, comp):
            g2.update(comp)
    for i, n in enumerate(N):
        if n % 2 == 0:
            raise BadOrderHypothesis(f"N_{i + 1} = {n} is even")
        if i in g2 and n % 3 == 0:
            raise BadOrderHypothesis(f"N_{i + 1} = {n} is divisible by 3 on a G2 component")
    gens = D.generators()
    # chi^N trivial iff N * chi(e_k) = 0 in Q/Z for every generator e_k
    trivial = all((N[i] * D.angle(i, e)) % 1 == 0 for i in range(t) for e in gens)
    solutions = []
    checked = 0
    for c in itertools.product((0, 1), repeat=t):
        checked += 1
        if all(sum(ci * D.angle(i, e) for i, ci in enumerate(c)) % 1 == 0 for e in gens):
            solutions.append(c)
    nonzero = [c for c in solutions if any(c)]
    witness = nonzero[0] if nonzero else None
    if trivial and witness is None:
        verdict, rule = "wild", "pointed"
    else:
        verdict = "criterion inapplicable"
        rule = "nonzero common solution" if witness is not None else "some chi_i^N_i is not trivial"
    return PointedVerdict(verdict, rule, N, trivial, solutions, checked, witness)
