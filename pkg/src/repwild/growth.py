"""Rate of growth of dimension sequences and the complexity of modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import WindowTooShort

C_MAX = 6
L_MAX = 6
DELTA = Fraction(1, 4)
EST_C_MAX = 12


@dataclass
class GrowthReport:
    sequence: list
    gamma: int | None
    mode: str  # exact | estimated | undetermined
    witness: dict = field(default_factory=dict)
    stable: bool = True
    resolution: object = None

    def to_json(self):
        return {"gamma": self.gamma, "mode": self.mode, "stable": self.stable, "witness": self.witness,
                "sequence": list(self.sequence)}

    def __str__(self):
        g = "undetermined" if self.gamma is None else self.gamma
        return f"gamma {g}, {self.mode}"


def lag_difference(seq, L, times):
    """Backward differences (nabla_L)^times, returned as {n: value} for every n where defined."""
    cur = dict(enumerate(seq))
    for _ in range(times):
        cur = {n: v - cur[n - L] for n, v in cur.items() if n - L in cur}
    return cur


def _annihilates(seq, c, L, tail_start):
    diffs = lag_difference(seq, L, c)
    checked = [n for n in diffs if n >= tail_start]
    if len(checked) < L + 1:
        return None
    return all(diffs[n] == 0 for n in checked)


def _exact(seq, period_hint=None):
    n = len(seq)
    tail_start = n // 2
    if all(v == 0 for v in seq[tail_start:]):
        return 0, {"c": 0, "lag": 0, "tail_start": tail_start}
    lmax = max(1, period_hint) if period_hint else L_MAX
    for c in range(1, C_MAX + 1):
        for L in range(1, lmax + 1):
            if _annihilates(seq, c, L, tail_start):
                return c, {"c": c, "lag": L, "tail_start": tail_start}
    return None, {}


def _estimate(seq):
    n = len(seq)
    idx = list(range(1, n))
    if len(idx) < 3:
        return None, {}
    third = len(idx) // 3
    middle = idx[third:2 * third]
    last = idx[2 * third:]
    for c in range(1, EST_C_MAX + 1):
        def ratio(k):
            return Fraction(seq[k], k ** (c - 1))
        mid = max(ratio(k) for k in middle)
        end = max(ratio(k) for k in last)
        if end <= (1 + DELTA) * mid:
            return c, {"c": c, "middle_max": str(mid), "last_max": str(end), "delta": str(DELTA)}
    return None, {}


def gamma(seq, period_hint=None):
    """Rate of growth of a non-negative integer sequence (index 0 = first term)."""
    seq = [int(v) for v in seq]
    if len(seq) < 4:
        raise WindowTooShort(f"need at least 4 terms, got {len(seq)}")
    if any(v < 0 for v in seq):
        raise ValueError("dimension sequences are non-negative")
    if not any(seq):
        return GrowthReport(seq, 0, "exact", {"c": 0, "lag": 0, "tail_start": 0}, True)
    g, wit = _exact(seq, period_hint)
    if g is not None:
        return GrowthReport(seq, g, "exact", wit, True)
    g, wit = _estimate(seq)
    if g is None:
        return GrowthReport(seq, None, "undetermined", {}, False)
    stable = False
    if len(seq) - 2 >= 4:
        g2, _ = _estimate(seq[:-2])
        stable = g2 == g
    return GrowthReport(seq, g, "estimated", wit, stable)


def complexity(A, M, window=16, budget=None):
    """cx_A(M) = gamma of the dimensions of a minimal projective resolution of M."""
    from .resolution import minimal_resolution

    if M.algebra is not A and M.algebra != A:
        from .algebra import require_same
        require_same(A, M.algebra)
    res = minimal_resolution(M, window, budget=budget)
    rep = gamma(res.dims)
    rep.resolution = res
    return rep


@dataclass
class CxConsistency:
    resolution_gamma: GrowthReport
    ext_simples_gamma: GrowthReport
    ext_self_gamma: GrowthReport
    agree: bool
    dim_VH: int | None
    self_injective: bool
    warnings: list

    def values(self):
        return [self.resolution_gamma.gamma, self.ext_simples_gamma.gamma, self.ext_self_gamma.gamma]

    def to_json(self):
        return {
            "cx_resolution": self.resolution_gamma.to_json(),
            "cx_ext_simples": self.ext_simples_gamma.to_json(),
            "cx_ext_self": self.ext_self_gamma.to_json(),
            "agree": self.agree,
            "dim_VH": self.dim_VH,
            "self_injective": self.self_injective,
            "warnings": self.warnings,
        }


def cx_consistency(A, M, window=12, budget=None, res=None):
    """The three growth rates that must coincide for self-injective A (support variety dimension)."""
    from .algebra import is_self_injective
    from .modrep import simple_modules
    from .resolution import Resolution, ext_dims

    warnings = []
    selfinj = bool(is_self_injective(A))
    if not selfinj:
        warnings.append("algebra is not self-injective; the three rates need not agree")
    if res is None:
        res = Resolution(M, budget=budget)
    res.ensure(window)
    g_res = gamma(res.dims[:window + 1])
    S = simple_modules(A)
    tot = [0] * (window + 1)
    for Smod in S.simples:
        dims = ext_dims(M, Smod, window, res=res).dims
        tot = [a + b for a, b in zip(tot, dims)]
    g_sim = gamma(tot)
    g_self = gamma(ext_dims(M, M, window, res=res).dims)
    vals = [g_res.gamma, g_sim.gamma, g_self.gamma]
    agree = len(set(vals)) == 1 and vals[0] is not None
    return CxConsistency(g_res, g_sim, g_self, agree, vals[0] if agree else None, selfinj, warnings)
