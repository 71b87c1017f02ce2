"""Univariate polynomials over a field, as coefficient lists (low degree first)."""

from __future__ import annotations


def trim(F, f):
    f = list(f)
    while len(f) > 1 and F.is_zero(f[-1]):
        f.pop()
    return f or [F.zero]


def degree(F, f):
    f = trim(F, f)
    return -1 if len(f) == 1 and F.is_zero(f[0]) else len(f) - 1


def is_zero(F, f):
    return degree(F, f) < 0


def add(F, f, g):
    n = max(len(f), len(g))
    f = list(f) + [F.zero] * (n - len(f))
    g = list(g) + [F.zero] * (n - len(g))
    return trim(F, [a + b for a, b in zip(f, g)])


def sub(F, f, g):
    return add(F, f, [-c for c in g])


def mul(F, f, g):
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return trim(F, out)


def divmod_(F, f, g):
    g = trim(F, g)
    dg = degree(F, g)
    if dg < 0:
        raise ZeroDivisionError("polynomial division by zero")
    f = trim(F, f)
    if degree(F, f) < dg:
        return [F.zero], f
    r = list(f)
    inv = F.one / g[-1]
    q = [F.zero] * (len(r) - dg)
    for i in range(len(r) - dg - 1, -1, -1):
        c = r[i + dg] * inv
        q[i] = c
        if not F.is_zero(c):
            for j, gj in enumerate(g):
                r[i + j] = r[i + j] - c * gj
    return trim(F, q), trim(F, r[:dg] or [F.zero])


def monic(F, f):
    f = trim(F, f)
    if degree(F, f) < 0:
        return f
    inv = F.one / f[-1]
    return [c * inv for c in f]


def xgcd(F, f, g):
    """(d, s, t) with d = s f + t g monic gcd."""
    r0, r1 = trim(F, f), trim(F, g)
    s0, s1 = [F.one], [F.zero]
    t0, t1 = [F.zero], [F.one]
    while not is_zero(F, r1):
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if is_zero(F, r0):
        return r0, s0, t0
    inv = F.one / r0[-1]
    return [c * inv for c in r0], [c * inv for c in s0], [c * inv for c in t0]


def gcd(F, f, g):
    return xgcd(F, f, g)[0]


def power(F, f, n):
    out = [F.one]
    for _ in range(n):
        out = mul(F, out, f)
    return out


def evaluate(F, f, x):
    acc = F.zero
    for c in reversed(f):
        acc = acc * x + c
    return acc


def linear_factorization(F, f):
    """Factor f = lead * prod (x - r)^m * rest, finding every root of f in F.

    Returns (list of (root, multiplicity), rest) where rest has no roots in F.
    """
    f = monic(F, f)
    found = []
    for r in F.roots(f):
        lin = [-r, F.one]
        m = 0
        while True:
            q, rem = divmod_(F, f, lin)
            if not is_zero(F, rem):
                break
            f = q
            m += 1
        if m:
            found.append((r, m))
    return found, f


def crt_idempotents(F, factors):
    """Polynomials h_i with h_i = 1 mod factors[i] and h_i = 0 mod factors[j], j != i.

    The factors must be pairwise coprime.
    """
    total = [F.one]
    for g in factors:
        total = mul(F, total, g)
    out = []
    for g in factors:
        cof, rem = divmod_(F, total, g)
        assert is_zero(F, rem)
        d, s, t = xgcd(F, cof, g)
        if degree(F, d) != 0:
            raise ValueError("factors are not coprime")
        # s*cof + t*g = 1, so s*cof is 1 mod g and 0 mod the others
        h = mul(F, s, cof)
        out.append(divmod_(F, h, total)[1])
    return out
