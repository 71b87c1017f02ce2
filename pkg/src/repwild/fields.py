"""Exact scalar arithmetic: Q, F_p, F_p[t]/(f) and Q[z]/(Phi_ell(z)).

Scalars are ``fractions.Fraction`` over Q, :class:`ModP` over prime fields and
:class:`PolyElt` over extension fields.  All of them support the usual Python
operators, so constructors can be written with plain arithmetic.  Matrices are
numpy arrays: ``int64`` residues for prime fields (fast path) and ``object``
arrays holding scalars otherwise.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NoSuchRoot, NonPrimeCharacteristic, ReducibleModulus, SchemaError

KINDS = ("rationals", "prime", "extension", "cyclotomic")


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def cyclotomic_polynomial(ell):
    """Integer coefficients (low to high) of the ell-th cyclotomic polynomial."""
    num = [-1] + [0] * (ell - 1) + [1]
    for d in range(1, ell):
        if ell % d == 0:
            num = _int_poly_exact_div(num, cyclotomic_polynomial(d))
    return num


def _int_poly_exact_div(num, den):
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        q[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    assert not any(num), "inexact division"
    return q


def parse_rational(s):
    if isinstance(s, bool):
        raise SchemaError(f"not a rational literal: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise SchemaError(f"not a rational literal: {s!r}")


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    p: int = 0
    modulus: tuple = ()
    ell: int = 0

    @property
    def characteristic(self):
        return self.p if self.kind in ("prime", "extension") else 0

    @classmethod
    def rationals(cls):
        return cls("rationals")

    @classmethod
    def prime(cls, p):
        return cls("prime", p=p)

    @classmethod
    def extension(cls, p, modulus):
        return cls("extension", p=p, modulus=tuple(int(c) % p for c in modulus))

    @classmethod
    def cyclotomic(cls, ell):
        return cls("cyclotomic", ell=ell)

    def to_json(self):
        if self.kind == "rationals":
            return {"kind": "rationals"}
        if self.kind == "prime":
            return {"kind": "prime", "p": self.p}
        if self.kind == "extension":
            return {"kind": "extension", "p": self.p, "modulus": list(self.modulus)}
        return {"kind": "cyclotomic", "ell": self.ell}

    @classmethod
    def from_json(cls, obj, pointer="/field"):
        if not isinstance(obj, dict) or obj.get("kind") not in KINDS:
            raise SchemaError("field descriptor needs kind in " + ", ".join(KINDS), pointer)
        allowed = {"rationals": {"kind"}, "prime": {"kind", "p"},
                   "extension": {"kind", "p", "modulus"}, "cyclotomic": {"kind", "ell"}}[obj["kind"]]
        extra = set(obj) - allowed
        if extra:
            raise SchemaError(f"unknown field keys {sorted(extra)}", pointer)
        try:
            if obj["kind"] == "rationals":
                return cls.rationals()
            if obj["kind"] == "prime":
                return cls.prime(int(obj["p"]))
            if obj["kind"] == "extension":
                return cls.extension(int(obj["p"]), [int(c) for c in obj["modulus"]])
            return cls.cyclotomic(int(obj["ell"]))
        except KeyError as exc:
            raise SchemaError(f"missing key {exc.args[0]!r}", pointer) from None

    def __str__(self):
        if self.kind == "rationals":
            return "Q"
        if self.kind == "prime":
            return f"F_{self.p}"
        if self.kind == "extension":
            return f"F_{self.p}[t]/({_poly_str(self.modulus, 't')})"
        return f"Q[z]/(Phi_{self.ell})"


def _poly_str(coeffs, var):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
        terms.append(mono if c == 1 and i else f"{c}*{mono}" if i else str(c))
    return " + ".join(reversed(terms)) or "0"


class ModP:
    """Residue class modulo a prime; canonical representative in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _other(self, o):
        if isinstance(o, ModP):
            return o.v
        if isinstance(o, int):
            return o
        return None

    def __add__(self, o):
        w = self._other(o)
        return NotImplemented if w is None else ModP(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._other(o)
        return NotImplemented if w is None else ModP(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._other(o)
        return NotImplemented if w is None else ModP(w - self.v, self.p)

    def __mul__(self, o):
        w = self._other(o)
        return NotImplemented if w is None else ModP(self.v * w, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.p)
        return ModP(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        w = self._other(o)
        if w is None:
            return NotImplemented
        return self * ModP(w, self.p).inverse()

    def __rtruediv__(self, o):
        w = self._other(o)
        return NotImplemented if w is None else self.inverse() * w

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return ModP(pow(self.v, n, self.p), self.p)

    def __eq__(self, o):
        w = self._other(o)
        return NotImplemented if w is None else (w - self.v) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


class PolyElt:
    """Element of K[x]/(f) stored as a coefficient tuple of length deg f."""

    __slots__ = ("c", "F")

    def __init__(self, coeffs, field):
        self.c = coeffs
        self.F = field

    def _lift(self, o):
        if isinstance(o, PolyElt):
            return o.c
        if isinstance(o, (int, Fraction, ModP)):
            return self.F._const(o)
        return None

    def __add__(self, o):
        w = self._lift(o)
        if w is None:
            return NotImplemented
        base = self.F._base_reduce
        return PolyElt(tuple(base(a + b) for a, b in zip(self.c, w)), self.F)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._lift(o)
        if w is None:
            return NotImplemented
        base = self.F._base_reduce
        return PolyElt(tuple(base(a - b) for a, b in zip(self.c, w)), self.F)

    def __rsub__(self, o):
        return (-self) + o

    def __neg__(self):
        base = self.F._base_reduce
        return PolyElt(tuple(base(-a) for a in self.c), self.F)

    def __mul__(self, o):
        w = self._lift(o)
        if w is None:
            return NotImplemented
        return PolyElt(self.F._mul(self.c, w), self.F)

    __rmul__ = __mul__

    def inverse(self):
        return PolyElt(self.F._inv(self.c), self.F)

    def __truediv__(self, o):
        w = self._lift(o)
        if w is None:
            return NotImplemented
        return self * PolyElt(w, self.F).inverse()

    def __rtruediv__(self, o):
        return self.inverse() * o

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = PolyElt(self.F._const(1), self.F)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, o):
        w = self._lift(o)
        return NotImplemented if w is None else self.c == w

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        return self.F.format(self)


class Field:
    """Field handle.  Subclasses fix the scalar type and the array encoding."""

    descriptor: FieldDescriptor
    characteristic = 0
    order = None
    is_prime_field = False

    def __eq__(self, other):
        return isinstance(other, Field) and other.descriptor == self.descriptor

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return str(self.descriptor)

    # arithmetic helpers for code that prefers explicit calls
    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return self.one / a

    def eq(self, a, b):
        return self(a) == self(b)

    def is_zero(self, a):
        return not a

    def canon(self, a):
        return self(a)

    # arrays
    dtype = object

    def encode(self, a):
        return self(a)

    def decode(self, entry):
        return entry

    def array(self, rows):
        arr = np.array(rows, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = self(v)
        return out

    def zeros(self, shape):
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    def eye(self, n):
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def reduce(self, arr):
        return arr

    def to_list(self, arr):
        return [[self.decode(v) for v in row] for row in arr]

    def power(self, a, n):
        return a ** n

    def multiplicative_order(self, a, limit):
        """Order of ``a`` if it is at most ``limit``, else None."""
        x = a
        for k in range(1, limit + 1):
            if x == self.one:
                return k
            x = x * a
        return None


class Rationals(Field):
    def __init__(self):
        self.descriptor = FieldDescriptor.rationals()
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return parse_rational(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def to_json(self, a):
        return format_rational(a)

    def from_json(self, obj, pointer=""):
        if isinstance(obj, list):
            self._bad(obj, pointer)
        try:
            return parse_rational(obj)
        except SchemaError as exc:
            raise SchemaError(str(exc).split(": ", 1)[-1], pointer) from None

    def _bad(self, obj, pointer):
        raise SchemaError(f"bad scalar literal {obj!r}", pointer)

    def format(self, a):
        return format_rational(a)

    def roots(self, coeffs):
        return _sympy_roots(self, coeffs)

    def random_element(self, rng, bound=3):
        return Fraction(int(rng.integers(-bound, bound + 1)))


class PrimeField(Field):
    is_prime_field = True
    dtype = np.int64

    def __init__(self, p):
        self.descriptor = FieldDescriptor.prime(p)
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def __call__(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise TypeError(f"element of F_{x.p} used in F_{self.p}")
            return x
        if isinstance(x, (int, np.integer)):
            return ModP(int(x), self.p)
        if isinstance(x, Fraction):
            return ModP(x.numerator, self.p) / ModP(x.denominator, self.p)
        if isinstance(x, str):
            return self(parse_rational(x))
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def encode(self, a):
        return self(a).v

    def decode(self, entry):
        return ModP(int(entry), self.p)

    def array(self, rows):
        arr = np.array(rows, dtype=object)
        out = np.zeros(arr.shape, dtype=np.int64)
        for idx, v in np.ndenumerate(arr):
            out[idx] = self(v).v
        return out

    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n):
        return np.eye(n, dtype=np.int64)

    def reduce(self, arr):
        return np.mod(arr, self.p)

    def to_json(self, a):
        return self(a).v

    def from_json(self, obj, pointer=""):
        if isinstance(obj, list) and len(obj) == 1:
            obj = obj[0]
        if isinstance(obj, bool) or not isinstance(obj, (int, str)):
            raise SchemaError(f"bad F_{self.p} literal {obj!r}", pointer)
        return self(obj)

    def format(self, a):
        return str(self(a).v)

    def elements(self):
        return [ModP(v, self.p) for v in range(self.p)]

    def roots(self, coeffs):
        return [x for x in self.elements() if _horner(coeffs, x, self.zero) == self.zero]

    def random_element(self, rng, bound=None):
        return ModP(int(rng.integers(0, self.p)), self.p)


class ExtField(Field):
    """K[x]/(f) with K = F_p (finite extension) or K = Q (cyclotomic)."""

    def __init__(self, descriptor):
        self.descriptor = descriptor
        if descriptor.kind == "extension":
            p = descriptor.p
            self.p = p
            self.characteristic = p
            mod = [c % p for c in descriptor.modulus]
            while mod and mod[-1] == 0:
                mod.pop()
            lead_inv = pow(mod[-1], -1, p)
            self.modulus = tuple((c * lead_inv) % p for c in mod)
            self._base_reduce = lambda a, p=p: a % p
            self._base_inv = lambda a, p=p: pow(a, -1, p)
            self.order = p ** (len(self.modulus) - 1)
            base_zero, base_one = 0, 1
        else:
            self.p = 0
            self.modulus = tuple(Fraction(c) for c in cyclotomic_polynomial(descriptor.ell))
            self._base_reduce = lambda a: a
            self._base_inv = lambda a: 1 / Fraction(a)
            base_zero, base_one = Fraction(0), Fraction(1)
        self.n = len(self.modulus) - 1
        self._bz, self._bo = base_zero, base_one
        # x^k mod f for k in [n, 2n-2]
        self._red = []
        cur = [self._base_reduce(-c) for c in self.modulus[:-1]]
        for _ in range(max(self.n - 1, 0)):
            self._red.append(tuple(cur))
            # multiply cur by x
            top = cur[-1]
            shifted = [self._bz] + cur[:-1]
            cur = [self._base_reduce(shifted[i] - top * self.modulus[i]) for i in range(self.n)]
        self.zero = PolyElt((base_zero,) * self.n, self)
        self.one = PolyElt(self._const(1), self)
        self.gen = PolyElt(tuple(base_one if i == 1 else base_zero for i in range(self.n)), self) \
            if self.n > 1 else PolyElt((self._base_reduce(-self.modulus[0]),), self)

    def _const(self, a):
        if isinstance(a, ModP):
            a = a.v
        if self.p:
            if isinstance(a, Fraction):
                a = (a.numerator * pow(a.denominator, -1, self.p)) % self.p
            v = a % self.p
        else:
            v = Fraction(a)
        return (v,) + (self._bz,) * (self.n - 1)

    def _mul(self, a, b):
        n = self.n
        prod = [self._bz] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            ck = prod[k]
            if ck:
                red = self._red[k - n]
                for i in range(n):
                    out[i] += ck * red[i]
        return tuple(self._base_reduce(v) for v in out)

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in K[x] on (a, f)
        r0, r1 = list(self.modulus), _trim(list(a))
        s0, s1 = [self._bz], [self._bo]
        while len(r1) > 1:
            q, r = self._poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self._poly_sub(s0, self._poly_mul(q, s1))
        c_inv = self._base_inv(r1[0])
        s = [self._base_reduce(v * c_inv) for v in s1]
        s = s + [self._bz] * (self.n - len(s))
        return tuple(s[: self.n])

    def _poly_mul(self, a, b):
        out = [self._bz] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] = self._base_reduce(out[i + j] + ai * bj)
        return _trim(out)

    def _poly_sub(self, a, b):
        m = max(len(a), len(b))
        a = a + [self._bz] * (m - len(a))
        b = b + [self._bz] * (m - len(b))
        return _trim([self._base_reduce(x - y) for x, y in zip(a, b)])

    def _poly_divmod(self, a, b):
        a = list(a)
        inv = self._base_inv(b[-1])
        q = [self._bz] * max(len(a) - len(b) + 1, 1)
        for i in range(len(a) - len(b), -1, -1):
            c = self._base_reduce(a[i + len(b) - 1] * inv)
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] = self._base_reduce(a[i + j] - c * bj)
        return _trim(q), _trim(a[: len(b) - 1] or [self._bz])

    def __call__(self, x):
        if isinstance(x, PolyElt):
            if x.F is not self and x.F.descriptor != self.descriptor:
                raise TypeError("element of a different field")
            return x
        if isinstance(x, (int, Fraction, ModP, np.integer)):
            return PolyElt(self._const(int(x) if isinstance(x, np.integer) else x), self)
        if isinstance(x, str):
            return PolyElt(self._const(parse_rational(x)), self)
        if isinstance(x, (list, tuple)):
            return self.from_coeffs(x)
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            # reduce a longer polynomial
            acc = self.zero
            xpow = self.one
            for c in coeffs:
                acc = acc + xpow * self(c)
                xpow = xpow * self.gen
            return acc
        vals = [(parse_rational(c) if not isinstance(c, (int, Fraction)) else c) for c in coeffs]
        if self.p:
            vals = [self._const(v)[0] for v in vals]
        else:
            vals = [Fraction(v) for v in vals]
        return PolyElt(tuple(vals) + (self._bz,) * (self.n - len(vals)), self)

    def to_json(self, a):
        a = self(a)
        if self.p:
            return [int(v) for v in a.c]
        return [format_rational(v) for v in a.c]

    def from_json(self, obj, pointer=""):
        if isinstance(obj, list):
            if len(obj) > self.n:
                raise SchemaError(f"coefficient array longer than degree {self.n}", pointer)
            try:
                return self.from_coeffs(obj)
            except SchemaError as exc:
                raise SchemaError(str(exc), pointer) from None
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            return self(obj)
        raise SchemaError(f"bad scalar literal {obj!r}", pointer)

    def format(self, a):
        var = "z" if self.descriptor.kind == "cyclotomic" else "t"
        terms = []
        for i, c in enumerate(a.c):
            if not c:
                continue
            cs = format_rational(c) if not self.p else str(c)
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append(f"({cs})*{mono}" if "/" in cs else f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def elements(self):
        if not self.p:
            raise TypeError("infinite field has no element list")
        return [PolyElt(tuple(reversed(c)), self)
                for c in itertools.product(range(self.p), repeat=self.n)]

    def roots(self, coeffs):
        if self.p:
            return [x for x in self.elements() if _horner(coeffs, x, self.zero) == self.zero]
        return _sympy_roots(self, coeffs)

    def random_element(self, rng, bound=2):
        if self.p:
            return PolyElt(tuple(int(v) for v in rng.integers(0, self.p, self.n)), self)
        return PolyElt(tuple(Fraction(int(v)) for v in rng.integers(-bound, bound + 1, self.n)), self)


def _trim(coeffs):
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _horner(coeffs, x, zero):
    acc = zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sympy_roots(F, coeffs):
    """Distinct roots in F of a polynomial with coefficients in F (char 0)."""
    import sympy
    from sympy import QQ

    coeffs = list(coeffs)
    while len(coeffs) > 1 and F.is_zero(coeffs[-1]):
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    x = sympy.Symbol("x")
    if isinstance(F, Rationals):
        dom = QQ
        conv = lambda c: QQ(c.numerator, c.denominator)  # noqa: E731
        back = lambda a: Fraction(int(a.numerator), int(a.denominator))  # noqa: E731
    else:
        dom = _sympy_cyclotomic_domain(F.descriptor.ell)

        def conv(c):
            return dom([QQ(v.numerator, v.denominator) for v in reversed(c.c)])

        def back(a):
            lst = list(reversed(a.to_list()))
            return F.from_coeffs([Fraction(int(v.numerator), int(v.denominator)) for v in lst])

    poly = sympy.Poly.from_list([conv(F(c)) for c in reversed(coeffs)], x, domain=dom)
    roots = []
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() == 1:
            a1, a0 = fac.rep.to_list()
            roots.append(back(dom.quo(-a0, a1)))
    return roots


@functools.lru_cache(maxsize=None)
def _sympy_cyclotomic_domain(ell):
    import sympy
    from sympy import QQ

    dom = QQ.algebraic_field(sympy.exp(2 * sympy.pi * sympy.I / ell))
    gen = dom.from_sympy(dom.ext).to_list()
    mod = [int(c) for c in reversed(dom.mod.to_list())]
    if mod != cyclotomic_polynomial(ell) or [int(c) for c in gen] != [1, 0]:
        raise RuntimeError(f"unexpected sympy presentation of Q(zeta_{ell})")
    return dom


def _check_irreducible(p, modulus):
    """Trial division by every monic polynomial of degree <= deg/2 over F_p."""
    n = len(modulus) - 1
    if n > 8:
        raise ReducibleModulus(f"modulus degree {n} exceeds the supported bound 8")
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = list(tail) + [1]
            rem = list(modulus)
            for i in range(len(rem) - len(div), -1, -1):
                c = rem[i + d] % p
                if c:
                    for j, dj in enumerate(div):
                        rem[i + j] = (rem[i + j] - c * dj) % p
            if not any(v % p for v in rem[:d]):
                return False
    return True


@functools.lru_cache(maxsize=None)
def make_field(descriptor):
    """Field handle for a descriptor; equal descriptors share one handle."""
    if isinstance(descriptor, dict):
        descriptor = FieldDescriptor.from_json(descriptor)
    kind = descriptor.kind
    if kind == "rationals":
        return Rationals()
    if kind in ("prime", "extension") and not is_prime(descriptor.p):
        raise NonPrimeCharacteristic(f"{descriptor.p} is not prime")
    if kind == "prime":
        return PrimeField(descriptor.p)
    if kind == "extension":
        mod = [c % descriptor.p for c in descriptor.modulus]
        while mod and mod[-1] == 0:
            mod.pop()
        if len(mod) < 2:
            raise ReducibleModulus("modulus must have degree >= 1")
        inv = pow(mod[-1], -1, descriptor.p)
        mod = [(c * inv) % descriptor.p for c in mod]
        if not _check_irreducible(descriptor.p, mod):
            raise ReducibleModulus(f"{_poly_str(mod, 't')} is reducible over F_{descriptor.p}")
        return ExtField(FieldDescriptor.extension(descriptor.p, mod))
    if kind == "cyclotomic":
        if descriptor.ell < 2:
            raise ValueError("cyclotomic(ell) needs ell >= 2")
        return ExtField(descriptor)
    raise ValueError(f"unknown field kind {kind!r}")


def field_from_json(obj, pointer="/field"):
    return make_field(FieldDescriptor.from_json(obj, pointer))


def QQ():
    return make_field(FieldDescriptor.rationals())


def GF(p):
    return make_field(FieldDescriptor.prime(p))


def cyclotomic(ell):
    return make_field(FieldDescriptor.cyclotomic(ell))


def primitive_root_of_unity(F, ell):
    """Deterministic primitive ell-th root of unity in F.

    Prime and finite extension fields: the first element (in canonical
    enumeration order) of exact order ell.  Cyclotomic fields: the first of
    z^k, -z^k (k = 0, 1, ...) of exact order ell, so ``z`` itself when ell
    matches the field's conductor.
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    kind = F.descriptor.kind
    if kind == "rationals":
        if ell == 1:
            return F.one
        if ell == 2:
            return -F.one
        raise NoSuchRoot(f"Q has no primitive {ell}-th root of unity")
    if kind in ("prime", "extension"):
        q = F.order
        if (q - 1) % ell:
            raise NoSuchRoot(f"{ell} does not divide |{F}^x| = {q - 1}")
        for x in F.elements():
            if x and F.multiplicative_order(x, ell) == ell:
                return x
        raise NoSuchRoot(f"no element of order {ell} in {F}")  # pragma: no cover
    m = F.descriptor.ell
    group_order = m if m % 2 == 0 else 2 * m
    if group_order % ell:
        raise NoSuchRoot(f"Q(zeta_{m}) has no primitive {ell}-th root of unity")
    zk = F.one
    for _ in range(m):
        for cand in (zk, -zk):
            if F.multiplicative_order(cand, ell) == ell:
                return cand
        zk = zk * F.gen
    raise NoSuchRoot(f"no primitive {ell}-th root found in {F}")  # pragma: no cover
