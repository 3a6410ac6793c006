"""Concrete models of F_{q^n} over F_q with q = p^e.

A :class:`FieldContext` realizes F_{q^n} as the quotient F_p[z]/(F) for a
single monic irreducible F of degree e*n, so Frobenius, trace and subfield
handling stay uniform.  Elements are canonical coefficient tuples over F_p.
Intermediate fields F_{q^m} (m | n) live inside the big field; each also gets
a standalone model plus embedding/projection dictionaries.

Contexts are immutable once built and safe to share between workers; all
element operations are pure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .factorint import (
    FactorBudgetError,
    divisors_from_factors,
    factor_qn_minus_1,
    factorize,
    is_prime,
)

DEFAULT_TABLE_BUDGET = 1 << 16
DEFAULT_ENUM_BUDGET = 1 << 24

_MODULUS_SEED = 0xF1E1D


class FieldError(Exception):
    pass


class BudgetError(FieldError):
    """An enumeration- or table-dependent operation exceeded its budget."""


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int
    q: int

    @staticmethod
    def make(p: int, e: int) -> "PrimePower":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("exponent must be >= 1")
        return PrimePower(p, e, p**e)


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (lists, little-endian), used only for
# modulus search and irreducibility testing


def _pnorm(a: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _pnorm(out, p)


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        if c:
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod_x(exp_p_steps: int, m: list[int], p: int) -> list[int]:
    """x**(p**exp_p_steps) mod m via repeated p-th powers."""
    h = [0, 1]
    for _ in range(exp_p_steps):
        h = _ppow(h, p, m, p)
    return h


def _ppow(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _is_irreducible(f: list[int], p: int) -> bool:
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    # x^(p^k) == x mod f, and x^(p^(k/r)) - x coprime to f for prime r | k
    h = [0, 1]
    checkpoints = {k // r for r in factorize(k)}
    for step in range(1, k + 1):
        h = _ppow(h, p, f, p)
        if step in checkpoints:
            hx = list(h) + [0] * max(0, 2 - len(h))
            hx[1] = (hx[1] - 1) % p
            g = _pgcd(f, _pnorm(hx, p), p)
            if len(g) - 1 != 0:
                return False
    hx = list(h) + [0] * max(0, 2 - len(h))
    hx[1] = (hx[1] - 1) % p
    return not _pnorm(hx, p)


def _find_irreducible(p: int, k: int) -> list[int]:
    rng = random.Random((_MODULUS_SEED, p, k))
    if k == 1:
        return [rng.randrange(1, p), 1]
    while True:
        f = [rng.randrange(p) for _ in range(k)] + [1]
        f[0] = rng.randrange(1, p)
        if _is_irreducible(f, p):
            return f


# ---------------------------------------------------------------------------


class FieldContext:
    """F_{q^n} over F_q = F_{p^e}, presented as F_p[z]/(modulus)."""

    def __init__(
        self,
        p: int,
        e: int,
        n: int,
        modulus: list[int] | None = None,
        table_budget: int = DEFAULT_TABLE_BUDGET,
        enum_budget: int = DEFAULT_ENUM_BUDGET,
        _with_subfield_maps: bool = True,
    ):
        self.base = PrimePower.make(p, e)
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.n = n
        self.q = self.base.q
        self.k = e * n
        self.cardinality = p**self.k
        self.group_order = self.cardinality - 1
        self.table_budget = table_budget
        self.enum_budget = enum_budget

        if modulus is None:
            modulus = _find_irreducible(p, self.k)
        else:
            modulus = _pnorm(list(modulus), p)
            if len(modulus) - 1 != self.k:
                raise ValueError(f"modulus degree must be {self.k}")
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if not _is_irreducible(modulus, p):
                raise ValueError("modulus is reducible")
        self.modulus = tuple(modulus)

        k = self.k
        self.zero = (0,) * k
        self.one = tuple([1] + [0] * (k - 1)) if k > 1 else (1,)

        # reduction rows: _red[j] = tuple of x^(k+j) mod modulus
        red = []
        row = [(-modulus[i]) % p for i in range(k)]
        red.append(tuple(row))
        for _ in range(1, k - 1):
            top = row[-1]
            row = [0] + row[:-1]
            if top:
                base_row = red[0]
                row = [(row[i] + top * base_row[i]) % p for i in range(k)]
            red.append(tuple(row))
        self._red = red

        self._dlog: dict[tuple, int] | None = None
        self._pows: list[tuple] | None = None

        try:
            self.group_order_factors = factor_qn_minus_1(self.q, n)
        except FactorBudgetError as exc:
            raise BudgetError(f"cannot factor group order for q={self.q}, n={n}") from exc
        self._group_primes = sorted(self.group_order_factors)

        # p-power Frobenius as a matrix (list of image tuples per basis elt)
        self._pfrob_cols = self._frobenius_columns(p)
        # absolute trace to F_p is F_p-linear: trace(a) = sum a_i * _tr_basis[i]
        self._tr_basis = self._trace_form()
        # q-power Frobenius matrix
        if e == 1:
            self._qfrob_cols = self._pfrob_cols
        else:
            self._qfrob_cols = self._frobenius_columns(self.q)

        self.generator = self._find_generator()

        self._subfield_elements_cache: dict[int, list[tuple]] = {}
        self.subfield_maps: dict[int, SubfieldMap] = {}
        if _with_subfield_maps:
            for m in divisors_from_factors(factorize(n)):
                if m < n and self.q**m <= enum_budget:
                    self.subfield_maps[m] = SubfieldMap.build(self, m)

    # -- scalar helpers

    def to_int(self, a: tuple) -> int:
        v = 0
        for c in reversed(a):
            v = v * self.p + c
        return v

    def from_int(self, v: int) -> tuple:
        if not 0 <= v < self.cardinality:
            raise ValueError("value out of range")
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(v % p)
            v //= p
        return tuple(out)

    def elements(self):
        """All field elements in ascending integer-encoding order."""
        if self.cardinality > self.enum_budget:
            raise BudgetError(f"enumeration of {self.cardinality} elements over budget")
        for v in range(self.cardinality):
            yield self.from_int(v)

    # -- arithmetic on coefficient tuples

    def add(self, a: tuple, b: tuple) -> tuple:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: tuple, b: tuple) -> tuple:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        p = self.p
        return tuple((-x) % p for x in a)

    def smul(self, c: int, a: tuple) -> tuple:
        p = self.p
        c %= p
        return tuple(c * x % p for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        dlog = self._dlog
        if dlog is not None:
            da = dlog.get(a)
            if da is None:
                return self.zero
            db = dlog.get(b)
            if db is None:
                return self.zero
            return self._pows[(da + db) % self.group_order]
        return self._mul_raw(a, b)

    def _mul_raw(self, a: tuple, b: tuple) -> tuple:
        k = self.k
        p = self.p
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        red = self._red
        for idx in range(2 * k - 2, k - 1, -1):
            c = prod[idx] % p
            if c:
                row = red[idx - k]
                for t in range(k):
                    prod[t] += c * row[t]
        return tuple(v % p for v in prod[:k])

    def inv(self, a: tuple) -> tuple:
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if self._dlog is not None:
            d = self._dlog[a]
            return self._pows[(-d) % self.group_order]
        return self.pow(a, self.group_order - 1)

    def pow(self, a: tuple, m: int) -> tuple:
        if self._dlog is not None and a != self.zero:
            d = self._dlog[a]
            return self._pows[(d * m) % self.group_order]
        if m < 0:
            a = self.inv(a)
            m = -m
        result = self.one
        base = a
        while m:
            if m & 1:
                result = self._mul_raw(result, base) if self._dlog is None else self.mul(result, base)
            base = self._mul_raw(base, base) if self._dlog is None else self.mul(base, base)
            m >>= 1
        return result

    def _frobenius_columns(self, power: int) -> list[tuple]:
        """Images of the basis z^i under x -> x^power (power = p or q)."""
        z = self.from_int(self.p) if self.k > 1 else self.one
        zp = self.pow_raw(z, power)
        cols = [self.one]
        for _ in range(1, self.k):
            cols.append(self._mul_raw(cols[-1], zp))
        return cols

    def pow_raw(self, a: tuple, m: int) -> tuple:
        result = self.one
        base = a
        while m:
            if m & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            m >>= 1
        return result

    def _apply_cols(self, cols: list[tuple], a: tuple) -> tuple:
        k = self.k
        p = self.p
        acc = [0] * k
        for i, c in enumerate(a):
            if c:
                col = cols[i]
                for t in range(k):
                    acc[t] += c * col[t]
        return tuple(v % p for v in acc)

    def frob(self, a: tuple, j: int = 1) -> tuple:
        """a**(q**j); the identity when j == 0 mod n."""
        j %= self.n
        if j == 0:
            return a
        if self._dlog is not None and a != self.zero:
            d = self._dlog[a]
            return self._pows[(d * pow(self.q, j, self.group_order)) % self.group_order]
        for _ in range(j):
            a = self._apply_cols(self._qfrob_cols, a)
        return a

    def _trace_form(self) -> tuple:
        out = []
        for i in range(self.k):
            b = self.from_int(self.p**i)
            acc = b
            cur = b
            for _ in range(self.k - 1):
                cur = self._apply_cols(self._pfrob_cols, cur)
                acc = self.add(acc, cur)
            out.append(acc[0])
        return tuple(out)

    def trace_abs(self, a: tuple) -> int:
        """Absolute trace to F_p, as an integer in [0, p)."""
        t = 0
        for c, w in zip(a, self._tr_basis):
            t += c * w
        return t % self.p

    def trace_to(self, a: tuple, m: int = 1) -> tuple:
        """Trace from F_{q^n} onto the subfield F_{q^m}, m | n."""
        return self.trace_between(a, self.n, m)

    def trace_between(self, a: tuple, m_from: int, m_to: int) -> tuple:
        """Relative trace F_{q^m_from} -> F_{q^m_to} for a in F_{q^m_from}."""
        if self.n % m_from or m_from % m_to:
            raise ValueError(f"need {m_to} | {m_from} | {self.n}")
        acc = a
        cur = a
        for _ in range(m_from // m_to - 1):
            cur = self.frob(cur, m_to)
            acc = self.add(acc, cur)
        return acc

    # -- multiplicative structure

    def _find_generator(self) -> tuple:
        if self.cardinality == 2:
            return self.one
        v = 2
        while True:
            a = self.from_int(v)
            if self.order_equals_group_order(a):
                return a
            v += 1

    def order_equals_group_order(self, a: tuple) -> bool:
        if a == self.zero:
            return False
        go = self.group_order
        for r in self._group_primes:
            if self.pow_raw(a, go // r) == self.one:
                return False
        return True

    def multiplicative_order(self, a: tuple) -> int:
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        order = self.group_order
        for r in self._group_primes:
            while order % r == 0 and self.pow(a, order // r) == self.one:
                order //= r
        return order

    def is_primitive(self, a: tuple) -> bool:
        return a != self.zero and self.order_equals_group_order(a)

    # -- discrete-log tables for small fields

    def ensure_tables(self) -> None:
        if self._dlog is not None:
            return
        if self.cardinality > self.table_budget:
            raise BudgetError(
                f"field of size {self.cardinality} exceeds table budget {self.table_budget}"
            )
        pows = [self.one]
        cur = self.one
        g = self.generator
        for _ in range(self.group_order - 1):
            cur = self._mul_raw(cur, g)
            pows.append(cur)
        dlog = {t: i for i, t in enumerate(pows)}
        if len(dlog) != self.group_order:
            raise FieldError("generator order defect while building tables")
        self._pows = pows
        self._dlog = dlog

    @property
    def has_tables(self) -> bool:
        return self._dlog is not None

    def dlog(self, a: tuple) -> int:
        self.ensure_tables()
        if a == self.zero:
            raise ValueError("dlog of zero")
        return self._dlog[a]

    # -- subfields

    def subfield_exponent(self, m: int) -> int:
        if self.n % m:
            raise ValueError(f"{m} does not divide {self.n}")
        return self.group_order // (self.q**m - 1)

    def subfield_generator(self, m: int) -> tuple:
        return self.pow_raw(self.generator, self.subfield_exponent(m))

    def in_subfield(self, a: tuple, m: int) -> bool:
        return self.frob(a, m) == a

    def subfield_elements(self, m: int) -> list[tuple]:
        """Elements of F_{q^m} inside this field, ascending by encoding."""
        cached = self._subfield_elements_cache.get(m)
        if cached is not None:
            return cached
        size = self.q**m
        if size > self.enum_budget:
            raise BudgetError(f"subfield of size {size} over enumeration budget")
        g = self.subfield_generator(m)
        elems = [self.zero, self.one]
        cur = g
        for _ in range(size - 2):
            elems.append(cur)
            cur = self.mul(cur, g)
        elems = sorted(set(elems), key=self.to_int)
        if len(elems) != size:
            raise FieldError("subfield enumeration defect")
        self._subfield_elements_cache[m] = elems
        return elems

    def subview(self, m: int) -> "SubfieldView":
        return SubfieldView(self, m)

    # -- conversions

    def element_from_string(self, s: str) -> tuple:
        parts = [int(c) % self.p for c in s.split(",")]
        if len(parts) > self.k:
            raise ValueError(f"too many coefficients (max {self.k})")
        parts += [0] * (self.k - len(parts))
        return tuple(parts)

    def element_to_string(self, a: tuple) -> str:
        return ",".join(str(c) for c in a)

    def __repr__(self):
        return f"FieldContext(p={self.p}, e={self.e}, n={self.n}, |F|={self.cardinality})"


class SubfieldView:
    """Field-operations facade for F_{q^m} sitting inside a FieldContext.

    Polynomials over F_q (or over the whole field, m = n) take their
    coefficient arithmetic from one of these.
    """

    __slots__ = ("ctx", "m", "order", "char")

    def __init__(self, ctx: FieldContext, m: int):
        if ctx.n % m:
            raise ValueError(f"{m} does not divide {ctx.n}")
        self.ctx = ctx
        self.m = m
        self.order = ctx.q**m
        self.char = ctx.p

    @property
    def zero(self) -> tuple:
        return self.ctx.zero

    @property
    def one(self) -> tuple:
        return self.ctx.one

    def add(self, a, b):
        return self.ctx.add(a, b)

    def sub(self, a, b):
        return self.ctx.sub(a, b)

    def neg(self, a):
        return self.ctx.neg(a)

    def mul(self, a, b):
        return self.ctx.mul(a, b)

    def inv(self, a):
        return self.ctx.inv(a)

    def pow(self, a, m):
        return self.ctx.pow(a, m)

    def elements(self) -> list[tuple]:
        return self.ctx.subfield_elements(self.m)

    def contains(self, a: tuple) -> bool:
        return self.ctx.in_subfield(a, self.m)

    def to_int(self, a: tuple) -> int:
        return self.ctx.to_int(a)

    def signature(self):
        return (id(self.ctx), self.m)

    def __repr__(self):
        return f"SubfieldView(F_{self.ctx.q}^{self.m} in {self.ctx!r})"


@dataclass(frozen=True)
class SubfieldMap:
    """Standalone model of F_{q^m} plus embedding into the big field."""

    m: int
    small: FieldContext
    embed: dict
    project: dict

    @staticmethod
    def build(ctx: FieldContext, m: int) -> "SubfieldMap":
        small = FieldContext(
            ctx.p,
            ctx.e,
            m,
            table_budget=ctx.table_budget,
            enum_budget=ctx.enum_budget,
            _with_subfield_maps=False,
        )
        candidates = ctx.subfield_elements(m)
        mod = list(small.modulus)
        root = None
        for cand in candidates:
            acc = ctx.zero
            for c in reversed(mod):
                acc = ctx.mul(acc, cand)
                if c:
                    acc = ctx.add(acc, ctx.smul(c, ctx.one))
            if acc == ctx.zero:
                root = cand
                break
        if root is None:
            raise FieldError("no root of subfield modulus found")
        embed = {}
        for v in range(small.cardinality):
            st = small.from_int(v)
            acc = ctx.zero
            for c in reversed(st):
                acc = ctx.mul(acc, root)
                if c:
                    acc = ctx.add(acc, ctx.smul(c, ctx.one))
            embed[st] = acc
        project = {big: sm for sm, big in embed.items()}
        if len(project) != small.cardinality:
            raise FieldError("subfield embedding is not injective")
        return SubfieldMap(m=m, small=small, embed=embed, project=project)


class FieldElement:
    """Thin wrapper pairing a coefficient tuple with its context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add(self.coeffs, _coeffs(other)))

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self.coeffs, _coeffs(other)))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.coeffs, _coeffs(other)))

    def __truediv__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.coeffs, self.ctx.inv(_coeffs(other))))

    def __pow__(self, m):
        return FieldElement(self.ctx, self.ctx.pow(self.coeffs, m))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs
        if isinstance(other, tuple):
            return self.coeffs == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def frobenius(self, j: int = 1) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.frob(self.coeffs, j))

    def trace(self, m: int = 1) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.trace_to(self.coeffs, m))

    def order(self) -> int:
        return self.ctx.multiplicative_order(self.coeffs)

    def is_primitive(self) -> bool:
        return self.ctx.is_primitive(self.coeffs)

    def __repr__(self):
        return f"FieldElement({list(self.coeffs)})"


def _coeffs(x) -> tuple:
    return x.coeffs if isinstance(x, FieldElement) else x


# ---------------------------------------------------------------------------
# spec-level operations


def build_field(
    p: int,
    e: int,
    n: int,
    modulus: list[int] | None = None,
    table_budget: int = DEFAULT_TABLE_BUDGET,
    enum_budget: int = DEFAULT_ENUM_BUDGET,
) -> FieldContext:
    """Construct F_{q^n} over F_q = F_{p^e} with generator and subfield maps."""
    return FieldContext(
        p, e, n, modulus=modulus, table_budget=table_budget, enum_budget=enum_budget
    )


def frobenius(ctx: FieldContext, a, j: int = 1):
    out = ctx.frob(_coeffs(a), j)
    return FieldElement(ctx, out) if isinstance(a, FieldElement) else out


def trace(ctx: FieldContext, a, m: int = 1):
    out = ctx.trace_to(_coeffs(a), m)
    return FieldElement(ctx, out) if isinstance(a, FieldElement) else out


def multiplicative_order(ctx: FieldContext, a) -> int:
    return ctx.multiplicative_order(_coeffs(a))


def is_primitive(ctx: FieldContext, a) -> bool:
    return ctx.is_primitive(_coeffs(a))
