"""Dense polynomials over F_q, with factorization and divisor machinery.

Coefficients are field-element tuples drawn from a :class:`SubfieldView`
(either a standalone GF(q) context or a subfield of a larger one, including
the whole field for gcd work in F_{q^n}[x]).  Factorization runs the usual
squarefree / distinct-degree / equal-degree pipeline; equal-degree splitting
walks a fixed sequence of trial polynomials so factor order is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .fields import FieldContext, SubfieldView


class Poly:
    """Immutable dense polynomial; ``coeffs`` is little-endian, no top zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: SubfieldView, coeffs):
        c = list(coeffs)
        zero = field.zero
        while c and c[-1] == zero:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    # -- constructors

    @staticmethod
    def zero(field: SubfieldView) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def one(field: SubfieldView) -> "Poly":
        return Poly(field, (field.one,))

    @staticmethod
    def x(field: SubfieldView) -> "Poly":
        return Poly(field, (field.zero, field.one))

    @staticmethod
    def x_pow(field: SubfieldView, k: int, coeff=None) -> "Poly":
        return Poly(field, (field.zero,) * k + ((coeff if coeff is not None else field.one),))

    @staticmethod
    def xn_minus_1(field: SubfieldView, n: int) -> "Poly":
        c = [field.zero] * (n + 1)
        c[0] = field.neg(field.one)
        c[n] = field.one
        return Poly(field, c)

    # -- basic structure

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def key(self) -> tuple:
        """Hashable canonical form (integer-encoded coefficients)."""
        to_int = self.field.to_int
        return tuple(to_int(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Poly({self.format()})"

    def format(self) -> str:
        """Readable form like ``x^4+2x+1`` (prime-subfield coefficients show
        as integers, others as tuples)."""
        if self.is_zero():
            return "0"
        f = self.field
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == f.zero:
                continue
            ci = f.to_int(c)
            if i == 0:
                terms.append(str(ci))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if ci == 1 else f"{ci}{xs}")
        return "+".join(terms)

    # -- arithmetic

    def __add__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __sub__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        out = [f.neg(c) for c in b]
        if len(a) > len(out):
            out.extend([f.zero] * (len(a) - len(out)))
        for i, c in enumerate(a):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        out = [f.zero] * (len(a) + len(b) - 1)
        zero = f.zero
        for i, ai in enumerate(a):
            if ai == zero:
                continue
            for j, bj in enumerate(b):
                if bj != zero:
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        return Poly(f, out)

    def scale(self, c) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(c, x) for x in self.coeffs])

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lead = f.inv(b[-1])
        q = [f.zero] * max(0, len(a) - db)
        zero = f.zero
        while len(a) - 1 >= db and a:
            c = f.mul(a[-1], inv_lead)
            shift = len(a) - 1 - db
            q[shift] = c
            if c != zero:
                for i in range(db + 1):
                    if b[i] != zero:
                        a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]))
            a.pop()
            while a and a[-1] == zero:
                a.pop()
        return Poly(f, q), Poly(f, a)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def mulmod(self, other: "Poly", mod: "Poly") -> "Poly":
        return (self * other) % mod

    def powmod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly.one(self.field)
        base = self % mod
        while e:
            if e & 1:
                result = result.mulmod(base, mod)
            base = base.mulmod(base, mod)
            e >>= 1
        return result

    def eval(self, a: tuple) -> tuple:
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, a), c)
        return acc

    def derivative(self) -> "Poly":
        f = self.field
        ctx = f.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(ctx.smul(i, self.coeffs[i]))
        return Poly(f, out)

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


# ---------------------------------------------------------------------------
# factorization


@dataclass(frozen=True)
class Factorization:
    """unit * prod(poly^mult); factors are monic irreducible, sorted."""

    field: SubfieldView
    unit: tuple
    pairs: tuple  # of (Poly, int)

    def expand(self) -> Poly:
        out = Poly(self.field, (self.unit,))
        for poly, mult in self.pairs:
            for _ in range(mult):
                out = out * poly
        return out

    @property
    def distinct_count(self) -> int:
        return len(self.pairs)

    @property
    def is_squarefree(self) -> bool:
        return all(m == 1 for _, m in self.pairs)

    def degree(self) -> int:
        return sum(p.degree * m for p, m in self.pairs)

    def divisors(self, degree: int | None = None) -> list[Poly]:
        """All monic divisors, graded-lexicographically ordered."""
        out = []
        ranges = [range(m + 1) for _, m in self.pairs]
        for exps in product(*ranges):
            d = Poly.one(self.field)
            deg = 0
            for (poly, _), k in zip(self.pairs, exps):
                deg += poly.degree * k
            if degree is not None and deg != degree:
                continue
            for (poly, _), k in zip(self.pairs, exps):
                for _ in range(k):
                    d = d * poly
            out.append(d)
        out.sort(key=lambda f: (f.degree, f.key()))
        return out

    def divisor_data(self) -> list[tuple[Poly, int, int]]:
        """(divisor, moebius, phi) triples for every monic divisor."""
        out = []
        ranges = [range(m + 1) for _, m in self.pairs]
        q = self.field.order
        for exps in product(*ranges):
            d = Poly.one(self.field)
            mu = 1
            phi = 1
            for (poly, _), k in zip(self.pairs, exps):
                if k:
                    for _ in range(k):
                        d = d * poly
                    deg = poly.degree
                    phi *= q ** (deg * k) - q ** (deg * (k - 1))
                    mu = 0 if k > 1 else -mu
            out.append((d, mu, phi))
        out.sort(key=lambda t: (t[0].degree, t[0].key()))
        return out


def _squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun-style decomposition valid in characteristic p."""
    field = f.field
    p = field.char
    out: list[tuple[Poly, int]] = []

    def p_th_root(g: Poly) -> Poly:
        # g = h(x^p); the p-th root of a coefficient c in F_q is c**(q/p)
        coeffs = []
        for i in range(0, g.degree + 1, p):
            c = g.coeffs[i]
            coeffs.append(field.pow(c, field.order // p))
        return Poly(field, coeffs)

    def recurse(g: Poly, mult: int):
        if g.degree < 1:
            return
        d = g.derivative()
        if d.is_zero():
            recurse(p_th_root(g), mult * p)
            return
        w = poly_gcd(g, d)
        v = g // w  # product of distinct irreducibles at multiplicity-coprime-to-p slots
        i = 1
        while not v.is_one():
            y = poly_gcd(v, w)
            piece = v // y
            if piece.degree > 0:
                out.append((piece.monic(), i * mult))
            v = y
            w = w // y
            i += 1
        if w.degree > 0:
            recurse(p_th_root(w), mult * p)

    recurse(f.monic(), 1)
    return out


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split squarefree monic f into (product, degree) chunks."""
    field = f.field
    q = field.order
    out = []
    x = Poly.x(field)
    h = x % f
    g = f
    d = 0
    while g.degree > 0:
        d += 1
        if 2 * d > g.degree:
            out.append((g, g.degree))
            break
        h = h.powmod(q, g)
        gd = poly_gcd(h - x, g)
        if gd.degree > 0:
            out.append((gd, d))
            g = g // gd
            h = h % g
    return out


def _trial_polys(field: SubfieldView, max_degree: int):
    """Deterministic stream of candidate splitting polynomials."""
    elems = field.elements()
    for deg in range(1, max(2, max_degree + 1)):
        for rest in product(elems, repeat=deg):
            for lead in elems[1:]:
                yield Poly(field, list(rest) + [lead])


def _equal_degree(f: Poly, d: int) -> list[Poly]:
    """Cantor-Zassenhaus split of squarefree f = product of degree-d factors."""
    field = f.field
    q = field.order
    p = field.char
    if f.degree == d:
        return [f.monic()]
    pieces = [f.monic()]
    done: list[Poly] = []
    trials = _trial_polys(field, f.degree - 1)
    one = Poly.one(field)
    while pieces:
        todo = pieces.pop()
        if todo.degree == d:
            done.append(todo)
            continue
        split = None
        while split is None:
            t = next(trials) % todo
            if t.degree < 1:
                continue
            if p == 2:
                # additive splitting: absolute trace map over F_{q^d}
                e = d * (field.order.bit_length() - 1)
                acc = t % todo
                cur = acc
                for _ in range(e - 1):
                    cur = cur.mulmod(cur, todo)
                    acc = acc + cur
                g = poly_gcd(acc % todo, todo)
            else:
                h = t.powmod((q**d - 1) // 2, todo)
                g = poly_gcd(h - one, todo)
            if 0 < g.degree < todo.degree:
                split = g
        pieces.append(split.monic())
        pieces.append((todo // split).monic())
    done.sort(key=lambda x: x.key())
    return done


def factor_poly(f: Poly) -> Factorization:
    """Complete factorization into monic irreducibles with multiplicities."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    field = f.field
    unit = f.coeffs[-1]
    collected: dict[tuple, tuple[Poly, int]] = {}
    if f.degree > 0:
        for part, mult in _squarefree_decomposition(f):
            for chunk, d in _distinct_degree(part):
                for irr in _equal_degree(chunk, d):
                    k = irr.key()
                    if k in collected:
                        collected[k] = (irr, collected[k][1] + mult)
                    else:
                        collected[k] = (irr, mult)
    pairs = sorted(collected.values(), key=lambda t: (t[0].degree, t[0].key()))
    return Factorization(field=field, unit=unit, pairs=tuple(pairs))


def factor_xn_minus_1(field: SubfieldView, n: int) -> Factorization:
    """Factor x^n - 1 over F_q, peeling off the characteristic part first.

    With n = s * p^b (gcd(s, p) = 1) the factorization is the squarefree
    factorization of x^s - 1 with every multiplicity raised to p^b.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = field.char
    b = 0
    s = n
    while s % p == 0:
        s //= p
        b += 1
    fact = factor_poly(Poly.xn_minus_1(field, s))
    if b:
        pb = p**b
        fact = Factorization(
            field=field,
            unit=fact.unit,
            pairs=tuple((poly, mult * pb) for poly, mult in fact.pairs),
        )
    return fact


# ---------------------------------------------------------------------------
# polynomial Euler function and the linearized action


def phi_q(f: Poly | Factorization) -> int:
    """Order of the unit group of F_q[x]/(f), multiplicative over factors."""
    if isinstance(f, Poly):
        if f.is_zero():
            raise ValueError("phi of the zero polynomial")
        if not f.is_monic():
            raise ValueError("phi_q expects a monic polynomial")
        f = factor_poly(f)
    q = f.field.order
    out = 1
    for poly, k in f.pairs:
        d = poly.degree
        out *= q ** (d * k) - q ** (d * (k - 1))
    return out


def monic_divisors(fact: Factorization, degree: int | None = None) -> list[Poly]:
    return fact.divisors(degree)


def poly_moebius(f: Poly | Factorization) -> int:
    fact = factor_poly(f) if isinstance(f, Poly) else f
    if not fact.is_squarefree:
        return 0
    return -1 if fact.distinct_count % 2 else 1


def linearized_apply(ctx: FieldContext, f: Poly, a: tuple) -> tuple:
    """Evaluate sum f_i * a^(q^i): the q-associate action of f on a."""
    acc = ctx.zero
    cur = a
    for i, c in enumerate(f.coeffs):
        if i:
            cur = ctx.frob(cur, 1)
        if c != ctx.zero:
            acc = ctx.add(acc, ctx.mul(c, cur))
    return acc


def poly_from_prime_coeffs(field: SubfieldView, coeffs: list[int]) -> Poly:
    """Build a Poly from integer coefficients in the prime subfield."""
    ctx = field.ctx
    return Poly(field, [ctx.smul(c, ctx.one) for c in coeffs])
