"""k-normality classification over F_{q^n}.

Two independent classifiers are provided and must always agree:

* ``k_normality`` scans the monic divisors of x^n - 1 in ascending degree for
  the minimal one annihilating the element under the q-associate action.
* ``k_normality_gcd`` builds g_a(x) = sum a^(q^i) x^(n-1-i) in F_{q^n}[x] and
  reads k off deg gcd(x^n - 1, g_a).

The zero element is assigned k = n (its annihilator ideal is everything, and
the count formula gives exactly one such element).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .factorint import is_prime_power
from .fields import FieldContext, FieldElement, _coeffs, build_field
from .polys import (
    Factorization,
    Poly,
    factor_xn_minus_1,
    linearized_apply,
    phi_q,
    poly_gcd,
)


@dataclass(frozen=True)
class KNormalityReport:
    element: tuple
    sigma_min_poly: Poly
    k: int
    is_primitive: bool
    order: int


_divisor_cache_key = "_knormal_divisors"


def _sorted_divisors(ctx: FieldContext, sub_n: int) -> list[Poly]:
    cache = getattr(ctx, _divisor_cache_key, None)
    if cache is None:
        cache = {}
        setattr(ctx, _divisor_cache_key, cache)
    divs = cache.get(sub_n)
    if divs is None:
        fact = factor_xn_minus_1(ctx.subview(1), sub_n)
        divs = fact.divisors()
        cache[sub_n] = divs
    return divs


def xn_minus_1_factorization(ctx: FieldContext, sub_n: int | None = None) -> Factorization:
    return factor_xn_minus_1(ctx.subview(1), sub_n or ctx.n)


def sigma_minimal_poly(ctx: FieldContext, a, sub_n: int | None = None) -> Poly:
    """Minimal monic divisor m of x^sub_n - 1 with m acting to zero on a.

    ``sub_n`` defaults to n; pass a divisor of n to classify an element of the
    intermediate field F_{q^sub_n} relative to its own extension over F_q.
    """
    a = _coeffs(a)
    sub_n = sub_n or ctx.n
    for d in _sorted_divisors(ctx, sub_n):
        if linearized_apply(ctx, d, a) == ctx.zero:
            return d
    raise AssertionError("x^n - 1 itself must annihilate every element")


def k_normality(ctx: FieldContext, a, sub_n: int | None = None) -> int:
    sub_n = sub_n or ctx.n
    return sub_n - sigma_minimal_poly(ctx, a, sub_n).degree


def k_normality_gcd(ctx: FieldContext, a) -> int:
    """Degree of gcd(x^n - 1, g_a) over F_{q^n}; n for the zero element."""
    a = _coeffs(a)
    n = ctx.n
    whole = ctx.subview(n)
    g_coeffs = []
    cur = a
    for i in range(n):
        if i:
            cur = ctx.frob(cur, 1)
        g_coeffs.append(cur)  # coefficient of x^(n-1-i)
    g = Poly(whole, list(reversed(g_coeffs)))
    if g.is_zero():
        return n
    xn1 = Poly.xn_minus_1(whole, n)
    return poly_gcd(xn1, g).degree


def is_d_free(ctx: FieldContext, a, d: int) -> bool:
    """gcd(d, (q^n - 1)/ord(a)) == 1, for nonzero a and d | q^n - 1."""
    a = _coeffs(a)
    if a == ctx.zero:
        raise ValueError("freeness is undefined for the zero element")
    if ctx.group_order % d:
        raise ValueError(f"{d} does not divide the group order")
    cofactor = ctx.group_order // ctx.multiplicative_order(a)
    return math.gcd(d, cofactor) == 1


def is_T_free(ctx: FieldContext, a, T: Poly) -> bool:
    """gcd(T, (x^n - 1)/m_sigma(a)) == 1, for T a monic divisor of x^n - 1."""
    a = _coeffs(a)
    view = ctx.subview(1)
    xn1 = Poly.xn_minus_1(view, ctx.n)
    if not (xn1 % T).is_zero():
        raise ValueError("T does not divide x^n - 1")
    cofactor = xn1 // sigma_minimal_poly(ctx, a)
    return poly_gcd(T, cofactor).degree == 0


def count_k_normal(q: int, n: int, k: int) -> int:
    """Exact N_k = sum of Phi_q(h) over monic h | x^n - 1 of degree n - k."""
    if not 0 <= k <= n:
        raise ValueError("k must lie in [0, n]")
    pe = is_prime_power(q)
    if pe is None:
        raise ValueError(f"{q} is not a prime power")
    p, e = pe
    view = build_field(p, e, 1).subview(1)
    fact = factor_xn_minus_1(view, n)
    return sum(phi_q(h) for h in fact.divisors(n - k))


def classify(ctx: FieldContext, a) -> KNormalityReport:
    a = _coeffs(a)
    m = sigma_minimal_poly(ctx, a)
    k = ctx.n - m.degree
    if a == ctx.zero:
        return KNormalityReport(a, m, k, False, 0)
    return KNormalityReport(a, m, k, ctx.is_primitive(a), ctx.multiplicative_order(a))


def k_histogram(ctx: FieldContext) -> dict[int, int]:
    """Brute-force census of k over the whole field (table-scale only)."""
    ctx.ensure_tables()
    hist: dict[int, int] = {}
    for a in ctx.elements():
        k = k_normality(ctx, a)
        hist[k] = hist.get(k, 0) + 1
    return hist
