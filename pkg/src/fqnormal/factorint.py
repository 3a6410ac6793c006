"""Integer factorization and multiplicative arithmetic for desk-scale scans.

Everything here is deterministic: Miller-Rabin with a fixed witness set,
trial division to a fixed bound, then Brent-cycle Pollard rho with a fixed
parameter schedule and a small p-1 stage for stubborn cofactors.  Scanners
that only need to *bound* the number of prime factors can use
``partial_factorize``, which never guesses: whatever is left unfactored is
returned as explicit cofactors whose prime divisors all exceed the trial
bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache


class FactorBudgetError(Exception):
    """Raised when a complete factorization exceeds its iteration budget."""


# Proves primality for every n below 3.317e24; above that the same bases
# plus _MR_EXTRA give a fixed (deterministic) strong-probable-prime test.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_EXTRA = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103)

_SMALL_PRIME_BOUND = 1 << 16
_small_primes: list[int] | None = None


def small_primes() -> list[int]:
    """Primes below 2**16, sieved once and cached."""
    global _small_primes
    if _small_primes is None:
        n = _SMALL_PRIME_BOUND
        sieve = bytearray([1]) * n
        sieve[0] = sieve[1] = 0
        for i in range(2, int(n**0.5) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _small_primes = [i for i in range(n) if sieve[i]]
    return _small_primes


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    witnesses = _MR_WITNESSES if n < _MR_PROVEN_LIMIT else _MR_WITNESSES + _MR_EXTRA
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    n += 1
    if n <= 2:
        return 2
    if n % 2 == 0:
        n += 1
    while not is_prime(n):
        n += 2
    return n


def is_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, e) with q = p**e and p prime, or None."""
    if q < 2:
        return None
    for p in small_primes()[:60]:  # covers p <= 281, enough for e >= 2 at desk scale
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            return (p, e) if q == 1 else None
    return (q, 1) if is_prime(q) else None


def _trial_division(n: int, bound: int) -> tuple[dict[int, int], int]:
    bound = min(bound, _SMALL_PRIME_BOUND - 1)
    factors: dict[int, int] = {}
    for p in small_primes():
        if p > bound or p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    # no divisor <= min(bound, sqrt(n)) remains, so n <= bound^2 must be prime
    if 1 < n <= bound * bound:
        factors[n] = factors.get(n, 0) + 1
        n = 1
    return factors, n


def _iroot(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("negative")
    if k == 2:
        return math.isqrt(n)
    x = int(round(n ** (1.0 / k))) + 1
    while x**k > n:
        x -= 1
    return x


def _perfect_power(n: int) -> tuple[int, int] | None:
    for k in (2, 3, 5, 7, 11, 13):
        r = _iroot(n, k)
        if r > 1 and r**k == n:
            return r, k
    return None


def _pollard_brent(n: int, c: int, max_iters: int) -> int | None:
    """Brent's cycle variant with batched gcds; deterministic for fixed c."""
    y, r, q = 2, 1, 1
    g = 1
    x = ys = y
    count = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(128, r - k)):
                y = (y * y + c) % n
                q = q * (x - y) % n
            g = math.gcd(q, n)
            k += 128
            count += 128
            if count > max_iters:
                return None
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(x - ys, n)
    return g if 1 < g < n else None


def _pminus1(n: int, bound: int) -> int | None:
    a = 2
    for p in small_primes():
        if p > bound:
            break
        pk = p
        while pk * p <= bound:
            pk *= p
        a = pow(a, pk, n)
        if a == 1:
            return None
    g = math.gcd(a - 1, n)
    return g if 1 < g < n else None


def _split(n: int, rho_budget: int) -> int:
    """Find a nontrivial factor of composite n or raise FactorBudgetError."""
    f = _pminus1(n, 20_000)
    if f:
        return f
    for c in (1, 3, 5, 7, 11, 2, 4, 6, 8, 9):
        f = _pollard_brent(n, c, rho_budget)
        if f:
            return f
    raise FactorBudgetError(f"could not split {n} within budget")


def factorize(n: int, trial_bound: int = 10_000, rho_budget: int = 4_000_000) -> dict[int, int]:
    """Complete prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("n must be positive")
    factors, rest = _trial_division(n, trial_bound)
    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        pp = _perfect_power(m)
        if pp:
            r, k = pp
            if is_prime(r):
                factors[r] = factors.get(r, 0) + k
                continue
            stack.extend([r] * k)
            continue
        f = _split(m, rho_budget)
        stack.append(f)
        stack.append(m // f)
    return factors


@dataclass
class PartialFactorization:
    """Known prime part plus unfactored cofactors.

    Every prime divisor of every cofactor exceeds ``floor_bound``, which makes
    log-based bounds on the unseen prime count sound.
    """

    n: int
    primes: dict[int, int] = field(default_factory=dict)
    cofactors: list[int] = field(default_factory=list)
    floor_bound: int = 2

    @property
    def complete(self) -> bool:
        return not self.cofactors

    def w_lower(self) -> int:
        """Certified lower bound on the number of distinct prime factors."""
        return len(self.primes) + (1 if self.cofactors else 0)

    def w_upper(self) -> int:
        """Certified upper bound on the number of distinct prime factors."""
        extra = 0
        for c in self.cofactors:
            extra += int(math.log(c) / math.log(self.floor_bound))
        return len(self.primes) + extra

    def theta_upper(self) -> Fraction:
        """Upper bound on phi(n)/n (ignores unknown primes, each of which
        would only lower theta)."""
        t = Fraction(1)
        for p in self.primes:
            t *= Fraction(p - 1, p)
        return t

    def theta_lower(self) -> Fraction:
        """Lower bound on phi(n)/n using the unseen-prime count bound."""
        t = self.theta_upper()
        b = self.floor_bound
        for c in self.cofactors:
            k = int(math.log(c) / math.log(b))
            t *= Fraction(b - 1, b) ** k
        return t


def partial_factorize(
    n: int,
    parts: list[int] | None = None,
    trial_bound: int = 10_000,
    rho_budget: int = 60_000,
) -> PartialFactorization:
    """Best-effort factorization that never exceeds its budget.

    ``parts`` may supply a list of integers whose product is n (for example a
    cyclotomic splitting); each part is attacked separately, which helps rho
    considerably.
    """
    if parts is None:
        parts = [n]
    result = PartialFactorization(n=n, floor_bound=trial_bound)
    pending: list[int] = []
    for part in parts:
        fs, rest = _trial_division(part, trial_bound)
        for p, k in fs.items():
            result.primes[p] = result.primes.get(p, 0) + k
        if rest > 1:
            pending.append(rest)
    while pending:
        m = pending.pop()
        if is_prime(m):
            result.primes[m] = result.primes.get(m, 0) + 1
            continue
        pp = _perfect_power(m)
        if pp:
            pending.extend([pp[0]] * pp[1])
            continue
        f = _pminus1(m, 10_000)
        if not f:
            for c in (1, 3, 5):
                f = _pollard_brent(m, c, rho_budget)
                if f:
                    break
        if f:
            pending.append(f)
            pending.append(m // f)
        else:
            result.cofactors.append(m)
    # exponents of cofactor primes are unknown; primes dict holds known part
    return result


# ---------------------------------------------------------------------------
# multiplicative functions


def w_int(n_or_factors: int | dict[int, int]) -> int:
    """Number of distinct prime divisors."""
    f = factorize(n_or_factors) if isinstance(n_or_factors, int) else n_or_factors
    return len(f)


def W_int(n_or_factors: int | dict[int, int]) -> int:
    """Number of squarefree divisors, 2**w(n)."""
    return 1 << w_int(n_or_factors)


def d_int(n_or_factors: int | dict[int, int]) -> int:
    """Number of divisors."""
    f = factorize(n_or_factors) if isinstance(n_or_factors, int) else n_or_factors
    out = 1
    for k in f.values():
        out *= k + 1
    return out


def euler_phi(n_or_factors: int | dict[int, int]) -> int:
    f = factorize(n_or_factors) if isinstance(n_or_factors, int) else n_or_factors
    out = 1
    for p, k in f.items():
        out *= (p - 1) * p ** (k - 1)
    return out


def moebius(n_or_factors: int | dict[int, int]) -> int:
    f = factorize(n_or_factors) if isinstance(n_or_factors, int) else n_or_factors
    if any(k > 1 for k in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def theta_frac(n_or_factors: int | dict[int, int]) -> Fraction:
    """phi(n)/n as an exact rational."""
    f = factorize(n_or_factors) if isinstance(n_or_factors, int) else n_or_factors
    t = Fraction(1)
    for p in f:
        t *= Fraction(p - 1, p)
    return t


def divisors_from_factors(factors: dict[int, int]) -> list[int]:
    divs = [1]
    for p, k in sorted(factors.items()):
        divs = [d * p**i for d in divs for i in range(k + 1)]
    return sorted(divs)


def divisor_counts_upto(limit: int) -> list[int]:
    """d(m) for 0 <= m <= limit via a sieve (d[0] = 0)."""
    counts = [0] * (limit + 1)
    for i in range(1, limit + 1):
        for j in range(i, limit + 1, i):
            counts[j] += 1
    return counts


# ---------------------------------------------------------------------------
# cyclotomic splitting of q^N - 1


@lru_cache(maxsize=None)
def cyclotomic_value(d: int, x: int) -> int:
    """Value of the d-th cyclotomic polynomial at integer x >= 2."""
    if d == 1:
        return x - 1
    val = x**d - 1
    for dd in divisors_from_factors(factorize(d)):
        if dd < d:
            val //= cyclotomic_value(dd, x)
    return val


def qpow_minus1_parts(p: int, N: int) -> list[int]:
    """Pairwise multiplicable split p**N - 1 = prod of cyclotomic values."""
    return [cyclotomic_value(d, p) for d in divisors_from_factors(factorize(N))]


def factor_qn_minus_1(q: int, n: int, rho_budget: int = 4_000_000) -> dict[int, int]:
    """Complete factorization of q**n - 1, exploiting the cyclotomic split."""
    pe = is_prime_power(q)
    if pe is None:
        raise ValueError(f"{q} is not a prime power")
    p, e = pe
    factors: dict[int, int] = {}
    for part in qpow_minus1_parts(p, e * n):
        for pr, k in factorize(part, rho_budget=rho_budget).items():
            factors[pr] = factors.get(pr, 0) + k
    return factors
