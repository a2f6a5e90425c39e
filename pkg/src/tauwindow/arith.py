"""Exact integer arithmetic: factorization, divisor enumeration in ranges, gcd/lcm
in factored form.

Everything here is pure, deterministic, and exact; inputs up to 2**96 are
supported.  Small values (< 2**20) factor through a cached smallest-prime-factor
table, larger ones through trial division plus a deterministic Pollard-Brent
splitter, so scan workloads dominated by small m stay fast while occasional
large values remain correct.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Sequence

import numpy as np

MAX_VALUE = 1 << 96

_TRIAL_BOUND = 4096
_SPF_LIMIT = 1 << 20
_FULL_ENUMERATION_LIMIT = 100_000

# Deterministic Miller-Rabin: these bases decide primality for all n below
# 3317044064679887385961981 (Sorenson-Webster).  Beyond that a strong Lucas
# test is added (Baillie-PSW style); no counterexample to that combination is
# known anywhere, let alone below 2**96.
_MR_PROVEN_LIMIT = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SPF: np.ndarray | None = None
_SMALL_PRIMES: list[int] | None = None


@dataclass(frozen=True)
class Factorization:
    """A positive integer together with its ordered prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"factorization value must be positive, got {self.value}")
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("factor primes must be strictly increasing")
            if e < 1:
                raise ValueError("factor exponents must be >= 1")
            prev = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors do not multiply back to {self.value}")

    def tau(self) -> int:
        """Total number of divisors."""
        out = 1
        for _, e in self.factors:
            out *= e + 1
        return out

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


@dataclass(frozen=True)
class DivisorRange:
    """Closed interval [lo, hi] of candidate divisors."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 1:
            raise ValueError(f"range lower bound must be positive, got {self.lo}")
        if self.lo > self.hi:
            raise ValueError(f"empty range: lo={self.lo} > hi={self.hi}")


def _spf_table() -> np.ndarray:
    global _SPF
    if _SPF is None:
        spf = np.zeros(_SPF_LIMIT, dtype=np.int32)
        for p in range(2, math.isqrt(_SPF_LIMIT) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        _SPF = spf
    return _SPF


def _small_primes() -> list[int]:
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        spf = _spf_table()
        _SMALL_PRIMES = [int(p) for p in np.flatnonzero(spf[2 : _TRIAL_BOUND + 1] == 0) + 2]
    return _SMALL_PRIMES


def _miller_rabin(n: int, bases: Sequence[int]) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    # n odd positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # n odd, not a perfect square, no tiny prime factors
    if math.isqrt(n) ** 2 == n:
        return False
    d_disc = 5
    while True:
        j = _jacobi(d_disc % n, n)
        if j == -1:
            break
        if j == 0:
            return False
        d_disc = -(d_disc + 2) if d_disc > 0 else -(d_disc - 2)
    p_par, q_par = 1, (1 - d_disc) // 4
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    inv2 = (n + 1) // 2
    u, v, qk = 1, p_par, q_par % n
    for bit in bin(d)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p_par * u + v) * inv2 % n, (d_disc * u + p_par * v) * inv2 % n
            qk = qk * q_par % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic for n below ~3.3e24; strong-Lucas-reinforced beyond."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if not _miller_rabin(n, _MR_BASES):
        return False
    if n < _MR_PROVEN_LIMIT:
        return True
    return _strong_lucas(n)


def _iroot(x: int, e: int) -> int:
    """Floor of the e-th root, exactly."""
    if e == 1 or x < 2:
        return x
    if e == 2:
        return math.isqrt(x)
    r = int(round(x ** (1.0 / e)))
    while r > 1 and r**e > x:
        r -= 1
    while (r + 1) ** e <= x:
        r += 1
    return r


def _perfect_power(x: int) -> tuple[int, int]:
    """Return (e, root) with root**e == x and e maximal, or (1, x)."""
    for e in range(x.bit_length() - 1, 1, -1):
        r = _iroot(x, e)
        if r >= 2 and r**e == x:
            return e, r
    return 1, x


def _pollard_brent(n: int) -> int:
    """Nontrivial divisor of odd composite n; deterministic parameter schedule."""
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _factorize_small(n: int) -> list[tuple[int, int]]:
    spf = _spf_table()
    out: list[tuple[int, int]] = []
    while n > 1:
        p = int(spf[n]) or n
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def _split_composite(m: int, out: dict[int, int]) -> None:
    stack: list[tuple[int, int]] = [(m, 1)]
    while stack:
        x, mult = stack.pop()
        if x < _SPF_LIMIT:
            for p, e in _factorize_small(x):
                out[p] = out.get(p, 0) + e * mult
            continue
        if is_prime(x):
            out[x] = out.get(x, 0) + mult
            continue
        e, root = _perfect_power(x)
        if e > 1:
            stack.append((root, mult * e))
            continue
        d = _pollard_brent(x)
        stack.append((d, mult))
        stack.append((x // d, mult))


def factorize(n: int) -> Factorization:
    """Prime factorization of n, 1 <= n < 2**96."""
    if n < 1 or n >= MAX_VALUE:
        raise ValueError(f"factorize expects 1 <= n < 2**96, got {n}")
    if n == 1:
        return Factorization(1, ())
    if n < _SPF_LIMIT:
        return Factorization(n, tuple(_factorize_small(n)))
    found: dict[int, int] = {}
    m = n
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        if m <= _TRIAL_BOUND * _TRIAL_BOUND:
            # no prime factor below its square root remains, so m is prime
            found[m] = found.get(m, 0) + 1
        else:
            _split_composite(m, found)
    return Factorization(n, tuple(sorted(found.items())))


def _all_divisors(factors: Sequence[tuple[int, int]]) -> list[int]:
    divs = [1]
    for p, e in factors:
        powers = [p**i for i in range(1, e + 1)]
        divs += [d * q for d in divs for q in powers]
    divs.sort()
    return divs


def _divisors_mitm(fact: Factorization, rng: DivisorRange) -> list[int]:
    # split the prime powers into two halves of balanced divisor count,
    # then match sorted half-divisors against [lo, hi] by binary search
    left: list[tuple[int, int]] = []
    right: list[tuple[int, int]] = []
    tl = tr = 1
    for p, e in sorted(fact.factors, key=lambda pe: pe[1] + 1, reverse=True):
        if tl <= tr:
            left.append((p, e))
            tl *= e + 1
        else:
            right.append((p, e))
            tr *= e + 1
    half_a = _all_divisors(left)
    half_b = _all_divisors(right)
    out: list[int] = []
    for a in half_a:
        lo_b = (rng.lo + a - 1) // a
        hi_b = rng.hi // a
        if lo_b > hi_b:
            continue
        i = bisect_left(half_b, lo_b)
        j = bisect_right(half_b, hi_b)
        out.extend(a * b for b in half_b[i:j])
    out.sort()
    return out


def divisors_in_range(n: int, rng: DivisorRange | tuple[int, int]) -> list[int]:
    """Sorted list of divisors d of n with lo <= d <= hi."""
    if not isinstance(rng, DivisorRange):
        rng = DivisorRange(*rng)
    if n < 1:
        raise ValueError(f"divisors_in_range expects n >= 1, got {n}")
    fact = factorize(n)
    if fact.tau() <= _FULL_ENUMERATION_LIMIT:
        divs = _all_divisors(fact.factors)
        return divs[bisect_left(divs, rng.lo) : bisect_right(divs, rng.hi)]
    return _divisors_mitm(fact, rng)


def gcd_pair(a: int, b: int) -> int:
    """Greatest common divisor of two positive integers."""
    if a < 1 or b < 1:
        raise ValueError("gcd_pair expects positive integers")
    return math.gcd(a, b)


def lcm_factored(values: Sequence[Factorization]) -> Factorization:
    """Least common multiple, computed prime-by-prime so it never overflows."""
    if not values:
        raise ValueError("lcm_factored expects a nonempty list")
    merged: dict[int, int] = {}
    for fact in values:
        for p, e in fact.factors:
            if e > merged.get(p, 0):
                merged[p] = e
    factors = tuple(sorted(merged.items()))
    value = 1
    for p, e in factors:
        value *= p**e
    return Factorization(value, factors)
