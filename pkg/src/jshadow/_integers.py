"""Shared integer utilities: primality, sieves, exact factorization.

Everything here is deterministic.  Miller-Rabin uses a base set that is
provably sufficient below 3.3 * 10**24, far beyond any number this
package factors; larger inputs fall back to trial division first, so
factorizations are always certified.
"""

from __future__ import annotations

import math
from functools import lru_cache

# Deterministic Miller-Rabin witnesses for n < 3_317_044_064_679_887_385_961_981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIME_LIMIT = 1000


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, by sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = bytearray(len(range(start, n + 1, p)))
    return [i for i in range(n + 1) if sieve[i]]


_SMALL_PRIMES = primes_up_to(_SMALL_PRIME_LIMIT)
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a proven base set)."""
    if n < 2:
        return False
    if n <= _SMALL_PRIME_LIMIT:
        return n in _SMALL_PRIME_SET
    for p in _SMALL_PRIMES[:25]:
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    x0, c, m = 2, 1, 128
    while True:
        y, r, q = x0, 1, 1
        g = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        x0 += 1
        c += 1


def factorint(n: int) -> dict[int, int]:
    """Exact prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorint requires n >= 1")
    factors: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n == 1:
        return factors
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(factors.items()))


@lru_cache(maxsize=4096)
def _factorint_cached(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(factorint(n).items())


def factorint_small(n: int) -> tuple[tuple[int, int], ...]:
    """Cached factorization for the small values that sweeps hit repeatedly."""
    return _factorint_cached(n)


def vp_int(n: int, p: int) -> int:
    """Exponent of p in n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def prime_power_base(q: int) -> tuple[int, int] | None:
    """Return (p, e) with q = p**e if q is a prime power, else None."""
    if q < 2:
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, e),) = factors.items()
    return p, e


def multiplicative_order_divides_check(u: int, ell: int) -> bool:
    """True iff u mod ell generates the full multiplicative group mod ell."""
    if u % ell == 0:
        raise ValueError("u must be a unit mod ell")
    for q in factorint(ell - 1):
        if pow(u, (ell - 1) // q, ell) == 1:
            return False
    return True
