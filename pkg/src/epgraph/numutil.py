"""Small exact-arithmetic helpers used by group constructors and formulas."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p**k and p prime, or None."""
    if n < 2:
        return None
    p = smallest_prime_factor(n)
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    m = n
    while m > 1:
        p = smallest_prime_factor(m)
        k = 0
        while m % p == 0:
            m //= p
            k += 1
        out[p] = k
    return out


def euler_phi(n: int) -> int:
    """Number of generators of a cyclic group of order n."""
    if n < 1:
        raise ValueError("euler_phi expects a positive integer")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def split_3adic(n: int) -> tuple[int, int]:
    """Write n = 3**k * t with t not divisible by 3; returns (k, t)."""
    if n < 1:
        raise ValueError("split_3adic expects a positive integer")
    k = 0
    t = n
    while t % 3 == 0:
        t //= 3
        k += 1
    return k, t


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out
