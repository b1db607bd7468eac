"""Integer helpers: primality, p-adic valuation of integers and rationals."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

# Deterministic witness set for n < 3.3e24 (covers all 64-bit inputs).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_BOUND = 3317044064679887385961981


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Miller-Rabin with a fixed witness set below ``3.3e24``; above that bound
    defers to sympy's BPSW test.
    """
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    if n >= _MR_BOUND:
        from sympy import isprime

        return bool(isprime(n))
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    return p


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of a small positive integer, ascending."""
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def split_int(n: int, p: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``n = p**k * m`` and ``p`` not dividing ``m``.

    Uses repeated exact division; ``n`` must be nonzero.
    """
    if n == 0:
        raise ValueError("split_int of zero")
    k = 0
    # divide by p^(2^j) blocks first so huge valuations cost O(log) divisions
    while n % p == 0:
        step, pk = 1, p
        while n % (pk * pk) == 0:
            pk *= pk
            step *= 2
        n //= pk
        k += step
    return k, n


def vp_int(n: int, p: int) -> int:
    return split_int(n, p)[0]


def vp_rat(q: Fraction | int, p: int) -> int | None:
    """Additive p-adic valuation of a rational; ``None`` stands for infinity."""
    q = Fraction(q)
    if q == 0:
        return None
    return vp_int(q.numerator, p) - vp_int(q.denominator, p)


def unit_part(q: Fraction | int, p: int) -> tuple[int, Fraction]:
    """Write ``q = p**k * w`` with ``w`` a p-adic unit; ``q`` must be nonzero."""
    q = Fraction(q)
    a, num = split_int(q.numerator, p)
    b, den = split_int(q.denominator, p)
    return a - b, Fraction(num, den)


def mod_rat(q: Fraction | int, m: int) -> int:
    """Image of a rational with denominator invertible mod ``m`` in Z/m."""
    q = Fraction(q)
    return q.numerator * pow(q.denominator, -1, m) % m
