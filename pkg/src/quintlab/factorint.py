"""Integer factorization utilities: Miller-Rabin, Pollard-Brent rho, trial division.

Scale target: discriminants and resolvent indices at desk scale (factors up to
~18 digits via rho).  A composite that survives the budget raises, never
returning a wrong factorization.
"""

from __future__ import annotations

import random
from math import gcd, isqrt


class FactorizationIncomplete(RuntimeError):
    pass


_SMALL_PRIMES = None


def small_primes(bound=100000):
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None or _SMALL_PRIMES[-1] < bound - 50:
        sieve = bytearray([1]) * bound
        sieve[0:2] = b"\x00\x00"
        for i in range(2, isqrt(bound) + 1):
            if sieve[i]:
                sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
        _SMALL_PRIMES = [i for i in range(bound) if sieve[i]]
    return _SMALL_PRIMES


def is_probable_prime(n):
    """Miller-Rabin; deterministic base set below 3.3e24, 30 random rounds above."""
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

    def witness(a):
        x = pow(a, d, n)
        if x in (1, n - 1):
            return False
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                return False
        return True

    if n < 3317044064679887385961981:
        bases = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    else:
        rng = random.Random(0xC0FFEE ^ n)
        bases = [rng.randrange(2, n - 1) for _ in range(30)]
    return not any(witness(a) for a in bases)


def _pollard_brent(n, seed):
    rng = random.Random(seed)
    if n % 2 == 0:
        return 2
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g, r, q = 1, 1, 1
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = (q * abs(x - y)) % n
            g = gcd(q, n)
            k += m
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
    return g if g != n else None


def factorize(n, rho_rounds=40):
    """Prime factorization {p: e} of |n|; raises FactorizationIncomplete on failure."""
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    out = {}
    for p in small_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        # perfect power check helps rho on squares
        for k in (2, 3, 5):
            root = round(m ** (1.0 / k))
            for cand in (root - 1, root, root + 1):
                if cand > 1 and cand ** k == m:
                    stack.extend([cand] * k)
                    break
            else:
                continue
            break
        else:
            f = None
            for attempt in range(rho_rounds):
                f = _pollard_brent(m, seed=(m ^ (attempt * 0x9E3779B9)) & 0xFFFFFFFF)
                if f and 1 < f < m:
                    break
                f = None
            if f is None:
                raise FactorizationIncomplete("no factor of %d found within budget" % m)
            stack.extend([f, m // f])
    return out


def squarefree_part(n):
    """(s, m) with n = s * m^2 and s squarefree (sign carried on s)."""
    sign = -1 if n < 0 else 1
    fac = factorize(abs(n))
    s, m = 1, 1
    for p, e in fac.items():
        if e % 2:
            s *= p
        m *= p ** (e // 2)
    return sign * s, m
