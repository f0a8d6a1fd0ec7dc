"""Finite fields F_{p^m} with explicit irreducible modulus and Frobenius.

Elements are coefficient tuples mod p (ascending, length m).  The modulus is
the lexicographically least monic irreducible of degree m over F_p, found by
search; all exposed quantities are representation-independent.
"""

from __future__ import annotations

from functools import lru_cache


def _polmulmod(a, b, mod, p):
    m = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1) if a and b else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce modulo the monic modulus
    for k in range(len(out) - 1, m - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for i in range(m):
                out[k - m + i] = (out[k - m + i] - c * mod[i]) % p
    out = out[:m] + [0] * max(0, m - len(out))
    return tuple(out[:m])


def _is_irreducible_mod_p(coeffs, p):
    """Rabin test: monic poly (ascending) irreducible over F_p."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    mod = list(coeffs)

    def powx(e):
        # x^e mod (mod, p) by square and multiply
        result = (1,) + (0,) * (m - 1)
        base = tuple([0, 1] + [0] * (m - 2)) if m >= 2 else (0,)
        while e:
            if e & 1:
                result = _polmulmod(result, base, mod, p)
            base = _polmulmod(base, base, mod, p)
            e >>= 1
        return result

    x = tuple([0, 1] + [0] * (m - 2))
    if powx(p ** m) != x:
        return False
    from sympy import primefactors
    for q in primefactors(m):
        d = m // q
        diff = list(powx(p ** d))
        diff[1] = (diff[1] - 1) % p
        # gcd(x^{p^d} - x, modulus) must be 1: equivalent to diff invertible mod modulus
        if _polygcd_nonunit(diff, mod, p):
            return False
    return True


def _polygcd_nonunit(a, mod, p):
    """True if gcd(a, mod) over F_p is non-constant."""
    def deg(v):
        d = len(v) - 1
        while d >= 0 and v[d] % p == 0:
            d -= 1
        return d

    A, B = [c % p for c in mod], [c % p for c in a]
    while True:
        db = deg(B)
        if db < 0:
            return deg(A) > 0
        if db == 0:
            return False
        da = deg(A)
        if da < db:
            A, B = B, A
            continue
        inv = pow(B[db], p - 2, p)
        f = (A[da] * inv) % p
        shift = da - db
        for i in range(db + 1):
            A[i + shift] = (A[i + shift] - f * B[i]) % p
        # loop continues; A now has smaller degree


@lru_cache(maxsize=None)
def least_irreducible(p, m):
    """Lexicographically least (by ascending coeff tuple) monic irreducible of degree m mod p."""
    if m == 1:
        return (0, 1)
    # iterate constant-first tuples; constant must be nonzero
    from itertools import product
    for tail in product(range(p), repeat=m):
        if tail[0] == 0:
            continue
        coeffs = tail + (1,)
        if _is_irreducible_mod_p(list(coeffs), p):
            return coeffs
    raise RuntimeError("no irreducible found (impossible)")


class FiniteField:
    """F_{p^m} with fixed modulus; elements are coefficient tuples of length m."""

    def __init__(self, p, m=1, modulus=None):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus) if modulus is not None else least_irreducible(p, m)
        assert len(self.modulus) == m + 1 and self.modulus[m] == 1
        self.order = p ** m

    def __repr__(self):
        return "FiniteField(%d^%d)" % (self.p, self.m)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # -- element constructors ---------------------------------------------------

    def zero(self):
        return (0,) * self.m

    def one(self):
        return (1,) + (0,) * (self.m - 1)

    def gen(self):
        """Class of x (a root of the modulus)."""
        if self.m == 1:
            return (1,)
        return tuple([0, 1] + [0] * (self.m - 2))

    def elem(self, coeffs):
        c = list(coeffs) + [0] * self.m
        return tuple(x % self.p for x in c[: self.m])

    def from_int(self, n):
        """Base-p digits of n as an element (enumeration helper)."""
        digits = []
        for _ in range(self.m):
            digits.append(n % self.p)
            n //= self.p
        return tuple(digits)

    def elements(self):
        for n in range(self.order):
            yield self.from_int(n)

    # -- arithmetic ---------------------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        return _polmulmod(list(a), list(b), list(self.modulus), self.p)

    def smul(self, c, a):
        return tuple((c * x) % self.p for x in a)

    def pow(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        result = self.one()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == self.zero():
            raise ZeroDivisionError
        return self.pow(a, self.order - 2)

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def frobenius(self, a, k=1):
        """sigma^k(a) with sigma(x) = x^p."""
        return self.pow(a, self.p ** (k % self.m if self.m else 1))


def frobenius_coimage_dim(k: FiniteField, e):
    """dim_{F_p} of k / (sigma^e - 1)(k)  (= dim ker(sigma^e - 1)).

    Computed by exact F_p linear algebra on the matrix of sigma^e - 1.
    """
    if e < 1:
        raise ValueError("exponent must be >= 1")
    p, m = k.p, k.m
    # matrix of sigma^e - 1 on the power basis, columns = images of basis vectors
    cols = []
    for i in range(m):
        basis_vec = tuple(1 if j == i else 0 for j in range(m))
        img = k.sub(k.frobenius(basis_vec, e), basis_vec)
        cols.append(img)
    # rank over F_p by Gaussian elimination on the column list
    rows = [[cols[j][i] % p for j in range(m)] for i in range(m)]
    rank = 0
    for col in range(m):
        piv = None
        for i in range(rank, m):
            if rows[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(m):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return m - rank


def coset_reduce_mod_frobenius(k: FiniteField, a, e=4):
    """Canonical coset representative of a modulo (sigma^e - 1)(k).

    Used for the fourth Honda-parameter slot, where equality is tested in
    k~ = k/(sigma^e - 1)k.
    """
    p, m = k.p, k.m
    cols = []
    for i in range(m):
        basis_vec = tuple(1 if j == i else 0 for j in range(m))
        img = k.sub(k.frobenius(basis_vec, e), basis_vec)
        cols.append(list(img))
    # reduce a against the column space, echelonizing columns
    basis = []
    for c in cols:
        c = list(c)
        for b in basis:
            lead = next(i for i, x in enumerate(b) if x)
            if c[lead]:
                f = (c[lead] * pow(b[lead], p - 2, p)) % p
                c = [(x - f * y) % p for x, y in zip(c, b)]
        if any(c):
            basis.append(c)
    r = list(a)
    for b in basis:
        lead = next(i for i, x in enumerate(b) if x)
        if r[lead]:
            f = (r[lead] * pow(b[lead], p - 2, p)) % p
            r = [(x - f * y) % p for x, y in zip(r, b)]
    return tuple(r)
