"""Exact univariate polynomials over Z and Q.

Coefficient lists are ascending: [a0, a1, ..., an] means a0 + a1*x + ... + an*x^n,
matching the bracket convention used by the table fixtures.  All arithmetic is
exact (Python ints / fractions.Fraction); there are no floats in this module.
"""

from __future__ import annotations

import re
from fractions import Fraction


class DegenerateInputError(ValueError):
    """Raised when an operation receives input outside its domain (e.g. constant poly)."""


def _strip(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


class IntPoly:
    """Polynomial with exact rational coefficients, ascending order.

    Despite the name, coefficients may be Fractions; most of the toolkit works
    with integer polynomials and the class keeps ints as ints.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = []
        for a in coeffs:
            if isinstance(a, Fraction) and a.denominator == 1:
                a = int(a)
            c.append(a)
        self.coeffs = tuple(_strip(c))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def parse(cls, text):
        """Parse '[a0,a1,...,an]' with optional whitespace, arbitrary-size ints."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError("polynomial literal must look like [a0,a1,...]: %r" % text)
        inner = body[1:-1].strip()
        if not inner:
            return cls([])
        parts = [p.strip() for p in inner.split(",")]
        if not all(re.fullmatch(r"[+-]?\d+", p) for p in parts):
            raise ValueError("non-integer coefficient in %r" % text)
        return cls(int(p) for p in parts)

    @classmethod
    def x_power(cls, n, c=1):
        return cls([0] * n + [c])

    def __repr__(self):
        return "IntPoly(%s)" % (list(self.coeffs),)

    def text(self):
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    # -- basic structure -------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self):
        return self.coeffs and self.coeffs[-1] == 1

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __sub__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly([])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def divmod(self, other):
        """Exact polynomial division over Q; returns (quotient, remainder)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lc = Fraction(other.leading())
        q = [Fraction(0)] * max(0, len(rem) - d)
        while len(_strip(rem)) - 1 >= d:
            rem = _strip(rem)
            k = len(rem) - 1 - d
            f = rem[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            rem[-1] = 0
        return IntPoly(q), IntPoly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def eval(self, x):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, c):
        """Return f(x + c) for an integer or Fraction c, exactly."""
        out = IntPoly([])
        xc = IntPoly([c, 1])
        pw = IntPoly([1])
        for a in self.coeffs:
            out = out + pw * a
            pw = pw * xc
        return out

    def scale_arg(self, m):
        """Return f(m * x)."""
        return IntPoly([c * (m ** i) for i, c in enumerate(self.coeffs)])

    def compose(self, g):
        """Return f(g(x))."""
        out = IntPoly([])
        pw = IntPoly([1])
        for a in self.coeffs:
            out = out + pw * a
            pw = pw * g
        return out

    def content(self):
        from math import gcd
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def primitive(self):
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly([c // g for c in self.coeffs])

    def clear_denominators(self):
        """Return (d, d*f) with minimal positive integer d making d*f integral."""
        from math import lcm
        d = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                d = lcm(d, c.denominator)
        return d, IntPoly([int(c * d) for c in self.coeffs])

    def monic_integral(self):
        """Minimal scaling x -> x/m turning f into a monic integral polynomial.

        For f with rational coefficients and nonzero leading coefficient a_n,
        returns g(x) = m^n/a_n * f(x/m), the minimal-m monic integral polynomial
        with roots m * (roots of f).
        """
        if self.is_zero():
            raise DegenerateInputError("zero polynomial")
        n = self.degree
        an = Fraction(self.leading())
        # g_k = a_k * m^(n-k) / a_n must be integral for all k
        m = 1
        while True:
            ok = True
            for k, a in enumerate(self.coeffs[:-1]):
                v = Fraction(a) * m ** (n - k) / an
                if v.denominator != 1:
                    ok = False
                    break
            if ok:
                break
            m += 1
        out = [int(Fraction(a) * m ** (n - k) / an) for k, a in enumerate(self.coeffs[:-1])]
        out.append(1)
        return m, IntPoly(out)


# -- resultants and discriminants ---------------------------------------------


def bareiss_det(M):
    """Fraction-free determinant of a square integer matrix (Bareiss). Exact."""
    n = len(M)
    if n == 0:
        return 1
    A = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pk - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = pk
    return sign * A[n - 1][n - 1]


def sylvester(f: IntPoly, g: IntPoly):
    m, n = f.degree, g.degree
    size = m + n
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    M = []
    for i in range(n):
        M.append([0] * i + fd + [0] * (size - i - len(fd)))
    for i in range(m):
        M.append([0] * i + gd + [0] * (size - i - len(gd)))
    return M


def resultant(f: IntPoly, g: IntPoly):
    """Resultant of two integer polynomials (Sylvester determinant, exact)."""
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree == 0:
        return f.leading() ** g.degree
    if g.degree == 0:
        return g.leading() ** f.degree
    return bareiss_det(sylvester(f, g))


def poly_discriminant(f: IntPoly):
    """disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f), exact.

    Raises DegenerateInputError on constant input.
    """
    n = f.degree
    if n < 1:
        raise DegenerateInputError("discriminant needs a nonconstant polynomial")
    if n == 1:
        return 1
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    lc = f.leading()
    val = Fraction(sign * r, lc)
    assert val.denominator == 1
    return int(val)


def is_squarefree(f: IntPoly):
    if f.degree < 1:
        return not f.is_zero()
    if f.degree == 1:
        return True
    return poly_discriminant(f) != 0


# -- Sturm signature ----------------------------------------------------------


def _sign_changes(vals):
    signs = [v for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def sturm_chain(f: IntPoly):
    chain = [f, f.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        # scale to primitive integer polynomial to keep coefficients small
        d, ri = r.clear_denominators()
        ri = ri.primitive()
        chain.append(-ri)
    return chain


def signature(f: IntPoly):
    """(r1, r2) with r1 real roots and r2 complex-conjugate pairs, via Sturm. Exact.

    Precondition: f squarefree (raises DegenerateInputError otherwise).
    """
    if f.degree < 1:
        raise DegenerateInputError("signature needs a nonconstant polynomial")
    if not is_squarefree(f):
        raise DegenerateInputError("signature requires a squarefree polynomial")
    chain = sturm_chain(f)
    # evaluate sign at -inf / +inf via leading terms
    at_neg = [p.leading() * ((-1) ** p.degree) for p in chain if not p.is_zero()]
    at_pos = [p.leading() for p in chain if not p.is_zero()]
    r1 = _sign_changes(at_neg) - _sign_changes(at_pos)
    r2, rem = divmod(f.degree - r1, 2)
    assert rem == 0
    return r1, r2


def count_real_roots_in(f: IntPoly, lo, hi):
    """Number of real roots in (lo, hi], exact, f squarefree."""
    chain = sturm_chain(f)
    vlo = [p.eval(lo) for p in chain]
    vhi = [p.eval(hi) for p in chain]
    return _sign_changes(vlo) - _sign_changes(vhi)


# -- exact square root of a polynomial ----------------------------------------


def poly_sqrt(G: IntPoly):
    """Exact square root of a monic even-degree polynomial, or None.

    Coefficient recursion from the top; verified by a final multiply.
    """
    if G.is_zero() or G.degree % 2 or not G.is_monic():
        return None
    n = G.degree // 2
    g = [Fraction(0)] * (n + 1)
    g[n] = Fraction(1)
    # descending: determine g[n-k] from coefficient of x^(2n-k) in g^2
    for k in range(1, n + 1):
        # sum_{i+j = 2n-k} g_i g_j = G_{2n-k}
        target = Fraction(G[2 * n - k])
        acc = Fraction(0)
        for i in range(n - k + 1, n + 1):
            j = 2 * n - k - i
            if j > n:
                continue
            if j == n - k:
                continue
            acc += g[i] * g[j]
        # remaining term: 2 g_n g_{n-k} (i=n, j=n-k) counted once above? ensure:
        g[n - k] = (target - acc) / 2
    cand = IntPoly(g)
    if cand * cand == G:
        return cand
    return None


# -- bivariate resultant by interpolation --------------------------------------


def sum_roots_resultant(f: IntPoly):
    """R(x) = Res_y(f(y), f(x - y)) computed exactly by interpolation.

    For monic f of degree n, R has degree n^2 with roots r_i + r_j over all
    ordered pairs (i, j).
    """
    n = f.degree
    deg = n * n
    xs = list(range(-(deg // 2), deg // 2 + 2))[: deg + 1]
    ys = []
    for x0 in xs:
        # f(x0 - y) as polynomial in y
        fy = IntPoly(list(f.coeffs))
        shifted = fy.compose(IntPoly([x0, -1]))
        ys.append(resultant(f, shifted))
    return _lagrange(xs, ys)


def _lagrange(xs, ys):
    """Exact Lagrange interpolation returning an integer polynomial."""
    total = IntPoly([])
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        num = IntPoly([1])
        den = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * IntPoly([-xj, 1])
            den *= xi - xj
        total = total + num * Fraction(yi, den)
    assert all(isinstance(c, int) or c.denominator == 1 for c in total.coeffs)
    return IntPoly([int(c) for c in total.coeffs])


# -- factorization degree patterns mod p ---------------------------------------


def factor_degrees_mod(f: IntPoly, p):
    """Sorted degree multiset of the irreducible factors of f mod p.

    Returns None when f mod p is not squarefree or drops degree (bad prime).
    """
    import sympy
    x = sympy.Symbol("x")
    if f.leading() % p == 0:
        return None
    fp = sympy.Poly([c % p for c in reversed(f.coeffs)], x, modulus=p)
    if fp.degree() != f.degree:
        return None
    if sympy.gcd(fp, fp.diff(x)).degree() > 0:
        return None
    _, factors = fp.factor_list()
    degs = []
    for poly, mult in factors:
        if mult > 1:
            return None
        degs.append(poly.degree())
    return tuple(sorted(degs))


def _subset_sums(degs):
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def is_irreducible(f: IntPoly, max_primes=200):
    """Certified irreducibility over Q via the degree-set sieve.

    Intersects achievable proper factor degrees across factorization patterns
    modulo many primes; empty intersection certifies irreducibility.  Returns
    True (certified), False (a nontrivial factor pattern was realized by an
    actual rational factor check... not attempted: returns None) or None if
    inconclusive after max_primes.
    """
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    if f.content() not in (0, 1) and f.content() > 1:
        f = f.primitive()
    if f[0] == 0:
        return False  # x divides
    possible = set(range(1, n))
    import sympy
    count = 0
    p = 1
    while count < max_primes and possible:
        p = sympy.nextprime(p)
        degs = factor_degrees_mod(f, p)
        if degs is None:
            continue
        count += 1
        if degs == (n,):
            return True
        possible &= _subset_sums(degs)
    if not possible:
        return True
    return None
