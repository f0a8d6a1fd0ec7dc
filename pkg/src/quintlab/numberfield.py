"""Number fields: maximal orders (round-2 style p-maximalization), prime
decomposition (Kummer-Dedekind plus the general idempotent method at index
primes), ideal lattices in HNF, valuations, norms and numeric embeddings.

Elements are integer (or Fraction) coordinate vectors over the integral basis.
All structural results are exact; floating point appears only in embeddings,
which are used for lattice reduction quality and candidate filtering, never
for asserted invariants.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .intpoly import IntPoly, bareiss_det, poly_discriminant, signature as poly_signature
from .factorint import factorize
from . import intpoly


class NotIrreducibleError(ValueError):
    pass


# -- small exact linear algebra helpers -------------------------------------------


def mat_inv_fraction(M):
    """Inverse of a square matrix of Fractions/ints (Gauss-Jordan, exact)."""
    n = len(M)
    A = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if A[i][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[col])]
    return [row[n:] for row in A]


def hnf_rows(rows, n):
    """Row-style HNF of the lattice spanned by integer rows; returns n x n
    upper-triangular matrix with positive diagonal, entries above reduced."""
    work = [list(r) for r in rows if any(r)]
    H = [None] * n
    for col in range(n):
        # gather rows with leftmost nonzero at col
        while True:
            cand = [r for r in work if r[col] != 0]
            if len(cand) <= 1:
                break
            cand.sort(key=lambda r: abs(r[col]))
            a = cand[0]
            for r in cand[1:]:
                q = r[col] // a[col]
                for j in range(n):
                    r[j] -= q * a[j]
            work = [r for r in work if any(r)]
        row_here = next((r for r in work if r[col] != 0), None)
        if row_here is not None:
            work.remove(row_here)
            if row_here[col] < 0:
                row_here = [-x for x in row_here]
            H[col] = row_here
            # eliminate col from remaining rows fully (they have 0 earlier cols)
            for r in work:
                if r[col] != 0:
                    q = r[col] // row_here[col]
                    for j in range(n):
                        r[j] -= q * row_here[j]
            work = [r for r in work if any(r)]
        else:
            H[col] = None
    if any(h is None for h in H):
        raise ValueError("lattice does not have full rank")
    # reduce above-diagonal entries
    for i in range(n - 1, -1, -1):
        for k in range(i):
            q = H[k][i] // H[i][i]
            if q:
                H[k] = [x - q * y for x, y in zip(H[k], H[i])]
    return H


def solve_upper_triangular(H, v):
    """x with x*H = v for upper-triangular H (rows; H[i][j] = 0 for j < i)."""
    n = len(H)
    x = [Fraction(0)] * n
    rem = [Fraction(c) for c in v]
    for i in range(n):
        x[i] = rem[i] / H[i][i]
        if x[i]:
            for j in range(i, n):
                rem[j] -= x[i] * H[i][j]
    return x


def modp_kernel(rows, ncols, p):
    """Kernel basis of the F_p matrix given by rows (lists of ints)."""
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    pivots = {}
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col] % p:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        pivots[col] = rank
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for col, r in pivots.items():
            v[col] = (-m[r][fc]) % p
        basis.append(v)
    return basis


# -- the field ----------------------------------------------------------------------


class NumberField:
    """Q[x]/(f) with its maximal order; f monic irreducible with int coefficients."""

    def __init__(self, f: IntPoly, _check_irreducible=True):
        if not f.is_monic() or not f.is_integral():
            raise ValueError("need a monic integral defining polynomial")
        if _check_irreducible:
            irr = intpoly.is_irreducible(f)
            if irr is False:
                raise NotIrreducibleError("defining polynomial is reducible")
            if irr is None:
                raise NotIrreducibleError("could not certify irreducibility")
        self.f = f
        self.n = f.degree
        self.disc_f = poly_discriminant(f)
        self.r1, self.r2 = poly_signature(f)
        self._compute_maximal_order()
        self._build_mult_table()
        self._emb_cache = None
        self._prime_cache = {}

    # ---- maximal order -------------------------------------------------------------

    def _compute_maximal_order(self):
        n = self.n
        fac = factorize(self.disc_f)
        self.disc_f_factors = fac
        # basis over power basis: rows of (num / den)
        num = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        den = 1
        for p, e in sorted(fac.items()):
            if e >= 2:
                num, den = self._p_maximalize(num, den, p)
        self.basis_num = num
        self.basis_den = den
        det = bareiss_det(num)
        index_sq = Fraction(self.disc_f) * Fraction(det, den ** n) ** 2
        disc = Fraction(self.disc_f) / (Fraction(den ** n, abs(det)) ** 2)
        assert disc.denominator == 1
        self.disc = int(disc)
        idx = Fraction(den ** n, abs(det))
        assert idx.denominator == 1
        self.index = int(idx)

    def _p_maximalize(self, num, den, p):
        n = self.n
        while True:
            table = self._mult_table_for(num, den)
            rad = self._p_radical(table, p)
            # radical lattice rows in omega-coords: rad basis + p*I
            J = hnf_rows(rad + [[p if j == i else 0 for j in range(n)] for i in range(n)], n)
            newnum, newden, grew = self._multiplier_ring(num, den, table, J, p)
            if not grew:
                return num, den
            num, den = newnum, newden

    def _mult_table_for(self, num, den):
        """omega_i * omega_j in omega coordinates (ints) for basis (num/den)."""
        n = self.n
        Wi = mat_inv_fraction([[Fraction(num[i][j], den) for j in range(n)] for i in range(n)])
        table = [[None] * n for _ in range(n)]
        polys = [IntPoly([Fraction(c, den) for c in row]) for row in num]
        for i in range(n):
            for j in range(i, n):
                prod = (polys[i] * polys[j]) % self.f
                vec = [prod[k] for k in range(n)]
                coords = [sum(Fraction(vec[k]) * Wi[k][t] for k in range(n)) for t in range(n)]
                assert all(c.denominator == 1 for c in coords), "basis does not span an order"
                table[i][j] = table[j][i] = [int(c) for c in coords]
        return table

    def _p_radical(self, table, p):
        """Basis (omega-coords) of the p-radical of the order with mult table."""
        n = self.n
        q = 1
        while q < n:
            q *= p
        # x -> x^q as F_p-linear map: columns = omega_i^q
        def mul_modp(a, b):
            out = [0] * n
            for i, ai in enumerate(a):
                if ai % p == 0:
                    continue
                for j, bj in enumerate(b):
                    if bj % p == 0:
                        continue
                    t = table[i][j]
                    for k in range(n):
                        out[k] = (out[k] + ai * bj * t[k]) % p
            return out

        one = [c % p for c in _order_one(self, table, p)]

        def pow_modp(a, e):
            result = one
            base = a
            while e:
                if e & 1:
                    result = mul_modp(result, base)
                base = mul_modp(base, base)
                e >>= 1
            return result

        cols = []
        for i in range(n):
            x = [1 if t == i else 0 for t in range(n)]
            cols.append(pow_modp(x, q))
        rows = [[cols[j][i] for j in range(n)] for i in range(n)]
        ker = modp_kernel(rows, n, p)
        return [[int(c) for c in v] for v in ker]

    def _multiplier_ring(self, num, den, table, J, p):
        """O' = {x in (1/p)O : xJ <= J}; returns (num', den', grew)."""
        n = self.n
        # J rows are omega-coords of an ideal containing pO; mult by omega_i
        conds = []  # rows over unknown y (n vars), one block per J basis vector
        Jmat = J

        def to_J_coords(vec):
            x = solve_upper_triangular(Jmat, vec)
            assert all(c.denominator == 1 for c in x)
            return [int(c) for c in x]

        # Precompute omega_i * gamma_j in J-coords
        blocks = []
        for j in range(n):
            gamma = Jmat[j]
            col_block = []
            for i in range(n):
                prod = [0] * n
                for a, ca in enumerate(gamma):
                    if ca == 0:
                        continue
                    t = table[i][a]
                    for k in range(n):
                        prod[k] += ca * t[k]
                col_block.append(to_J_coords(prod))
            blocks.append(col_block)
        rows = []
        for j in range(n):
            for k in range(n):
                rows.append([blocks[j][i][k] % p for i in range(n)])
        ker = modp_kernel(rows, n, p)
        if not ker:
            return num, den, False
        # new order basis: old rows + kernel lifts / p   (in power coords over den*p)
        newden = den * p
        newrows = [[c * p for c in row] for row in num]
        grew = False
        for v in ker:
            # y = sum v_i omega_i; x = y/p in power coords * newden
            row = [0] * n
            for i, vi in enumerate(v):
                if vi:
                    for k in range(n):
                        row[k] += vi * num[i][k]
            newrows.append(row)
        H = hnf_rows(newrows, n)
        # detect growth: index of old lattice in new
        old_det = abs(bareiss_det([[c * p for c in row] for row in num]))
        new_det = abs(bareiss_det(H))
        if new_det == old_det:
            return num, den, False
        # normalize: divide out common content with denominator if possible
        from math import gcd
        g = newden
        for row in H:
            for c in row:
                g = gcd(g, c)
        if g > 1:
            H = [[c // g for c in row] for row in H]
            newden //= g
        return H, newden, True

    # ---- structure tables ------------------------------------------------------------

    def _build_mult_table(self):
        self.mult_table = self._mult_table_for(self.basis_num, self.basis_den)
        n = self.n
        self._power_to_omega = mat_inv_fraction(
            [[Fraction(self.basis_num[i][j], self.basis_den) for j in range(n)] for i in range(n)]
        )

    # ---- element operations ------------------------------------------------------------

    def mul(self, a, b):
        """Product of elements in omega-coords (int or Fraction vectors)."""
        n = self.n
        out = [0] * n
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                t = self.mult_table[i][j]
                c = ai * bj
                for k in range(n):
                    out[k] += c * t[k]
        return out

    def one(self):
        """Coordinates of 1 in the integral basis."""
        coords = self.power_to_omega([1] + [0] * (self.n - 1))
        return [int(c) for c in coords]

    def from_int(self, c):
        return [c * x for x in self.one()]

    def power_to_omega(self, vec):
        n = self.n
        return [sum(Fraction(vec[k]) * self._power_to_omega[k][t] for k in range(n)) for t in range(n)]

    def omega_to_power(self, coords):
        n = self.n
        out = [Fraction(0)] * n
        for i, c in enumerate(coords):
            for k in range(n):
                out[k] += Fraction(c) * Fraction(self.basis_num[i][k], self.basis_den)
        return out

    def theta_vec(self):
        """omega-coords of the root theta of f."""
        coords = self.power_to_omega([0, 1] + [0] * (self.n - 2))
        assert all(c.denominator == 1 for c in coords)
        return [int(c) for c in coords]

    def element_norm(self, a):
        """N(a) for a in omega-coords (exact integer for integral a)."""
        n = self.n
        M = []
        for i in range(n):
            basis_vec = [1 if t == i else 0 for t in range(n)]
            M.append(self.mul(a, basis_vec))
        MT = [[M[j][i] for j in range(n)] for i in range(n)]
        # entries may be Fractions if a is; scale
        den = 1
        for row in MT:
            for c in row:
                if isinstance(c, Fraction):
                    den = den * c.denominator // __import__("math").gcd(den, c.denominator)
        if den == 1:
            return bareiss_det([[int(c) for c in row] for row in MT])
        scaled = [[int(Fraction(c) * den) for c in row] for row in MT]
        return Fraction(bareiss_det(scaled), den ** n)

    def element_trace(self, a):
        n = self.n
        tr = 0
        for i in range(n):
            basis_vec = [1 if t == i else 0 for t in range(n)]
            tr += self.mul(a, basis_vec)[i]
        return tr

    def minimal_polynomial(self, a):
        """Min poly of a (omega-coords) over Q, via linear algebra on powers."""
        n = self.n
        pows = [self.one()]
        cur = self.one()
        for _ in range(n):
            cur = self.mul(cur, a)
            pows.append(cur)
        # find first linear dependence
        from .intpoly import IntPoly as IP
        rows = []
        for k, v in enumerate(pows):
            rows.append([Fraction(c) for c in v])
            # solve dependence among rows
            dep = _fraction_dependence(rows)
            if dep is not None:
                poly = IP(dep)
                d, gi = poly.clear_denominators()
                return gi.primitive()
        raise AssertionError("no dependence found")

    # ---- embeddings -------------------------------------------------------------------

    def embeddings(self, prec_bits=300):
        if self._emb_cache and self._emb_cache[0] >= prec_bits:
            return self._emb_cache[1]
        with mpmath.workprec(prec_bits + 60):
            poly = [mpmath.mpf(c) for c in reversed(self.f.coeffs)]
            roots = mpmath.polyroots(poly, maxsteps=220, extraprec=220)
            # order: real roots first (ascending), then one of each complex pair
            real = sorted([r for r in roots if abs(mpmath.im(r)) < mpmath.mpf(2) ** (-40)],
                          key=lambda r: mpmath.re(r))
            comp = [r for r in roots if mpmath.im(r) > mpmath.mpf(2) ** (-40)]
            comp.sort(key=lambda r: (mpmath.re(r), mpmath.im(r)))
            assert len(real) == self.r1 and len(comp) == self.r2
            emb = []
            for i in range(self.n):
                vec = self.omega_to_power([1 if t == i else 0 for t in range(self.n)])
                row = []
                for r in real + comp:
                    val = mpmath.polyval([mpmath.mpf(str(c)) if isinstance(c, int) else mpmath.mpf(c.numerator) / c.denominator for c in reversed(vec)], r)
                    row.append(val)
                emb.append(row)
        self._emb_cache = (prec_bits, emb)
        return emb

    def t2_gram_int(self, scale_bits=24):
        """Rounded positive-definite Gram matrix of the Minkowski form on O."""
        emb = self.embeddings()
        n = self.n
        G = [[0] * n for _ in range(n)]
        with mpmath.workprec(360):
            sc = mpmath.mpf(2) ** scale_bits
            for i in range(n):
                for j in range(i, n):
                    acc = mpmath.mpf(0)
                    for t in range(self.r1):
                        acc += emb[i][t] * emb[j][t]
                    for t in range(self.r1, self.r1 + self.r2):
                        acc += 2 * mpmath.re(emb[i][t] * mpmath.conj(emb[j][t]))
                    G[i][j] = G[j][i] = int(mpmath.nint(acc * sc))
        for i in range(n):
            G[i][i] += 1  # keep strictly positive definite after rounding
        return G

    # ---- prime decomposition -------------------------------------------------------------

    def splitting_type(self, q):
        if q in self._prime_cache:
            return self._prime_cache[q]
        if self.index % q:
            primes = self._split_kummer(q)
        else:
            primes = self._split_general(q)
        assert sum(P.e * P.f for P in primes) == self.n
        self._prime_cache[q] = primes
        return primes

    def _split_kummer(self, q):
        import sympy
        x = sympy.Symbol("x")
        fp = sympy.Poly([c % q for c in reversed(self.f.coeffs)], x, modulus=q)
        _, factors = fp.factor_list()
        out = []
        theta = self.theta_vec()
        for poly, mult in sorted(factors, key=lambda t: (t[0].degree(), sorted(t[0].all_coeffs(), key=str))):
            coeffs = [int(c) % q for c in reversed(poly.all_coeffs())]
            gen = self._eval_poly_at_theta(coeffs)
            out.append(self._make_prime(q, e=mult, f=poly.degree(), second_gen=gen))
        return out

    def _eval_poly_at_theta(self, coeffs):
        theta = self.theta_vec()
        acc = [0] * self.n
        pw = self.one()
        for c in coeffs:
            acc = [a + c * b for a, b in zip(acc, pw)]
            pw = self.mul(pw, theta)
        return acc

    def _split_general(self, q):
        """Prime decomposition at index primes via the separable quotient of O/qO."""
        n = self.n
        table = self.mult_table

        def mulq(a, b):
            out = [0] * n
            for i, ai in enumerate(a):
                if ai % q == 0:
                    continue
                for j, bj in enumerate(b):
                    if bj % q == 0:
                        continue
                    t = table[i][j]
                    for k in range(n):
                        out[k] = (out[k] + ai * bj * t[k]) % q
            return out

        one = [c % q for c in self.one()]

        def powq(a, e):
            result = one
            base = a
            while e:
                if e & 1:
                    result = mulq(result, base)
                base = mulq(base, base)
                e >>= 1
            return result

        # radical of A = O/qO
        rad = self._p_radical(table, q)
        # work in B = A / rad: coordinates modulo the subspace
        radbasis = [[c % q for c in v] for v in rad]
        # projection: echelonize radbasis; quotient coords = free coords
        piv_rows = []
        pivots = []
        m = [r[:] for r in radbasis]
        rank = 0
        for col in range(n):
            piv = None
            for i in range(rank, len(m)):
                if m[i][col] % q:
                    piv = i
                    break
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = pow(m[rank][col], q - 2, q)
            m[rank] = [(x * inv) % q for x in m[rank]]
            for i in range(len(m)):
                if i != rank and m[i][col] % q:
                    fct = m[i][col]
                    m[i] = [(x - fct * y) % q for x, y in zip(m[i], m[rank])]
            pivots.append(col)
            rank += 1
        m = m[:rank]
        free = [c for c in range(n) if c not in pivots]

        def reduce_mod_rad(v):
            v = [x % q for x in v]
            for row, col in zip(m, pivots):
                if v[col] % q:
                    fct = v[col]
                    v = [(x - fct * y) % q for x, y in zip(v, row)]
            return tuple(v[c] for c in free)

        def lift_from_B(coords):
            v = [0] * n
            for c, val in zip(free, coords):
                v[c] = val
            return v

        dimB = len(free)
        # split B into fields: frobenius-fixed subalgebra method
        blocks = [[lift_from_B(tuple(1 if i == j else 0 for j in range(dimB))) for i in range(dimB)]]
        # each block: list of A-lifts of a basis of the block (as subspace of B)
        final = []
        work = [blocks[0]]
        import sympy
        xsym = sympy.Symbol("x")
        while work:
            blk = work.pop()
            # identity of the block: find idempotent? use the subspace with mult.
            # compute Frobenius-fixed subalgebra of the block
            # basis of block in B coords:
            Bbasis = [reduce_mod_rad(v) for v in blk]
            d = len(Bbasis)
            # matrix of Frobenius on the block
            frob_cols = []
            for v in blk:
                fv = powq(v, q)
                frob_cols.append(_coords_in_subspace(reduce_mod_rad(fv), Bbasis, q))
            rows = [[(frob_cols[j][i] - (1 if i == j else 0)) % q for j in range(d)] for i in range(d)]
            fixed = modp_kernel(rows, d, q)
            if len(fixed) == 1:
                final.append(blk)
                continue
            # find a fixed element not scalar: gives a splitting min poly
            split_done = False
            for coeffs in fixed:
                v = [0] * n
                for c, bv in zip(coeffs, blk):
                    if c:
                        v = [(a + c * b) % q for a, b in zip(v, bv)]
                # minimal polynomial of v inside the block
                pows = [self._block_identity(blk, mulq, q)]
                seq = [_coords_in_subspace(reduce_mod_rad(pows[0]), Bbasis, q)]
                cur = pows[0]
                for _ in range(d):
                    cur = mulq(cur, v)
                    pows.append(cur)
                    seq.append(_coords_in_subspace(reduce_mod_rad(cur), Bbasis, q))
                    dep = _modp_dependence(seq, q)
                    if dep is not None:
                        break
                poly = sympy.Poly(list(reversed(dep)), xsym, modulus=q)
                facs = sympy.factor_list(poly)[1]
                if len(facs) < 2:
                    continue
                # CRT idempotent split
                g1 = facs[0][0] ** facs[0][1]
                g2 = sympy.Poly(1, xsym, modulus=q)
                for pf, mf in facs[1:]:
                    g2 = g2 * pf ** mf
                # e = g2 * (g2^{-1} mod g1) evaluated at v  -> idempotent with e=1 on g1-part
                inv = sympy.invert(g2, g1)
                epoly = (g2 * inv) % (g1 * g2)
                ecoeffs = [int(c) % q for c in reversed(sympy.Poly(epoly, xsym, modulus=q).all_coeffs())]
                e_elt = self._eval_in_block(blk, ecoeffs, v, mulq, q)
                # split block via e and 1-e
                one_blk = self._block_identity(blk, mulq, q)
                e2 = [(a - b) % q for a, b in zip(one_blk, e_elt)]
                sub1 = _span_nonzero([mulq(e_elt, bv) for bv in blk], reduce_mod_rad, lift_from_B, q)
                sub2 = _span_nonzero([mulq(e2, bv) for bv in blk], reduce_mod_rad, lift_from_B, q)
                work.extend([sub1, sub2])
                split_done = True
                break
            if not split_done:
                final.append(blk)  # block is a field (no splitting element found)
        out = []
        for blk in final:
            fdeg = len(blk)
            # prime ideal = annihilator of the block: {x in O : x*blk = 0 in B};
            # unknown x over F_q^n, one condition per block vector per quotient coord
            conds = []
            for bi, bv in enumerate(blk):
                per_i = []
                for i in range(n):
                    basis_vec = [1 if t == i else 0 for t in range(n)]
                    per_i.append(reduce_mod_rad(mulq(basis_vec, bv)))
                for k in range(len(per_i[0])):
                    conds.append([per_i[i][k] % q for i in range(n)])
            ker = modp_kernel(conds, n, q)
            lattice_rows = [[c % q for c in v] for v in ker] + [
                [q if j == i else 0 for j in range(n)] for i in range(n)
            ]
            H = hnf_rows(lattice_rows, n)
            P = self._make_prime(q, e=None, f=fdeg, second_gen=None, hnf=H)
            out.append(P)
        # compute ramification e via valuations of q
        qelt = self.from_int(q)
        for P in out:
            P.e = self.valuation(qelt, P)
        out.sort(key=lambda P: (P.f, P.e))
        return out

    def _eval_in_block(self, blk, coeffs, v, mulq, q):
        """Evaluate a polynomial (ascending coeffs) at v, constants via the block identity."""
        one_blk = self._block_identity(blk, mulq, q)
        acc = [0] * self.n
        pw = one_blk
        for c in coeffs:
            if c % q:
                acc = [(a + c * b) % q for a, b in zip(acc, pw)]
            pw = mulq(pw, v)
        return acc

    def _block_identity(self, blk, mulq, q):
        """Identity element of a block subalgebra of O/qO (unique idempotent acting as 1)."""
        # solve sum c_i b_i with (sum c_i b_i) * b_j = b_j for all j
        n = self.n
        d = len(blk)
        rows = []
        rhs = []
        # coordinates in the subspace spanned by blk
        _, coords_fn = self._subspace_reduce(blk, q)
        for j in range(d):
            target = coords_fn(blk[j])
            per = [coords_fn(mulq(blk[i], blk[j])) for i in range(d)]
            for k in range(d):
                rows.append([per[i][k] % q for i in range(d)])
                rhs.append(target[k] % q)
        sol = _modp_solve(rows, rhs, d, q)
        assert sol is not None
        out = [0] * n
        for c, bv in zip(sol, blk):
            if c:
                out = [(a + c * b) % q for a, b in zip(out, bv)]
        return out

    def _subspace_reduce(self, blk, q):
        """(reduce, coords) helpers for the F_q-span of blk (vectors mod q)."""
        n = self.n
        m = [[c % q for c in v] for v in blk]
        piv = []
        red = []
        for row in m:
            r = row[:]
            for (p_, rr) in zip(piv, red):
                if r[p_] % q:
                    fct = (r[p_] * pow(rr[p_], q - 2, q)) % q
                    r = [(x - fct * y) % q for x, y in zip(r, rr)]
            nz = next((i for i, x in enumerate(r) if x % q), None)
            assert nz is not None
            piv.append(nz)
            red.append(r)

        def coords(v):
            v = [c % q for c in v]
            out = []
            for (p_, rr) in zip(piv, red):
                c = (v[p_] * pow(rr[p_], q - 2, q)) % q
                out.append(c)
                if c:
                    v = [(x - c * y) % q for x, y in zip(v, rr)]
            # assert not any(v), "vector outside subspace"
            return out

        def reduce_fn(v):
            return coords(v)

        return reduce_fn, coords

    def _make_prime(self, q, e, f, second_gen, hnf=None):
        n = self.n
        if hnf is None:
            rows = [[q if j == i else 0 for j in range(n)] for i in range(n)]
            for i in range(n):
                basis_vec = [1 if t == i else 0 for t in range(n)]
                rows.append(self.mul(second_gen, basis_vec))
            hnf = hnf_rows(rows, n)
        return PrimeIdeal(self, q, e, f, hnf, second_gen)

    # ---- valuations -------------------------------------------------------------------

    def valuation_element(self, P):
        """b in O with v_P(b) = e-1 and v_P'(b) >= e' for other P' | q."""
        if P.val_elt is not None:
            return P.val_elt
        n, q = self.n, P.q
        conds = []
        for j in range(n):
            gamma = P.hnf[j]
            per_i = []
            for i in range(n):
                basis_vec = [1 if t == i else 0 for t in range(n)]
                prod = self.mul(basis_vec, gamma)
                per_i.append(prod)
            for k in range(n):
                conds.append([per_i[i][k] % q for i in range(n)])
        ker = modp_kernel(conds, n, q)
        assert ker, "no valuation element found"
        b = [int(c) for c in ker[0]]
        P.val_elt = b
        return b

    def valuation(self, x, P):
        """v_P(x) for integral x (omega-coords), x != 0."""
        assert any(x), "valuation of zero"
        b = self.valuation_element(P)
        q = P.q
        v = 0
        y = [int(c) for c in x]
        # first make sure x has no trivial q content counting toward valuation:
        while True:
            z = self.mul(y, b)
            if all(c % q == 0 for c in z):
                y = [c // q for c in z]
                v += 1
            else:
                return v

    # ---- ideals -------------------------------------------------------------------------

    def ideal_from_gens(self, gens):
        """Integral ideal lattice (HNF) generated by elements + their O-multiples."""
        n = self.n
        rows = []
        for g in gens:
            for i in range(n):
                basis_vec = [1 if t == i else 0 for t in range(n)]
                rows.append(self.mul(g, basis_vec))
        return hnf_rows(rows, n)

    def ideal_mul(self, H1, H2):
        n = self.n
        rows = []
        for a in H1:
            for b in H2:
                rows.append(self.mul(a, b))
        return hnf_rows(rows, n)

    def ideal_norm(self, H):
        norm = 1
        for i in range(len(H)):
            norm *= H[i][i]
        return norm

    def _unit_ideal_rows(self):
        n = self.n
        return [[1 if j == i else 0 for j in range(n)] for i in range(n)]

    def ideal_pow(self, H, k):
        result = self._unit_ideal_rows()
        base = H
        while k:
            if k & 1:
                result = self.ideal_mul(result, base)
            base = self.ideal_mul(base, base)
            k >>= 1
        return result

    def ideal_contains(self, H, x):
        coords = solve_upper_triangular(H, x)
        return all(c.denominator == 1 for c in coords)


def _order_one(field, table, p):
    """Coordinates mod p of the identity of the order with the given mult table."""
    n = field.n
    rows = []
    rhs = []
    for j in range(n):
        for k in range(n):
            rows.append([table[i][j][k] % p for i in range(n)])
            rhs.append(1 if j == k else 0)
    sol = _modp_solve(rows, rhs, n, p)
    assert sol is not None, "order has no identity mod p (impossible)"
    return sol


def _coords_in_subspace(vec, basis, q):
    """Coordinates of vec in the F_q-span of basis (basis assumed independent)."""
    d = len(basis)
    m = [list(b) for b in basis]
    v = list(vec)
    out = [0] * d
    # gaussian elimination with bookkeeping
    piv_cols = []
    red = []
    combos = []
    for idx, row in enumerate(m):
        r = [c % q for c in row]
        combo = [0] * d
        combo[idx] = 1
        for (pc, rr, cb) in zip(piv_cols, red, combos):
            if r[pc] % q:
                fct = (r[pc] * pow(rr[pc], q - 2, q)) % q
                r = [(x - fct * y) % q for x, y in zip(r, rr)]
                combo = [(x - fct * y) % q for x, y in zip(combo, cb)]
        nz = next(i for i, x in enumerate(r) if x % q)
        piv_cols.append(nz)
        red.append(r)
        combos.append(combo)
    v = [c % q for c in v]
    for (pc, rr, cb) in zip(piv_cols, red, combos):
        c = (v[pc] * pow(rr[pc], q - 2, q)) % q
        if c:
            v = [(x - c * y) % q for x, y in zip(v, rr)]
            out = [(x + c * y) % q for x, y in zip(out, cb)]
    return out


def _modp_dependence(rows, p):
    """First linear dependence among rows over F_p: coefficients ending with 1."""
    m = len(rows)
    aug = [[c % p for c in rows[i]] + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    width = len(rows[0])
    rank = 0
    for col in range(width):
        piv = None
        for i in range(rank, m):
            if aug[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][col], p - 2, p)
        aug[rank] = [(x * inv) % p for x in aug[rank]]
        for i in range(m):
            if i != rank and aug[i][col] % p:
                f = aug[i][col]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[rank])]
        rank += 1
    for i in range(m):
        if all(aug[i][c] % p == 0 for c in range(width)):
            combo = aug[i][width:]
            # normalize: last nonzero = 1 for a monic-style dependence
            last = max(j for j in range(m) if combo[j] % p)
            inv = pow(combo[last], p - 2, p)
            return [(c * inv) % p for c in combo[: last + 1]]
    return None


def _modp_solve(rows, rhs, nvars, p):
    m = len(rows)
    aug = [[rows[i][j] % p for j in range(nvars)] + [rhs[i] % p] for i in range(m)]
    rank = 0
    pivots = []
    for col in range(nvars):
        piv = None
        for i in range(rank, m):
            if aug[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][col], p - 2, p)
        aug[rank] = [(x * inv) % p for x in aug[rank]]
        for i in range(m):
            if i != rank and aug[i][col] % p:
                f = aug[i][col]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, m):
        if aug[i][nvars] % p:
            return None
    x = [0] * nvars
    for r, col in enumerate(pivots):
        x[col] = aug[r][nvars] % p
    return x


def _fraction_dependence(rows):
    """First linear dependence among Fraction rows; coefficients with last = 1."""
    m = len(rows)
    width = len(rows[0])
    aug = [[Fraction(rows[i][j]) for j in range(width)] + [Fraction(1 if j == i else 0) for j in range(m)] for i in range(m)]
    rank = 0
    for col in range(width):
        piv = None
        for i in range(rank, m):
            if aug[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = 1 / aug[rank][col]
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(m):
            if i != rank and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[rank])]
        rank += 1
    for i in range(m):
        if all(aug[i][c] == 0 for c in range(width)):
            combo = aug[i][width:]
            nz = [j for j in range(m) if combo[j] != 0]
            last = max(nz)
            inv = 1 / combo[last]
            return [c * inv for c in combo[: last + 1]]
    return None


def _span_nonzero(vectors, reduce_mod_rad, lift_from_B, q):
    """Independent subset of vectors spanning their image in B (A-lifts kept)."""
    out = []
    red = []
    piv = []
    for v in vectors:
        r = list(reduce_mod_rad(v))
        for (p_, rr) in zip(piv, red):
            if r[p_] % q:
                fct = (r[p_] * pow(rr[p_], q - 2, q)) % q
                r = [(x - fct * y) % q for x, y in zip(r, rr)]
        nz = next((i for i, x in enumerate(r) if x % q), None)
        if nz is None:
            continue
        piv.append(nz)
        red.append(r)
        out.append(v)
    return out


class PrimeIdeal:
    """Prime of O over q with residue degree f, ramification e, HNF lattice."""

    def __init__(self, field, q, e, f, hnf, second_gen):
        self.field = field
        self.q = q
        self.e = e
        self.f = f
        self.hnf = hnf
        self.second_gen = second_gen
        self.val_elt = None

    @property
    def norm(self):
        return self.q ** self.f

    def __repr__(self):
        return "PrimeIdeal(q=%d, e=%s, f=%d)" % (self.q, self.e, self.f)
