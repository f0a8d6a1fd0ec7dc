"""Dense matrices over GF(2) with bitset rows.

Rows are Python ints; bit j of row i is the (i, j) entry.  Matrices are
immutable value objects so they can key dicts and sets (group elements).
"""

from __future__ import annotations


class F2Matrix:
    __slots__ = ("rows", "ncols")

    def __init__(self, rows, ncols):
        self.rows = tuple(int(r) & ((1 << ncols) - 1) for r in rows)
        self.ncols = ncols

    @classmethod
    def from_lists(cls, lists):
        ncols = len(lists[0]) if lists else 0
        rows = []
        for row in lists:
            v = 0
            for j, e in enumerate(row):
                if e % 2:
                    v |= 1 << j
            rows.append(v)
        return cls(rows, ncols)

    @classmethod
    def identity(cls, n):
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def zero(cls, n, m=None):
        return cls([0] * n, m if m is not None else n)

    @property
    def nrows(self):
        return len(self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, F2Matrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self):
        return "F2Matrix(%s)" % ("; ".join(format(r, "0%db" % self.ncols)[::-1] for r in self.rows))

    def entry(self, i, j):
        return (self.rows[i] >> j) & 1

    def to_lists(self):
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __add__(self, other):
        assert self.ncols == other.ncols and self.nrows == other.nrows
        return F2Matrix([a ^ b for a, b in zip(self.rows, other.rows)], self.ncols)

    def __mul__(self, other):
        assert self.ncols == other.nrows
        out = []
        for r in self.rows:
            acc = 0
            rr = r
            k = 0
            while rr:
                if rr & 1:
                    acc ^= other.rows[k]
                rr >>= 1
                k += 1
            out.append(acc)
        return F2Matrix(out, other.ncols)

    def transpose(self):
        out = []
        for j in range(self.ncols):
            v = 0
            for i, r in enumerate(self.rows):
                if (r >> j) & 1:
                    v |= 1 << i
            out.append(v)
        return F2Matrix(out, self.nrows)

    def apply(self, v):
        """Matrix times column vector; v is an int bitset of length ncols."""
        w = 0
        for i, r in enumerate(self.rows):
            if bin(r & v).count("1") & 1:
                w |= 1 << i
        return w

    def rank(self):
        return len(row_echelon(list(self.rows))[0])

    def is_identity(self):
        return self == F2Matrix.identity(self.nrows) and self.nrows == self.ncols

    def pow(self, n):
        assert self.nrows == self.ncols
        result = F2Matrix.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        """Inverse via Gauss-Jordan; raises ValueError if singular."""
        n = self.nrows
        assert n == self.ncols
        aug = [r | (1 << (n + i)) for i, r in enumerate(self.rows)]
        rank = 0
        for col in range(n):
            piv = None
            for i in range(rank, n):
                if (aug[i] >> col) & 1:
                    piv = i
                    break
            if piv is None:
                raise ValueError("singular matrix")
            aug[rank], aug[piv] = aug[piv], aug[rank]
            for i in range(n):
                if i != rank and ((aug[i] >> col) & 1):
                    aug[i] ^= aug[rank]
            rank += 1
        return F2Matrix([r >> n for r in aug], n)


# -- vector-space helpers on int bitsets ----------------------------------------


def row_echelon(vectors):
    """Echelon basis (list of ints, decreasing leading bit) and pivot list."""
    basis = []
    for v in vectors:
        v = reduce_vector(v, basis)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis, [b.bit_length() - 1 for b in basis]


def reduce_vector(v, basis):
    for b in basis:
        if v ^ b < v:
            v ^= b
    return v


def in_span(v, basis):
    return reduce_vector(v, basis) == 0


def span_dim(vectors):
    return len(row_echelon(vectors)[0])


def span_closure(vectors):
    """All 2^k elements of the span (use only for small k)."""
    basis, _ = row_echelon(vectors)
    out = {0}
    for b in basis:
        out |= {x ^ b for x in out}
    return out


def solve(matrix_rows, ncols, rhs):
    """One solution x (bitset) of M x = rhs over F2, or None if inconsistent.

    matrix_rows: list of int bitsets (rows of M); rhs: int bitset over row index.
    """
    basis = []  # pairs (row, b) in reduced echelon form by pivot
    for i, r in enumerate(matrix_rows):
        b = (rhs >> i) & 1
        for br, bb in basis:
            p = br.bit_length() - 1
            if (r >> p) & 1:
                r ^= br
                b ^= bb
        if r == 0:
            if b:
                return None
            continue
        p = r.bit_length() - 1
        basis = [((cr ^ r), (cb ^ b)) if ((cr >> p) & 1) else (cr, cb) for cr, cb in basis]
        basis.append((r, b))
    x = 0
    for r, b in basis:
        if b:
            x |= 1 << (r.bit_length() - 1)
    return x


def _reduced_echelon(rows):
    """Fully reduced echelon basis: each pivot bit occurs in exactly one row."""
    basis = []
    for r in rows:
        for b in basis:
            p = b.bit_length() - 1
            if (r >> p) & 1:
                r ^= b
        if r:
            # clear this new pivot from existing rows
            p = r.bit_length() - 1
            basis = [(b ^ r) if ((b >> p) & 1) else b for b in basis]
            basis.append(r)
    basis.sort(reverse=True)
    return basis


def kernel_basis(matrix_rows, ncols):
    """Basis of the right kernel {x : M x = 0 over F2} as int bitsets."""
    red = _reduced_echelon(list(matrix_rows))
    pivots = {b.bit_length() - 1 for b in red}
    out = []
    for fj in range(ncols):
        if fj in pivots:
            continue
        x = 1 << fj
        for b in red:
            p = b.bit_length() - 1
            if bin(b & x).count("1") & 1:
                x ^= 1 << p
        out.append(x)
    return out
