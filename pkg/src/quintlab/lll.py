"""Integer LLL reduction with exact rational Gram-Schmidt bookkeeping.

Small dimensions (<= 14 here); used for ideal-lattice reduction in the
relation search and for algebraic-number reconstruction from p-adic data.
Incremental mu/B updates in the classic style; all arithmetic exact.
"""

from __future__ import annotations

from fractions import Fraction


def gram_matrix(rows):
    n = len(rows)
    return [[sum(a * b for a, b in zip(rows[i], rows[j])) for j in range(n)] for i in range(n)]


def _initial_gso(G):
    n = len(G)
    mu = [[Fraction(0)] * n for _ in range(n)]
    r = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            r[i][j] = Fraction(G[i][j]) - sum(mu[j][k] * r[i][k] for k in range(j))
            mu[i][j] = r[i][j] / B[j] if B[j] != 0 else Fraction(0)
        B[i] = Fraction(G[i][i]) - sum(mu[i][k] * r[i][k] for k in range(i))
    return mu, B


def _round_half(x: Fraction):
    n, d = x.numerator, x.denominator
    if n >= 0:
        return (2 * n + d) // (2 * d)
    return -((-2 * n + d) // (2 * d))


def lll_reduce(basis=None, delta=Fraction(3, 4), gram=None):
    """LLL-reduce; returns (new_basis_or_None, U) with new = U * old.

    Provide integer row vectors in `basis`, or a positive semidefinite integer
    or rational `gram` matrix of abstract vectors (then basis may be None and
    only the unimodular transform U is returned meaningfully).
    """
    assert basis is not None or gram is not None
    if gram is None:
        G = gram_matrix(basis)
    else:
        G = [list(r) for r in gram]
    n = len(G)
    b = [list(r) for r in basis] if basis is not None else None
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    mu, B = _initial_gso(G)

    def red(k, l):
        if 2 * abs(mu[k][l]) <= 1:
            return
        q = _round_half(mu[k][l])
        if b is not None:
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
        U[k] = [x - q * y for x, y in zip(U[k], U[l])]
        for j in range(l):
            mu[k][j] -= q * mu[l][j]
        mu[k][l] -= q

    def swap(k):
        if b is not None:
            b[k], b[k - 1] = b[k - 1], b[k]
        U[k], U[k - 1] = U[k - 1], U[k]
        m = mu[k][k - 1]
        Bnew = B[k] + m * m * B[k - 1]
        if Bnew == 0:
            # degenerate (dependent vectors); plain swap of GSO data
            B[k], B[k - 1] = B[k - 1], B[k]
            for j in range(k - 1):
                mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
            return
        mu[k][k - 1] = m * B[k - 1] / Bnew
        B[k] = B[k - 1] * B[k] / Bnew
        B[k - 1] = Bnew
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        for i in range(k + 1, n):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    k = 1
    guard = 0
    while k < n:
        guard += 1
        if guard > 200000:
            raise RuntimeError("LLL did not terminate")
        red(k, k - 1)
        if B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]:
            swap(k)
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return b, U
