"""Class groups and units by index calculus over a GRH factor base.

Relations come from LLL-short elements of factor-base ideal lattices; the
relation lattice is reduced by structured (Markowitz-style) elimination with
exact integer arithmetic, the small dense core by Smith normal form.  Unit
vectors arise as exact kernel combinations; the product h*R is certified
against the truncated Euler-product estimate of the zeta residue, which makes
every reported invariant correct under GRH (and the flag records that).

Floating point is confined to embeddings/logs (mpmath, high precision) and to
candidate filtering; class-group structure, valuations and relation rows are
exact integers throughout.
"""

from __future__ import annotations

import math
import random as _random
import time

import mpmath

from .lll import lll_reduce
from .numberfield import NumberField, hnf_rows


class IncompleteComputationError(RuntimeError):
    """Relation search or certification did not finish within budget."""


DEFAULT_GRH_CONST = 12


def factor_base_bound(disc, const=DEFAULT_GRH_CONST):
    return int(const * math.log(abs(disc)) ** 2)


# -- Smith normal form with transforms ------------------------------------------------


def snf_with_transforms(M):
    """(U, D, V) with U*M*V = D in Smith form; all exact, for small dense cores."""
    m = len(M)
    n = len(M[0]) if m else 0
    A = [row[:] for row in M]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q col_j
        for r in range(m):
            A[r][i] -= q * A[r][j]
        for r in range(n):
            V[r][i] -= q * V[r][j]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(m):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    t = 0
    while t < min(m, n):
        # find pivot: smallest nonzero |entry| in A[t:][t:]
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < best):
                    best = abs(A[i][j])
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    row_op(i, t, q)
                    if A[i][t]:
                        row_swap(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    col_op(j, t, q)
                    if A[t][j]:
                        col_swap(t, j)
                        done = False
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    # enforce the divisibility chain d_i | d_{i+1} with exact 2x2 fixups
    import math as _math
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if a and b % a:
                changed = True
                g = _math.gcd(a, b)
                # extended euclid: u*a + v*b = g
                u, v = _ext_gcd(a, b)
                j = i + 1
                # row_i += row_j, then unimodular column mix W = [[u, -b//g],[v, a//g]]
                A[i] = [x + y for x, y in zip(A[i], A[j])]
                U[i] = [x + y for x, y in zip(U[i], U[j])]
                for r_ in range(m):
                    ci, cj = A[r_][i], A[r_][j]
                    A[r_][i], A[r_][j] = u * ci + v * cj, (-(b // g)) * ci + (a // g) * cj
                for r_ in range(n):
                    ci, cj = V[r_][i], V[r_][j]
                    V[r_][i], V[r_][j] = u * ci + v * cj, (-(b // g)) * ci + (a // g) * cj
                # clear the remaining off-diagonal entry in row j
                if A[j][i]:
                    q = A[j][i] // A[i][i]
                    A[j] = [x - q * y for x, y in zip(A[j], A[i])]
                    U[j] = [x - q * y for x, y in zip(U[j], U[i])]
                assert A[i][j] == 0 and A[j][i] == 0
    return U, A, V


def _ext_gcd(a, b):
    """(u, v) with u*a + v*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, tt = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, tt = tt, old_t - q * tt
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


# -- factored elements ------------------------------------------------------------------


class FactoredElement:
    """Lazy product of stored atoms (integral field elements) with integer exponents."""

    __slots__ = ("powers",)

    def __init__(self, powers=None):
        self.powers = dict(powers or {})

    def mul(self, other):
        p = dict(self.powers)
        for k, e in other.powers.items():
            p[k] = p.get(k, 0) + e
            if p[k] == 0:
                del p[k]
        return FactoredElement(p)

    def pow(self, e):
        return FactoredElement({k: v * e for k, v in self.powers.items()})

    def __repr__(self):
        return "FactoredElement(%s)" % (self.powers,)


# -- the main computation -----------------------------------------------------------------


class ClassUnitData:
    def __init__(self, field, fb, invariants, unit_combos, atoms, grh, fb_bound,
                 regulator, torsion_order, solver):
        self.field = field
        self.factor_base = fb
        self.class_invariants = invariants  # cyclic orders > 1
        self.unit_combos = unit_combos  # FactoredElements generating U/torsion (finite index certified)
        self.atoms = atoms
        self.grh = grh
        self.factor_base_bound = fb_bound
        self.regulator = regulator
        self.torsion_order = torsion_order
        self._solver = solver

    @property
    def class_number(self):
        h = 1
        for d in self.class_invariants:
            h *= d
        return h

    @property
    def unit_rank(self):
        return self.field.r1 + self.field.r2 - 1

    def class_of_vector(self, vec):
        """Class coordinates (tuple over invariants) of prod FB[i]^vec[i]."""
        return self._solver.class_of(vec)

    def principal_generator_combo(self, vec):
        """FactoredElement alpha with (alpha) = prod FB[i]^vec[i], or None."""
        return self._solver.solve_principal(vec)

    def serialize(self):
        return {
            "class_group": self.class_invariants,
            "unit_rank": self.unit_rank,
            "regulator": float(self.regulator),
            "grh": self.grh,
            "factor_base_bound": self.factor_base_bound,
            "torsion_order": self.torsion_order,
        }


class _EliminationSolver:
    """Records the structured elimination so targets can be reduced later."""

    def __init__(self, pivots, core_cols, core_rows_vecs, core_rows_combos, snf, invariants, col_index):
        self.pivots = pivots  # list of (col, rowdict, combodict, sign-normalized pivot +-1)
        self.core_cols = core_cols  # ordered list of column ids
        self.core_rows_vecs = core_rows_vecs
        self.core_rows_combos = core_rows_combos
        self.U, self.D, self.V = snf
        self.invariants = invariants
        self.col_index = col_index  # column id -> dense core position

    def _reduce_target(self, target):
        t = dict(target)
        combo = {}
        for col, rowvec, rowcombo in self.pivots:
            c = t.get(col, 0)
            if c:
                piv = rowvec[col]
                assert abs(piv) == 1
                q = c * piv  # since piv in {1,-1}: c/piv
                for cc, vv in rowvec.items():
                    t[cc] = t.get(cc, 0) - q * vv
                    if t[cc] == 0:
                        del t[cc]
                for aa, vv in rowcombo.items():
                    combo[aa] = combo.get(aa, 0) - q * vv
        return t, combo

    def class_of(self, vec):
        t, _ = self._reduce_target(dict(enumerate(vec)) if isinstance(vec, (list, tuple)) else dict(vec))
        dense = [0] * len(self.core_cols)
        for c, v in t.items():
            assert c in self.col_index, "column eliminated with nonzero residue?"
            dense[self.col_index[c]] = v
        # class coords: y := dense * V, then mod diag
        n = len(self.core_cols)
        y = [sum(dense[k] * self.V[k][j] for k in range(n)) for j in range(n)]
        coords = []
        for j in range(n):
            d = self.D[j][j] if j < len(self.D) and j < len(self.D[j]) else 0
            if d > 1:
                coords.append(y[j] % d)
            elif d == 0:
                coords.append(y[j])
        return tuple(coords)

    def solve_principal(self, vec):
        """Combo with sum combo_i * row_i = vec, or None."""
        t, combo = self._reduce_target(dict(enumerate(vec)) if isinstance(vec, (list, tuple)) else dict(vec))
        dense = [0] * len(self.core_cols)
        for c, v in t.items():
            if c not in self.col_index:
                if v:
                    return None
                continue
            dense[self.col_index[c]] = v
        # solve x * Core = dense: with U*Core*V = D, set z = x*U^-1, then z*D = dense*V
        n = len(self.core_cols)
        m = len(self.core_rows_vecs)
        dv = [sum(dense[k] * self.V[k][j] for k in range(n)) for j in range(n)]
        z = [0] * m
        for j in range(n):
            d = self.D[j][j] if j < m and j < n else 0
            if j < m and d != 0:
                if dv[j] % d:
                    return None
                z[j] = dv[j] // d
            else:
                if dv[j] != 0:
                    return None
        x = [sum(z[k] * self.U[k][j] for k in range(m)) for j in range(m)]
        # _reduce_target leaves vec = t - combo*rows, so the total combination is
        # (-combo) from the pivot phase plus x over the core rows
        total = {}
        for aa, vv in combo.items():
            total[aa] = total.get(aa, 0) - vv
        for i, xi in enumerate(x):
            if xi:
                for aa, vv in self.core_rows_combos[i].items():
                    total[aa] = total.get(aa, 0) + xi * vv
        return FactoredElement(total)


def _structured_eliminate(rows_vecs, rows_combos, ncols):
    """Markowitz-style exact elimination at +-1 pivots.

    Returns (pivots, remaining_vecs, remaining_combos, unit_combos, used_cols).
    """
    rows = [dict(r) for r in rows_vecs]
    combos = [dict(c) for c in rows_combos]
    active = set(range(len(rows)))
    col_rows = {}
    for i in active:
        for c in rows[i]:
            col_rows.setdefault(c, set()).add(i)
    pivots = []
    units = []

    def remove_row_from_cols(i):
        for c in rows[i]:
            col_rows.get(c, set()).discard(i)

    while True:
        # find best +-1 pivot by Markowitz count
        best = None
        best_score = None
        for c, touching in col_rows.items():
            if not touching:
                continue
            cw = len(touching)
            for i in touching:
                v = rows[i].get(c, 0)
                if abs(v) == 1:
                    score = (cw - 1) * (len(rows[i]) - 1)
                    if best_score is None or score < best_score:
                        best_score = score
                        best = (c, i)
                        if score == 0:
                            break
            if best_score == 0:
                break
        if best is None:
            break
        c, i = best
        piv = rows[i][c]
        remove_row_from_cols(i)
        active.discard(i)
        rowvec = rows[i]
        rowcombo = combos[i]
        for j in list(col_rows.get(c, set())):
            q = rows[j][c] * piv  # exact multiple since |piv| = 1
            remove_row_from_cols(j)
            for cc, vv in rowvec.items():
                nv = rows[j].get(cc, 0) - q * vv
                if nv:
                    rows[j][cc] = nv
                else:
                    rows[j].pop(cc, None)
            for aa, vv in rowcombo.items():
                nv = combos[j].get(aa, 0) - q * vv
                if nv:
                    combos[j][aa] = nv
                else:
                    combos[j].pop(aa, None)
            if rows[j]:
                for cc in rows[j]:
                    col_rows.setdefault(cc, set()).add(j)
            else:
                active.discard(j)
                if combos[j]:
                    units.append(dict(combos[j]))
        col_rows.pop(c, None)
        pivots.append((c, dict(rowvec), dict(rowcombo)))
    remaining = [i for i in active if rows[i]]
    zero_rows = [i for i in active if not rows[i] and combos[i]]
    for i in zero_rows:
        units.append(dict(combos[i]))
    return pivots, [rows[i] for i in remaining], [combos[i] for i in remaining], units


def class_and_units(K: NumberField, grh=True, fb_bound=None, seed=0,
                    max_seconds=1800, euler_cutoff=40000, progress=None):
    """Class group and unit data for K, certified by the analytic h*R test.

    Raises IncompleteComputationError instead of returning unverified data.
    """
    t_start = time.time()
    rng = _random.Random(seed)
    disc = K.disc
    bound = fb_bound if fb_bound is not None else factor_base_bound(disc)
    if not grh:
        raise IncompleteComputationError(
            "unconditional class groups are out of scope; pass grh=True"
        )
    # ---- factor base
    fb = []
    from .factorint import small_primes
    rat_primes = [p for p in small_primes(max(bound + 100, 1000)) if p <= bound]
    fb_by_rat = {}
    for q in rat_primes:
        primes = K.splitting_type(q)
        chosen = [P for P in primes if P.norm <= bound]
        if chosen:
            start = len(fb)
            fb.extend(chosen)
            fb_by_rat[q] = (start, primes, chosen)
    m = len(fb)
    fb_index = {id(P): i for i, P in enumerate(fb)}
    if progress:
        progress("factor base: %d ideals (bound %d)" % (m, bound))

    atoms = []  # integral elements, omega-coords
    rows_vecs = []
    rows_combos = []

    def add_relation(vec, elt):
        atoms.append(elt)
        rows_vecs.append({c: v for c, v in vec.items() if v})
        rows_combos.append({len(atoms) - 1: 1})

    # free relations from rational primes all of whose primes are in the base
    for q, (start, primes, chosen) in fb_by_rat.items():
        if len(chosen) == len(primes):
            vec = {}
            for P in primes:
                vec[fb_index[id(P)]] = P.e
            add_relation(vec, K.from_int(q))

    # ---- relation search over ideal lattices
    G0 = K.t2_gram_int()
    n = K.n

    def vec_of_element(alpha, extra_known=None):
        """Factor (alpha) over the base; None if not smooth."""
        nrm = K.element_norm(alpha)
        if nrm == 0:
            return None
        nrm = abs(nrm)
        rest = nrm
        support = set()
        for q in rat_primes:
            if q * q > rest:
                break
            if rest % q == 0:
                while rest % q == 0:
                    rest //= q
                support.add(q)
        if rest > 1:
            if rest <= bound and rest in fb_by_rat:
                support.add(rest)
                rest = 1
            else:
                return None
        vec = {}
        for q in sorted(support):
            if q not in fb_by_rat:
                return None
            start, primes, chosen = fb_by_rat[q]
            got = 0
            for P in primes:
                v = K.valuation(alpha, P)
                if v:
                    if P.norm > bound:
                        return None
                    vec[fb_index[id(P)]] = v
                    got += v * P.f
            # consistency: q^got must equal the q-part of the norm
            qpart = 0
            nn = nrm
            while nn % q == 0:
                nn //= q
                qpart += 1
            if got != qpart:
                return None
        return vec

    processed = [0]

    def harvest_ideal(H, base_vec):
        """LLL the ideal lattice, try short vectors for smooth relations."""
        HG = [[sum(H[i][a] * G0[a][b] for a in range(n)) for b in range(n)] for i in range(n)]
        G = [[sum(HG[i][b] * H[j][b] for b in range(n)) for j in range(n)] for i in range(n)]
        _, U = lll_reduce(basis=None, gram=G)
        cands = []
        for i in range(min(4, n)):
            v = [sum(U[i][k] * H[k][j] for k in range(n)) for j in range(n)]
            cands.append(v)
        for i in range(1, min(4, n)):
            cands.append([a + b for a, b in zip(cands[0], cands[i])])
            cands.append([a - b for a, b in zip(cands[0], cands[i])])
        got = 0
        for alpha in cands:
            if not any(alpha):
                continue
            vec = vec_of_element(alpha)
            if vec is not None:
                add_relation(vec, alpha)
                got += 1
                if got >= 2:
                    break
        return got

    # one pass over every factor-base prime guarantees column coverage chances
    for idx, P in enumerate(fb):
        if time.time() - t_start > max_seconds:
            raise IncompleteComputationError("relation search timed out")
        harvest_ideal(P.hnf, {idx: 1})
        if progress and idx % 50 == 49:
            progress("relations: %d after %d/%d ideals" % (len(rows_vecs), idx + 1, m))

    extra_rounds = 0
    analytic = _analytic_hr(K, euler_cutoff, progress=progress)
    atomlogs = _AtomLogs(K, atoms)

    while True:
        if time.time() - t_start > max_seconds:
            raise IncompleteComputationError("certification timed out")
        result = _try_finish(K, fb, rows_vecs, rows_combos, atomlogs, analytic, progress)
        if result is not None:
            invariants, unit_combos, regulator, torsion, solver = result
            return ClassUnitData(K, fb, invariants, unit_combos, atoms, grh, bound,
                                 regulator, torsion, solver)
        # collect more relations from random products of factor-base primes
        extra_rounds += 1
        if extra_rounds > 60:
            raise IncompleteComputationError("h*R certification failed to converge")
        if progress:
            progress("extra relation round %d" % extra_rounds)
        for _ in range(20):
            i = rng.randrange(m)
            j = rng.randrange(m)
            H = K.ideal_mul(fb[i].hnf, fb[j].hnf)
            harvest_ideal(H, {i: 1, j: 1})


def _try_finish(K, fb, rows_vecs, rows_combos, atomlogs, analytic, progress):
    m = len(fb)
    pivots, core_vecs, core_combos, unit_dicts = _structured_eliminate(rows_vecs, rows_combos, m)
    used_cols = {c for c, _, _ in pivots}
    core_cols = sorted({c for r in core_vecs for c in r} | (set(range(m)) - used_cols))
    col_index = {c: i for i, c in enumerate(core_cols)}
    dense = [[r.get(c, 0) for c in core_cols] for r in core_vecs]
    if progress:
        progress("elimination: %d pivots, core %dx%d, %d unit candidates"
                 % (len(pivots), len(dense), len(core_cols), len(unit_dicts)))
    if core_cols:
        if not dense or len(dense) < len(core_cols):
            return None  # rank deficient: need more relations
        U, D, V = snf_with_transforms(dense)
        diag = [D[j][j] for j in range(min(len(D), len(core_cols)))]
        if len(diag) < len(core_cols) or any(d == 0 for d in diag):
            return None
        invariants = [d for d in diag if d > 1]
        solver = _EliminationSolver(pivots, core_cols, dense, core_combos, (U, D, V), invariants, col_index)
        h = 1
        for d in diag:
            h *= abs(d)
    else:
        invariants = []
        solver = _EliminationSolver(pivots, [], [], [], ([], [], []), invariants, {})
        h = 1
    unit_fes = [FactoredElement(d) for d in unit_dicts]
    r = K.r1 + K.r2 - 1
    reg, indep = _unit_lattice_regulator(K, atomlogs, unit_fes, r)
    if indep < r or reg is None:
        return None
    torsion = _torsion_order(K)
    hr = float(h) * float(reg)
    ratio = hr / analytic
    if progress:
        progress("h=%d R=%.6f hR=%.4f analytic=%.4f ratio=%.3f" % (h, float(reg), hr, analytic, ratio))
    if 0.72 < ratio < 1.42:
        return invariants, unit_fes, float(reg), torsion, solver
    return None


def _torsion_order(K):
    if K.r1 > 0:
        return 2
    if K.n == 2:
        if K.disc == -4:
            return 4
        if K.disc == -3:
            return 6
        return 2
    # small cyclotomic checks are possible but not needed at the current scope
    return 2


class _AtomLogs:
    """Cached per-atom normalized log vectors (r1 single + r2 doubled coords)."""

    def __init__(self, K, atoms, prec=400):
        self.K = K
        self.atoms = atoms
        self.prec = prec
        self.cache = {}

    def atom_log(self, idx):
        if idx in self.cache:
            return self.cache[idx]
        K = self.K
        emb = K.embeddings(self.prec)
        a = self.atoms[idx]
        with mpmath.workprec(self.prec):
            vec = []
            for t in range(K.r1 + K.r2):
                v = mpmath.mpf(0)
                for i, c in enumerate(a):
                    if c:
                        v += int(c) * emb[i][t]
                w = 1 if t < K.r1 else 2
                vec.append(w * mpmath.log(abs(v)))
        self.cache[idx] = vec
        return vec

    def log_of(self, fe: FactoredElement):
        with mpmath.workprec(self.prec):
            out = [mpmath.mpf(0)] * (self.K.r1 + self.K.r2)
            for idx, e in fe.powers.items():
                al = self.atom_log(idx)
                for t in range(len(out)):
                    out[t] += e * al[t]
        return out


def _lattice_add_vector(basis, w, r, tol):
    """Refine an r-row real lattice basis by the vector w (exact index steps).

    Returns True if the basis changed.  Uses integer HNF on the coordinate
    vector with denominator detection; raises on precision trouble.
    """
    x = _solve_coords_lsq(basis, w)
    d = None
    for cand in range(1, 4097):
        if all(abs(cand * c - mpmath.nint(cand * c)) < tol * cand for c in x):
            d = cand
            break
    if d is None:
        raise IncompleteComputationError("unit lattice refinement lost precision")
    if d == 1:
        return False
    a = [int(mpmath.nint(d * c)) for c in x]
    rows = [[d if j == i else 0 for j in range(r)] for i in range(r)] + [a]
    H = hnf_rows(rows, r)
    newbasis = []
    with mpmath.workprec(mpmath.mp.prec):
        for i in range(r):
            vec = [mpmath.mpf(0)] * len(basis[0])
            for j in range(r):
                if H[i][j]:
                    for t in range(len(vec)):
                        vec[t] += mpmath.mpf(H[i][j]) * basis[j][t] / d
            newbasis.append(vec)
    basis[:] = newbasis
    return True


def _unit_lattice_regulator(K, atomlogs, unit_fes, r):
    """(covolume, independent-count) of the log-lattice generated by the units."""
    if r == 0:
        return 1.0, 0
    with mpmath.workprec(atomlogs.prec):
        basis = []
        tol = mpmath.mpf(2) ** (-80)
        zero_tol = mpmath.mpf(2) ** (-60)
        for fe in unit_fes:
            w = atomlogs.log_of(fe)[:r]
            if mpmath.sqrt(sum(c * c for c in w)) < zero_tol:
                continue  # torsion combination
            if len(basis) < r:
                if _residual_norm(basis, w) > zero_tol:
                    basis.append(w)
                continue
            changed = True
            guard = 0
            while changed:
                guard += 1
                if guard > 64:
                    raise IncompleteComputationError("unit lattice refinement loop")
                changed = _lattice_add_vector(basis, w, r, tol)
        if len(basis) < r:
            return None, len(basis)
        det = _gram_det_sqrt(basis)
        return det, r


def _residual_norm(basis, w):
    if not basis:
        return mpmath.sqrt(sum(c * c for c in w))
    x = _solve_coords_lsq(basis, w)
    res = [wi - sum(x[j] * basis[j][i] for j in range(len(basis))) for i, wi in enumerate(w)]
    return mpmath.sqrt(sum(c * c for c in res))


def _solve_coords(basis, w):
    """Coordinates of w in the row space of a square-rank basis (least squares)."""
    return _solve_coords_lsq(basis, w)


def _solve_coords_lsq(basis, w):
    k = len(basis)
    G = [[sum(basis[i][t] * basis[j][t] for t in range(len(w))) for j in range(k)] for i in range(k)]
    b = [sum(basis[i][t] * w[t] for t in range(len(w))) for i in range(k)]
    # solve G x = b by Gaussian elimination in mpf
    A = [row[:] + [b[i]] for i, row in enumerate(G)]
    for col in range(k):
        piv = max(range(col, k), key=lambda i: abs(A[i][col]))
        A[col], A[piv] = A[piv], A[col]
        for i in range(k):
            if i != col and A[col][col] != 0:
                f = A[i][col] / A[col][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[col])]
    return [A[i][k] / A[i][i] for i in range(k)]


def _gram_det_sqrt(basis):
    k = len(basis)
    G = [[sum(basis[i][t] * basis[j][t] for t in range(len(basis[0]))) for j in range(k)] for i in range(k)]
    # Cholesky-ish determinant
    det = mpmath.mpf(1)
    A = [row[:] for row in G]
    for col in range(k):
        det *= A[col][col]
        for i in range(col + 1, k):
            f = A[i][col] / A[col][col]
            A[i] = [x - f * y for x, y in zip(A[i], A[col])]
    return mpmath.sqrt(abs(det))


def _analytic_hr(K, cutoff, progress=None):
    """w * sqrt|d| * L / (2^r1 (2pi)^r2) with L the truncated Euler product."""
    from .factorint import small_primes
    import sympy
    disc = abs(K.disc)
    r1, r2 = K.r1, K.r2
    w = _torsion_order(K)
    with mpmath.workprec(200):
        L = mpmath.mpf(1)
        x = sympy.Symbol("x")
        for p in small_primes(cutoff + 100):
            if p > cutoff:
                break
            local = mpmath.mpf(1) - mpmath.mpf(1) / p
            if K.index % p:
                fp = sympy.Poly([c % p for c in reversed(K.f.coeffs)], x, modulus=p)
                for poly, mult in fp.factor_list()[1]:
                    local /= 1 - mpmath.mpf(p) ** (-poly.degree())
            else:
                for P in K.splitting_type(p):
                    local /= 1 - mpmath.mpf(P.norm) ** (-1)
            L *= local
        val = w * mpmath.sqrt(disc) * L / (2 ** r1 * (2 * mpmath.pi) ** r2)
    if progress:
        progress("analytic hR ~ %.6f (Euler cutoff %d)" % (float(val), cutoff))
    return float(val)
