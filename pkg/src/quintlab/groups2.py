"""The GF(2) matrix-group machinery for 2-division fields of quintics.

Fixes the degree-4 representation of S5 sending transpositions to transvections,
the order-20 subgroup generated by the inertia and Frobenius matrices, corner
subgroups of its modules, the radical spans Gamma_a inside End(E), the groups
G_a = c(Gamma_a) x| G_0 inside the 8x8 parabolic group, their involutions, the
inclusion diagram, and the degree-20 stem-subgroup search.

Conventions: 4x4 matrices over F2 are packed into 16-bit ints, row i in bits
[4i, 4i+4), bit j of a row = column j.  Vectors in F2^4 are 4-bit ints.
"""

from __future__ import annotations

from functools import lru_cache

from .f2linalg import F2Matrix, row_echelon, in_span, span_closure, reduce_vector

# -- packed 4x4 matrices --------------------------------------------------------

I4 = 0x8421  # rows 1,2,4,8


def pack(rows):
    v = 0
    for i, r in enumerate(rows):
        v |= (r & 15) << (4 * i)
    return v


def unpack(m):
    return [(m >> (4 * i)) & 15 for i in range(4)]


def mat4_from_lists(lists):
    rows = []
    for row in lists:
        v = 0
        for j, e in enumerate(row):
            if e % 2:
                v |= 1 << j
        rows.append(v)
    return pack(rows)


def m4mul(a, b):
    brows = unpack(b)
    out = 0
    for i in range(4):
        arow = (a >> (4 * i)) & 15
        acc = 0
        if arow & 1:
            acc ^= brows[0]
        if arow & 2:
            acc ^= brows[1]
        if arow & 4:
            acc ^= brows[2]
        if arow & 8:
            acc ^= brows[3]
        out |= acc << (4 * i)
    return out


def m4add(a, b):
    return a ^ b


def m4pow(a, n):
    r = I4
    while n:
        if n & 1:
            r = m4mul(r, a)
        a = m4mul(a, a)
        n >>= 1
    return r


def m4inv(a):
    # group elements here have order dividing 60; brute power is fine
    p = a
    prev = I4
    for _ in range(64):
        if p == I4:
            return prev
        prev = p
        p = m4mul(p, a)
    raise ValueError("not invertible in expected order range")


def m4apply(m, v):
    w = 0
    for i in range(4):
        if bin(((m >> (4 * i)) & 15) & v).count("1") & 1:
            w |= 1 << i
    return w


def m4rank(m):
    basis, _ = row_echelon(unpack(m))
    return len(basis)


def to_f2matrix(m):
    return F2Matrix(unpack(m), 4)


# -- the fixed matrices ----------------------------------------------------------

R_MAT = mat4_from_lists([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
S_MAT = mat4_from_lists([[0, 0, 0, 1], [1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
T_MAT = mat4_from_lists([[1, 0, 1, 0], [0, 0, 1, 1], [0, 1, 1, 0], [0, 0, 1, 0]])

T2 = m4mul(T_MAT, T_MAT)
T3 = m4mul(T2, T_MAT)

# corner elements of End(E), labelled as in the 2^3-element corner set
GAMMA = {
    "0": 0,
    "4": T_MAT ^ T2 ^ T3,
    "5": T_MAT ^ T3,
    "9": T2,
    "11": T_MAT ^ T2,
    "11'": T2 ^ T3,
    "15": T3,
    "15'": T_MAT,
}
GAMMA_BY_VALUE = {v: k for k, v in GAMMA.items()}
GA_LABELS = (0, 4, 5, 9, 11, 15)


# -- permutations (tuples of images, 0-indexed) -----------------------------------


def pcompose(a, b):
    """a after b: (a o b)(i) = a(b(i)), matching left matrix action."""
    return tuple(a[b[i]] for i in range(len(b)))


def pinv(a):
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai] = i
    return tuple(out)


def psign(a):
    inv = 0
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] > a[j]:
                inv += 1
    return inv & 1


PERM_ID = (0, 1, 2, 3, 4)
PERM_12 = (1, 0, 2, 3, 4)
PERM_12345 = (1, 2, 3, 4, 0)
PERM_2354 = (0, 2, 4, 1, 3)


@lru_cache(maxsize=1)
def iota_table():
    """The faithful pairing permutation <-> matrix generated by (12)->r, (12345)->s."""
    pairs = {PERM_ID: I4}
    frontier = [(PERM_ID, I4)]
    gens = [(PERM_12, R_MAT), (PERM_12345, S_MAT)]
    while frontier:
        new = []
        for perm, mat in frontier:
            for gp, gm in gens:
                p2 = pcompose(perm, gp)
                m2 = m4mul(mat, gm)
                if p2 not in pairs:
                    pairs[p2] = m2
                    new.append((p2, m2))
                else:
                    assert pairs[p2] == m2, "iota is not well-defined"
        frontier = new
    assert len(pairs) == 120
    return pairs


def iota(perm):
    return iota_table()[perm]


@lru_cache(maxsize=1)
def iota_inverse_table():
    return {m: p for p, m in iota_table().items()}


# -- corner subgroups --------------------------------------------------------------


class CornerSet:
    """Echelonized F2-basis of {v : t.v = v, (1 + s + ... + s^4).v = 0}."""

    def __init__(self, basis, nbits):
        self.basis = tuple(sorted(basis, reverse=True))
        self.nbits = nbits

    @property
    def dim(self):
        return len(self.basis)

    def elements(self):
        return span_closure(list(self.basis))

    def contains(self, v):
        return in_span(v, list(self.basis))


def corner_subgroup(s_action: F2Matrix, t_action: F2Matrix) -> CornerSet:
    """Corner subgroup of an F2 module given the two generator actions.

    Validates the defining relations: s has order 5, t order dividing 4 and
    t s t^-1 = s^2.
    """
    n = s_action.nrows
    idn = F2Matrix.identity(n)
    if s_action.pow(5) != idn or s_action == idn:
        raise ValueError("s-generator must have exact order 5")
    if t_action.pow(4) != idn:
        raise ValueError("t-generator must have order dividing 4")
    if t_action * s_action != s_action.pow(2) * t_action:
        raise ValueError("relation t s t^-1 = s^2 fails")
    trace = F2Matrix.zero(n, n)
    cur = idn
    for _ in range(5):
        trace = trace + cur
        cur = cur * s_action
    fix_rows = (t_action + idn).rows
    constraint = list(fix_rows) + list(trace.rows)
    from .f2linalg import kernel_basis
    basis = kernel_basis(constraint, n)
    return CornerSet(basis, n)


def adjoint_action_matrix(g):
    """ad_g on End(E) packed as 16-bit vectors: images of the 16 basis matrices."""
    ginv = m4inv(g)
    cols = []
    for b in range(16):
        e = 1 << b
        # e as matrix: single entry; conjugate
        cols.append(m4mul(m4mul(g, e), ginv))
    return cols


def ad_apply(cols, m):
    out = 0
    mm = m
    b = 0
    while mm:
        if mm & 1:
            out ^= cols[b]
        mm >>= 1
        b += 1
    return out


@lru_cache(maxsize=None)
def _ad_cols(g):
    return tuple(adjoint_action_matrix(g))


def standard_module_actions():
    """(s, t) acting on E = F2^4 as F2Matrix, per the fixed basis."""
    return to_f2matrix(S_MAT), to_f2matrix(T_MAT)


def adjoint_module_actions():
    """(ad_s, ad_t) on End(E) = F2^16 as F2Matrix (columns = basis images)."""
    mats = []
    for g in (S_MAT, T_MAT):
        cols = adjoint_action_matrix(g)
        rows = []
        for i in range(16):
            v = 0
            for j in range(16):
                if (cols[j] >> i) & 1:
                    v |= 1 << j
            rows.append(v)
        mats.append(F2Matrix(rows, 16))
    return tuple(mats)


# -- Gamma spans -------------------------------------------------------------------


class GammaSpan:
    """F2-span of the S5-conjugation orbit of a corner element inside End(E)."""

    def __init__(self, gamma):
        self.gamma = gamma
        basis = []
        seen_basis = []
        frontier = [gamma]
        if gamma:
            seen_basis = [gamma]
        while frontier:
            new = []
            for m in frontier:
                for g in (R_MAT, S_MAT):
                    mm = ad_apply(_ad_cols(g), m)
                    red = reduce_vector(mm, seen_basis)
                    if red:
                        seen_basis.append(red)
                        seen_basis.sort(reverse=True)
                        new.append(mm)
            frontier = new
        self.basis = tuple(sorted(seen_basis, reverse=True))

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, m):
        return in_span(m, list(self.basis))

    def elements(self):
        return span_closure(list(self.basis))


@lru_cache(maxsize=None)
def gamma_span(label):
    """GammaSpan for a corner label in {0,4,5,9,11,15,"11'","15'"} or a raw int."""
    if isinstance(label, str):
        gamma = GAMMA[label]
    elif label in GA_LABELS:
        gamma = GAMMA[str(label)]
    else:
        gamma = label
    return GammaSpan(gamma)


# -- the groups G_a ----------------------------------------------------------------


class GaGroup:
    """G_a = c(Gamma_a) x| G_0 inside the parabolic group, a in {0,4,5,9,11,15}.

    Elements are pairs (m, perm): m a packed 4x4 matrix in Gamma_a, perm the
    S5 part; the 8x8 realization is [[d, m d], [0, d]] with d = iota(perm).
    """

    def __init__(self, a):
        assert a in GA_LABELS
        self.a = a
        self.span = gamma_span(a)
        assert self.span.dim == a
        self.radical = self.span.elements()
        self.order = 120 << a
        self.generators = [(0, PERM_12), (0, PERM_12345)]
        if a:
            self.generators.append((GAMMA[str(a)], PERM_ID))

    def mul(self, x, y):
        mx, px = x
        my, py = y
        return (mx ^ ad_apply(_ad_cols(iota(px)), my), pcompose(px, py))

    def inv(self, x):
        m, p = x
        pi = pinv(p)
        return (ad_apply(_ad_cols(iota(pi)), m), pi)

    def conj(self, g, x):
        return self.mul(self.mul(g, x), self.inv(g))

    def identity(self):
        return (0, PERM_ID)

    def contains(self, x):
        return x[0] in self.radical and x[1] in iota_table()

    def elements(self):
        for m in self.radical:
            for p in iota_table():
                yield (m, p)

    def to_matrix(self, x):
        """8x8 parabolic realization [[d, m d],[0, d]]."""
        m, p = x
        d = iota(p)
        md = m4mul(m, d)
        drows = unpack(d)
        mdrows = unpack(md)
        rows = []
        for i in range(4):
            rows.append(drows[i] | (mdrows[i] << 4))
        for i in range(4):
            rows.append(drows[i] << 4)
        return F2Matrix(rows, 8)

    def element_order_is_two(self, x):
        return x != self.identity() and self.mul(x, x) == self.identity()

    # ---- involutions ----------------------------------------------------------

    def involutions(self):
        """All involutions (m, p): p^2 = id and ad_d(m) = m, excluding identity."""
        out = []
        for p in iota_table():
            if pcompose(p, p) != PERM_ID:
                continue
            d = iota(p)
            cols = _ad_cols(d)
            # fixed vectors of ad_d within Gamma_a: kernel in span coordinates
            bas = list(self.span.basis)
            rows = []
            for bit in range(16):
                row = 0
                for j, b in enumerate(bas):
                    img = ad_apply(cols, b) ^ b
                    if (img >> bit) & 1:
                        row |= 1 << j
                rows.append(row)
            from .f2linalg import kernel_basis
            ker = kernel_basis(rows, len(bas))
            fixed = set()
            for combo in span_closure(ker):
                v = 0
                for j, b in enumerate(bas):
                    if (combo >> j) & 1:
                        v ^= b
                fixed.add(v)
            for m in fixed:
                if p == PERM_ID and m == 0:
                    continue
                out.append((m, p))
        return out

    def conjugacy_classes_of_involutions(self):
        invs = self.involutions()
        inv_set = set(invs)
        seen = set()
        classes = []
        for x in invs:
            if x in seen:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for g in self.generators:
                        z = self.conj(g, y)
                        if z not in orbit:
                            orbit.add(z)
                            nxt.append(z)
                frontier = nxt
            assert orbit <= inv_set
            seen |= orbit
            classes.append(sorted(orbit))
        return classes

    def normal_closure_is_whole_group(self, x):
        """Whether the conjugates of x generate G_a (goodness of an involution)."""
        sub = SubgroupVQ(self)
        sub.add_generator(x)
        changed = True
        while changed:
            changed = False
            for h in list(sub.gens):
                for g in self.generators:
                    c = self.conj(g, h)
                    if not sub.contains(c):
                        sub.add_generator(c)
                        changed = True
        return sub.order() == self.order

    def classify_involutions(self):
        """Classes with flags: representative, size, good, very_good."""
        out = []
        for cls in self.conjugacy_classes_of_involutions():
            rep = cls[0]
            good = self.normal_closure_is_whole_group(rep)
            rk = (self.to_matrix(rep) + F2Matrix.identity(8)).rank()
            out.append(
                {
                    "representative": rep,
                    "size": len(cls),
                    "good": good,
                    "very_good": good and rk == 2,
                    "rank_g_minus_1": rk,
                }
            )
        return out


class SubgroupVQ:
    """Subgroup of G_a tracked via its S5-image and its radical intersection.

    Maintains a transversal over the image subgroup and the F2-span of the
    Schreier generators' radical parts, which equals the full intersection with
    the radical (Schreier's lemma; the radical is abelian).
    """

    def __init__(self, group: GaGroup):
        self.G = group
        self.gens = []
        self.wbasis = []  # echelon basis of subgroup-cap-radical
        self.transversal = {PERM_ID: group.identity()}

    def order(self):
        return len(self.transversal) << len(self.wbasis)

    def _add_radical(self, m):
        added = False
        m = reduce_vector(m, self.wbasis)
        if m:
            self.wbasis.append(m)
            self.wbasis.sort(reverse=True)
            added = True
        if added:
            self._saturate_module()
        return added

    def _saturate_module(self):
        # W must be invariant under conjugation by the known image subgroup;
        # close under the adjoint action of the transversal perms
        changed = True
        while changed:
            changed = False
            for p in list(self.transversal):
                cols = _ad_cols(iota(p))
                for b in list(self.wbasis):
                    img = reduce_vector(ad_apply(cols, b), self.wbasis)
                    if img:
                        self.wbasis.append(img)
                        self.wbasis.sort(reverse=True)
                        changed = True

    def add_generator(self, x):
        self.gens.append(x)
        self._rebuild()

    def _rebuild(self):
        # orbit of the identity coset under right multiplication by generators
        self.transversal = {PERM_ID: self.G.identity()}
        frontier = [self.G.identity()]
        while frontier:
            new = []
            for t in frontier:
                for g in self.gens:
                    prod = self.G.mul(t, g)
                    if prod[1] not in self.transversal:
                        self.transversal[prod[1]] = prod
                        new.append(prod)
            frontier = new
        # Schreier generators: t * g * rep(t*g)^-1 lie in the radical intersection
        for t in list(self.transversal.values()):
            for g in self.gens:
                prod = self.G.mul(t, g)
                rep = self.transversal[prod[1]]
                defect = self.G.mul(prod, self.G.inv(rep))
                assert defect[1] == PERM_ID
                self._add_radical(defect[0])

    def contains(self, x):
        m, p = x
        if p not in self.transversal:
            return False
        rep = self.transversal[p]
        defect = self.G.mul(x, self.G.inv(rep))
        assert defect[1] == PERM_ID
        return reduce_vector(defect[0], self.wbasis) == 0


@lru_cache(maxsize=None)
def ga_group(a):
    return GaGroup(a)


# -- Hasse diagram ------------------------------------------------------------------


def hasse_diagram():
    """Cover relations among the six G_a by span inclusion, plus order checks."""
    labels = GA_LABELS
    incl = set()
    for b in labels:
        for a in labels:
            if a == b:
                continue
            sb, sa = gamma_span(b), gamma_span(a)
            if sb.dim <= sa.dim and all(sa.contains(v) for v in sb.basis):
                incl.add((b, a))
    # remove transitive edges
    edges = set()
    for (b, a) in incl:
        if not any((b, c) in incl and (c, a) in incl for c in labels if c not in (a, b)):
            edges.add((b, a))
    # fiber-product order identities on the parallelograms
    assert ga_group(9).order * ga_group(0).order == ga_group(4).order * ga_group(5).order
    assert ga_group(15).order * ga_group(5).order == ga_group(9).order * ga_group(11).order
    return sorted(edges)


def surjection_on_edge(a, b):
    """S5-equivariant linear map Gamma_a -> Gamma_b with gamma_a -> gamma_b.

    Returns the map as a dict on basis vectors, or None.  Together with the
    identity on G_0 this gives the surjection G_a ->> G_b on the diagram edge.
    """
    sa, sb = gamma_span(a), gamma_span(b)
    na, nb = sa.dim, sb.dim
    bas_a = list(sa.basis)
    bas_b = list(sb.basis)

    def coords_b(v):
        # v in span_b -> coordinate bitvector
        out = 0
        vv = v
        for _ in range(nb):
            if not vv:
                break
            top = vv.bit_length() - 1
            for j, b_ in enumerate(bas_b):
                if b_.bit_length() - 1 == top:
                    vv ^= b_
                    out ^= 1 << j
                    break
            else:
                return None
        return out if vv == 0 else None

    # unknowns: phi(bas_a[j]) in F2^{nb}: na*nb bits; equations: equivariance for g in {r,s}
    # phi(ad_g v) = ad_g phi(v), and phi(gamma_a) = gamma_b
    nvars = na * nb

    def var(j, k):
        return j * nb + k

    rows = []
    rhs = []

    def coords_a(v):
        out = 0
        vv = v
        while vv:
            top = vv.bit_length() - 1
            hit = False
            for j, b_ in enumerate(bas_a):
                if b_.bit_length() - 1 == top:
                    vv ^= b_
                    out ^= 1 << j
                    hit = True
                    break
            if not hit:
                return None
        return out

    # equivariance rows: for each basis vector and generator:
    for g in (R_MAT, S_MAT):
        cols = _ad_cols(g)
        # matrix of ad_g on span_a coords and on span_b coords
        for j in range(na):
            vimg = ad_apply(cols, bas_a[j])
            ca = coords_a(vimg)
            # phi(ad_g bas_a[j]) = sum_{j'} ca_{j'} phi(bas_a[j'])
            # ad_g phi(bas_a[j]) = sum_k x_{j,k} coords_b(ad_g bas_b[k])
            for bit in range(nb):
                row = 0
                cc = ca
                jj = 0
                while cc:
                    if cc & 1:
                        row ^= 1 << var(jj, bit)
                    cc >>= 1
                    jj += 1
                for k in range(nb):
                    img = coords_b(ad_apply(cols, bas_b[k]))
                    if (img >> bit) & 1:
                        row ^= 1 << var(j, k)
                rows.append(row)
                rhs.append(0)
    # pin gamma_a -> gamma_b
    ca = coords_a(GAMMA[str(a)])
    cb = coords_b(GAMMA[str(b)])
    for bit in range(nb):
        row = 0
        cc = ca
        jj = 0
        while cc:
            if cc & 1:
                row ^= 1 << var(jj, bit)
            cc >>= 1
            jj += 1
        rows.append(row)
        rhs.append((cb >> bit) & 1)
    from .f2linalg import solve
    rhs_bits = 0
    for i, b_ in enumerate(rhs):
        if b_:
            rhs_bits |= 1 << i
    x = solve(rows, nvars, rhs_bits)
    if x is None:
        return None
    phi = {}
    for j in range(na):
        img = 0
        for k in range(nb):
            if (x >> var(j, k)) & 1:
                img ^= bas_b[k]
        phi[bas_a[j]] = img
    return phi


# -- abelianization and the epsilon automorphism --------------------------------------


def radical_coinvariants_dim(a):
    """dim of Gamma_a / <(1 + ad_g) Gamma_a : g in S5>; 0 means G_a^ab has order 2."""
    span = gamma_span(a)
    sub = []
    for g in (R_MAT, S_MAT):
        cols = _ad_cols(g)
        for b in span.basis:
            sub.append(ad_apply(cols, b) ^ b)
    basis, _ = row_echelon(sub)
    return span.dim - len(basis)


def epsilon_automorphism(a, x):
    """epsilon(g) = g * c(1)^{eps0(g)} on G_a; defined only for a not in {0, 4}."""
    if a in (0, 4):
        raise ValueError("all automorphisms of G_%d are inner; epsilon undefined" % a)
    G = ga_group(a)
    assert I4 in G.radical, "center c(1) must lie in the radical"
    m, p = x
    if psign(p):
        return (m ^ I4, p)
    return (m, p)


# -- stem subgroup search ---------------------------------------------------------------


def _centralizer_of_transposition():
    """Permutations commuting with (12): those preserving {0, 1}."""
    return [p for p in iota_table() if {p[0], p[1]} == {0, 1}]


def _coset_reps_mod_centralizer(cent):
    reps = []
    covered = set()
    for p in sorted(iota_table()):
        if p in covered:
            continue
        reps.append(p)
        covered |= {pcompose(p, c) for c in cent}
    return reps


def _index2_characters(a, cent):
    """Nontrivial homs H -> F2 for H = preimage of the centralizer.

    A hom is (phi_V, phi_C): phi_V linear on Gamma_a invariant under ad(C),
    phi_C a character of C; returned as (mask_dual_on_coinv_basis, dict C->bit).
    """
    span = gamma_span(a)
    # coinvariant quotient of Gamma_a under C: Gamma_a / <(1+ad_c) v>
    sub = []
    for c in cent:
        cols = _ad_cols(iota(c))
        for b in span.basis:
            sub.append(ad_apply(cols, b) ^ b)
    denom, _ = row_echelon(sub)
    # phi_V duals: functionals vanishing on denom: pick coset representatives basis
    # work in coordinates of span basis
    bas = list(span.basis)

    def coords(v):
        out = 0
        vv = v
        while vv:
            top = vv.bit_length() - 1
            for j, b in enumerate(bas):
                if b.bit_length() - 1 == top:
                    vv ^= b
                    out ^= 1 << j
                    break
            else:
                raise AssertionError
        return out

    denom_coords = [coords(d) for d in denom if d]
    from .f2linalg import kernel_basis
    # functionals f (bitmask over span coords) with f . d = 0 for all d in denom
    duals = kernel_basis(denom_coords, span.dim) if span.dim else []
    # characters of C: brute-force value assignments on a generating set,
    # extended by BFS and checked for consistency
    celems = list(cent)

    def mulclose(gens):
        closure = {PERM_ID}
        frontier = [PERM_ID]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    z = pcompose(x, g)
                    if z not in closure:
                        closure.add(z)
                        new.append(z)
            frontier = new
        return closure

    gens = []
    for p in celems:
        if p not in mulclose(gens):
            gens.append(p)
            if len(mulclose(gens)) == len(celems):
                break
    import itertools
    uniq = []
    for vals in itertools.product((0, 1), repeat=len(gens)):
        table = {PERM_ID: 0}
        ok = True
        frontier = [PERM_ID]
        while frontier and ok:
            new = []
            for x in frontier:
                for g, v in zip(gens, vals):
                    y = pcompose(x, g)
                    val = table[x] ^ v
                    if y in table:
                        if table[y] != val:
                            ok = False
                            break
                    else:
                        table[y] = val
                        new.append(y)
                if not ok:
                    break
            frontier = new
        if not (ok and len(table) == len(celems)):
            continue
        # verify the homomorphism property on the full multiplication table
        if all(table[pcompose(x, y)] == table[x] ^ table[y] for x in celems for y in celems):
            if table not in uniq:
                uniq.append(table)
    out = []
    for dual in range(1 << len(duals)):
        mask = 0
        dd = dual
        k = 0
        while dd:
            if dd & 1:
                mask ^= duals[k]
            dd >>= 1
            k += 1
        for t in uniq:
            if mask == 0 and all(v == 0 for v in t.values()):
                continue
            out.append((mask, t, bas))
    return out


def stem_subgroup_search(a):
    """Check the four structural properties and find the distinguished index-2 J.

    Returns a dict with per-property outcomes and, when a unique J passes, a
    description of it via its defining character.
    """
    G = ga_group(a)
    cent = _centralizer_of_transposition()
    reps = _coset_reps_mod_centralizer(cent)
    assert len(reps) == 10

    prop1 = True  # radical = c(Gamma_a) of exponent 2 with S5 quotient: structural
    prop2 = radical_coinvariants_dim(a) == 0  # abelianization of order 2

    rep_index = {}
    for i, rp in enumerate(reps):
        for c in cent:
            rep_index[pcompose(rp, c)] = i

    results = []
    for mask, table, bas in _index2_characters(a, cent):
        def phi(x):
            m, p = x
            # split m on span coords
            vv = m
            coords = 0
            while vv:
                top = vv.bit_length() - 1
                for j, b in enumerate(bas):
                    if b.bit_length() - 1 == top:
                        vv ^= b
                        coords ^= 1 << j
                        break
                else:
                    raise AssertionError
            val = bin(coords & mask).count("1") & 1
            return val ^ table[p]

        # coset labels: (i, eps) for x = d(rep_i) * h, eps = phi(h)
        def label(x):
            i = rep_index[x[1]]
            h = G.mul(G.inv((0, reps[i])), x)
            assert h[1] in table
            return 2 * i + phi(h)

        perms = []
        for g in G.generators:
            images = []
            for i in range(10):
                for eps in (0, 1):
                    # representative of coset (i, eps): need h with phi(h)=eps
                    h = _element_with_phi(G, table, bas, mask, eps, a)
                    x = G.mul((0, reps[i]), h)
                    images.append(label(G.mul(g, x)))
            perms.append(images)
        from sympy.combinatorics import Permutation, PermutationGroup
        pg = PermutationGroup([Permutation(pm) for pm in perms])
        faithful = pg.order() == G.order
        # fixed points of d(r)
        dr_img = []
        for i in range(10):
            for eps in (0, 1):
                h = _element_with_phi(G, table, bas, mask, eps, a)
                x = G.mul((0, reps[i]), h)
                dr_img.append(label(G.mul((0, PERM_12), x)))
        fixed = sum(1 for idx, im in enumerate(dr_img) if im == idx)
        results.append(
            {
                "character": (mask, tuple(sorted(table.items()))),
                "faithful": faithful,
                "fixed_points_of_dr": fixed,
                "passes": faithful and fixed == 8,
            }
        )
    passing = [r for r in results if r["passes"]]
    return {
        "a": a,
        "prop_i_radical": prop1,
        "prop_ii_abelianization_order_2": prop2,
        "index2_subgroups_checked": len(results),
        "passing": passing,
        "all_properties_hold": prop1 and prop2 and len(passing) >= 1,
        "unique_J": len(passing) == 1,
    }


def _element_with_phi(G, table, bas, mask, eps, a):
    if eps == 0:
        return G.identity()
    # find an H-element with phi = 1: try centralizer perms then radical basis
    for p, v in table.items():
        if v == 1:
            return (0, p)
    for j, b in enumerate(bas):
        if (mask >> j) & 1:
            return (b, PERM_ID)
    raise AssertionError("character is trivial")


# -- the certificate ------------------------------------------------------------------


def group_certificate():
    """Exact certificate of the module/group facts used by the global theory."""
    sE, tE = standard_module_actions()
    corE = corner_subgroup(sE, tE)
    adS, adT = adjoint_module_actions()
    corH = corner_subgroup(adS, adT)
    corH_set = {GAMMA_BY_VALUE[v] for v in corH.elements()}
    cert = {
        "cor_E_dim": corE.dim,
        "cor_h_dim": corH.dim,
        "cor_h_labels": sorted(corH_set),
        "gamma_dims": {str(a): gamma_span(a).dim for a in (4, 5, 9, 11, 15)},
        "cor_gamma": {},
        "hasse_edges": hasse_diagram(),
        "h1_delta_h_dim": h1_delta_endE_dim(),
        "involution_classes": {},
        "stem_search": {},
        "surjections_on_edges": {},
    }
    for a in (4, 5, 9, 11, 15):
        span = gamma_span(a)
        nonzero = sorted(
            GAMMA_BY_VALUE[v] for v in corH.elements() if v and span.contains(v)
        )
        cert["cor_gamma"][str(a)] = nonzero
    for a in GA_LABELS:
        G = ga_group(a)
        classes = G.classify_involutions()
        vg = [c for c in classes if c["very_good"]]
        dr_in_vg = any((0, PERM_12) in _class_members(G, c["representative"]) for c in vg)
        cert["involution_classes"][str(a)] = {
            "n_classes": len(classes),
            "n_very_good_classes": len(vg),
            "dr_is_very_good": dr_in_vg,
        }
        cert["stem_search"][str(a)] = _stem_summary(stem_subgroup_search(a))
    for (b, a) in cert["hasse_edges"]:
        if b == 0:
            cert["surjections_on_edges"]["%d->%d" % (a, b)] = True  # quotient by radical
            continue
        phi = surjection_on_edge(a, b)
        ok = False
        if phi is not None:
            image_basis, _ = row_echelon([phi[v] for v in gamma_span(a).basis])
            ok = len(image_basis) == gamma_span(b).dim
        cert["surjections_on_edges"]["%d->%d" % (a, b)] = bool(ok)
    return cert


def _class_members(G, rep):
    orbit = {rep}
    frontier = [rep]
    while frontier:
        nxt = []
        for y in frontier:
            for g in G.generators:
                z = G.conj(g, y)
                if z not in orbit:
                    orbit.add(z)
                    nxt.append(z)
        frontier = nxt
    return orbit


def _stem_summary(res):
    return {
        "passes_i_to_iv": res["all_properties_hold"] and res["unique_J"],
        "n_passing_J": len(res["passing"]),
        "abelianization_order_2": res["prop_ii_abelianization_order_2"],
    }


def h1_delta_endE_dim():
    """dim H^1(Delta, End(E)) by direct cocycle enumeration over the order-20 group."""
    delta = set()
    frontier = [I4]
    delta.add(I4)
    while frontier:
        new = []
        for g in frontier:
            for h in (S_MAT, T_MAT):
                x = m4mul(g, h)
                if x not in delta:
                    delta.add(x)
                    new.append(x)
        frontier = new
    dlist = sorted(delta)
    didx = {g: i for i, g in enumerate(dlist)}
    n = len(dlist)
    rows = []
    for g in dlist:
        colsg = _ad_cols(g)
        for h in dlist:
            gh = m4mul(g, h)
            for bit in range(16):
                row = 0
                row ^= 1 << (didx[gh] * 16 + bit)
                row ^= 1 << (didx[g] * 16 + bit)
                for c in range(16):
                    if (colsg[c] >> bit) & 1:
                        row ^= 1 << (didx[h] * 16 + c)
                if row:
                    rows.append(row)
    basis, _ = row_echelon(rows)
    dim_z1 = 16 * n - len(basis)
    # coboundaries: dim 16 - dim of invariants
    inv_rows = []
    for g in (S_MAT, T_MAT):
        cols = _ad_cols(g)
        for bit in range(16):
            row = 0
            for c in range(16):
                if (cols[c] >> bit) & 1:
                    row ^= 1 << c
            row ^= 1 << bit
            if row:
                inv_rows.append(row)
    inv_basis, _ = row_echelon(inv_rows)
    dim_b1 = len(inv_basis)  # = 16 - dim invariants
    return dim_z1 - dim_b1
