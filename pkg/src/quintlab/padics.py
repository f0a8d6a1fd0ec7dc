"""p-adic utilities and abelian conductor-exponent formulas.

Newton polygons and Herbrand functions are exact over Fraction; the conductor
formulas implement the degree-p Kummer case, the one-gap filtration case, the
compositum rule and the Fontaine-style bound for intermediate abelian layers.
"""

from __future__ import annotations

from fractions import Fraction

from .intpoly import IntPoly, DegenerateInputError, poly_discriminant


class UnsupportedCaseError(ValueError):
    """Raised for parameter ranges the formulas deliberately exclude."""


def val(n, p):
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class NewtonPolygon:
    """Lower convex hull of (i, ord_p(a_i)); segments are (slope, length)."""

    def __init__(self, segments):
        self.segments = tuple((Fraction(s), int(l)) for s, l in segments)
        slopes = [s for s, _ in self.segments]
        assert slopes == sorted(slopes) and len(set(slopes)) == len(slopes)

    def __repr__(self):
        return "NewtonPolygon(%s)" % (list(self.segments),)

    def __eq__(self, other):
        return isinstance(other, NewtonPolygon) and self.segments == other.segments

    def total_length(self):
        return sum(l for _, l in self.segments)


def newton_polygon(f: IntPoly, p) -> NewtonPolygon:
    """Newton polygon of f at p after stripping trivial powers of x."""
    if f.is_zero():
        raise DegenerateInputError("zero polynomial has no Newton polygon")
    coeffs = list(f.coeffs)
    shift = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    pts = [(i, val(a, p)) for i, a in enumerate(coeffs) if a != 0]
    # lower convex hull, left to right
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above segment hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    # report slopes as root valuations (negated hull slopes), increasing
    segs = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = Fraction(y1 - y2, x2 - x1)
        segs.append((slope, x2 - x1))
    segs.reverse()
    # merge equal slopes (can arise when interior points sit on the hull)
    merged = []
    for s, l in segs:
        if merged and merged[-1][0] == s:
            merged[-1] = (s, merged[-1][1] + l)
        else:
            merged.append((s, l))
    return NewtonPolygon(merged)


def quintic_two_adic_type(f: IntPoly):
    """Classify a monic irreducible quintic at 2: 'totally-ramified-tame-deg-5' or 'other'.

    Precondition: v_2(disc f) = 4, which certifies 2-maximality of the equation
    order when the field discriminant is +-16N; refuses (raises) otherwise since
    the residue-pattern argument below would be unsound.
    """
    if f.degree != 5 or not f.is_monic():
        raise DegenerateInputError("need a monic quintic")
    d = poly_discriminant(f)
    if d == 0:
        raise DegenerateInputError("polynomial is not separable")
    if val(d, 2) != 4:
        raise UnsupportedCaseError(
            "v_2(disc)=%d != 4: cannot certify 2-maximality of the equation order" % val(d, 2)
        )
    for c in (0, 1):
        # f congruent to (x+c)^5 mod 2 <=> f(x - c) congruent to x^5
        g = f.shift(-c)
        if all(a % 2 == 0 for a in g.coeffs[:5]):
            np = newton_polygon(g, 2)
            if len(np.segments) == 1:
                slope, length = np.segments[0]
                if length == 5 and slope.denominator == 5:
                    return "totally-ramified-tame-deg-5"
            return "other"
    return "other"


# -- ramification filtrations and the Herbrand function -------------------------


class RamificationFiltration:
    """Lower-numbering filtration given as breaks [(j, |G_j|)], orders weakly decreasing.

    The list gives, for each lower index j appearing as a "corner", the order of
    G_j; G_s for s between listed indices is constant.  Index -1 (full group) and
    the final trivial group are implied.
    """

    def __init__(self, breaks):
        self.breaks = [(int(j), int(order)) for j, order in breaks]
        orders = [o for _, o in self.breaks]
        assert orders == sorted(orders, reverse=True)

    def order_at(self, s):
        """|G_s| for s >= 0: the order at the last break with index <= s."""
        best = None
        for j, o in self.breaks:
            if j <= s:
                best = o
        if best is None:
            best = self.breaks[0][1] if self.breaks else 1
        return best

    def herbrand_phi(self, x):
        """phi(x) = int_0^x ds / [G_0 : G_s], exact piecewise-linear evaluation."""
        x = Fraction(x)
        if x <= 0:
            return x
        g0 = self.order_at(0)
        total = Fraction(0)
        s = Fraction(0)
        while s < x:
            # next integer corner after s
            nxt = min(x, Fraction(int(s) + 1))
            order_here = self.order_at(int(s))
            total += (nxt - s) * Fraction(order_here, g0)
            s = nxt
        return total


def one_gap_conductor(n, p):
    """Conductor n + 1 for a totally ramified extension with a single break at n.

    Returns (conductor, filtration).  Precondition: n > 0 and p does not divide n.
    """
    if n is None:
        return 0, RamificationFiltration([(0, 1)])
    if n <= 0 or n % p == 0:
        raise DegenerateInputError("need n > 0 with p not dividing n")
    filt = RamificationFiltration([(0, p), (n, p), (n + 1, 1)])
    phi = filt.herbrand_phi(n)
    cond = int(phi) + 1
    assert phi == n  # one-gap: G_0 = G_n
    return cond, filt


def kummer_conductor(p, e_K, kappa_shape, n=None):
    """Conductor exponent of K(kappa^(1/p))/K for K containing mu_p.

    kappa_shape: 'valuation-prime-to-p' (ord(kappa) not divisible by p) or
    'one-unit' (kappa = 1 + u*pi^n with the given level n).
    """
    if (p - 1) and (e_K % (p - 1)) != 0:
        raise UnsupportedCaseError("K containing mu_p forces (p-1) | e_K")
    bound = Fraction(p * e_K, p - 1)
    if kappa_shape == "valuation-prime-to-p":
        assert bound.denominator == 1
        return int(bound) + 1
    if kappa_shape != "one-unit":
        raise ValueError("unknown kappa shape %r" % kappa_shape)
    if n is None or n < 1:
        raise DegenerateInputError("one-unit case needs a level n >= 1")
    if Fraction(n) == bound:
        return 0  # unramified (possibly split); callers do not need the distinction
    if Fraction(n) > bound:
        return 0  # kappa is a p-th power; the extension is trivial
    if n % p == 0:
        raise UnsupportedCaseError(
            "level divisible by p is excluded; renormalize kappa by a p-th power first"
        )
    v = bound - n + 1
    assert v.denominator == 1
    return int(v)


def compositum_conductor(m_list):
    """max(m_i) + 1 for upper-numbering breaks m_i (use -1 for unramified factors)."""
    if not m_list:
        raise DegenerateInputError("need at least one upper-numbering break")
    if any(m < -1 for m in m_list):
        raise DegenerateInputError("upper breaks are >= -1")
    return max(m_list) + 1


def fontaine_bound(e_F, e_rel, n, p):
    """Fontaine-style bound e_F*(n + 1/(p-1)) - e_rel + 1 on intermediate abelian conductors."""
    if n < 1 or e_rel < 1 or e_F % e_rel:
        raise DegenerateInputError("need n >= 1 and e_rel | e_F")
    return Fraction(e_F) * (n + Fraction(1, p - 1)) - e_rel + 1
