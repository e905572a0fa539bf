"""Buchberger Groebner bases over Q with exact cofactor tracking.

The monomial order is the weighted degree-reverse-lexicographic order of
poly.order_key; quotient bases are listed by strictly non-increasing weighted
degree with ties broken on the last variable's exponent, largest first.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly, WeightedVars, listing_key, order_key


class QuotientInfinite(ValueError):
    """The quotient by the leading-term ideal is not finite-dimensional."""


class MonomialOrder:
    """Weighted degrevlex order attached to a weight vector."""

    __slots__ = ("alpha",)

    def __init__(self, alpha):
        self.alpha = tuple(alpha)

    def key(self, exps):
        return order_key(exps, self.alpha)

    def leading(self, p: MultiPoly):
        return p.leading(self.alpha)

    def greater(self, e1, e2):
        return self.key(e1) > self.key(e2)


def _exps_divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def _exps_sub(e1, e2):
    return tuple(a - b for a, b in zip(e1, e2))


def _exps_lcm(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


class GroebnerBasis:
    """Reduced Groebner basis with cofactor rows over the original generators."""

    __slots__ = ("gens", "basis", "cofactors", "order", "nvars", "_lms")

    def __init__(self, gens, basis, cofactors, order):
        self.gens = list(gens)
        self.basis = list(basis)
        self.cofactors = list(cofactors)
        self.order = order
        self.nvars = gens[0].nvars
        self._lms = [order.leading(b)[0] for b in self.basis]

    def leading_monomials(self):
        return list(self._lms)


def _divide(p, basis, lms, order):
    """Multivariate division: p = sum q_k * basis_k + rem, rem on standard monomials."""
    nv = p.nvars
    quots = [MultiPoly.zero(nv) for _ in basis]
    rem = MultiPoly.zero(nv)
    cur = p
    while cur.terms:
        e, c = order.leading(cur)
        for k, lm in enumerate(lms):
            if _exps_divides(lm, e):
                mono = _exps_sub(e, lm)
                coef = c / basis[k].terms[lm]
                quots[k] = quots[k] + MultiPoly.monomial(mono, coef)
                cur = cur - basis[k].mul_term(mono, coef)
                break
        else:
            m = MultiPoly.monomial(e, c)
            rem = rem + m
            cur = cur - m
    return rem, quots


def groebner(generators, order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis of the given nonzero generators, with cofactors."""
    gens = [g for g in generators]
    if not gens or any(g.is_zero() for g in gens):
        raise ValueError("generators must be nonzero")
    nv = gens[0].nvars
    r = len(gens)

    work = []       # current basis polynomials
    rows = []       # cofactor row of each: work[k] = sum rows[k][j] * gens[j]
    for j, g in enumerate(gens):
        row = [MultiPoly.zero(nv) for _ in range(r)]
        row[j] = MultiPoly.constant(nv, 1)
        work.append(g)
        rows.append(row)

    def reduce_full(p, prow):
        """Reduce p (tracked by prow) against the whole working basis."""
        cur, curow = p, prow
        changed = True
        while changed and cur.terms:
            changed = False
            rem = MultiPoly.zero(nv)
            while cur.terms:
                e, c = order.leading(cur)
                hit = None
                for k, b in enumerate(work):
                    lm = order.leading(b)[0]
                    if _exps_divides(lm, e):
                        hit = (k, lm)
                        break
                if hit is None:
                    m = MultiPoly.monomial(e, c)
                    rem = rem + m
                    cur = cur - m
                else:
                    k, lm = hit
                    mono = _exps_sub(e, lm)
                    coef = c / work[k].terms[lm]
                    cur = cur - work[k].mul_term(mono, coef)
                    mfac = MultiPoly.monomial(mono, coef)
                    curow = [a - mfac * b for a, b in zip(curow, rows[k])]
            cur = rem
        return cur, curow

    pairs = [(i, j) for i in range(len(work)) for j in range(i + 1, len(work))]
    while pairs:
        pairs.sort(
            key=lambda ij: order.key(
                _exps_lcm(order.leading(work[ij[0]])[0], order.leading(work[ij[1]])[0])
            )
        )
        i, j = pairs.pop(0)
        lmi, lci = order.leading(work[i])
        lmj, lcj = order.leading(work[j])
        lcm = _exps_lcm(lmi, lmj)
        if tuple(a + b for a, b in zip(lmi, lmj)) == lcm:
            continue  # coprime leading monomials: S-poly reduces to zero
        mi = _exps_sub(lcm, lmi)
        mj = _exps_sub(lcm, lmj)
        s = work[i].mul_term(mi, Fraction(1) / lci) - work[j].mul_term(mj, Fraction(1) / lcj)
        srow = [
            a.mul_term(mi, Fraction(1) / lci) - b.mul_term(mj, Fraction(1) / lcj)
            for a, b in zip(rows[i], rows[j])
        ]
        rem, remrow = reduce_full(s, srow)
        if rem.terms:
            work.append(rem)
            rows.append(remrow)
            k = len(work) - 1
            pairs.extend((u, k) for u in range(k))

    # prune elements whose leading monomial is divisible by another's
    keep = []
    lms = [order.leading(b)[0] for b in work]
    for k in range(len(work)):
        if any(
            u != k
            and _exps_divides(lms[u], lms[k])
            and (lms[u] != lms[k] or u < k)
            for u in keep + list(range(k + 1, len(work)))
        ):
            continue
        keep.append(k)
    work = [work[k] for k in keep]
    rows = [rows[k] for k in keep]

    # tail-reduce each element against the others, then normalize monic
    final = []
    finalrows = []
    for k in range(len(work)):
        others = [work[u] for u in range(len(work)) if u != k]
        otherrows = [rows[u] for u in range(len(work)) if u != k]
        lms_o = [order.leading(b)[0] for b in others]
        cur = work[k]
        curow = list(rows[k])
        rem = MultiPoly.zero(nv)
        while cur.terms:
            e, c = order.leading(cur)
            hit = None
            for u, lm in enumerate(lms_o):
                if _exps_divides(lm, e):
                    hit = u
                    break
            if hit is None:
                m = MultiPoly.monomial(e, c)
                rem = rem + m
                cur = cur - m
            else:
                mono = _exps_sub(e, lms_o[hit])
                coef = c / others[hit].terms[lms_o[hit]]
                cur = cur - others[hit].mul_term(mono, coef)
                mfac = MultiPoly.monomial(mono, coef)
                curow = [a - mfac * b for a, b in zip(curow, otherrows[hit])]
        lc = order.leading(rem)[1]
        final.append(rem.scale(Fraction(1) / lc))
        finalrows.append([a.scale(Fraction(1) / lc) for a in curow])

    idx = sorted(
        range(len(final)),
        key=lambda k: order.key(order.leading(final[k])[0]),
        reverse=True,
    )
    final = [final[k] for k in idx]
    finalrows = [finalrows[k] for k in idx]
    return GroebnerBasis(gens, final, finalrows, order)


def normal_form(p: MultiPoly, G: GroebnerBasis):
    """Remainder and cofactors over the *original* generators: p = rem + sum c_j g_j."""
    rem, quots = _divide(p, G.basis, G._lms, G.order)
    nv = p.nvars
    cofs = [MultiPoly.zero(nv) for _ in G.gens]
    for k, q in enumerate(quots):
        if q.is_zero():
            continue
        for j in range(len(G.gens)):
            cofs[j] = cofs[j] + q * G.cofactors[k][j]
    return rem, cofs


def remainder(p: MultiPoly, G: GroebnerBasis) -> MultiPoly:
    return _divide(p, G.basis, G._lms, G.order)[0]


class QuotientBasis:
    """Monomial basis of the quotient algebra in okbase order."""

    __slots__ = ("monomials", "alpha", "mu", "index", "degrees")

    def __init__(self, monomials, alpha):
        self.monomials = list(monomials)
        self.alpha = tuple(alpha)
        self.mu = len(monomials)
        self.index = {m: i for i, m in enumerate(monomials)}
        self.degrees = [sum(e * a for e, a in zip(m, alpha)) for m in monomials]

    def __iter__(self):
        return iter(self.monomials)

    def __len__(self):
        return self.mu


def standard_monomials(G: GroebnerBasis):
    """All monomials outside the leading-term ideal; raises if infinite."""
    nv = G.nvars
    lms = G.leading_monomials()
    bounds = []
    for i in range(nv):
        pure = [lm[i] for lm in lms if all(lm[j] == 0 for j in range(nv) if j != i)]
        if not pure:
            raise QuotientInfinite(f"no pure power of variable {i} leads the ideal")
        bounds.append(min(pure))

    out = []

    def rec(prefix):
        if len(prefix) == nv:
            e = tuple(prefix)
            if not any(_exps_divides(lm, e) for lm in lms):
                out.append(e)
            return
        for k in range(bounds[len(prefix)]):
            rec(prefix + [k])

    rec([])
    return out


def okbase(G: GroebnerBasis) -> QuotientBasis:
    """Standard monomials listed by non-increasing weighted degree."""
    monos = standard_monomials(G)
    alpha = G.order.alpha
    monos.sort(key=lambda e: listing_key(e, alpha), reverse=True)
    return QuotientBasis(monos, alpha)


def jacob(f: MultiPoly):
    """The partial derivatives of f, in variable order."""
    parts = [f.diff(i) for i in range(f.nvars)]
    if any(p.is_zero() for p in parts):
        raise QuotientInfinite("a partial derivative vanishes identically")
    return parts


def is_tame(f: MultiPoly, w: WeightedVars) -> bool:
    """True iff the top weighted-homogeneous piece has an isolated singularity at 0."""
    if f.is_zero() or f.is_constant():
        return False
    g = f.lasthomo(w)
    order = MonomialOrder(w.alpha)
    try:
        G = groebner(jacob(g), order)
        B = okbase(G)
    except QuotientInfinite:
        return False
    return B.mu >= 1


def mult_matrix(h: MultiPoly, B: QuotientBasis, G: GroebnerBasis):
    """Matrix of multiplication by h; column j holds coordinates of NF(h * x^beta_j)."""
    cols = []
    for m in B.monomials:
        rem = remainder(h.mul_term(m, 1), G)
        cols.append([rem.coeff(b) for b in B.monomials])
    return [[cols[j][i] for j in range(B.mu)] for i in range(B.mu)]
