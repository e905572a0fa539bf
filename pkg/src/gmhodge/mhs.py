"""Homogenized multiplication matrix, the d_beta elimination, Hodge index
sets, and the change of basis adapted to the mixed Hodge structure.

The homogenized matrix is stored as contents c(t) plus the exponent pattern
K[i][j] = d-1+deg(x^beta_i)-deg(x^beta_j); row operations act on contents
alone because the K pattern is additive.  Two elimination modes are
provided: the generic-value scan (first nonzero entry per row, bottom row
up) and the tracked triangularization with diagonal pivots, which realizes
d_beta = d-1 for every beta while collecting the excluded fiber values.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .brieskorn import ModuleClass, TameContext, reduce_top
from .gaussmanin import GMData, present_fraction, tpoly_det
from .poly import MultiPoly
from .tpoly import TFrac, TPoly


class SingularBasis(ArithmeticError):
    """The change-of-basis matrix came out singular."""


class X0Matrix:
    """mu x mu matrix with entries c(t) * x0^K over the Milnor basis."""

    __slots__ = ("contents", "K", "degrees", "d", "mu")

    def __init__(self, contents, K, degrees, d):
        self.contents = [[c if isinstance(c, TFrac) else TFrac(c) for c in row]
                         for row in contents]
        self.K = K
        self.degrees = list(degrees)
        self.d = d
        self.mu = len(contents)

    def check_shape(self):
        """K pattern additivity and vanishing of entries with negative exponent."""
        mu = self.mu
        for i in range(mu):
            for j in range(mu):
                assert self.K[i][j] == self.d - 1 + self.degrees[i] - self.degrees[j]
                if self.K[i][j] < 0:
                    assert self.contents[i][j].is_zero()
        return True

    def copy(self):
        return X0Matrix(
            [row[:] for row in self.contents], self.K, self.degrees, self.d
        )


def muldF(ctx: TameContext, shifted: bool = False) -> X0Matrix:
    """Matrix of multiplication by dF/dx0 on the basis x^I, optionally minus t*d*x0^{d-1}I.

    Contents are d*c with c the multiplication-by-f matrix entries; the
    shifted variant subtracts d*t on the diagonal (the matrix of F - t*x0^d).
    """
    M = ctx.mult_by_f()
    mu = ctx.mu
    d = ctx.d
    degs = ctx.basis.degrees
    K = [[d - 1 + degs[i] - degs[j] for j in range(mu)] for i in range(mu)]
    contents = []
    for i in range(mu):
        row = []
        for j in range(mu):
            c = TPoly([M[j][i] * d])
            if shifted and i == j:
                c = c - TPoly([0, d])
            row.append(TFrac.from_poly(c))
        contents.append(row)
    out = X0Matrix(contents, K, degs, d)
    out.check_shape()
    return out


def ge_step(A: X0Matrix, ctx: TameContext, i1: int, i2: int, i3: int):
    """Row operation killing entry (i2, i3) with pivot (i1, i3).

    Requires A_{beta_1} <= A_{beta_2} so the x0 exponent of the multiplier
    stays nonnegative.  Returns the new matrix and the pivot content's
    numerator, whose zero set joins the exceptional set.
    """
    if ctx.A[i1] > ctx.A[i2]:
        raise ValueError("pivot row must not precede the target in the okbase order")
    pivot = A.contents[i1][i3]
    if pivot.is_zero():
        raise ZeroDivisionError("zero pivot in ge_step")
    out = A.copy()
    m = A.contents[i2][i3] / pivot
    out.contents[i2] = [
        a - m * b for a, b in zip(A.contents[i2], A.contents[i1])
    ]
    return out, pivot.num


class DBetaResult:
    """d_beta values with the monic polynomial cutting out the exceptional set."""

    __slots__ = ("dbeta", "exceptional", "mode")

    def __init__(self, dbeta, exceptional, mode):
        self.dbeta = list(dbeta)
        self.exceptional = exceptional
        self.mode = mode


def _accumulate(E: TPoly, pivot_num: TPoly) -> TPoly:
    sq = pivot_num.squarefree_part()
    if sq.degree() < 1:
        return E
    return (E * sq).squarefree_part()


def dbeta(ctx: TameContext, generic: bool = False) -> DBetaResult:
    """The free-generator multiplicities of the homogenized Milnor module.

    Generic mode treats t as a transcendental value and scans each row
    (bottom up) for its first nonzero entry; tracked mode triangularizes
    with the always-nonzero diagonal pivots, yielding d_beta = d-1 and the
    divided-by contents' roots as the exceptional set.
    """
    A = muldF(ctx, shifted=True)
    mu = ctx.mu
    d = ctx.d
    E = TPoly.one()
    dvals = [None] * mu
    if generic:
        for i in range(mu - 1, -1, -1):
            row = A.contents[i]
            j = next((jj for jj in range(mu) if not row[jj].is_zero()), None)
            assert j is not None, "zero row in generic elimination"
            dvals[j] = A.K[i][j]
            for i2 in range(i - 1, -1, -1):
                A, piv = ge_step(A, ctx, i, i2, j)
                E = _accumulate(E, piv)
        mode = "generic"
    else:
        for j in range(mu - 1, 0, -1):
            for i2 in range(j):
                A, piv = ge_step(A, ctx, j, i2, j)
                E = _accumulate(E, piv)
        dvals = [d - 1] * mu
        mode = "tracked"
    assert all(v is not None for v in dvals)
    assert sum(dvals) == mu * (d - 1)
    for i, v in enumerate(dvals):
        assert v < d * (ctx.n + 2 - ctx.A[i])
    return DBetaResult(dvals, E, mode)


class HodgeIndexSets:
    """Index sets I^k_m as okbase positions, ordered by increasing weighted degree."""

    __slots__ = ("mid", "top")

    def __init__(self, mid, top):
        self.mid = mid  # [(k, positions)] for k = n..0
        self.top = top  # [(k, positions)] for k = n..1


def imk(ctx: TameContext, D: DBetaResult) -> HodgeIndexSets:
    n = ctx.n
    d = ctx.d
    mu = ctx.mu
    rev = list(range(mu - 1, -1, -1))  # increasing weighted degree
    mid = []
    for k in range(n, -1, -1):
        target = n + 1 - k
        members = [
            i
            for i in rev
            if ctx.A[i] + Fraction(1, d) <= target <= ctx.A[i] + Fraction(D.dbeta[i], d)
        ]
        mid.append((k, members))
    top = []
    for k in range(n, 0, -1):
        target = n + 1 - k
        members = [i for i in rev if ctx.A[i] == target]
        top.append((k, members))
    total = sum(len(m) for _, m in mid) + sum(len(m) for _, m in top)
    assert total == mu, f"index sets carry {total} classes, expected {mu}"
    return HodgeIndexSets(mid, top)


class MHSRow:
    """One basis row: labels, exact coordinates, and the printed presentation."""

    __slots__ = ("m", "k", "position", "iterate", "coords", "scalar", "urow")

    def __init__(self, m, k, position, iterate, coords, scalar, urow):
        self.m = m
        self.k = k
        self.position = position
        self.iterate = iterate
        self.coords = coords      # list of TFrac, over the omega basis
        self.scalar = scalar      # TFrac, with scalar * urow = coords
        self.urow = urow          # primitive integer TPoly row


class MHSBasis:
    __slots__ = ("rows", "det", "S", "exceptional")

    def __init__(self, rows, det, S, exceptional):
        self.rows = rows
        self.det = det
        self.S = S
        self.exceptional = exceptional

    def matrix(self):
        return [r.urow for r in self.rows]

    def scalars(self):
        return [r.scalar for r in self.rows]


def _present_row(qrow, j, S):
    """Split q/S^j into scalar * primitive-integer-row, transcript sign convention.

    The primitive row keeps the raw signs unless the entries share a
    nonconstant polynomial factor, in which case both factors are negated
    (matching the reference outputs).
    """
    num = 0
    den = 1
    for p in qrow:
        for c in p.coeffs:
            num = int_gcd(num, abs(c.numerator))
            den = den * c.denominator // int_gcd(den, c.denominator)
    if num == 0:
        raise SingularBasis("zero row in the change of basis")
    r = Fraction(num, den)
    w = [p * (1 / r) for p in qrow]
    G = TPoly.zero()
    for p in w:
        G = G.gcd(p)
        if G.degree() == 0:
            break
    gc = G.content()
    G = G * (1 / gc) if gc else TPoly.one()
    if G.degree() >= 1:
        sign = -1
        urow = [-p.exact_div(G) for p in w]
    else:
        sign = 1
        G = TPoly.one()
        urow = w
    scalar = TFrac(G * (r * sign), S ** j)
    return scalar, urow


def changebase(ctx: TameContext, S: TPoly, D: DBetaResult) -> MHSBasis:
    """Basis of the localized H'' compatible with the mixed Hodge structure.

    Rows are nabla^{n-k} omega_beta for beta in I^k_n (k = n..0), then
    omega_beta for beta in I^k_{n+1} (k = n..1), each expressed over the
    omega basis and split into scalar times primitive integer row.
    """
    gm = GMData(ctx, S)
    sets = imk(ctx, D)
    n = ctx.n
    rows = []

    def build(m_label, k, positions):
        j = n - k
        for pos in positions:
            if j == 0:
                q = [TPoly.one() if i == pos else TPoly.zero() for i in range(ctx.mu)]
            else:
                P = MultiPoly.monomial(ctx.basis.monomials[pos])
                for step in range(j):
                    P = gm.nabla_rep(P, step)
                q = reduce_top(P, ctx).coeffs
            scalar, urow = _present_row(q, j, S)
            Sj = S ** j
            coords = [TFrac(p, Sj) for p in q]
            rows.append(MHSRow(m_label, k, pos, j, coords, scalar, urow))

    for k, positions in sets.mid:
        build(n, k, positions)
    for k, positions in sets.top:
        build(n + 1, k, positions)

    det = tpoly_det([r.urow for r in rows])
    if det.is_zero():
        raise SingularBasis("change-of-basis matrix is singular")
    return MHSBasis(rows, det, S, D.exceptional)


def det_roots_contained(basis: MHSBasis) -> bool:
    """Roots of the determinant lie among the roots of S * E."""
    a = basis.det.squarefree_part()
    if a.degree() < 1:
        return True
    b = (basis.S * basis.exceptional).squarefree_part()
    return a.gcd(b) == a.monic()
