"""Picard-Fuchs operators via linear dependence of connection iterates."""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .brieskorn import TameContext, reduce_top
from .gaussmanin import GMData
from .poly import MultiPoly
from .tpoly import TFrac, TPoly, tpoly_lcm


class PFEquation:
    """Operator coefficients p_0..p_k, padded to mu+1 entries for display."""

    __slots__ = ("coeffs", "order", "padded")

    def __init__(self, coeffs, mu):
        self.coeffs = list(coeffs)
        self.order = len(coeffs) - 1
        self.padded = list(coeffs) + [TPoly.zero()] * (mu + 1 - len(coeffs))


def _normalize_relation(rel):
    """Divide by the polynomial and rational content; flip unless told otherwise."""
    g = TPoly.zero()
    for p in rel:
        g = g.gcd(p)
        if g.degree() == 0:
            break
    if g.degree() >= 1:
        rel = [p.exact_div(g) for p in rel]
    num = 0
    den = 1
    for p in rel:
        for c in p.coeffs:
            num = int_gcd(num, abs(c.numerator))
            den = den * c.denominator // int_gcd(den, c.denominator)
    r = Fraction(num, den)
    return [p * (1 / r) for p in rel]


class _Eliminator:
    """Incremental fraction-free row reduction with combination tracking."""

    def __init__(self, width):
        self.width = width
        self.pivots = []  # (col, row, comb)

    def add(self, row, comb):
        """Returns the relation if the new row is dependent, else None."""
        row = list(row)
        comb = list(comb)
        for col, prow, pcomb in self.pivots:
            if row[col].is_zero():
                continue
            a = prow[col]
            b = row[col]
            row = [a * x - b * y for x, y in zip(row, prow)]
            comb = [a * x - b * y for x, y in zip(comb, pcomb)]
            joint = _normalize_relation([*row, *comb])
            row = joint[: self.width]
            comb = joint[self.width :]
        for col in range(self.width):
            if not row[col].is_zero():
                self.pivots.append((col, row, comb))
                return None
        return comb


def lin_dep_over_Qt(rows):
    """First nonzero Q[t]-relation among TFrac row vectors, or None.

    Deterministic fraction-free elimination in input order; the relation is
    denominator-free with content 1 and positive-leading first nonzero entry.
    """
    if not rows:
        return None
    width = len(rows[0])
    elim = _Eliminator(width)
    cleared = []
    for r in rows:
        den = TPoly.one()
        for x in r:
            den = tpoly_lcm(den, x.den)
        cleared.append(den)
        poly_row = [(x * den).as_poly() for x in r]
        k = len(cleared) - 1
        comb = [TPoly.one() if i == k else TPoly.zero() for i in range(len(rows))]
        rel = elim.add(poly_row, comb)
        if rel is not None:
            out = [rel[i] * cleared[i] for i in range(k + 1)]
            out = _normalize_relation(out)
            first = next(p for p in out if p)
            if first.lc() < 0:
                out = [-p for p in out]
            return out + [TPoly.zero()] * (len(rows) - k - 1)
    return None


def pfeq(ctx: TameContext, P: MultiPoly, S: TPoly | None = None) -> PFEquation:
    """Minimal operator sum p_i(t) d^i/dt^i annihilating the periods of [P dx]."""
    gm = GMData(ctx, S)
    S = gm.S
    rho0 = reduce_top(P, ctx).coeffs
    if all(p.is_zero() for p in rho0):
        raise ValueError("the class of P dx is zero")
    mu = ctx.mu
    elim = _Eliminator(mu)
    rhos = [rho0]
    rep = P
    comb = [TPoly.one()] + [TPoly.zero()] * mu
    rel = elim.add(rho0, comb[: mu + 1])
    k = 0
    while rel is None:
        rep = gm.nabla_rep(rep, k)
        k += 1
        assert k <= mu, "dependence must occur by the module rank"
        rho = reduce_top(rep, ctx).coeffs
        rhos.append(rho)
        comb = [TPoly.one() if i == k else TPoly.zero() for i in range(mu + 1)]
        rel = elim.add(rho, comb)
    # rel applies to the scaled rows rho_i = S^i * r_i
    ps = [rel[i] * (S ** i) for i in range(k + 1)]
    ps = _normalize_relation(ps)
    if ps[k].lc() < 0:
        ps = [-p for p in ps]
    # annihilation check: sum p_i S^{k-i} rho_i = 0
    for j in range(mu):
        acc = TPoly.zero()
        for i in range(k + 1):
            acc = acc + ps[i] * (S ** (k - i)) * rhos[i][j]
        assert acc.is_zero(), "annihilation identity failed"
    return PFEquation(ps, mu)
