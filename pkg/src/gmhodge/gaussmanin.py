"""The Gauss-Manin connection on the Brieskorn modules.

Everything is driven by a polynomial S(t) with S(f) in the Jacobian ideal,
together with cofactors p_i realizing S(f) = sum p_i df/dx_i.  The default S
is the characteristic polynomial of multiplication by f on the Milnor
algebra; any valid S may be supplied and is checked.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .brieskorn import (
    ModuleClass,
    TameContext,
    n0_reduce_prime,
    reduce_n,
    reduce_top,
)
from .groebner import normal_form
from .poly import MultiPoly
from .tpoly import TFrac, TPoly


class ValidationFailed(ValueError):
    """A user-supplied S(t) does not satisfy S(f) = 0 in the Milnor algebra."""


def tpoly_det(M):
    """Fraction-free Bareiss determinant of a square TPoly matrix."""
    n = len(M)
    if n == 0:
        return TPoly.one()
    M = [list(row) for row in M]
    sign = 1
    denom = TPoly.one()
    for k in range(n - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return TPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]).exact_div(denom)
            M[i][k] = TPoly.zero()
        denom = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


def char_S(ctx: TameContext) -> TPoly:
    """det(t*I - A_f): monic, vanishes on every critical value of f."""
    A = ctx.mult_by_f()
    mu = ctx.mu
    M = [
        [
            TPoly([-A[i][j], 1]) if i == j else TPoly([-A[i][j]])
            for j in range(mu)
        ]
        for i in range(mu)
    ]
    return tpoly_det(M)


def squarefree_S(ctx: TameContext) -> TPoly:
    return char_S(ctx).squarefree_part()


def eta_f_cofactors(ctx: TameContext, S: TPoly):
    """Cofactors p_i with S(f) = sum p_i df/dx_i; raises if S is invalid."""
    sf = ctx.tpoly_at_f(S)
    rem, cofs = normal_form(sf, ctx.GB_f)
    if not rem.is_zero():
        raise ValidationFailed("S(f) is not in the Jacobian ideal of f")
    return cofs


def _clearing_constant(rows):
    """Least positive rational c with c*rows integral of overall content 1."""
    num = 0
    den = 1
    for row in rows:
        for p in row:
            for c in p.coeffs:
                num = int_gcd(num, abs(c.numerator))
                den = den * c.denominator // int_gcd(den, c.denominator)
    if num == 0:
        return Fraction(1)
    return Fraction(den, num)


class ConnectionMatrix:
    """Matrix of S*nabla on the omega basis: row beta holds S*nabla(omega_beta)."""

    __slots__ = ("S", "clearing", "body", "rows")

    def __init__(self, S, clearing, body, rows):
        self.S = S                # the S(t) in use
        self.clearing = clearing  # positive rational c
        self.body = body          # c * rows, integer polynomials of content 1
        self.rows = rows          # exact S*nabla(omega_beta) rows over Q[t]

    def scale_pair(self):
        """(numerator, denominator) of 1/(c*S) as printed."""
        return present_fraction(TFrac(TPoly.one(), self.S * self.clearing))


def present_fraction(x: TFrac):
    """Scale numerator and denominator by the least positive integer making both integral."""
    m = 1
    for c in x.num.coeffs + x.den.coeffs:
        m = m * c.denominator // int_gcd(m, c.denominator)
    return x.num * Fraction(m), x.den * Fraction(m)


class GMData:
    """Context plus S, the cofactor form eta_f, and cached connection data."""

    def __init__(self, ctx: TameContext, S: TPoly | None = None):
        self.ctx = ctx
        self.S = char_S(ctx) if S is None else S
        if self.S.is_zero():
            raise ValidationFailed("S must be nonzero")
        self.p = eta_f_cofactors(ctx, self.S)
        self.Sp = self.S.deriv()
        self._Spf = ctx.tpoly_at_f(self.Sp)
        self._mat = None
        self._lambda = None
        self._wrows = None

    # -- polynomial-representative step nabla_k ------------------------

    def nabla_rep(self, P: MultiPoly, k: int) -> MultiPoly:
        """Q_P - (k+1) S'(f) P, the numerator step of the iterated connection."""
        m = self.ctx.w.nvars
        acc = MultiPoly.zero(m)
        for i, pi in enumerate(self.p):
            acc = acc + P.diff(i) * pi + P * pi.diff(i)
        return acc - self._Spf * P * (k + 1)

    def _reduce_second(self, P: MultiPoly):
        return reduce_top(P, self.ctx).coeffs

    def matrix(self) -> ConnectionMatrix:
        if self._mat is None:
            rows = []
            for i, mono in enumerate(self.ctx.basis.monomials):
                rep = self.nabla_rep(MultiPoly.monomial(mono), 0)
                row = self._reduce_second(rep)
                bound = self.S.degree() - 1
                for j, p in enumerate(row):
                    if p:
                        assert p.degree() <= bound + self.ctx.A[i] - self.ctx.A[j]
                rows.append(row)
            c = _clearing_constant(rows)
            body = [[p * c for p in row] for row in rows]
            self._mat = ConnectionMatrix(self.S, c, body, rows)
        return self._mat

    # -- the connection on H'' -----------------------------------------

    def nabla(self, cls: ModuleClass) -> ModuleClass:
        """Leibniz extension of nabla to rational coefficient vectors."""
        if cls.which != "second":
            raise ValueError("nabla acts on H'' classes; use nabla_prime for H'")
        mat = self.matrix()
        mu = self.ctx.mu
        out = [c.deriv() for c in cls.coords]
        for i, c in enumerate(cls.coords):
            if c.is_zero():
                continue
            for j in range(mu):
                if mat.rows[i][j]:
                    out[j] = out[j] + c * TFrac(mat.rows[i][j], self.S)
        return ModuleClass("second", out, cls.support * self.S)

    def nabla_iter(self, cls: ModuleClass, k: int) -> ModuleClass:
        """k-fold nabla; polynomial classes go through the nabla_k tower."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        if k == 0:
            return cls
        if cls.which == "second" and cls.is_polynomial():
            m = self.ctx.w.nvars
            P = MultiPoly.zero(m)
            for i, c in enumerate(cls.coords):
                P = P + self.ctx.tpoly_at_f(c.as_poly()).mul_term(
                    self.ctx.basis.monomials[i], 1
                )
            for step in range(k):
                P = self.nabla_rep(P, step)
            Sk = self.S ** k
            coords = [TFrac(p, Sk) for p in self._reduce_second(P)]
            return ModuleClass("second", coords, cls.support * Sk)
        out = cls
        for _ in range(k):
            out = self.nabla(out)
        return out

    # -- the connection on H' -------------------------------------------

    def _lambda_rows(self):
        """Row beta: H' coordinates of x^beta * eta_f."""
        if self._lambda is None:
            ctx = self.ctx
            rows = []
            for mono in ctx.basis.monomials:
                if ctx.n == 0:
                    rows.append(
                        n0_reduce_prime(self.p[0].mul_term(mono, 1), ctx).coeffs
                    )
                else:
                    from .forms import FormN

                    form = FormN([pi.mul_term(mono, 1) for pi in self.p])
                    rows.append(reduce_n(form, ctx).coeffs)
            self._lambda = rows
        return self._lambda

    def _wedge_rows(self):
        """Row beta: H'' coordinates of df wedged with the beta-th H' basis form."""
        if self._wrows is None:
            ctx = self.ctx
            rows = []
            for mono in ctx.basis.monomials:
                if ctx.n == 0:
                    rep = ctx.f.diff(0).mul_term((mono[0] + 1,), 1)
                else:
                    rep = ctx.f_weighted_euler().mul_term(mono, 1)
                rows.append(self._reduce_second(rep))
            self._wrows = rows
        return self._wrows

    def d_class(self, cls: ModuleClass) -> ModuleClass:
        """The differential H' -> H'' on coefficient vectors."""
        if cls.which != "prime":
            raise ValueError("d_class acts on H' classes")
        ctx = self.ctx
        mu = ctx.mu
        wrows = self._wedge_rows()
        out = [TFrac.zero()] * mu
        for i, c in enumerate(cls.coords):
            if c.is_zero():
                continue
            scale = ctx.A[i] * ctx.d if ctx.n == 0 else ctx.A[i]
            out[i] = out[i] + c * scale
            dc = c.deriv()
            if not dc.is_zero():
                for j in range(mu):
                    if wrows[i][j]:
                        out[j] = out[j] + dc * TFrac.from_poly(wrows[i][j])
        return ModuleClass("second", out, cls.support)

    def wedge_class(self, cls: ModuleClass) -> ModuleClass:
        """df ^ . on H' coefficient vectors, landing in H''."""
        ctx = self.ctx
        mu = ctx.mu
        wrows = self._wedge_rows()
        out = [TFrac.zero()] * mu
        for i, c in enumerate(cls.coords):
            if c.is_zero():
                continue
            for j in range(mu):
                if wrows[i][j]:
                    out[j] = out[j] + c * TFrac.from_poly(wrows[i][j])
        return ModuleClass("second", out, cls.support)

    def nabla_prime(self, cls: ModuleClass, k: int = 1) -> ModuleClass:
        """k-fold connection on H' via inversion of df^ against S(f)dx = df^eta_f."""
        if cls.which != "prime":
            raise ValueError("nabla_prime acts on H' classes")
        if k < 1:
            raise ValueError("k must be positive")
        theta = self.nabla_iter(self.d_class(cls), k - 1)
        lam = self._lambda_rows()
        mu = self.ctx.mu
        out = [TFrac.zero()] * mu
        for i, c in enumerate(theta.coords):
            if c.is_zero():
                continue
            ci = c / self.S
            for j in range(mu):
                if lam[i][j]:
                    out[j] = out[j] + ci * TFrac.from_poly(lam[i][j])
        return ModuleClass("prime", out, theta.support * self.S)


def make_gm(ctx: TameContext, S: TPoly | None = None) -> GMData:
    return GMData(ctx, S)
