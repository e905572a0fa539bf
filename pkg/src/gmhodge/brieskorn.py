"""Tame polynomial contexts and the reductions onto the canonical bases.

reduce_top writes a top form P*dx as sum p_beta(f) omega_beta + df^d(xi);
reduce_n writes an n-form as sum p_beta(f) eta_beta + df^xi + d(xi1).  Both
work by homogeneous reduction against the top piece g followed by the
substitute-and-iterate loop, the degree of the leftover dropping strictly
each round.  For one variable the substitution rules x^d -> (f - f_0)/a_d
and x^{d-1}dx -> (f' - f_0')/(d a_d) dx replace the whole machinery.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .forms import (
    FormN,
    FormNm1,
    FormTop,
    dform,
    dform_n,
    integrate_closed,
    wedge_df,
)
from .groebner import (
    MonomialOrder,
    QuotientInfinite,
    groebner,
    jacob,
    mult_matrix,
    normal_form,
    okbase,
)
from .poly import MultiPoly, WeightedVars
from .tpoly import TFrac, TPoly


class NotTame(ValueError):
    """The top weighted-homogeneous piece has a nonisolated singularity."""


class WatchdogError(RuntimeError):
    """A reduction loop exceeded the configured degree budget."""


def _loop_cap(extra):
    cap = int(os.environ.get("GMHODGE_MAX_DEGREE", "64"))
    return max(cap, extra) + 1


class TameContext:
    """Validated tame polynomial with its Milnor data.

    Holds f, its top piece g, the okbase-ordered monomial basis shared by
    C[x]/jacob(g) and C[x]/jacob(f), the exponents A_beta, and the Groebner
    bases of both Jacobian ideals.
    """

    def __init__(self, f: MultiPoly, w: WeightedVars):
        if f.is_zero() or f.is_constant():
            raise NotTame("f must be nonconstant")
        if f.nvars != w.nvars:
            raise ValueError("variable count mismatch")
        self.f = f
        self.w = w
        self.n = w.n
        self.order = MonomialOrder(w.alpha)
        self.g = f.lasthomo(w)
        self.d = f.wdeg(w)
        try:
            self.GB_g = groebner(jacob(self.g), self.order)
            self.basis = okbase(self.GB_g)
        except QuotientInfinite as exc:
            raise NotTame(str(exc)) from exc
        if self.basis.mu < 1:
            raise NotTame("Milnor number is zero")
        try:
            self.GB_f = groebner(jacob(self.f), self.order)
            basis_f = okbase(self.GB_f)
        except QuotientInfinite as exc:
            raise NotTame(str(exc)) from exc
        if basis_f.monomials != self.basis.monomials:
            raise NotTame("f and its top piece have different Milnor bases")
        self.mu = self.basis.mu
        total = sum(w.alpha)
        self.A = [Fraction(deg + total, self.d) for deg in self.basis.degrees]
        for a in self.A:
            if not (0 < a < self.n + 1):
                raise NotTame(f"exponent {a} outside (0, n+1)")
        self._mult_f = None

    # -- cached derived data -------------------------------------------

    def mult_by_f(self):
        """Multiplication-by-f matrix on the Milnor algebra (column convention)."""
        if self._mult_f is None:
            self._mult_f = mult_matrix(self.f, self.basis, self.GB_f)
        return self._mult_f

    def eta(self) -> FormN:
        """The contraction form with components w_i x_i (weights alpha_i / d)."""
        m = self.w.nvars
        comps = [
            MultiPoly.variable(i, m).scale(Fraction(self.w.alpha[i], self.d))
            for i in range(m)
        ]
        return FormN(comps)

    def eta_beta(self, i) -> FormN:
        """Basis n-form eta_beta for okbase position i (n >= 1)."""
        return self.eta().scale_poly(MultiPoly.monomial(self.basis.monomials[i]))

    def f_weighted_euler(self) -> MultiPoly:
        """sum w_i x_i df/dx_i; equals g plus lower-degree homogeneous pieces."""
        m = self.w.nvars
        acc = MultiPoly.zero(m)
        for i in range(m):
            acc = acc + MultiPoly.variable(i, m) * self.f.diff(i) * Fraction(
                self.w.alpha[i], self.d
            )
        return acc

    def tpoly_at_f(self, p: TPoly) -> MultiPoly:
        """Evaluate a t-polynomial at f."""
        acc = MultiPoly.zero(self.f.nvars)
        for c in reversed(p.coeffs):
            acc = acc * self.f + MultiPoly.constant(self.f.nvars, c)
        return acc

    def tpoly_at_g(self, p: TPoly) -> MultiPoly:
        acc = MultiPoly.zero(self.g.nvars)
        for c in reversed(p.coeffs):
            acc = acc * self.g + MultiPoly.constant(self.g.nvars, c)
        return acc


def make_context(f: MultiPoly, w: WeightedVars) -> TameContext:
    return TameContext(f, w)


class ReductionResult:
    """Coefficients p_beta plus the witness forms of the defining identity."""

    __slots__ = ("which", "coeffs", "xi", "xi1", "p0", "cofactor")

    def __init__(self, which, coeffs, xi=None, xi1=None, p0=None, cofactor=None):
        self.which = which        # "second" (H'') or "prime" (H')
        self.coeffs = coeffs      # list of TPoly in okbase order
        self.xi = xi              # FormNm1 witness (n >= 1)
        self.xi1 = xi1            # FormNm1 witness for H' (n >= 1)
        self.p0 = p0              # constant-in-H' part for the n=0 H' reduction
        self.cofactor = cofactor  # c(t) with c(f) f' absorbing the relation, n=0 H''

    def verify(self, ctx: TameContext, source) -> bool:
        """Expand the right-hand side of the identity and compare with the input."""
        if ctx.n == 0:
            acc = MultiPoly.zero(1)
            for i, p in enumerate(self.coeffs):
                mono = ctx.basis.monomials[i]
                if self.which == "prime":
                    mono = (mono[0] + 1,)
                acc = acc + ctx.tpoly_at_f(p).mul_term(mono, 1)
            if self.which == "prime":
                acc = acc + ctx.tpoly_at_f(self.p0)
            else:
                acc = acc + ctx.tpoly_at_f(self.cofactor) * ctx.f.diff(0)
            target = source.coeff if isinstance(source, FormTop) else source
            return acc == target
        if self.which == "second":
            target = source.coeff if isinstance(source, FormTop) else source
            acc = MultiPoly.zero(ctx.f.nvars)
            for i, p in enumerate(self.coeffs):
                acc = acc + ctx.tpoly_at_f(p).mul_term(ctx.basis.monomials[i], 1)
            acc = acc + wedge_df(ctx.f, dform(self.xi)).coeff
            return acc == target
        acc = FormN.zero(ctx.f.nvars)
        for i, p in enumerate(self.coeffs):
            acc = acc + ctx.eta_beta(i).scale_poly(ctx.tpoly_at_f(p))
        acc = acc + wedge_df(ctx.f, self.xi) + dform(self.xi1)
        return acc == source


# -- homogeneous reductions (n >= 1) -----------------------------------


def reduce_top_homog(P: MultiPoly, ctx: TameContext) -> ReductionResult:
    """Write P*dx over the omega basis modulo dg^d(Omega^{n-2}) for homogeneous g."""
    if ctx.n < 1:
        raise ValueError("homogeneous reduction needs n >= 1")
    m = ctx.w.nvars
    alpha = ctx.w.alpha
    total = sum(alpha)
    d = ctx.d
    coeff_dicts = [dict() for _ in range(ctx.mu)]
    xi = FormNm1.zero(m)
    cur = P
    level = 0
    gpow = MultiPoly.constant(m, 1)
    start = P.wdeg(ctx.w) or 0
    cap = _loop_cap(start)
    while not cur.is_zero():
        if level > cap:
            raise WatchdogError("homogeneous reduction failed to terminate")
        rem, cofs = normal_form(cur, ctx.GB_g)
        for e, c in rem.terms.items():
            idx = ctx.basis.index[e]
            coeff_dicts[idx][level] = coeff_dicts[idx].get(level, Fraction(0)) + c
        nxt = MultiPoly.zero(m)
        for i, u in enumerate(cofs):
            if u.is_zero():
                continue
            for gamma, c in u.sorted_terms(alpha):
                D = sum((gamma[k] + 1) * alpha[k] for k in range(m)) - alpha[i]
                # D = d*A_gamma - alpha_i, positive whenever n >= 1
                base = MultiPoly.monomial(gamma, c)
                nxt = nxt + base.diff(i).scale(Fraction(d, D))
                for j in range(m):
                    if j == i:
                        continue
                    eps = 0 if i < j else 1
                    sgn = -1 if (i + j + 1 + eps) % 2 else 1
                    piece = base.mul_term(
                        tuple(1 if k == j else 0 for k in range(m)),
                        Fraction(sgn * alpha[j], D),
                    )
                    xi.add_term(min(i, j), max(i, j), piece * gpow)
        cur = nxt
        level += 1
        if not cur.is_zero():
            gpow = gpow * ctx.g
    coeffs = [TPoly.from_dict(dd) for dd in coeff_dicts]
    return ReductionResult("second", coeffs, xi=xi)


def reduce_n_homog(omega: FormN, ctx: TameContext) -> ReductionResult:
    """Write an n-form over the eta basis for homogeneous g."""
    if ctx.n < 1:
        raise ValueError("homogeneous reduction needs n >= 1")
    top = reduce_top_homog(dform_n(omega).coeff, ctx)
    coeffs = []
    for i, q in enumerate(top.coeffs):
        a = ctx.A[i]
        coeffs.append(TPoly([c / (a + k) for k, c in enumerate(q.coeffs)]))
    xi = -top.xi
    resid = omega
    for i, p in enumerate(coeffs):
        if p:
            resid = resid - ctx.eta_beta(i).scale_poly(ctx.tpoly_at_g(p))
    resid = resid - wedge_df(ctx.g, xi)
    if not dform_n(resid).is_zero():
        raise ArithmeticError("residual n-form is not closed")
    xi1 = integrate_closed(resid)
    return ReductionResult("prime", coeffs, xi=xi, xi1=xi1)


# -- general reductions (n >= 1) ----------------------------------------


def reduce_top(P: MultiPoly, ctx: TameContext) -> ReductionResult:
    """Write P*dx over the omega basis of H'' for a tame polynomial."""
    if ctx.n == 0:
        return n0_reduce_second(P, ctx)
    m = ctx.w.nvars
    coeffs = [TPoly.zero()] * ctx.mu
    xi = FormNm1.zero(m)
    cur = P
    gf = ctx.g - ctx.f
    rounds = 0
    cap = _loop_cap(P.wdeg(ctx.w) or 0)
    prev_deg = None
    while not cur.is_zero():
        rounds += 1
        deg = cur.wdeg(ctx.w)
        if rounds > cap or (prev_deg is not None and deg >= prev_deg):
            raise WatchdogError("reduction degree failed to decrease")
        prev_deg = deg
        step = reduce_top_homog(cur, ctx)
        coeffs = [a + b for a, b in zip(coeffs, step.coeffs)]
        xi = xi + step.xi
        nxt = MultiPoly.zero(m)
        for i, q in enumerate(step.coeffs):
            if q:
                diff = ctx.tpoly_at_g(q) - ctx.tpoly_at_f(q)
                if not diff.is_zero():
                    nxt = nxt + diff.mul_term(ctx.basis.monomials[i], 1)
        nxt = nxt + wedge_df(gf, dform(step.xi)).coeff
        cur = nxt
    return ReductionResult("second", coeffs, xi=xi)


def reduce_n(omega: FormN, ctx: TameContext) -> ReductionResult:
    """Write an n-form over the eta basis of H' for a tame polynomial."""
    if ctx.n == 0:
        raise ValueError("use n0_reduce_prime for one variable")
    m = ctx.w.nvars
    coeffs = [TPoly.zero()] * ctx.mu
    xi = FormNm1.zero(m)
    xi1 = FormNm1.zero(m)
    cur = omega
    gf = ctx.g - ctx.f
    rounds = 0
    cap = _loop_cap(omega.wdeg(ctx.w) or 0)
    prev_deg = None
    while not cur.is_zero():
        rounds += 1
        deg = cur.wdeg(ctx.w)
        if rounds > cap or (prev_deg is not None and deg >= prev_deg):
            raise WatchdogError("reduction degree failed to decrease")
        prev_deg = deg
        step = reduce_n_homog(cur, ctx)
        coeffs = [a + b for a, b in zip(coeffs, step.coeffs)]
        xi = xi + step.xi
        xi1 = xi1 + step.xi1
        nxt = FormN.zero(m)
        for i, q in enumerate(step.coeffs):
            if q:
                diff = ctx.tpoly_at_g(q) - ctx.tpoly_at_f(q)
                if not diff.is_zero():
                    nxt = nxt + ctx.eta_beta(i).scale_poly(diff)
        nxt = nxt + wedge_df(gf, step.xi)
        cur = nxt
    return ReductionResult("prime", coeffs, xi=xi, xi1=xi1)


# -- the one-variable theory ---------------------------------------------


def _n0_split(ctx: TameContext):
    d = ctx.d
    a_d = ctx.f.coeff((d,))
    f0 = ctx.f - MultiPoly.monomial((d,), a_d)
    return d, a_d, f0


def _n0_expand(P: MultiPoly, ctx: TameContext):
    """Rewrite P as sum_{i<d} q_i(t) x^i using x^d = (t - f_0)/a_d repeatedly."""
    d, a_d, f0 = _n0_split(ctx)
    # carry terms as (x-exponent) -> TPoly coefficient
    cur = {e[0]: TPoly.constant(c) for e, c in P.terms.items()}
    cap = _loop_cap(max(cur) if cur else 0)
    rounds = 0
    while True:
        top = [e for e in cur if e >= d]
        if not top:
            break
        rounds += 1
        if rounds > cap:
            raise WatchdogError("n=0 substitution failed to terminate")
        e = max(top)
        q = cur.pop(e)
        # q x^e = q x^{e-d} (t - f0)/a_d
        scale = Fraction(1) / a_d
        tq = (q * scale).shift(1)
        base = e - d
        cur[base] = cur.get(base, TPoly.zero()) + tq
        for e2, c2 in f0.terms.items():
            k = base + e2[0]
            cur[k] = cur.get(k, TPoly.zero()) - q * (c2 * scale)
        cur = {k: v for k, v in cur.items() if v}
    out = [TPoly.zero()] * d
    for e, q in cur.items():
        out[e] = q
    return out


def n0_reduce_prime(P: MultiPoly, ctx: TameContext) -> ReductionResult:
    """Coordinates of P in the H' basis {x, ..., x^{d-1}} plus the constant part."""
    if ctx.n != 0:
        raise ValueError("n0 reduction needs one variable")
    qs = _n0_expand(P, ctx)
    coeffs = [TPoly.zero()] * ctx.mu
    for i, mono in enumerate(ctx.basis.monomials):
        coeffs[i] = qs[mono[0] + 1]
    return ReductionResult("prime", coeffs, p0=qs[0])


def n0_reduce_second(P: MultiPoly, ctx: TameContext) -> ReductionResult:
    """Coordinates of P*dx in the H'' basis {dx, ..., x^{d-2}dx}."""
    if ctx.n != 0:
        raise ValueError("n0 reduction needs one variable")
    d, a_d, f0 = _n0_split(ctx)
    qs = _n0_expand(P, ctx)
    top = qs[d - 1]
    cof = top * (Fraction(1, d) / a_d) if top else TPoly.zero()
    if top:
        f0p = f0.diff(0)
        for e, c in f0p.terms.items():
            qs[e[0]] = qs[e[0]] - top * (c * Fraction(1, d) / a_d)
        qs[d - 1] = TPoly.zero()
    coeffs = [TPoly.zero()] * ctx.mu
    for i, mono in enumerate(ctx.basis.monomials):
        coeffs[i] = qs[mono[0]]
    return ReductionResult("second", coeffs, cofactor=cof)


class ModuleClass:
    """Element of H' or H'' as a coefficient vector over the canonical basis."""

    __slots__ = ("which", "coords", "support")

    def __init__(self, which, coords, support=None):
        self.which = which
        self.coords = [c if isinstance(c, TFrac) else TFrac(c) for c in coords]
        self.support = support if support is not None else TPoly.one()

    @classmethod
    def unit(cls, which, i, mu):
        coords = [TFrac.zero()] * mu
        coords[i] = TFrac.one()
        return cls(which, coords)

    @classmethod
    def from_polys(cls, which, polys):
        return cls(which, [TFrac.from_poly(p) for p in polys])

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def is_polynomial(self):
        return all(c.is_poly() for c in self.coords)

    def __add__(self, other):
        return ModuleClass(
            self.which,
            [a + b for a, b in zip(self.coords, other.coords)],
            self.support * other.support,
        )

    def __sub__(self, other):
        return ModuleClass(
            self.which,
            [a - b for a, b in zip(self.coords, other.coords)],
            self.support * other.support,
        )

    def scale(self, c):
        return ModuleClass(self.which, [a * c for a in self.coords], self.support)

    def __eq__(self, other):
        return (
            isinstance(other, ModuleClass)
            and self.which == other.which
            and self.coords == other.coords
        )
