"""Polynomial differential forms in m = n+1 variables.

Only the three degrees the reduction algorithms touch are modeled:

* FormTop  -- (n+1)-forms P * dx_1^...^dx_{n+1}
* FormN    -- n-forms, component i (0-based) multiplying (-1)^i * hat(dx_{i+1})
* FormNm1  -- (n-1)-forms, keyed by the removed pair i<j (0-based), the
              coefficient multiplying dx with dx_{i+1} and dx_{j+1} deleted
              (remaining factors in their original order, no extra sign)

For n = 1 a FormNm1 degenerates to a single 0-form coefficient on the key
(0, 1); n = 0 has no FormNm1 and is handled upstream.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly


class FormTop:
    """Top-degree form P*dx."""

    __slots__ = ("coeff",)

    def __init__(self, coeff: MultiPoly):
        self.coeff = coeff

    def __add__(self, other):
        return FormTop(self.coeff + other.coeff)

    def __sub__(self, other):
        return FormTop(self.coeff - other.coeff)

    def __neg__(self):
        return FormTop(-self.coeff)

    def is_zero(self):
        return self.coeff.is_zero()

    def __eq__(self, other):
        return isinstance(other, FormTop) and self.coeff == other.coeff


class FormN:
    """n-form with components on the signed hatted basis."""

    __slots__ = ("comps",)

    def __init__(self, comps):
        self.comps = list(comps)

    @classmethod
    def zero(cls, nvars):
        return cls([MultiPoly.zero(nvars)] * nvars)

    @property
    def nvars(self):
        return len(self.comps)

    def __add__(self, other):
        return FormN([a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other):
        return FormN([a - b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return FormN([-a for a in self.comps])

    def scale_poly(self, p: MultiPoly):
        return FormN([a * p for a in self.comps])

    def scale(self, c):
        return FormN([a.scale(c) for a in self.comps])

    def is_zero(self):
        return all(a.is_zero() for a in self.comps)

    def __eq__(self, other):
        return isinstance(other, FormN) and self.comps == other.comps

    def wdeg(self, w):
        """Weighted form degree (dx_i counts with weight alpha_i); None if zero."""
        total = sum(w.alpha)
        degs = [
            a.wdeg(w) + total - w.alpha[i]
            for i, a in enumerate(self.comps)
            if not a.is_zero()
        ]
        return max(degs) if degs else None


class FormNm1:
    """(n-1)-form keyed by the deleted index pair."""

    __slots__ = ("nvars", "comps")

    def __init__(self, nvars, comps=None):
        self.nvars = nvars
        self.comps = {}
        if comps:
            for key, p in comps.items():
                if not p.is_zero():
                    self.comps[key] = p

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    def get(self, i, j):
        return self.comps.get((i, j), MultiPoly.zero(self.nvars))

    def add_term(self, i, j, p: MultiPoly):
        if i > j:
            i, j = j, i
        cur = self.comps.get((i, j))
        s = p if cur is None else cur + p
        if s.is_zero():
            self.comps.pop((i, j), None)
        else:
            self.comps[(i, j)] = s

    def __add__(self, other):
        out = FormNm1(self.nvars, dict(self.comps))
        for key, p in other.comps.items():
            out.add_term(key[0], key[1], p)
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FormNm1(self.nvars, {k: -p for k, p in self.comps.items()})

    def scale_poly(self, p: MultiPoly):
        return FormNm1(self.nvars, {k: q * p for k, q in self.comps.items()})

    def is_zero(self):
        return not self.comps

    def __eq__(self, other):
        return isinstance(other, FormNm1) and self.comps == other.comps


def dform_n(omega: FormN) -> FormTop:
    """Exterior derivative of an n-form (the divergence of its components)."""
    m = omega.nvars
    acc = MultiPoly.zero(m)
    for i, a in enumerate(omega.comps):
        acc = acc + a.diff(i)
    return FormTop(acc)


def dform(xi: FormNm1) -> FormN:
    """Exterior derivative of an (n-1)-form."""
    m = xi.nvars
    comps = [MultiPoly.zero(m) for _ in range(m)]
    for (i, j), p in xi.comps.items():
        s = 1 if (i + j) % 2 == 0 else -1
        comps[j] = comps[j] + p.diff(i).scale(s)
        comps[i] = comps[i] - p.diff(j).scale(s)
    return FormN(comps)


def wedge_df_n(f: MultiPoly, omega: FormN) -> FormTop:
    """df ^ omega for an n-form omega."""
    m = omega.nvars
    acc = MultiPoly.zero(m)
    for i, a in enumerate(omega.comps):
        acc = acc + a * f.diff(i)
    return FormTop(acc)


def wedge_df_nm1(f: MultiPoly, xi: FormNm1) -> FormN:
    """df ^ xi for an (n-1)-form xi."""
    m = xi.nvars
    comps = [MultiPoly.zero(m) for _ in range(m)]
    for (i, j), p in xi.comps.items():
        s = 1 if (i + j) % 2 == 0 else -1
        comps[j] = comps[j] + (p * f.diff(i)).scale(s)
        comps[i] = comps[i] - (p * f.diff(j)).scale(s)
    return FormN(comps)


def wedge_df(f: MultiPoly, theta):
    """df ^ theta with the sign conventions used throughout."""
    if isinstance(theta, FormN):
        return wedge_df_n(f, theta)
    if isinstance(theta, FormNm1):
        return wedge_df_nm1(f, theta)
    raise TypeError("wedge_df expects a FormN or FormNm1")


def integrate_closed(omega: FormN) -> FormNm1:
    """A primitive of a closed n-form via the radial homotopy operator.

    Only valid when dform_n(omega) = 0; the caller asserts that.
    """
    m = omega.nvars
    n = m - 1
    out = FormNm1(m)
    for j, a in enumerate(omega.comps):
        sign_j = 1 if j % 2 == 0 else -1
        rest = [u for u in range(m) if u != j]
        for exps, c in a.terms.items():
            total = sum(exps) + n
            base = Fraction(sign_j, total) * c
            for pos, u in enumerate(rest):
                e2 = list(exps)
                e2[u] += 1
                s = base if pos % 2 == 0 else -base
                out.add_term(min(u, j), max(u, j), MultiPoly(m, {tuple(e2): s}))
    return out
