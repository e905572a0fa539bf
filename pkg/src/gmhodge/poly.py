"""Multivariate polynomials over Q with weighted degrees.

Exponent vectors are fixed-length tuples of nonnegative ints; coefficients
are fractions.Fraction (never floats).  Monomial comparisons use the
weighted degree-reverse-lexicographic order with the last variable cheapest,
which is the order every downstream basis listing is calibrated against.
"""

from __future__ import annotations

from fractions import Fraction


class BadWeights(ValueError):
    """Weight vector is malformed (length mismatch, nonpositive entries)."""


class WeightedVars:
    """Variable names x_1..x_{n+1} with positive integer weights."""

    __slots__ = ("names", "alpha", "n")

    def __init__(self, names, alpha):
        names = tuple(names)
        alpha = tuple(int(a) for a in alpha)
        if len(names) != len(alpha) or not names:
            raise BadWeights("need the same positive number of names and weights")
        if any(a < 1 for a in alpha):
            raise BadWeights("weights must be positive integers")
        if len(set(names)) != len(names):
            raise BadWeights("variable names must be distinct")
        if "t" in names:
            raise BadWeights("t is reserved for the module parameter")
        self.names = names
        self.alpha = alpha
        self.n = len(names) - 1

    @property
    def nvars(self):
        return self.n + 1

    def wdeg_exps(self, exps):
        if len(exps) != self.nvars:
            raise ValueError("exponent vector length mismatch")
        return sum(e * a for e, a in zip(exps, self.alpha))

    def __eq__(self, other):
        return (
            isinstance(other, WeightedVars)
            and self.names == other.names
            and self.alpha == other.alpha
        )

    def __repr__(self):
        return f"WeightedVars({self.names}, {self.alpha})"


def order_key(exps, alpha):
    """Sort key realizing the weighted degrevlex order (larger key = larger monomial)."""
    wd = sum(e * a for e, a in zip(exps, alpha))
    return (wd, tuple(-e for e in reversed(exps)))


def listing_key(exps, alpha):
    """Sort key for basis listings: weighted degree, ties by last-variable exponent."""
    wd = sum(e * a for e, a in zip(exps, alpha))
    return (wd, tuple(reversed(exps)))


class MultiPoly:
    """Polynomial in Q[x_1..x_m] as a map from exponent tuples to nonzero Fractions."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[e] = c if type(c) is Fraction else Fraction(c)
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def monomial(cls, exps, c=1):
        exps = tuple(exps)
        return cls(len(exps), {exps: Fraction(c)})

    @classmethod
    def variable(cls, i, nvars):
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e)
            if s is None:
                res[e] = c
            else:
                s = s + c
                if s:
                    res[e] = s
                else:
                    del res[e]
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = res
        return out

    def __sub__(self, other):
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e)
            if s is None:
                res[e] = -c
            else:
                s = s - c
                if s:
                    res[e] = s
                else:
                    del res[e]
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = res
        return out

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        res = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = res.get(e)
                if s is None:
                    res[e] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        res[e] = s
                    else:
                        del res[e]
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = res
        return out

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return MultiPoly.zero(self.nvars)
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = {e: v * c for e, v in self.terms.items()}
        return out

    def mul_term(self, exps, c):
        """Multiply by the single term c*x^exps."""
        if not c:
            return MultiPoly.zero(self.nvars)
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = {
            tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self.terms.items()
        }
        return out

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def diff(self, i):
        """Partial derivative with respect to variable i."""
        res = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                res[tuple(e2)] = c * e[i]
        out = MultiPoly.__new__(MultiPoly)
        out.nvars = self.nvars
        out.terms = res
        return out

    def coeff(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def subs_one(self, i):
        """Substitute 1 for variable i, dropping it from the exponent vector."""
        res = {}
        for e, c in self.terms.items():
            e2 = e[:i] + e[i + 1 :]
            s = res.get(e2)
            res[e2] = c if s is None else s + c
        return MultiPoly(self.nvars - 1, res)

    # -- weighted structure --------------------------------------------

    def wdeg(self, w: WeightedVars):
        """Weighted degree; None for the zero polynomial (minus infinity)."""
        if not self.terms:
            return None
        return max(w.wdeg_exps(e) for e in self.terms)

    def lasthomo(self, w: WeightedVars):
        """The top weighted-homogeneous piece."""
        if not self.terms:
            raise ValueError("lasthomo of the zero polynomial")
        d = self.wdeg(w)
        return MultiPoly(
            self.nvars, {e: c for e, c in self.terms.items() if w.wdeg_exps(e) == d}
        )

    def is_homogeneous(self, w: WeightedVars):
        degs = {w.wdeg_exps(e) for e in self.terms}
        return len(degs) <= 1

    def homogenize(self, w: WeightedVars):
        """Homogenize with a fresh weight-1 variable x0 in slot 0 of the new vector."""
        d = self.wdeg(w)
        if d is None:
            return MultiPoly.zero(self.nvars + 1)
        res = {}
        for e, c in self.terms.items():
            res[(d - w.wdeg_exps(e),) + e] = c
        return MultiPoly(self.nvars + 1, res)

    # -- ordering helpers ----------------------------------------------

    def leading(self, alpha):
        """Leading (exponent, coeff) in the weighted degrevlex order."""
        if not self.terms:
            return None
        e = max(self.terms, key=lambda ee: order_key(ee, alpha))
        return e, self.terms[e]

    def sorted_terms(self, alpha):
        """Terms sorted leading-first."""
        return sorted(
            self.terms.items(), key=lambda it: order_key(it[0], alpha), reverse=True
        )

    # -- display --------------------------------------------------------

    def to_string(self, names, alpha=None):
        if not self.terms:
            return "0"
        if alpha is None:
            alpha = (1,) * self.nvars
        parts = []
        for e, c in self.sorted_terms(alpha):
            mono = monomial_string(e, names)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        names = tuple(f"x{i+1}" for i in range(self.nvars))
        return f"MultiPoly({self.to_string(names)})"


def monomial_string(exps, names):
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def wdeg(p: MultiPoly, w: WeightedVars):
    return p.wdeg(w)


def lasthomo(p: MultiPoly, w: WeightedVars):
    return p.lasthomo(w)


def homogenize(p: MultiPoly, w: WeightedVars):
    return p.homogenize(w)
