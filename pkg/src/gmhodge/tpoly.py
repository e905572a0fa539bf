"""Univariate polynomials and rational functions in the parameter t, over Q."""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd


class TPoly:
    """Polynomial in Q[t], coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def t(cls):
        return _T

    @classmethod
    def from_dict(cls, d):
        if not d:
            return _ZERO
        top = max(d)
        cs = [Fraction(0)] * (top + 1)
        for k, v in d.items():
            cs[k] = Fraction(v)
        return cls(cs)

    def degree(self):
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return TPoly(cs)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return _ZERO
            return TPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        cs = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                cs[i + j] += ca * cb
        return TPoly(cs)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k):
        """Multiply by t^k."""
        if not self.coeffs:
            return _ZERO
        return TPoly((Fraction(0),) * k + self.coeffs)

    def divmod(self, other):
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dn = other.degree()
        lc = other.lc()
        q = [Fraction(0)] * max(0, len(rem) - dn)
        while len(rem) - 1 >= dn and rem:
            k = len(rem) - 1 - dn
            f = rem[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            while rem and not rem[-1]:
                rem.pop()
        return TPoly(q), TPoly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def deriv(self):
        return TPoly([self.coeffs[i] * i for i in range(1, len(self.coeffs))])

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return TPoly([c / lc for c in self.coeffs])

    def gcd(self, other):
        """Monic gcd."""
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self):
        """Monic product of distinct irreducible factors."""
        if not self.coeffs:
            return self
        g = self.gcd(self.deriv())
        return self.exact_div(g).monic() if g.degree() > 0 else self.monic()

    def content(self):
        """Positive rational c with self/c an integer polynomial of content 1."""
        if not self.coeffs:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = int_gcd(num, abs(c.numerator))
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self):
        """(content, integer-coefficient primitive part); sign stays in the part."""
        c = self.content()
        if not c:
            return Fraction(0), self
        return c, TPoly([v / c for v in self.coeffs])

    def eval(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else None
        if acc is None:
            # generic Horner for any ring element supporting * and +
            result = None
            for c in reversed(self.coeffs):
                result = c if result is None else result * x + c
            return result
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_poly(self, p, one):
        """Horner evaluation at an arbitrary ring element p; `one` is the ring unit."""
        result = one * 0
        for c in reversed(self.coeffs):
            result = result * p + one * c
        return result

    def to_string(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = var if k == 1 else f"{var}^{k}"
            else:
                body = f"{abs(c)}*{var}" if k == 1 else f"{abs(c)}*{var}^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"TPoly({self.to_string()})"


_ZERO = TPoly.__new__(TPoly)
_ZERO.coeffs = ()
_ONE = TPoly.__new__(TPoly)
_ONE.coeffs = (Fraction(1),)
_T = TPoly.__new__(TPoly)
_T.coeffs = (Fraction(0), Fraction(1))


def tpoly_gcd_many(polys):
    g = TPoly.zero()
    for p in polys:
        g = g.gcd(p)
        if g.degree() == 0:
            break
    return g


def tpoly_lcm(a, b):
    if not a or not b:
        return TPoly.zero()
    return a.exact_div(a.gcd(b)) * b


class TFrac:
    """Rational function in t: numerator/denominator with monic reduced denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = TPoly([num])
        if den is None:
            den = TPoly.one()
        elif isinstance(den, (int, Fraction)):
            den = TPoly([den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = TPoly.zero()
            self.den = TPoly.one()
            return
        g = num.gcd(den)
        if g.degree() > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.lc()
        if lc != 1:
            num = num * (1 / lc)
            den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def zero(cls):
        return cls(TPoly.zero())

    @classmethod
    def one(cls):
        return cls(TPoly.one())

    @classmethod
    def from_poly(cls, p):
        out = cls.__new__(cls)
        out.num = p
        out.den = TPoly.one()
        return out

    def is_zero(self):
        return not self.num

    def is_poly(self):
        return self.den.degree() == 0

    def as_poly(self):
        if not self.is_poly():
            raise ArithmeticError("not a polynomial")
        return self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TFrac(other)
        return isinstance(other, TFrac) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, TPoly)):
            other = TFrac(other)
        return TFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, TPoly)):
            other = TFrac(other)
        return TFrac(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        out = TFrac.__new__(TFrac)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, TPoly)):
            other = TFrac(other)
        return TFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, TPoly)):
            other = TFrac(other)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return TFrac(self.num * other.den, self.den * other.num)

    def deriv(self):
        return TFrac(
            self.num.deriv() * self.den - self.num * self.den.deriv(),
            self.den * self.den,
        )

    def eval(self, x):
        return self.num.eval(x) / self.den.eval(x)

    def to_string(self, var="t"):
        if self.den == TPoly.one():
            return self.num.to_string(var)
        num = self.num.to_string(var)
        if " " in num:
            num = f"({num})"
        return f"{num}/({self.den.to_string(var)})"

    def __repr__(self):
        return f"TFrac({self.to_string()})"
