"""Recursive-descent parser for exact polynomial expressions.

Grammar: integers, rationals a/b, declared variables, + - * ^ and
parentheses.  Implicit multiplication is rejected; division appears only
between integer literals.  Errors carry 1-based line and column positions.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly


class ParseError(ValueError):
    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, column {col})")
        self.message = message
        self.line = line
        self.col = col


_OPS = "+-*^()/"


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text, names):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = list(names)
        self.nvars = len(names)

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], tok[3])

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            self.error(f"unexpected {tok[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] == "*":
            self.next()
            p = p * self.factor()
        return p

    def factor(self):
        tok = self.peek()
        if tok[0] in ("+", "-"):
            self.next()
            p = self.factor()
            return p if tok[0] == "+" else -p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.next()
            tok = self.peek()
            if tok[0] != "int":
                self.error("expected an integer exponent")
            self.next()
            return base ** int(tok[1])
        return base

    def atom(self):
        tok = self.next()
        if tok[0] == "int":
            value = Fraction(int(tok[1]))
            if self.peek()[0] == "/":
                self.next()
                den = self.peek()
                if den[0] != "int":
                    self.error("expected an integer denominator")
                self.next()
                if int(den[1]) == 0:
                    self.error("zero denominator", den)
                value = Fraction(int(tok[1]), int(den[1]))
            return MultiPoly.constant(self.nvars, value)
        if tok[0] == "name":
            if tok[1] == "t":
                self.error("t is reserved for the module parameter", tok)
            if tok[1] not in self.names:
                self.error(f"unknown variable {tok[1]!r}", tok)
            return MultiPoly.variable(self.names.index(tok[1]), self.nvars)
        if tok[0] == "(":
            p = self.expr()
            close = self.next()
            if close[0] != ")":
                self.error("expected ')'", close)
            return p
        self.error(f"expected a value, found {tok[1]!r}" if tok[1] else "unexpected end of input", tok)


def parse_poly(text, names) -> MultiPoly:
    """Parse an exact polynomial over the given variables."""
    if not text or not text.strip():
        raise ParseError("empty expression", 1, 1)
    return _Parser(text, names).parse()


def parse_tpoly(text):
    """Parse a univariate polynomial in t (for user-supplied S)."""
    if not text or not text.strip():
        raise ParseError("empty expression", 1, 1)
    parser = _Parser(text, ["t"])
    # lift the t-reservation for this grammar only
    parser.atom = _t_atom.__get__(parser, _Parser)
    p = parser.parse()
    from .tpoly import TPoly

    coeffs = {}
    for e, c in p.terms.items():
        coeffs[e[0]] = c
    return TPoly.from_dict(coeffs)


def _t_atom(self):
    tok = self.next()
    if tok[0] == "int":
        value = Fraction(int(tok[1]))
        if self.peek()[0] == "/":
            self.next()
            den = self.peek()
            if den[0] != "int":
                self.error("expected an integer denominator")
            self.next()
            if int(den[1]) == 0:
                self.error("zero denominator", den)
            value = Fraction(int(tok[1]), int(den[1]))
        return MultiPoly.constant(1, value)
    if tok[0] == "name":
        if tok[1] != "t":
            self.error(f"unknown variable {tok[1]!r}", tok)
        return MultiPoly.variable(0, 1)
    if tok[0] == "(":
        p = self.expr()
        close = self.next()
        if close[0] != ")":
            self.error("expected ')'", close)
        return p
    self.error(f"expected a value, found {tok[1]!r}" if tok[1] else "unexpected end of input", tok)
