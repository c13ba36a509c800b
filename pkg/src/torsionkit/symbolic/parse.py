"""Parse rational functions written like ``(x^2+1)/(x-2)``.

Integer constants, the variable ``x``, ``+ - *``, integer powers ``^``,
parentheses and implicit multiplication (``2x``, ``x(x+1)``).  A single
``/`` may appear at the top level.
"""

import re

from .poly import MAX_DEGREE, Poly
from .ratfunc import RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(.))")


class ParseError(ValueError):
    pass


def _tokens(text):
    out = []
    for num, var, op in _TOKEN.findall(text):
        if num:
            out.append(("num", int(num)))
        elif var:
            out.append(("x", None))
        elif op.strip():
            if op not in "+-*^()":
                raise ParseError(f"unexpected character {op!r}")
            out.append((op, None))
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of input")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[0]!r}")
        self.i += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek() in ("*", "num", "x", "("):
            if self.peek() == "*":
                self.take()
            acc = acc * self.unary()
        return acc

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take("num")[1]
            if exp * max(base.degree, 0) > MAX_DEGREE:
                raise ParseError(f"degree exceeds {MAX_DEGREE}")
            return base ** exp
        return base

    def atom(self):
        kind = self.peek()
        if kind == "num":
            return Poly.const(self.take()[1])
        if kind == "x":
            self.take()
            return Poly.x()
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {kind!r}")


def parse_poly(text):
    p = _Parser(_tokens(text))
    out = p.expr()
    if p.i != len(p.toks):
        raise ParseError(f"trailing input in {text!r}")
    return out


def _split_top(text):
    depth = 0
    cuts = []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/":
            if depth:
                raise ParseError("'/' is only allowed at the top level")
            cuts.append(i)
    if len(cuts) > 1:
        raise ParseError("at most one top-level '/'")
    return cuts


def parse_ratfunc(text):
    cuts = _split_top(text)
    if not cuts:
        return RatFunc(parse_poly(text))
    k = cuts[0]
    num, den = parse_poly(text[:k]), parse_poly(text[k + 1:])
    if den.is_zero():
        raise ParseError("zero denominator")
    return RatFunc(num, den)
