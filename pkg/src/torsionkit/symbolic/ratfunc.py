"""Rational functions over Q in canonical form num/den, gcd 1, den monic."""

from fractions import Fraction
from math import lcm

from .poly import MAX_DEGREE, Poly, exact_quotient, format_poly, primitive_gcd


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = Poly.const(1) if den is None else (den if isinstance(den, Poly) else Poly.const(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if max(num.degree, den.degree) > MAX_DEGREE:
            raise ValueError(f"degree exceeds {MAX_DEGREE}")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        if den.degree == 0:
            self.num, self.den = num.scale(1 / den.lc), Poly.const(1)
            return
        g = primitive_gcd(num, den)
        if len(g) > 1:
            num, den = exact_quotient(num, g), exact_quotient(den, g)
        lc = den.lc
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num, self.den = num, den

    @classmethod
    def from_poly(cls, p):
        return cls(p)

    @classmethod
    def _canonical(cls, num, den):
        q = cls.__new__(cls)
        q.num, q.den = num, den
        return q

    def is_poly(self):
        return self.den.degree == 0

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFunc._canonical(-self.num, self.den)

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        b, d = self.den, other.den
        if b == d:
            return RatFunc(self.num + other.num, b)
        g = _gcd_or_none(b, d)
        if g is None:
            # coprime denominators: (ad + cb)/(bd) is already reduced
            return _monic(self.num * d + other.num * b, b * d)
        b1, d1 = exact_quotient(b, g), exact_quotient(d, g)
        t = self.num * d1 + other.num * b1
        if t.is_zero():
            return RatFunc(0)
        gp = Poly._raw(g)
        g2 = _gcd_or_none(t, gp)
        if g2 is None:
            return _monic(t, b1 * d)
        return _monic(exact_quotient(t, g2), b1 * exact_quotient(d, g2))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RatFunc(0)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = _gcd_or_none(a, d)
        if g1 is not None:
            a, d = exact_quotient(a, g1), exact_quotient(d, g1)
        g2 = _gcd_or_none(c, b)
        if g2 is not None:
            c, b = exact_quotient(c, g2), exact_quotient(b, g2)
        return _monic(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.num.degree == 0:
            return RatFunc._canonical(self.den.scale(1 / self.num.lc), Poly.const(1))
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * _lift(other).inverse()

    def __rtruediv__(self, other):
        return _lift(other) * self.inverse()

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        return to_string(self)


def _gcd_or_none(p, q):
    """Primitive gcd of p and q, or None when it is a constant."""
    if p.degree <= 0 or q.degree <= 0:
        return None
    g = primitive_gcd(p, q)
    return g if len(g) > 1 else None


def _monic(num, den):
    """Build from a coprime pair, only rescaling den to be monic."""
    if max(num.degree, den.degree) > MAX_DEGREE:
        raise ValueError(f"degree exceeds {MAX_DEGREE}")
    lc = den.lc
    if lc != 1:
        num, den = num.scale(1 / lc), den.scale(1 / lc)
    return RatFunc._canonical(num, den)


def _lift(v):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (Poly, int, Fraction)):
        return RatFunc(v)
    return NotImplemented


def to_string(q):
    """Integer-coefficient form ``(num)/(den)``, parseable by :func:`parse_ratfunc`."""
    scale = lcm(q.num._d, q.den._d)
    n, d = q.num.scale(scale), q.den.scale(scale)
    if d == 1:
        return format_poly(n)
    return f"({format_poly(n)})/({format_poly(d)})"

