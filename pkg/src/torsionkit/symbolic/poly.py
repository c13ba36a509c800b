"""Univariate polynomials over Q with exact arithmetic.

Coefficients are :class:`fractions.Fraction`, constant term first, with no
trailing zeros (the zero polynomial has no coefficients).  GCDs run over Z
on primitive parts, with a modular shortcut for coprime inputs.
"""

from fractions import Fraction
from math import gcd, lcm

from ..kernels import gcd_degree_mod_p

MAX_DEGREE = 64

# 2**31 - 1; only used to prove coprimality, never to build a result
_PRIME = 2147483647


class Poly:
    """Stored as integer numerators over one positive common denominator.

    ``coeffs`` gives the Fraction view; arithmetic stays in integers.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        den = lcm(*(c.denominator for c in cs)) if cs else 1
        self._set([int(c * den) for c in cs], den)

    def _set(self, ints, den):
        while ints and ints[-1] == 0:
            ints.pop()
        g = gcd(den, *ints)
        if g != 1:
            ints = [v // g for v in ints]
            den //= g
        self._n = tuple(ints)
        self._d = den if ints else 1

    @classmethod
    def _raw(cls, ints, den=1):
        p = cls.__new__(cls)
        p._set(list(ints), den)
        return p

    @classmethod
    def const(cls, c):
        if isinstance(c, int):
            return cls._raw((c,))
        return cls((c,))

    @classmethod
    def x(cls):
        return cls._raw((0, 1))

    @property
    def coeffs(self):
        return tuple(Fraction(v, self._d) for v in self._n)

    @property
    def degree(self):
        return len(self._n) - 1

    def is_zero(self):
        return not self._n

    @property
    def lc(self):
        return Fraction(self._n[-1], self._d) if self._n else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self._n == other._n and self._d == other._d

    def __hash__(self):
        return hash((self._n, self._d))

    def __repr__(self):
        return f"Poly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)

    def __neg__(self):
        return Poly._raw([-v for v in self._n], self._d)

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        d = lcm(self._d, other._d)
        sa, sb = d // self._d, d // other._d
        a = [v * sa for v in self._n]
        b = [v * sb for v in other._n]
        if len(a) < len(b):
            a, b = b, a
        for i, v in enumerate(b):
            a[i] += v
        return Poly._raw(a, d)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self._n, other._n
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly._raw(out, self._d * other._d)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c):
        """Multiply by the rational constant c."""
        c = Fraction(c)
        return Poly._raw([v * c.numerator for v in self._n], self._d * c.denominator)

    def __divmod__(self, other):
        other = _lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        # divide integer numerators, fix the denominators at the end
        rem = [Fraction(v) for v in self._n]
        b = other._n
        db, lb = len(b) - 1, b[-1]
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db] / lb
            quot[k] = c
            if c:
                for j, y in enumerate(b):
                    rem[k + j] -= c * y
        q = Poly(quot).scale(Fraction(other._d, self._d))
        r = Poly(rem[:db] if db > 0 else ()).scale(Fraction(1, self._d))
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return Poly._raw(self._n, self._n[-1]) if self._n[-1] > 0 else Poly._raw([-v for v in self._n], -self._n[-1])

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc


def _lift(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly.const(v)
    return NotImplemented


def poly_derive(p):
    """Formal derivative d/dx."""
    return Poly._raw([i * c for i, c in enumerate(p._n) if i], p._d)


def format_poly(p, var="x"):
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- gcd ---------------------------------------------------------------------

def integer_primitive(p):
    """(content-free integer coefficient list, positive lc) scaled from p."""
    ints = list(p._n)
    g = gcd(*ints)
    if g != 1:
        ints = [v // g for v in ints]
    if ints[-1] < 0:
        ints = [-v for v in ints]
    return ints


def _prem(a, b):
    """Pseudo-remainder of integer coefficient lists (low first)."""
    a = list(a)
    lb, db = b[-1], len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [v * lb for v in a]
        for j, y in enumerate(b):
            a[shift + j] -= c * y
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _primitive(ints):
    g = gcd(*ints)
    return ints if g == 1 else [v // g for v in ints]


def primitive_gcd(a, b):
    """gcd of two nonzero polynomials as a primitive integer list, lc > 0."""
    A, B = integer_primitive(a), integer_primitive(b)
    if len(A) < len(B):
        A, B = B, A
    if len(B) == 1:
        return [1]
    if A[-1] % _PRIME and B[-1] % _PRIME:
        k = gcd_degree_mod_p(A, B, _PRIME)
        if k == 0:
            return [1]
        # the true gcd has degree <= k; when k = deg B, B itself is the
        # only candidate worth trying before the full remainder sequence
        if k == len(B) - 1 and _divides(B, A):
            return B
    while B:
        r = _prem(A, B)
        A, B = B, (_primitive(r) if r else [])
    return A if A[-1] > 0 else [-v for v in A]


def _divides(g, a):
    rem = list(a)
    db, lb = len(g) - 1, g[-1]
    for k in range(len(rem) - db - 1, -1, -1):
        c, r = divmod(rem[k + db], lb)
        if r:
            return False
        if c:
            for j, y in enumerate(g):
                rem[k + j] -= c * y
    return not any(rem)


def exact_quotient(p, g):
    """p / g where the primitive integer list g is known to divide p."""
    rem = list(p._n)
    db, lb = len(g) - 1, g[-1]
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - db - 1, -1, -1):
        c, r = divmod(rem[k + db], lb)
        if r:
            raise ArithmeticError("divisor does not divide exactly")
        quot[k] = c
        if c:
            for j, y in enumerate(g):
                rem[k + j] -= c * y
    if any(rem):
        raise ArithmeticError("divisor does not divide exactly")
    return Poly._raw(quot, p._d)


def poly_gcd(a, b):
    """Monic gcd over Q (zero if both are zero)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    return Poly._raw(primitive_gcd(a, b)).monic()
