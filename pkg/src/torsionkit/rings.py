"""Finite rings given by Cayley tables, and their right-ideal lattices.

Right ideals are plain ``int`` bitsets: bit ``i`` set means element ``i`` is a
member.  Every list of ideals returned here is in canonical order, sorted
by ``(popcount, value)``.
"""

from functools import cached_property
from itertools import product

from . import kernels
from .caps import caps_from_env
from .errors import (
    IllFormed,
    NoUnit,
    NotAGroup,
    NotAssociative,
    NotDistributive,
    OrderCapExceeded,
)

_VIOLATION_TYPES = {
    "add-zero": NotAGroup,
    "add-inverse": NotAGroup,
    "add-comm": NotAGroup,
    "add-assoc": NotAGroup,
    "mul-assoc": NotAssociative,
    "left-distrib": NotDistributive,
    "right-distrib": NotDistributive,
    "unit": NoUnit,
}


def popcount(bits):
    return bin(bits).count("1")


def members(bits):
    """Element indices of a bitset, ascending."""
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def bits_of(elements):
    b = 0
    for e in elements:
        b |= 1 << e
    return b


def ideal_key(bits):
    return (popcount(bits), bits)


class FiniteRing:
    """An associative unital ring on ``range(order)``.

    Build instances with :func:`validate_ring` or one of the ``make_*``
    constructors; the bare constructor performs no axiom checks.
    """

    def __init__(self, add, mul, zero, one, name=""):
        self.add = tuple(tuple(row) for row in add)
        self.mul = tuple(tuple(row) for row in mul)
        self.zero = zero
        self.one = one
        self.name = name
        self.order = len(self.add)

    def __repr__(self):
        return f"FiniteRing({self.name or '?'}, order={self.order})"

    @property
    def elements(self):
        return range(self.order)

    @cached_property
    def full(self):
        return (1 << self.order) - 1

    @cached_property
    def zero_bit(self):
        return 1 << self.zero

    @cached_property
    def neg(self):
        return tuple(row.index(self.zero) for row in self.add)

    def sub(self, a, b):
        return self.add[a][self.neg[b]]

    @cached_property
    def k_add(self):
        return kernels.prepare_table(self.add)

    @cached_property
    def k_mul(self):
        return kernels.prepare_table(self.mul)

    @cached_property
    def cyclic_bits(self):
        """``cyclic_bits[a]`` is the right ideal aR."""
        return tuple(bits_of(self.mul[a]) for a in self.elements)

    @cached_property
    def nonzero_products(self):
        """``nonzero_products[s]`` is the set of t with st != 0."""
        z = self.zero
        return tuple(
            bits_of(t for t in self.elements if self.mul[s][t] != z) for s in self.elements
        )

    @cached_property
    def is_commutative(self):
        m = self.mul
        return all(m[a][b] == m[b][a] for a in self.elements for b in self.elements)

    @cached_property
    def center(self):
        m = self.mul
        return tuple(a for a in self.elements if all(m[a][b] == m[b][a] for b in self.elements))

    def additive_order(self, a):
        k, x = 1, a
        while x != self.zero:
            x = self.add[x][a]
            k += 1
        return k


def _check_square(table, n, what):
    if len(table) != n or any(len(row) != n for row in table):
        raise IllFormed(f"{what} table must be {n}x{n}")
    for row in table:
        for v in row:
            if not (isinstance(v, int) and 0 <= v < n):
                raise IllFormed(f"{what} table entry {v!r} out of range 0..{n - 1}")


def validate_ring(add, mul, zero=None, one=None, name="", cap=None):
    """Check every ring axiom and return a :class:`FiniteRing`.

    ``zero`` and ``one`` are detected when omitted.  The first violation is
    raised as a :class:`~torsionkit.errors.RingAxiomError` subclass whose
    ``witness`` holds the offending elements.
    """
    n = len(add)
    if n == 0:
        raise IllFormed("a ring needs at least one element")
    cap = caps_from_env().ring_order if cap is None else cap
    if n > cap:
        raise OrderCapExceeded("ring", n, cap)
    _check_square(add, n, "addition")
    _check_square(mul, n, "multiplication")
    if zero is None:
        zero = next((z for z in range(n) if all(add[z][a] == a == add[a][z] for a in range(n))), None)
        if zero is None:
            raise NotAGroup((), "no additive identity")
    if one is None:
        one = next((u for u in range(n) if all(mul[u][a] == a == mul[a][u] for a in range(n))), None)
        if one is None:
            raise NoUnit((), "no multiplicative identity")
    ring = FiniteRing(add, mul, zero, one, name)
    bad = kernels.ring_violation(ring.k_add, ring.k_mul, zero, one)
    if bad is not None:
        code, *witness = bad
        raise _VIOLATION_TYPES[code](witness, code)
    return ring


def make_zmod(n, cap=None):
    """Z/n with element ``i`` the residue class of ``i``."""
    if n < 1:
        raise IllFormed("make_zmod needs n >= 1")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return validate_ring(add, mul, 0, 1 % n, name=f"Z/{n}", cap=cap)


def make_product(R, S, cap=None):
    """R x S; element ``(i, j)`` has index ``i * |S| + j``."""
    cap = caps_from_env().ring_order if cap is None else cap
    n = R.order * S.order
    if n > cap:
        raise OrderCapExceeded("ring", n, cap)
    m = S.order
    add = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for a, b in product(range(R.order), range(m)):
        for c, d in product(range(R.order), range(m)):
            add[a * m + b][c * m + d] = R.add[a][c] * m + S.add[b][d]
            mul[a * m + b][c * m + d] = R.mul[a][c] * m + S.mul[b][d]
    return validate_ring(add, mul, R.zero * m + S.zero, R.one * m + S.one,
                         name=f"{R.name}x{S.name}", cap=cap)


def _encode(entries, base):
    idx = 0
    for e in entries:
        idx = idx * base + e
    return idx


def _matrix_ring(R, k, positions, name, cap):
    cap = caps_from_env().ring_order if cap is None else cap
    if k < 1:
        raise IllFormed("matrix size must be >= 1")
    base = R.order
    n = base ** len(positions)
    if n > cap:
        raise OrderCapExceeded("ring", n, cap)
    slot = {p: i for i, p in enumerate(positions)}
    elems = list(product(range(base), repeat=len(positions)))

    def entry(e, i, j):
        s = slot.get((i, j))
        return R.zero if s is None else e[s]

    def times(x, y):
        out = []
        for i, j in positions:
            acc = R.zero
            for l in range(k):
                acc = R.add[acc][R.mul[entry(x, i, l)][entry(y, l, j)]]
            out.append(acc)
        return out

    add = [[_encode([R.add[a][b] for a, b in zip(x, y)], base) for y in elems] for x in elems]
    mul = [[_encode(times(x, y), base) for y in elems] for x in elems]
    zero = _encode([R.zero] * len(positions), base)
    one = _encode([R.one if i == j else R.zero for i, j in positions], base)
    return validate_ring(add, mul, zero, one, name=name, cap=cap)


def make_matrix(R, k, cap=None):
    """M_k(R); entries row-major, index lexicographic with the (1,1) entry most significant."""
    positions = [(i, j) for i in range(k) for j in range(k)]
    return _matrix_ring(R, k, positions, f"M{k}({R.name})", cap)


def make_triangular(R, k, cap=None):
    """Upper-triangular T_k(R); entries (i<=j) row-major, lexicographic index."""
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    return _matrix_ring(R, k, positions, f"T{k}({R.name})", cap)


def matrix_index(R, entries):
    """Index of the element whose stored entries (in constructor order) are ``entries``."""
    return _encode(entries, R.order if isinstance(R, FiniteRing) else R)


# -- element classification -------------------------------------------------

def regular_elements(R):
    """Elements that are neither left nor right zero-divisors."""
    z = R.zero
    out = []
    for t in R.elements:
        if any(R.mul[r][t] == z for r in R.elements if r != z):
            continue
        if any(R.mul[t][r] == z for r in R.elements if r != z):
            continue
        out.append(t)
    return frozenset(out)


def units(R):
    m = R.mul
    return frozenset(a for a in R.elements
                     if any(m[a][b] == R.one and m[b][a] == R.one for b in R.elements))


def is_right_ore(R):
    """Right Ore condition on the regular elements T.

    Returns ``(True, None)`` or ``(False, (r, t))`` for the first pair with
    no t' in T, r' in R satisfying r t' = t r'.
    """
    T = sorted(regular_elements(R))
    for r in R.elements:
        for t in T:
            right = {R.mul[t][s] for s in R.elements}
            if not any(R.mul[r][tp] in right for tp in T):
                return False, (r, t)
    return True, None


# -- right ideals -------------------------------------------------------------

def is_right_ideal(R, bits):
    if not bits >> R.zero & 1:
        return False
    elems = members(bits)
    for a in elems:
        for b in elems:
            if not bits >> R.add[a][b] & 1:
                return False
        for r in R.elements:
            if not bits >> R.mul[a][r] & 1:
                return False
    return True


def is_two_sided(R, bits):
    return is_right_ideal(R, bits) and all(
        bits >> R.mul[r][a] & 1 for a in members(bits) for r in R.elements
    )


def ideal_sum(R, I, J):
    out = 0
    js = members(J)
    for a in members(I):
        row = R.add[a]
        for b in js:
            out |= 1 << row[b]
    return out


def enumerate_right_ideals(R, generator_order=None):
    """Every right ideal of R in canonical order.

    The lattice is the closure of the cyclic ideals aR under pairwise sums,
    plus the zero ideal.  ``generator_order`` only changes the order in
    which cyclic generators are fed in; the result is the same.
    """
    order = R.elements if generator_order is None else generator_order
    found = []
    seen = set()
    for a in order:
        c = R.cyclic_bits[a]
        if c not in seen:
            seen.add(c)
            found.append(c)
    i = 0
    while i < len(found):
        I = found[i]
        for j in range(i):
            S = ideal_sum(R, I, found[j])
            if S not in seen:
                seen.add(S)
                found.append(S)
        i += 1
    seen.add(R.zero_bit)
    return sorted(seen, key=ideal_key)


def quotient_ideal(R, I, r):
    """(I : r) = {s : rs in I}."""
    row = R.mul[r]
    out = 0
    for s in R.elements:
        if I >> row[s] & 1:
            out |= 1 << s
    return out


def is_essential(R, I):
    """I meets every nonzero right ideal; testing the cyclic ones suffices."""
    mask = ~R.zero_bit
    for a in R.elements:
        if a != R.zero and not (I & R.cyclic_bits[a] & mask):
            return False
    return True


def is_dense(R, I):
    """For all r and all s != 0 there is t with st != 0 and rt in I."""
    nz = R.nonzero_products
    for r in R.elements:
        q = quotient_ideal(R, I, r)
        for s in R.elements:
            if s != R.zero and not (q & nz[s]):
                return False
    return True


def ideal_hex(bits):
    return format(bits, "x")
