"""Finite right modules and bimodules over a :class:`FiniteRing`."""

from functools import cached_property

from . import kernels
from .caps import caps_from_env
from .errors import IllFormed, ModuleAxiomError, OrderCapExceeded
from .rings import bits_of, is_right_ideal, is_two_sided, members


class FiniteModule:
    """Right R-module on ``range(order)``; ``act[x][r]`` is ``xr``."""

    def __init__(self, add, act, zero, ring, name=""):
        self.add = tuple(tuple(row) for row in add)
        self.act = tuple(tuple(row) for row in act)
        self.zero = zero
        self.ring = ring
        self.name = name
        self.order = len(self.add)

    is_bimodule = False

    def __repr__(self):
        return f"{type(self).__name__}({self.name or '?'}, order={self.order})"

    @property
    def elements(self):
        return range(self.order)

    @cached_property
    def neg(self):
        return tuple(row.index(self.zero) for row in self.add)

    def sub(self, x, y):
        return self.add[x][self.neg[y]]

    @cached_property
    def k_add(self):
        return kernels.prepare_table(self.add)

    @cached_property
    def k_act(self):
        # an order-1 module still needs a (1, |R|) table
        return kernels.prepare_table(self.act)

    @cached_property
    def cyclic_size(self):
        return tuple(len(set(row)) for row in self.act)


class FiniteBimodule(FiniteModule):
    """Adds a left action ``lact[r][x] = rx``."""

    is_bimodule = True

    def __init__(self, add, act, lact, zero, ring, name=""):
        super().__init__(add, act, zero, ring, name)
        self.lact = tuple(tuple(row) for row in lact)

    @cached_property
    def k_lact(self):
        return kernels.prepare_table(self.lact)


def validate_module(M):
    R = M.ring
    if len(M.act) != M.order or any(len(row) != R.order for row in M.act):
        raise IllFormed("action table must be order x ringOrder")
    bad = kernels.module_violation(M.k_add, M.zero, M.k_act, R.k_add, R.k_mul, R.one)
    if bad is not None:
        code, *witness = bad
        raise ModuleAxiomError(witness, code)
    if M.is_bimodule:
        bad = kernels.left_module_violation(M.k_add, M.k_lact, R.k_add, R.k_mul, R.one, M.k_act)
        if bad is not None:
            code, *witness = bad
            raise ModuleAxiomError(witness, code)
    return M


def _cap(order, cap):
    cap = caps_from_env().module_order if cap is None else cap
    if order > cap:
        raise OrderCapExceeded("module", order, cap)


def make_regular_module(R, cap=None):
    _cap(R.order, cap)
    return validate_module(FiniteModule(R.add, R.mul, R.zero, R, name=f"{R.name}_R"))


def make_regular_bimodule(R, cap=None):
    _cap(R.order, cap)
    return validate_module(FiniteBimodule(R.add, R.mul, R.mul, R.zero, R, name=f"R({R.name})R"))


def is_submodule(M, bits):
    if not bits >> M.zero & 1:
        return False
    elems = members(bits)
    for x in elems:
        for y in elems:
            if not bits >> M.add[x][y] & 1:
                return False
        if any(not bits >> v & 1 for v in M.act[x]):
            return False
    return True


def make_quotient_module(M, sub, name=None, cap=None):
    """M / sub, cosets indexed in order of their smallest member."""
    if not is_submodule(M, sub):
        raise IllFormed("quotient by a non-submodule")
    sub_elems = members(sub)
    coset_of = [-1] * M.order
    reps = []
    for x in M.elements:
        if coset_of[x] < 0:
            for s in sub_elems:
                coset_of[M.add[x][s]] = len(reps)
            reps.append(x)
    n = len(reps)
    _cap(n, cap)
    add = [[coset_of[M.add[a][b]] for b in reps] for a in reps]
    act = [[coset_of[v] for v in M.act[a]] for a in reps]
    zero = coset_of[M.zero]
    if M.is_bimodule and _sub_is_left_stable(M, sub_elems, sub):
        lact = [[coset_of[M.lact[r][a]] for a in reps] for r in M.ring.elements]
        Q = FiniteBimodule(add, act, lact, zero, M.ring, name or f"{M.name}/{sub:x}")
    else:
        Q = FiniteModule(add, act, zero, M.ring, name or f"{M.name}/{sub:x}")
    Q.representatives = tuple(reps)
    Q.projection = tuple(coset_of)
    return validate_module(Q)


def _sub_is_left_stable(M, elems, sub):
    return all(sub >> M.lact[r][x] & 1 for r in M.ring.elements for x in elems)


def make_cyclic(R, I, cap=None):
    """R/I for a right ideal I."""
    if not is_right_ideal(R, I):
        raise IllFormed(f"{I:x} is not a right ideal of {R.name}")
    Q = make_quotient_module(make_regular_module(R), I, name=f"{R.name}/{I:x}", cap=cap)
    if type(Q) is not FiniteModule:
        Q = FiniteModule(Q.add, Q.act, Q.zero, R, Q.name)
    return Q


def make_direct_sum(M, N, cap=None):
    """M (+) N with ``(x, y)`` at index ``x * |N| + y``."""
    if M.ring is not N.ring:
        raise IllFormed("direct sum of modules over different rings")
    n, m = M.order * N.order, N.order
    _cap(n, cap)
    pairs = [(x, y) for x in M.elements for y in N.elements]
    add = [[M.add[a][c] * m + N.add[b][d] for c, d in pairs] for a, b in pairs]
    act = [[M.act[a][r] * m + N.act[b][r] for r in M.ring.elements] for a, b in pairs]
    zero = M.zero * m + N.zero
    name = f"{M.name}+{N.name}"
    if M.is_bimodule and N.is_bimodule:
        lact = [[M.lact[r][a] * m + N.lact[r][b] for a, b in pairs] for r in M.ring.elements]
        S = FiniteBimodule(add, act, lact, zero, M.ring, name)
    else:
        S = FiniteModule(add, act, zero, M.ring, name)
    return validate_module(S)


def make_ideal_module(R, I, bimodule=False, cap=None):
    """The right ideal I as a submodule of R_R, elements in ascending ring order.

    With ``bimodule=True`` I must be two-sided and the left action is kept.
    """
    if not is_right_ideal(R, I):
        raise IllFormed(f"{I:x} is not a right ideal of {R.name}")
    if bimodule and not is_two_sided(R, I):
        raise IllFormed(f"{I:x} is not a two-sided ideal of {R.name}")
    elems = members(I)
    _cap(len(elems), cap)
    pos = {e: i for i, e in enumerate(elems)}
    add = [[pos[R.add[a][b]] for b in elems] for a in elems]
    act = [[pos[R.mul[a][r]] for r in R.elements] for a in elems]
    name = f"{R.name}.{I:x}"
    if bimodule:
        lact = [[pos[R.mul[r][a]] for a in elems] for r in R.elements]
        M = FiniteBimodule(add, act, lact, pos[R.zero], R, name)
    else:
        M = FiniteModule(add, act, pos[R.zero], R, name)
    M.embedding = tuple(elems)
    return validate_module(M)


def annihilator(M, x):
    """ann(x) = {r : xr = 0} as a right-ideal bitset."""
    z = M.zero
    return bits_of(r for r, v in enumerate(M.act[x]) if v == z)


def zero_module(R):
    return FiniteModule([[0]], [[0] * R.order], 0, R, name="0")
