"""Ring derivations and module delta-derivations, found by exhaustive search.

The search assigns a value to one unassigned element at a time and lets
the kernel close the partial map under every additivity and Leibniz
constraint it can reach.  A branch dies at the first conflict, so a
completed assignment is a derivation and every derivation is reached.
"""

from dataclasses import dataclass, field

from . import kernels
from .caps import caps_from_env
from .errors import IllFormed, SearchBudgetExceeded


@dataclass(frozen=True)
class RingDerivation:
    table: tuple
    ring: object = field(compare=False, repr=False)

    def __call__(self, r):
        return self.table[r]

    @property
    def is_zero(self):
        return all(v == self.ring.zero for v in self.table)

    def __add__(self, other):
        add = self.ring.add
        return RingDerivation(tuple(add[a][b] for a, b in zip(self.table, other.table)), self.ring)


@dataclass(frozen=True)
class ModuleDerivation:
    table: tuple
    delta: RingDerivation
    module: object = field(compare=False, repr=False)

    def __call__(self, x):
        return self.table[x]


def ring_derivation_violation(R, table):
    """First failure of additivity or Leibniz for a map R -> R, else None."""
    t = kernels.prepare_vec(table)
    return kernels.derivation_violation(R.k_add, R.k_mul, t, t)


def module_derivation_violation(M, delta_table, table):
    return kernels.derivation_violation(
        M.k_add, M.k_act, kernels.prepare_vec(delta_table), kernels.prepare_vec(table)
    )


def left_derivation_violation(M, delta_table, table):
    """Bimodule side: d(rx) = delta(r)x + r d(x)."""
    return kernels.left_derivation_violation(
        M.k_add, M.k_lact, kernels.prepare_vec(delta_table), kernels.prepare_vec(table)
    )


def _search(n, close, pick, budget):
    found = []
    nodes = 0
    stack = [kernels.prepare_vec([-1] * n)]
    while stack:
        vals = stack.pop()
        free = kernels.unassigned(vals)
        if not free:
            found.append(kernels.to_tuple(vals))
            continue
        x = pick(free)
        for v in range(n):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            nxt = close(vals, x, v)
            if nxt is not None:
                stack.append(nxt)
    found.sort()
    return found


def enumerate_ring_derivations(R, budget=None):
    """All derivations of R, sorted by table."""
    budget = caps_from_env().search_budget if budget is None else budget
    add, mul = R.k_add, R.k_mul
    tables = _search(
        R.order,
        lambda vals, x, v: kernels.close_ring(add, mul, vals, x, v),
        lambda free: free[0],
        budget,
    )
    out = [RingDerivation(t, R) for t in tables]
    for d in out:
        if ring_derivation_violation(R, d.table) is not None:
            raise AssertionError(f"search produced a non-derivation on {R.name}")
    return out


def enumerate_module_derivations(M, delta, budget=None):
    """All delta-derivations of the right module M, sorted by table.

    The next element to assign is the unassigned one with the largest
    cyclic submodule, which keeps the number of search levels small.
    """
    if delta.ring is not M.ring:
        raise IllFormed("derivation and module are over different rings")
    budget = caps_from_env().search_budget if budget is None else budget
    madd, act = M.k_add, M.k_act
    dvec = kernels.prepare_vec(delta.table)
    size = M.cyclic_size
    tables = _search(
        M.order,
        lambda vals, x, v: kernels.close_module(madd, act, dvec, vals, x, v),
        lambda free: max(free, key=lambda x: (size[x], -x)),
        budget,
    )
    return [ModuleDerivation(t, delta, M) for t in tables]


def inner_derivation(R, a):
    """b -> ab - ba."""
    return RingDerivation(tuple(R.sub(R.mul[a][b], R.mul[b][a]) for b in R.elements), R)


def inner_bimodule_derivation(M, a):
    """m -> am - ma on a bimodule, a delta_a-derivation."""
    if not M.is_bimodule:
        raise IllFormed("inner derivations need a bimodule")
    R = M.ring
    table = tuple(M.sub(M.lact[a][m], M.act[m][a]) for m in M.elements)
    return ModuleDerivation(table, inner_derivation(R, a), M)


def zero_derivation(R):
    return RingDerivation((R.zero,) * R.order, R)


def is_closed_under_sums(derivations):
    """Pointwise sums of listed derivations stay in the list."""
    tables = {d.table for d in derivations}
    return all((d1 + d2).table in tables for d1 in derivations for d2 in derivations)
