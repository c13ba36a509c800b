"""Balanced tensor products M (x)_R N of finite modules, and the derivation
d_M (x) 1 + 1 (x) d_N on them.

Two constructions are available:

``zgroup``
    Decompose M and N into cyclic groups, form the Z-tensor
    (+) Z/gcd(a_i, b_j), then divide by the balancing relations.  The
    intermediate group can be large (the tensor cap bounds it).
``presentation``
    Choose R-module generators g_1..g_k of M with relation module L in R^k;
    then M (x) N = N^k / L.N.  Much smaller intermediates for modules with
    few generators.

``method="auto"`` uses ``zgroup`` when its intermediate fits the cap and
falls back to ``presentation`` otherwise.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd, prod

import numpy as np

from . import kernels
from .caps import caps_from_env
from .derivations import ModuleDerivation, module_derivation_violation
from .errors import IllFormed, OrderCapExceeded
from .modules import FiniteModule, validate_module


# -- finite abelian groups ----------------------------------------------------

def _multiple(add, zero, x, k):
    acc = zero
    for _ in range(k):
        acc = add[acc][x]
    return acc


def _element_order(add, zero, x):
    k, acc = 1, x
    while acc != zero:
        acc = add[acc][x]
        k += 1
    return k


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def cyclic_decomposition(add, zero):
    """Basis of a finite abelian group given by its addition table.

    Returns ``(basis, coords)``: ``basis`` is a list of ``(element, order)``
    with the group the internal direct sum of the cyclic subgroups, and
    ``coords[x]`` the coefficient tuple of element ``x``.

    Works prime by prime; inside a p-group it repeatedly takes a coset of
    maximal order modulo the span so far and lifts it to an element of the
    same order, which always exists for a maximal-order choice.
    """
    n = len(add)
    orders = [_element_order(add, zero, x) for x in range(n)]
    basis = []
    for p in _prime_factors(n):
        part = [x for x in range(n) if _is_power_of(orders[x], p)]
        span = {zero}
        while len(span) < len(part):
            best, best_k = None, 0
            for x in part:
                if x in span:
                    continue
                k, acc = 1, x
                while acc not in span:
                    acc = add[acc][x]
                    k += 1
                if k > best_k:
                    best, best_k = x, k
            lift = next(
                y for y in sorted(add[best][h] for h in span) if orders[y] == best_k
            )
            basis.append((lift, best_k))
            new = set()
            acc = zero
            for _ in range(best_k):
                new.update(add[h][acc] for h in span)
                acc = add[acc][lift]
            span = new
    coords = [None] * n
    for coeffs in product(*(range(k) for _, k in basis)):
        acc = zero
        for (g, _), c in zip(basis, coeffs):
            acc = add[acc][_multiple(add, zero, g, c)]
        if coords[acc] is not None:
            raise AssertionError("cyclic decomposition is not direct")
        coords[acc] = coeffs
    if any(c is None for c in coords):
        raise AssertionError("cyclic decomposition does not span")
    return basis, coords


def _is_power_of(k, p):
    while k % p == 0:
        k //= p
    return k == 1


def _subgroup_closure(gens, add_fn, zero):
    """Subgroup generated by ``gens`` in a finite group, as a set."""
    span = {zero}
    for g in gens:
        if g in span:
            continue
        frontier = list(span)
        new = set(span)
        acc = g
        while acc not in span:
            for h in frontier:
                new.add(add_fn(h, acc))
            acc = add_fn(acc, g)
        span = new
    return span


# -- tensor products ------------------------------------------------------------

@dataclass
class TensorProduct:
    """M (x)_R N with its balanced map.

    ``module`` is the right R-module (action from N), ``beta[m][n]`` the
    class of m (x) n, and ``expand(q)`` a list of ``(m, n)`` pairs whose
    simple tensors add up to q.
    """

    left: FiniteModule
    right: FiniteModule
    module: FiniteModule
    beta: np.ndarray
    terms: list
    method: str

    def expand(self, q):
        return self.terms[q]


def _quotient_group(pre_elems, pre_add, sub, zero):
    """Cosets of ``sub`` in an explicit finite group indexed by smallest member."""
    cls = {}
    reps = []
    for x in sorted(pre_elems):
        if x in cls:
            continue
        idx = len(reps)
        reps.append(x)
        for s in sub:
            cls[pre_add(x, s)] = idx
    return cls, reps


def _finish(M, N, pre_elems, pre_add, pre_act, sub, pre_zero, beta_pre, terms_pre, method, cap):
    cls, reps = _quotient_group(pre_elems, pre_add, sub, pre_zero)
    order = len(reps)
    mcap = caps_from_env().module_order if cap is None else cap
    if order > mcap:
        raise OrderCapExceeded("tensor module", order, mcap)
    R = M.ring
    add = [[cls[pre_add(a, b)] for b in reps] for a in reps]
    act = [[cls[pre_act(a, r)] for r in R.elements] for a in reps]
    Q = validate_module(FiniteModule(add, act, cls[pre_zero], R, name=f"{M.name}(x){N.name}"))
    beta = np.array([[cls[beta_pre(m, n)] for n in N.elements] for m in M.elements], dtype=np.intc)
    beta = beta.reshape(M.order, N.order)
    terms = [terms_pre(p) for p in reps]
    return TensorProduct(M, N, Q, beta, terms, method)


def _zgroup_size(M, N):
    a = [k for _, k in cyclic_decomposition(M.add, M.zero)[0]]
    b = [k for _, k in cyclic_decomposition(N.add, N.zero)[0]]
    return prod(gcd(x, y) for x in a for y in b)


def _tensor_zgroup(M, N, cap, tcap):
    R = M.ring
    bm, cm = cyclic_decomposition(M.add, M.zero)
    bn, cn = cyclic_decomposition(N.add, N.zero)
    slots = [(i, j, gcd(a, b)) for i, (_, a) in enumerate(bm) for j, (_, b) in enumerate(bn)]
    slots = [s for s in slots if s[2] > 1]
    size = prod(c for _, _, c in slots)
    if size > tcap:
        raise OrderCapExceeded("Z-tensor intermediate", size, tcap)
    mods = [c for _, _, c in slots]

    def encode(vec):
        idx = 0
        for v, c in zip(vec, mods):
            idx = idx * c + v % c
        return idx

    def decode(idx):
        out = []
        for c in reversed(mods):
            out.append(idx % c)
            idx //= c
        return out[::-1]

    def beta_vec(m, n):
        mu, nu = cm[m], cn[n]
        return [mu[i] * nu[j] for i, j, _ in slots]

    def beta_pre(m, n):
        return encode(beta_vec(m, n))

    def pre_add(a, b):
        return encode([x + y for x, y in zip(decode(a), decode(b))])

    gens_m = [g for g, _ in bm]
    gens_n = [h for h, _ in bn]
    # (g_i (x) h_j) r = g_i (x) (h_j r), extended additively
    act_basis = {
        (s, r): beta_vec(gens_m[i], N.act[gens_n[j]][r])
        for s, (i, j, _) in enumerate(slots) for r in R.elements
    }

    def pre_act(a, r):
        acc = [0] * len(slots)
        for s, coeff in enumerate(decode(a)):
            if coeff:
                acc = [x + coeff * y for x, y in zip(acc, act_basis[(s, r)])]
        return encode(acc)

    relations = []
    for g in gens_m:
        for h in gens_n:
            for r in R.elements:
                u = beta_vec(M.act[g][r], h)
                v = beta_vec(g, N.lact[r][h])
                relations.append(encode([x - y for x, y in zip(u, v)]))
    sub = _subgroup_closure(relations, pre_add, 0)

    def terms_pre(p):
        out = []
        for s, coeff in enumerate(decode(p)):
            i, j, _ = slots[s]
            out.extend([(gens_m[i], gens_n[j])] * coeff)
        return out

    return _finish(M, N, range(size), pre_add, pre_act, sub, 0, beta_pre, terms_pre, "zgroup", cap)


def module_generators(M):
    """Greedy R-module generating set: largest cyclic submodule first."""
    span = {M.zero}
    gens = []
    while len(span) < M.order:
        x = max((x for x in M.elements if x not in span), key=lambda x: (M.cyclic_size[x], -x))
        gens.append(x)
        # span + xR is again a submodule
        span = _subgroup_closure(sorted(span) + list(M.act[x]), lambda a, b: M.add[a][b], M.zero)
    return gens


def _tensor_presentation(M, N, cap, tcap):
    R = M.ring
    gens = module_generators(M)
    k = len(gens)
    if R.order ** k > tcap or N.order ** k > tcap:
        raise OrderCapExceeded("presentation intermediate", max(R.order, N.order) ** k, tcap)
    nn = N.order

    def encode(vec):
        idx = 0
        for v in vec:
            idx = idx * nn + v
        return idx

    def decode(idx):
        out = []
        for _ in range(k):
            out.append(idx % nn)
            idx //= nn
        return out[::-1]

    def pre_add(a, b):
        return encode([N.add[x][y] for x, y in zip(decode(a), decode(b))])

    def pre_act(a, r):
        return encode([N.act[x][r] for x in decode(a)])

    rep = [None] * M.order
    relations = []
    for coeffs in product(R.elements, repeat=k):
        acc = M.zero
        for g, c in zip(gens, coeffs):
            acc = M.add[acc][M.act[g][c]]
        if acc == M.zero:
            relations.append(coeffs)
        if rep[acc] is None:
            rep[acc] = coeffs
    sub = _subgroup_closure(
        [encode([N.lact[c][n] for c in rel]) for rel in relations for n in N.elements],
        pre_add,
        encode([N.zero] * k),
    )

    def beta_pre(m, n):
        return encode([N.lact[c][n] for c in rep[m]])

    def terms_pre(p):
        return [(g, n) for g, n in zip(gens, decode(p))]

    return _finish(M, N, range(nn ** k), pre_add, pre_act, sub, encode([N.zero] * k),
                   beta_pre, terms_pre, "presentation", cap)


def tensor_over_ring(M, N, method="auto", cap=None, tensor_cap=None):
    """M (x)_R N for a right module M and a bimodule N over the same ring."""
    if M.ring is not N.ring:
        raise IllFormed("tensor product of modules over different rings")
    if not N.is_bimodule:
        raise IllFormed("the right factor must be a bimodule")
    tcap = caps_from_env().tensor_order if tensor_cap is None else tensor_cap
    if method == "auto":
        method = "zgroup" if _zgroup_size(M, N) <= tcap else "presentation"
    if method == "zgroup":
        return _tensor_zgroup(M, N, cap, tcap)
    if method == "presentation":
        return _tensor_presentation(M, N, cap, tcap)
    raise IllFormed(f"unknown tensor method {method!r}")


def tensor_derivation(tp, d_M, d_N):
    """d = d_M (x) 1 + 1 (x) d_N on ``tp.module``.

    Both maps must be derivations over the same ring derivation.  Raises
    :class:`IllFormed` when they differ or when d does not respect the
    balancing relations (which happens if d_N is not also a left
    delta-derivation of the bimodule).
    """
    if d_M.delta != d_N.delta:
        raise IllFormed("d_M and d_N are derivations over different ring derivations")
    Q = tp.module
    beta = tp.beta
    dM, dN = d_M.table, d_N.table

    def value(pairs):
        acc = Q.zero
        for m, n in pairs:
            acc = Q.add[acc][Q.add[beta[dM[m], n]][beta[m, dN[n]]]]
        return acc

    table = tuple(int(value(tp.expand(q))) for q in Q.elements)
    # well-definedness: the formula on every simple tensor must match the table
    qadd = np.asarray(Q.add, dtype=np.intc)
    dtab = np.asarray(table, dtype=np.intc)
    lhs = dtab[beta]
    rhs = qadd[beta[np.asarray(dM)], beta[:, np.asarray(dN)]]
    if not np.array_equal(lhs, rhs):
        m, n = map(int, np.argwhere(lhs != rhs)[0])
        raise IllFormed(f"tensor derivation is not well defined at simple tensor ({m}, {n})")
    return ModuleDerivation(table, d_M.delta, Q)


def simple_tensor_violation(tp, d):
    """Check d against the delta-derivation law on ``tp.module``.

    Additivity is checked on all of the module, the Leibniz rule on every
    simple tensor m (x) n and every r.  Returns None, ``("additive", q1, q2)``
    or ``("leibniz", m, n, r)``.
    """
    Q = tp.module
    bad = module_derivation_violation(Q, d.delta.table, d.table)
    if bad is not None and bad[0] == "additive":
        return bad
    act = np.asarray(Q.act, dtype=np.intc).reshape(Q.order, -1)
    qadd = np.asarray(Q.add, dtype=np.intc)
    t = np.asarray(d.table, dtype=np.intc)
    delta = np.asarray(d.delta.table, dtype=np.intc)
    lhs = t[act]
    rhs = qadd[act[t], act[:, delta]]
    broken = (lhs != rhs)[tp.beta]
    if broken.any():
        m, n, r = map(int, np.argwhere(broken)[0])
        return ("leibniz", m, n, r)
    return None
