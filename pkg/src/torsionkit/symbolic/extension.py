"""Extending d/dx from Q[x] to Q(x), and to free modules over them.

Every q = a/b in Q(x) satisfies q*r in Q[x] and r*(1/r) = 1 for r = b,
so the explicit extension formula applies with one term:

    delta_F(q) = delta(q r) (1/r) - q delta(r) (1/r).

:func:`extend_with_data` evaluates the formula for any admissible data
(r_j, q_j); :func:`extend_derivation` is the one-term case.
"""

import random
from fractions import Fraction

from ..errors import InvariantViolation, RankMismatch
from .poly import Poly, poly_derive
from .ratfunc import RatFunc


def extend_with_data(q, data, delta=poly_derive):
    """sum_j delta(q r_j) q_j - q delta(r_j) q_j.

    ``data`` is a list of ``(r_j, q_j)`` with r_j polynomials, q_j rational
    functions, q r_j polynomial for every j and sum r_j q_j = 1; both
    conditions are checked.
    """
    total = RatFunc(0)
    check = RatFunc(0)
    for r, qj in data:
        qr = q * RatFunc(r)
        if not qr.is_poly():
            raise ValueError(f"q*r = {qr} is not a polynomial")
        check = check + RatFunc(r) * qj
        qr_poly = qr.num.scale(1 / qr.den.lc)
        total = total + RatFunc(delta(qr_poly)) * qj - q * RatFunc(delta(r)) * qj
    if check != RatFunc(1):
        raise ValueError("data does not satisfy sum r_j q_j = 1")
    return total


def extend_derivation(q, delta=poly_derive):
    """The derivation of Q(x) extending ``delta`` on Q[x], at q."""
    return extend_with_data(q, [(q.den, RatFunc(1, q.den))], delta)


def extend_from_representation(a, b, delta=poly_derive):
    """Same as :func:`extend_derivation` but using the (possibly unreduced) pair a/b."""
    q = RatFunc(a, b)
    return extend_with_data(q, [(b, RatFunc(1, b))], delta)


def quotient_rule(q, delta=poly_derive):
    """(a'b - ab')/b^2 computed on polynomials, then reduced once."""
    a, b = q.num, q.den
    return RatFunc(delta(a) * b - a * delta(b), b * b)


def uniqueness_probe(q, delta=poly_derive):
    """Recompute the extension from what any extension is forced to be.

    From 0 = delta(b b^-1) = delta(b) b^-1 + b delta(b^-1) we get
    delta(b^-1) = -b^-1 delta(b) b^-1, hence
    delta(q) = delta(a) b^-1 + a delta(b^-1).
    """
    a, b = RatFunc(q.num), RatFunc(q.den)
    binv = b.inverse()
    dbinv = -(binv * RatFunc(delta(q.den)) * binv)
    forced = RatFunc(delta(q.num)) * binv + a * dbinv
    via_formula = extend_derivation(q, delta)
    if forced != via_formula:
        raise InvariantViolation(f"forced value {forced} differs from extension {via_formula} at {q}")
    return forced


# -- random sampling -------------------------------------------------------------

def random_poly(rng, max_degree=8, bound=100, nonzero=False):
    while True:
        deg = rng.randint(0, max_degree)
        p = Poly(rng.randint(-bound, bound) for _ in range(deg + 1))
        if not (nonzero and p.is_zero()):
            return p


def random_ratfunc(rng, max_degree=8, bound=100):
    return RatFunc(random_poly(rng, max_degree, bound), random_poly(rng, max_degree, bound, nonzero=True))


def symbolic_suite(cases=1000, seed=0, max_degree=8, bound=100, module_cases=200):
    """Seeded run of every Q(x) check; returns a JSON-ready dict."""
    rng = random.Random(seed)
    out = {"seed": seed, "cases": cases}
    agree = leibniz = additive = unique = rep_indep = 0
    failures = []
    for i in range(cases):
        q = random_ratfunc(rng, max_degree, bound)
        p = random_ratfunc(rng, max_degree, bound)
        dq = extend_derivation(q)
        if dq == quotient_rule(q):
            agree += 1
        else:
            failures.append(["quotient-rule", i, str(q)])
        dp = extend_derivation(p)
        if extend_derivation(q * p) == dq * p + q * dp:
            leibniz += 1
        else:
            failures.append(["leibniz", i, str(q), str(p)])
        if extend_derivation(q + p) == dq + dp:
            additive += 1
        else:
            failures.append(["additive", i, str(q), str(p)])
        try:
            uniqueness_probe(q)
            unique += 1
        except InvariantViolation:
            failures.append(["uniqueness", i, str(q)])
        c = random_poly(rng, 3, 20, nonzero=True)
        if extend_from_representation(q.num * c, q.den * c) == dq:
            rep_indep += 1
        else:
            failures.append(["representation", i, str(q), str(c)])
    out.update(quotient_rule_agreements=agree, leibniz=leibniz, additivity=additive,
               uniqueness=unique, representation_independence=rep_indep)
    commute = 0
    for i in range(module_cases):
        k = rng.randint(1, 3)
        A = [[random_poly(rng, 2, 10) for _ in range(k)] for _ in range(k)]
        v = [random_poly(rng, 5, 100) for _ in range(k)]
        if check_commutation(v, A):
            commute += 1
        else:
            failures.append(["phi-commutation", i])
    out["module_cases"] = module_cases
    out["phi_commutation"] = commute
    out["failures"] = failures[:20]
    out["pass"] = not failures
    return out


# -- free modules ------------------------------------------------------------------

def _check_rank(v, A):
    k = len(v)
    if k < 1 or len(A) != k or any(len(row) != k for row in A):
        raise RankMismatch(f"vector of rank {k} against a {len(A)}-row matrix")


def module_derivation_poly(m, A, delta=poly_derive):
    """d_M(m) = m' + A m on Q[x]^k."""
    _check_rank(m, A)
    return [delta(m[i]) + sum((A[i][j] * m[j] for j in range(len(m))), Poly()) for i in range(len(m))]


def extend_module_derivation(v, A, delta=poly_derive):
    """d_{M_F}(v) for v in Q(x)^k, via the tensor description.

    v is written as sum_i e_i (x) v_i with the standard basis e_i, and

        d(v) = sum_i d_M(e_i) v_i + e_i delta_F(v_i).

    Here d_M(e_i) = A e_i, the i-th column of A.
    """
    _check_rank(v, A)
    k = len(v)
    v = [q if isinstance(q, RatFunc) else RatFunc(q) for q in v]
    out = [RatFunc(0) for _ in range(k)]
    for i in range(k):
        basis = [Poly.const(1) if j == i else Poly() for j in range(k)]
        dm = module_derivation_poly(basis, A, delta)
        dq = extend_derivation(v[i], delta)
        for j in range(k):
            out[j] = out[j] + RatFunc(dm[j]) * v[i]
        out[i] = out[i] + dq
    return out


def check_commutation(m, A, delta=poly_derive):
    """d_{M_F}(phi(m)) == phi(d_M(m)) for a polynomial vector m."""
    lhs = extend_module_derivation([RatFunc(p) for p in m], A, delta)
    rhs = [RatFunc(p) for p in module_derivation_poly(m, A, delta)]
    return lhs == rhs


def scalar(v):
    return RatFunc(Poly.const(Fraction(v)))
