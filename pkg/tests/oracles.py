"""Brute-force reference computations, written against the definitions only.

Nothing here imports torsionkit.  Rings are (add, mul, zero, one) tables
over 0..n-1; the matrix rings use the documented element encoding (entries
row-major, first entry the most significant bit).
"""

from itertools import combinations, product


# -- rings -------------------------------------------------------------------------

def zmod(n):
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return add, mul, 0, 1 % n


def f2_matrix_ring(k, triangular=False):
    positions = [(i, j) for i in range(k) for j in range(k) if not triangular or i <= j]
    m = len(positions)

    def decode(x):
        bits = [(x >> (m - 1 - t)) & 1 for t in range(m)]
        mat = [[0] * k for _ in range(k)]
        for (i, j), b in zip(positions, bits):
            mat[i][j] = b
        return mat

    def encode(mat):
        x = 0
        for i, j in positions:
            x = 2 * x + mat[i][j]
        return x

    n = 1 << m
    mats = [decode(x) for x in range(n)]
    add = [[a ^ b for b in range(n)] for a in range(n)]
    mul = [[encode([[sum(mats[a][i][t] * mats[b][t][j] for t in range(k)) % 2 for j in range(k)]
                     for i in range(k)]) for b in range(n)] for a in range(n)]
    one = encode([[int(i == j) for j in range(k)] for i in range(k)])
    return add, mul, 0, one


def f2xf2():
    # (a, b) -> 2a + b
    add = [[a ^ b for b in range(4)] for a in range(4)]
    mul = [[a & b for b in range(4)] for a in range(4)]
    return add, mul, 0, 3


ORACLE_RINGS = {
    "zmod2": lambda: zmod(2),
    "zmod3": lambda: zmod(3),
    "zmod4": lambda: zmod(4),
    "zmod6": lambda: zmod(6),
    "zmod8": lambda: zmod(8),
    "f2xf2": f2xf2,
    "t2f2": lambda: f2_matrix_ring(2, triangular=True),
    "m2f2": lambda: f2_matrix_ring(2),
}


# -- ideals, by scanning every subset --------------------------------------------------

def right_ideals(ring):
    add, mul, zero, _ = ring
    n = len(add)
    out = []
    for mask in range(1 << n):
        S = {x for x in range(n) if mask >> x & 1}
        if zero not in S:
            continue
        if any(add[a][b] not in S for a in S for b in S):
            continue
        # closed under addition in a finite group implies negatives
        if any(mul[a][r] not in S for a in S for r in range(n)):
            continue
        out.append(frozenset(S))
    return out


def essential(ring, I):
    """I meets every nonzero right ideal nontrivially."""
    zero = ring[2]
    return all(I & J != {zero} for J in right_ideals(ring) if J != {zero})


def dense(ring, I):
    add, mul, zero, _ = ring
    n = len(add)
    return all(
        any(mul[s][t] != zero and mul[r][t] in I for t in range(n))
        for r in range(n) for s in range(n) if s != zero
    )


def colon(ring, I, r):
    mul = ring[1]
    return frozenset(t for t in range(len(mul)) if mul[r][t] in I)


def goldie_filter(ring):
    n = len(ring[0])
    ideals = right_ideals(ring)
    ess = {J for J in ideals if essential(ring, J)}
    out = []
    for I in ideals:
        S = frozenset(r for r in range(n) if colon(ring, I, r) in ess)
        if S in ess:
            out.append(I)
    return out


def is_gabriel(ring, family):
    n = len(ring[0])
    ideals = right_ideals(ring)
    fam = set(family)
    if not fam:
        return False
    for I in fam:
        for J in ideals:
            if I <= J and J not in fam:
                return False
        for r in range(n):
            if colon(ring, I, r) not in fam:
                return False
    for J in ideals:
        if J in fam:
            continue
        if any(all(colon(ring, J, i) in fam for i in I) for I in fam):
            return False
    return True


def gabriel_filters(ring):
    ideals = right_ideals(ring)
    out = []
    for k in range(1, len(ideals) + 1):
        for fam in combinations(ideals, k):
            if is_gabriel(ring, fam):
                out.append(frozenset(fam))
    return out


# -- derivations -------------------------------------------------------------------

def _is_derivation(ring, d):
    add, mul, _, _ = ring
    n = len(add)
    for a in range(n):
        for b in range(n):
            if d[add[a][b]] != add[d[a]][d[b]]:
                return False
            if d[mul[a][b]] != add[mul[d[a]][b]][mul[a][d[b]]]:
                return False
    return True


def ring_derivations(ring, f2_dim=None):
    """All derivations.  Z/n rings: additive maps are x -> kx.  F2 rings: linear maps."""
    add, mul, zero, one = ring
    n = len(add)
    candidates = []
    if f2_dim is None:
        # additive maps of the cyclic group generated by one: one -> k
        for k in range(n):
            d = [None] * n
            cur, img = zero, zero
            for _ in range(n):
                d[cur] = img
                cur = add[cur][one]
                img = add[img][k]
            candidates.append(d)
    else:
        basis = [1 << (f2_dim - 1 - t) for t in range(f2_dim)]
        for images in product(range(n), repeat=f2_dim):
            d = []
            for x in range(n):
                acc = 0
                for b, img in zip(basis, images):
                    if x & b:
                        acc ^= img
                d.append(acc)
            # both sides of Leibniz are bilinear, so basis pairs decide it;
            # survivors still get the full check below
            if all(d[mul[a][b]] == add[mul[d[a]][b]][mul[a][d[b]]] for a in basis for b in basis):
                candidates.append(d)
    return sorted(tuple(d) for d in candidates if _is_derivation(ring, d))


# -- small module checks ---------------------------------------------------------------

def regular_module_derivations(ring, delta):
    """delta-derivations of R_R: additive d with d(xr) = d(x)r + x delta(r)."""
    add, mul, zero, one = ring
    n = len(add)
    out = []
    for c in range(n):
        # d(r) = d(1 r) = c r + delta(r)
        d = tuple(add[mul[c][r]][delta[r]] for r in range(n))
        ok = all(d[add[a][b]] == add[d[a]][d[b]] for a in range(n) for b in range(n)) and all(
            d[mul[x][r]] == add[mul[d[x]][r]][mul[x][delta[r]]] for x in range(n) for r in range(n))
        if ok:
            out.append(d)
    return sorted(set(out))
