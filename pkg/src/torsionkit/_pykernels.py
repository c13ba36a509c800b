"""Pure-Python kernels; the reference twin of ``_ckernels.pyx``.

Every function here must return exactly what the compiled version returns,
witness order included.  Tables are tuples of tuples of ints; state
vectors are lists with -1 marking unassigned entries.
"""

NAME = "python"


def prepare_table(rows):
    return tuple(tuple(int(v) for v in row) for row in rows)


def prepare_vec(seq):
    return [int(v) for v in seq]


def to_tuple(vec):
    return tuple(vec)


def unassigned(vals):
    return [i for i, v in enumerate(vals) if v < 0]


def ring_violation(add, mul, zero, one):
    n = len(add)
    for a in range(n):
        if add[zero][a] != a or add[a][zero] != a:
            return ("add-zero", a, zero, zero)
    for a in range(n):
        if zero not in add[a]:
            return ("add-inverse", a, zero, zero)
    for a in range(n):
        ra = add[a]
        for b in range(n):
            if ra[b] != add[b][a]:
                return ("add-comm", a, b, b)
            rab = add[ra[b]]
            rb = add[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    return ("add-assoc", a, b, c)
    for a in range(n):
        ma = mul[a]
        for b in range(n):
            mab = mul[ma[b]]
            mb = mul[b]
            for c in range(n):
                if mab[c] != ma[mb[c]]:
                    return ("mul-assoc", a, b, c)
    for a in range(n):
        ma = mul[a]
        for b in range(n):
            ab = add[b]
            for c in range(n):
                if ma[ab[c]] != add[ma[b]][ma[c]]:
                    return ("left-distrib", a, b, c)
                if mul[ab[c]][a] != add[mul[b][a]][mul[c][a]]:
                    return ("right-distrib", a, b, c)
    for a in range(n):
        if mul[one][a] != a or mul[a][one] != a:
            return ("unit", a, one, one)
    return None


def module_violation(madd, mzero, act, radd, rmul, rone):
    """Right-module axioms for ``act[x][r] = xr``."""
    n = len(madd)
    nr = len(radd)
    for x in range(n):
        if madd[mzero][x] != x or madd[x][mzero] != x:
            return ("add-zero", x, mzero, mzero)
    for x in range(n):
        if mzero not in madd[x]:
            return ("add-inverse", x, mzero, mzero)
    for x in range(n):
        rx = madd[x]
        for y in range(n):
            if rx[y] != madd[y][x]:
                return ("add-comm", x, y, y)
            rxy = madd[rx[y]]
            ry = madd[y]
            for z in range(n):
                if rxy[z] != rx[ry[z]]:
                    return ("add-assoc", x, y, z)
    for x in range(n):
        ax = act[x]
        if ax[rone] != x:
            return ("unit-action", x, rone, rone)
        for r in range(nr):
            axr = act[ax[r]]
            mr = rmul[r]
            rr = radd[r]
            for s in range(nr):
                if axr[s] != ax[mr[s]]:
                    return ("action-assoc", x, r, s)
                if ax[rr[s]] != madd[ax[r]][ax[s]]:
                    return ("action-ring-additive", x, r, s)
    for x in range(n):
        for y in range(n):
            sxy = act[madd[x][y]]
            for r in range(nr):
                if sxy[r] != madd[act[x][r]][act[y][r]]:
                    return ("action-module-additive", x, y, r)
    return None


def left_module_violation(madd, lact, radd, rmul, rone, act):
    """Left-module axioms for ``lact[r][x] = rx`` plus (rx)s = r(xs)."""
    n = len(madd)
    nr = len(radd)
    for x in range(n):
        if lact[rone][x] != x:
            return ("left-unit-action", rone, x, x)
    for r in range(nr):
        for s in range(nr):
            rs = rmul[r][s]
            rps = radd[r][s]
            for x in range(n):
                if lact[rs][x] != lact[r][lact[s][x]]:
                    return ("left-action-assoc", r, s, x)
                if lact[rps][x] != madd[lact[r][x]][lact[s][x]]:
                    return ("left-action-ring-additive", r, s, x)
    for r in range(nr):
        lr = lact[r]
        for x in range(n):
            for y in range(n):
                if lr[madd[x][y]] != madd[lr[x]][lr[y]]:
                    return ("left-action-module-additive", r, x, y)
    for r in range(nr):
        for x in range(n):
            rx = lact[r][x]
            for s in range(nr):
                if act[rx][s] != lact[r][act[x][s]]:
                    return ("bimodule-compat", r, x, s)
    return None


def derivation_violation(madd, act, delta, d):
    """First failure of d(x+y)=d(x)+d(y) or d(xr)=d(x)r+x delta(r)."""
    n = len(madd)
    nr = len(act[0]) if n else 0
    for x in range(n):
        rx = madd[x]
        for y in range(n):
            if d[rx[y]] != madd[d[x]][d[y]]:
                return ("additive", x, y)
    for x in range(n):
        ax = act[x]
        adx = act[d[x]]
        for r in range(nr):
            if d[ax[r]] != madd[adx[r]][ax[delta[r]]]:
                return ("leibniz", x, r)
    return None


def left_derivation_violation(madd, lact, delta, d):
    """First failure of d(rx) = delta(r)x + r d(x)."""
    nr = len(lact)
    n = len(madd)
    for r in range(nr):
        lr = lact[r]
        ldr = lact[delta[r]]
        for x in range(n):
            if d[lr[x]] != madd[ldr[x]][lr[d[x]]]:
                return ("left-leibniz", r, x)
    return None


def close_ring(add, mul, vals, x0, v0):
    """Extend a partial derivation by forcing delta(x0)=v0.

    Propagates additivity and Leibniz over every pair of assigned elements.
    Returns the extended vector, or None on the first conflict.
    """
    vals = list(vals)
    assigned = [i for i, v in enumerate(vals) if v >= 0]
    stack = [(x0, v0)]
    while stack:
        x, v = stack.pop()
        cur = vals[x]
        if cur >= 0:
            if cur != v:
                return None
            continue
        vals[x] = v
        assigned.append(x)
        ax = add[x]
        mx = mul[x]
        mv = mul[v]
        addv = add[v]
        for y in assigned:
            w = vals[y]
            stack.append((ax[y], addv[w]))
            stack.append((mx[y], add[mv[y]][mx[w]]))
            stack.append((mul[y][x], add[mul[w][x]][mul[y][v]]))
    return vals


def close_module(madd, act, delta, vals, x0, v0):
    """Module analogue of :func:`close_ring` for a fixed ring derivation."""
    vals = list(vals)
    assigned = [i for i, v in enumerate(vals) if v >= 0]
    nr = len(delta)
    stack = [(x0, v0)]
    while stack:
        x, v = stack.pop()
        cur = vals[x]
        if cur >= 0:
            if cur != v:
                return None
            continue
        vals[x] = v
        assigned.append(x)
        ax = madd[x]
        addv = madd[v]
        for y in assigned:
            stack.append((ax[y], addv[vals[y]]))
        actx = act[x]
        actv = act[v]
        for r in range(nr):
            stack.append((actx[r], madd[actv[r]][actx[delta[r]]]))
    return vals


def gcd_degree_mod_p(a, b, p):
    """Degree of gcd(a, b) over Z/p; inputs are coefficient lists, low first."""
    a = [v % p for v in a]
    b = [v % p for v in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for j, y in enumerate(b):
                a[shift + j] = (a[shift + j] - c * y) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1
