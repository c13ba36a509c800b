# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels; must agree with ``_pykernels`` result for result."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

NAME = "cython"


def prepare_table(rows):
    return np.ascontiguousarray(np.asarray(rows, dtype=np.intc).reshape(len(rows), -1))


def prepare_vec(seq):
    return np.ascontiguousarray(np.asarray(list(seq), dtype=np.intc))


def to_tuple(vec):
    return tuple(int(v) for v in vec)


def unassigned(vals):
    return np.flatnonzero(np.asarray(vals) < 0).tolist()


def ring_violation(const int[:, ::1] add, const int[:, ::1] mul, int zero, int one):
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t a, b, c
    cdef bint found
    for a in range(n):
        if add[zero, a] != a or add[a, zero] != a:
            return ("add-zero", a, zero, zero)
    for a in range(n):
        found = False
        for b in range(n):
            if add[a, b] == zero:
                found = True
                break
        if not found:
            return ("add-inverse", a, zero, zero)
    for a in range(n):
        for b in range(n):
            if add[a, b] != add[b, a]:
                return ("add-comm", a, b, b)
            for c in range(n):
                if add[add[a, b], c] != add[a, add[b, c]]:
                    return ("add-assoc", a, b, c)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                    return ("mul-assoc", a, b, c)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    return ("left-distrib", a, b, c)
                if mul[add[b, c], a] != add[mul[b, a], mul[c, a]]:
                    return ("right-distrib", a, b, c)
    for a in range(n):
        if mul[one, a] != a or mul[a, one] != a:
            return ("unit", a, one, one)
    return None


def module_violation(const int[:, ::1] madd, int mzero, const int[:, ::1] act,
                     const int[:, ::1] radd, const int[:, ::1] rmul, int rone):
    cdef Py_ssize_t n = madd.shape[0]
    cdef Py_ssize_t nr = radd.shape[0]
    cdef Py_ssize_t x, y, z, r, s
    cdef bint found
    for x in range(n):
        if madd[mzero, x] != x or madd[x, mzero] != x:
            return ("add-zero", x, mzero, mzero)
    for x in range(n):
        found = False
        for y in range(n):
            if madd[x, y] == mzero:
                found = True
                break
        if not found:
            return ("add-inverse", x, mzero, mzero)
    for x in range(n):
        for y in range(n):
            if madd[x, y] != madd[y, x]:
                return ("add-comm", x, y, y)
            for z in range(n):
                if madd[madd[x, y], z] != madd[x, madd[y, z]]:
                    return ("add-assoc", x, y, z)
    for x in range(n):
        if act[x, rone] != x:
            return ("unit-action", x, rone, rone)
        for r in range(nr):
            for s in range(nr):
                if act[act[x, r], s] != act[x, rmul[r, s]]:
                    return ("action-assoc", x, r, s)
                if act[x, radd[r, s]] != madd[act[x, r], act[x, s]]:
                    return ("action-ring-additive", x, r, s)
    for x in range(n):
        for y in range(n):
            for r in range(nr):
                if act[madd[x, y], r] != madd[act[x, r], act[y, r]]:
                    return ("action-module-additive", x, y, r)
    return None


def left_module_violation(const int[:, ::1] madd, const int[:, ::1] lact,
                          const int[:, ::1] radd, const int[:, ::1] rmul, int rone,
                          const int[:, ::1] act):
    cdef Py_ssize_t n = madd.shape[0]
    cdef Py_ssize_t nr = radd.shape[0]
    cdef Py_ssize_t x, y, r, s
    for x in range(n):
        if lact[rone, x] != x:
            return ("left-unit-action", rone, x, x)
    for r in range(nr):
        for s in range(nr):
            for x in range(n):
                if lact[rmul[r, s], x] != lact[r, lact[s, x]]:
                    return ("left-action-assoc", r, s, x)
                if lact[radd[r, s], x] != madd[lact[r, x], lact[s, x]]:
                    return ("left-action-ring-additive", r, s, x)
    for r in range(nr):
        for x in range(n):
            for y in range(n):
                if lact[r, madd[x, y]] != madd[lact[r, x], lact[r, y]]:
                    return ("left-action-module-additive", r, x, y)
    for r in range(nr):
        for x in range(n):
            for s in range(nr):
                if act[lact[r, x], s] != lact[r, act[x, s]]:
                    return ("bimodule-compat", r, x, s)
    return None


def derivation_violation(const int[:, ::1] madd, const int[:, ::1] act,
                         const int[::1] delta, const int[::1] d):
    cdef Py_ssize_t n = madd.shape[0]
    cdef Py_ssize_t nr = act.shape[1] if n else 0
    cdef Py_ssize_t x, y, r
    for x in range(n):
        for y in range(n):
            if d[madd[x, y]] != madd[d[x], d[y]]:
                return ("additive", x, y)
    for x in range(n):
        for r in range(nr):
            if d[act[x, r]] != madd[act[d[x], r], act[x, delta[r]]]:
                return ("leibniz", x, r)
    return None


def left_derivation_violation(const int[:, ::1] madd, const int[:, ::1] lact,
                              const int[::1] delta, const int[::1] d):
    cdef Py_ssize_t nr = lact.shape[0]
    cdef Py_ssize_t n = madd.shape[0]
    cdef Py_ssize_t r, x
    for r in range(nr):
        for x in range(n):
            if d[lact[r, x]] != madd[lact[delta[r], x], lact[r, d[x]]]:
                return ("left-leibniz", r, x)
    return None


cdef inline void _push(int* sx, int* sv, Py_ssize_t* top, int x, int v) noexcept nogil:
    sx[top[0]] = x
    sv[top[0]] = v
    top[0] += 1


def close_ring(const int[:, ::1] add, const int[:, ::1] mul, vals_in, int x0, int v0):
    cdef cnp.ndarray[int, ndim=1, mode="c"] arr = np.array(vals_in, dtype=np.intc, copy=True)
    cdef int[::1] vals = arr
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t cap = 3 * n * n + 8
    cdef int* assigned = <int*> malloc(n * sizeof(int))
    cdef int* sx = <int*> malloc(cap * sizeof(int))
    cdef int* sv = <int*> malloc(cap * sizeof(int))
    cdef Py_ssize_t na = 0, top = 0, i
    cdef int x, v, y, w
    cdef bint ok = True
    if assigned == NULL or sx == NULL or sv == NULL:
        free(assigned); free(sx); free(sv)
        raise MemoryError()
    try:
        with nogil:
            for i in range(n):
                if vals[i] >= 0:
                    assigned[na] = <int> i
                    na += 1
            _push(sx, sv, &top, x0, v0)
            while top > 0:
                top -= 1
                x = sx[top]
                v = sv[top]
                if vals[x] >= 0:
                    if vals[x] != v:
                        ok = False
                        break
                    continue
                vals[x] = v
                assigned[na] = x
                na += 1
                for i in range(na):
                    y = assigned[i]
                    w = vals[y]
                    _push(sx, sv, &top, add[x, y], add[v, w])
                    _push(sx, sv, &top, mul[x, y], add[mul[v, y], mul[x, w]])
                    _push(sx, sv, &top, mul[y, x], add[mul[w, x], mul[y, v]])
    finally:
        free(assigned); free(sx); free(sv)
    return arr if ok else None


def close_module(const int[:, ::1] madd, const int[:, ::1] act, const int[::1] delta,
                 vals_in, int x0, int v0):
    cdef cnp.ndarray[int, ndim=1, mode="c"] arr = np.array(vals_in, dtype=np.intc, copy=True)
    cdef int[::1] vals = arr
    cdef Py_ssize_t n = madd.shape[0]
    cdef Py_ssize_t nr = delta.shape[0]
    cdef Py_ssize_t cap = n * (n + nr) + 8
    cdef int* assigned = <int*> malloc(n * sizeof(int))
    cdef int* sx = <int*> malloc(cap * sizeof(int))
    cdef int* sv = <int*> malloc(cap * sizeof(int))
    cdef Py_ssize_t na = 0, top = 0, i, r
    cdef int x, v, y
    cdef bint ok = True
    if assigned == NULL or sx == NULL or sv == NULL:
        free(assigned); free(sx); free(sv)
        raise MemoryError()
    try:
        with nogil:
            for i in range(n):
                if vals[i] >= 0:
                    assigned[na] = <int> i
                    na += 1
            _push(sx, sv, &top, x0, v0)
            while top > 0:
                top -= 1
                x = sx[top]
                v = sv[top]
                if vals[x] >= 0:
                    if vals[x] != v:
                        ok = False
                        break
                    continue
                vals[x] = v
                assigned[na] = x
                na += 1
                for i in range(na):
                    y = assigned[i]
                    _push(sx, sv, &top, madd[x, y], madd[v, vals[y]])
                for r in range(nr):
                    _push(sx, sv, &top, act[x, r], madd[act[v, r], act[x, delta[r]]])
    finally:
        free(assigned); free(sx); free(sv)
    return arr if ok else None


cdef long long _inv_mod(long long a, long long p) noexcept nogil:
    cdef long long r = 1, e = p - 2
    a %= p
    while e:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


def gcd_degree_mod_p(a_in, b_in, long long p):
    """Degree of gcd(a, b) over Z/p; inputs are coefficient lists, low first."""
    cdef Py_ssize_t na = len(a_in), nb = len(b_in), i, j, shift
    cdef long long *a = <long long*>malloc((na + nb + 2) * sizeof(long long))
    cdef long long *b = <long long*>malloc((na + nb + 2) * sizeof(long long))
    cdef long long *t
    cdef long long inv, c
    if a == NULL or b == NULL:
        free(a)
        free(b)
        raise MemoryError()
    for i in range(na):
        a[i] = a_in[i] % p
    for i in range(nb):
        b[i] = b_in[i] % p
    with nogil:
        while na and a[na - 1] == 0:
            na -= 1
        while nb and b[nb - 1] == 0:
            nb -= 1
        while nb:
            inv = _inv_mod(b[nb - 1], p)
            while na >= nb:
                c = a[na - 1] * inv % p
                shift = na - nb
                for j in range(nb):
                    a[shift + j] = (a[shift + j] - c * b[j]) % p
                    if a[shift + j] < 0:
                        a[shift + j] += p
                na -= 1
                while na and a[na - 1] == 0:
                    na -= 1
            t = a
            a = b
            b = t
            i = na
            na = nb
            nb = i
    free(a)
    free(b)
    return na - 1
