"""Classical torsion of finitely generated abelian groups, localized at Z -> Q.

A group is Z^r (+) Z/d_1 (+) ... (+) Z/d_t in invariant-factor form
(each d_i >= 2 and d_i | d_{i+1}).  Elements are integer coordinate
vectors, the torsion coordinates reduced mod d_i.  The map phi sends an
element to its free coordinates in Q^r.
"""

import random
from fractions import Fraction
from math import lcm

from ..errors import IllFormed, MalformedGroup, RankMismatch


def check_group(rank, invariants):
    if not isinstance(rank, int) or rank < 0:
        raise MalformedGroup(f"rank must be a non-negative integer, got {rank!r}")
    for d in invariants:
        if not isinstance(d, int) or d < 2:
            raise MalformedGroup(f"invariant factors must be integers >= 2, got {d!r}")
    for a, b in zip(invariants, invariants[1:]):
        if b % a:
            raise MalformedGroup(f"{a} does not divide {b}: not in invariant-factor form")


def check_endomorphism(rank, invariants, matrix):
    """Columns are images of generators; rows are coordinates.

    A torsion generator of order d must map to an element killed by d: its
    free coordinates vanish and d * entry is 0 mod d_j in torsion row j.
    """
    n = rank + len(invariants)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise RankMismatch(f"endomorphism matrix must be {n}x{n}")
    for col, d in enumerate(invariants, start=rank):
        for row in range(rank):
            if matrix[row][col]:
                raise IllFormed(f"torsion generator {col} maps to a non-torsion element")
        for j, dj in enumerate(invariants):
            if (d * matrix[rank + j][col]) % dj:
                raise IllFormed(f"generator {col} of order {d} cannot map to {matrix[rank + j][col]} mod {dj}")


def apply(rank, invariants, matrix, m):
    out = [sum(matrix[i][j] * m[j] for j in range(len(m))) for i in range(len(m))]
    for j, d in enumerate(invariants):
        out[rank + j] %= d
    return out


def phi(rank, m):
    return [Fraction(v) for v in m[:rank]]


def zq_demo(rank, invariants, matrix=None, samples=200, seed=0):
    """Torsion, module of quotients and the extended derivation, as a dict."""
    invariants = list(invariants)
    check_group(rank, invariants)
    n = rank + len(invariants)
    if matrix is None:
        matrix = [[0] * n for _ in range(n)]
    check_endomorphism(rank, invariants, matrix)
    extension = [[Fraction(matrix[i][j]) for j in range(rank)] for i in range(rank)]
    rng = random.Random(seed)
    checks = []

    def rand_elem():
        return [rng.randint(-50, 50) for _ in range(rank)] + [rng.randrange(d) for d in invariants]

    # phi(d(m)) == d_F(phi(m))
    bad = None
    for _ in range(samples):
        m = rand_elem()
        lhs = phi(rank, apply(rank, invariants, matrix, m))
        fm = phi(rank, m)
        rhs = [sum(extension[i][j] * fm[j] for j in range(rank)) for i in range(rank)]
        if lhs != rhs:
            bad = m
            break
    checks.append({"name": "phi-commutation", "pass": bad is None, **({"witness": bad} if bad else {})})

    # ker phi is the torsion part: each element is killed by the exponent
    exponent = invariants[-1] if invariants else 1
    bad = None
    for _ in range(samples):
        m = [0] * rank + [rng.randrange(d) for d in invariants]
        if any(v for v in phi(rank, m)) or any((exponent * v) % d for v, d in zip(m[rank:], invariants)):
            bad = m
            break
    checks.append({"name": "kernel-torsion", "pass": bad is None, **({"witness": bad} if bad else {})})

    # coker phi = Q^r / Z^r is torsion: q * (common denominator) lies in the image
    bad = None
    for _ in range(samples if rank else 0):
        q = [Fraction(rng.randint(-100, 100), rng.randint(1, 100)) for _ in range(rank)]
        c = lcm(*(v.denominator for v in q))
        if any((c * v).denominator != 1 for v in q):
            bad = [str(v) for v in q]
            break
    checks.append({"name": "cokernel-torsion", "pass": bad is None, **({"witness": bad} if bad else {})})

    torsion_order = 1
    for d in invariants:
        torsion_order *= d
    return {
        "group": {"rank": rank, "invariants": invariants},
        "torsion": {"invariants": invariants, "order": torsion_order},
        "moduleOfQuotients": {"field": "Q", "dimension": rank},
        "extension": [[str(v) for v in row] for row in extension],
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


def parse_group(text):
    """``Z^2 + Z/4 + Z/12`` style strings into (rank, invariants)."""
    rank, invariants = 0, []
    for part in text.replace(" ", "").split("+"):
        if not part:
            continue
        if part == "Z":
            rank += 1
        elif part.startswith("Z^"):
            try:
                rank += int(part[2:])
            except ValueError:
                raise MalformedGroup(f"bad summand {part!r}") from None
        elif part.startswith("Z/"):
            try:
                invariants.append(int(part[2:]))
            except ValueError:
                raise MalformedGroup(f"bad summand {part!r}") from None
        else:
            raise MalformedGroup(f"bad summand {part!r}")
    check_group(rank, invariants)
    return rank, invariants
