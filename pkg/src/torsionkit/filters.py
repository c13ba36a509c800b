"""Gabriel filters on finite rings: construction, axiom checks, enumeration."""

from dataclasses import dataclass, field
from itertools import combinations

from .caps import caps_from_env
from .errors import LatticeTooLarge, NotCentral, NotIdempotent
from .rings import (
    enumerate_right_ideals,
    ideal_hex,
    ideal_key,
    is_dense,
    is_essential,
    members,
    quotient_ideal,
)

PROVENANCES = ("lambek", "goldie", "extension", "custom")


@dataclass(frozen=True)
class GabrielFilter:
    """A family of right ideals, stored complete.

    Use :func:`make_filter` to build one; it normalizes to the upward
    closure inside the ideal lattice.  Axioms are checked separately by
    :func:`check_gabriel_axioms`.
    """

    members: frozenset
    provenance: str
    ring: object = field(compare=False, repr=False)
    label: str = ""

    def __contains__(self, ideal):
        return ideal in self.members

    def __iter__(self):
        return iter(sorted(self.members, key=ideal_key))

    def __len__(self):
        return len(self.members)

    def __le__(self, other):
        return self.members <= other.members

    @property
    def minimal_members(self):
        ms = sorted(self.members, key=ideal_key)
        return [I for I in ms if not any(J != I and J & I == J for J in ms)]

    def describe(self):
        return {
            "provenance": self.provenance,
            "label": self.label,
            "size": len(self.members),
            "minimalMembers": [ideal_hex(I) for I in self.minimal_members],
        }


def upward_closure(R, family, lattice=None):
    lattice = enumerate_right_ideals(R) if lattice is None else lattice
    fam = set(family)
    return frozenset(J for J in lattice if any(I & J == I for I in fam))


def make_filter(R, family, provenance="custom", label="", lattice=None):
    return GabrielFilter(upward_closure(R, family, lattice), provenance, R, label)


def check_gabriel_axioms(R, family, lattice=None):
    """Check a family of right ideals against the Gabriel filter axioms.

    Returns ``None`` when every axiom holds, else the first violation as a
    tuple: ``("nonempty",)``, ``("upward", I, J)``, ``("axiom1", I, r)`` or
    ``("axiom2", I, J)``.  Search runs in canonical ideal order.
    """
    lattice = enumerate_right_ideals(R) if lattice is None else lattice
    fam = set(family.members if isinstance(family, GabrielFilter) else family)
    if not fam:
        return ("nonempty",)
    ordered = [I for I in lattice if I in fam]
    for I in ordered:
        for J in lattice:
            if I & J == I and J not in fam:
                return ("upward", I, J)
    for I in ordered:
        for r in R.elements:
            if quotient_ideal(R, I, r) not in fam:
                return ("axiom1", I, r)
    for J in lattice:
        if J in fam:
            continue
        quot = [quotient_ideal(R, J, r) for r in R.elements]
        for I in ordered:
            if all(quot[r] in fam for r in members(I)):
                return ("axiom2", I, J)
    return None


def lambek_filter(R, lattice=None):
    """The dense right ideals."""
    lattice = enumerate_right_ideals(R) if lattice is None else lattice
    return GabrielFilter(frozenset(I for I in lattice if is_dense(R, I)), "lambek", R, "lambek")


def goldie_set(R, I):
    """{r : (I:r) is essential}."""
    out = 0
    for r in R.elements:
        if is_essential(R, quotient_ideal(R, I, r)):
            out |= 1 << r
    return out


def goldie_filter(R, lattice=None):
    """{I : {r : (I:r) essential} essential}, taken literally."""
    lattice = enumerate_right_ideals(R) if lattice is None else lattice
    fam = frozenset(I for I in lattice if is_essential(R, goldie_set(R, I)))
    return GabrielFilter(fam, "goldie", R, "goldie")


def check_central_idempotent(R, e):
    if R.mul[e][e] != e:
        raise NotIdempotent(f"element {e} of {R.name} is not idempotent")
    if any(R.mul[e][r] != R.mul[r][e] for r in R.elements):
        raise NotCentral(f"element {e} of {R.name} is not central")


def corner(R, e):
    """eR as a bitset; a ring with identity e when e is a central idempotent."""
    return R.cyclic_bits[e]


def extension_filter(R, e, lattice=None):
    """{I : I.S = S} for S = eR, e a central idempotent.

    I.S is the additive closure of the products i*s, which for a central
    idempotent is just eI; the closure is still computed from scratch.
    """
    check_central_idempotent(R, e)
    lattice = enumerate_right_ideals(R) if lattice is None else lattice
    S = corner(R, e)
    s_elems = members(S)
    fam = []
    for I in lattice:
        gens = {R.mul[i][s] for i in members(I) for s in s_elems}
        span = {R.zero}
        while True:
            grown = span | {R.add[a][g] for a in span for g in gens}
            if grown == span:
                break
            span = grown
        if sum(1 << x for x in span) == S:
            fam.append(I)
    return GabrielFilter(frozenset(fam), "extension", R, f"extension(e={e})")


def central_idempotents(R):
    return [
        e for e in R.elements
        if R.mul[e][e] == e and all(R.mul[e][r] == R.mul[r][e] for r in R.elements)
    ]


def enumerate_gabriel_filters(R, lattice=None, max_lattice=None):
    """Every Gabriel filter of R, ordered by (size, sorted member keys).

    Candidates are the upward-closed families containing R, generated from
    the antichains of the lattice.
    """
    lattice = enumerate_right_ideals(R) if lattice is None else lattice
    cap = caps_from_env().lattice_size if max_lattice is None else max_lattice
    if len(lattice) > cap:
        raise LatticeTooLarge(len(lattice), cap)
    seen = set()
    out = []
    for k in range(1, len(lattice) + 1):
        for gens in combinations(lattice, k):
            if any(a & b in (a, b) for a, b in combinations(gens, 2)):
                continue
            fam = upward_closure(R, gens, lattice)
            if fam in seen:
                continue
            seen.add(fam)
            if check_gabriel_axioms(R, fam, lattice) is None:
                out.append(GabrielFilter(fam, "custom", R, ""))
    out.sort(key=lambda F: (len(F.members), sorted(ideal_key(I) for I in F.members)))
    return [GabrielFilter(F.members, "custom", R, f"filter{i}") for i, F in enumerate(out)]
