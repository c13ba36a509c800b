"""Torsion submodules, differential filters, and the Lambek/Goldie checks."""

from dataclasses import dataclass

from .errors import InvariantViolation, NoWitness
from .filters import GabrielFilter, goldie_filter
from .modules import annihilator, is_submodule, make_quotient_module, make_regular_module
from .rings import bits_of, is_dense, is_essential, members


@dataclass(frozen=True)
class TorsionReport:
    module: object
    filter: GabrielFilter
    elements: int
    valid: bool

    @property
    def members(self):
        return members(self.elements)

    @property
    def is_zero(self):
        return self.elements == 1 << self.module.zero

    @property
    def is_everything(self):
        return self.elements == (1 << self.module.order) - 1


def torsion_bits(M, F):
    return bits_of(x for x in M.elements if annihilator(M, x) in F)


def torsion_submodule(M, F):
    """TM = {x : ann(x) in F}; ``valid`` records the submodule check."""
    bits = torsion_bits(M, F)
    return TorsionReport(M, F, bits, is_submodule(M, bits))


def torsion_free_quotient(M, F):
    """M / TM.  Raises :class:`InvariantViolation` if the quotient has torsion."""
    T = torsion_submodule(M, F)
    if not T.valid:
        raise InvariantViolation(f"torsion elements of {M.name} do not form a submodule")
    Q = make_quotient_module(M, T.elements, name=f"{M.name}/T")
    if torsion_bits(Q, F) != 1 << Q.zero:
        raise InvariantViolation(f"torsion-free quotient of {M.name} has torsion")
    return Q


def is_faithful(R, F):
    return torsion_submodule(make_regular_module(R), F).is_zero


# -- differential filters ---------------------------------------------------------

def image_bits(delta, I):
    return bits_of(delta.table[j] for j in members(I))


def is_differential_filter(F, derivations):
    """For every I in F, find J in F with delta(J) inside I for all derivations.

    Returns ``(True, [(I, J), ...])`` with the first witness J per I, or
    ``(False, I)`` for the first I without one.
    """
    derivations = list(derivations)
    witnesses = []
    ordered = list(F)
    for I in ordered:
        for J in ordered:
            if all(image_bits(d, J) & ~I == 0 for d in derivations):
                witnesses.append((I, J))
                break
        else:
            return False, I
    return True, witnesses


def check_bland_criterion(F, pairs):
    """d(TM) inside TM for every ``(M, d)`` pair.

    Returns ``(True, checked)`` or ``(False, (module_name, x, d(x)))``.
    """
    cache = {}
    checked = 0
    for M, d in pairs:
        T = cache.get(id(M))
        if T is None:
            T = cache[id(M)] = torsion_bits(M, F)
        for x in members(T):
            checked += 1
            if not T >> d.table[x] & 1:
                return False, (M.name, x, d.table[x])
    return True, checked


# -- Goldie: ann(x)* and ann(x)** ------------------------------------------------

@dataclass(frozen=True)
class StarData:
    x: int
    ann: int
    ann_star: int
    ann_double_star: int

    @property
    def nested(self):
        return (self.ann & ~self.ann_star) == 0 and (self.ann_star & ~self.ann_double_star) == 0


def star_bits(M, x, essential_ann=None):
    """{r : ann(xr) essential}."""
    R = M.ring
    if essential_ann is None:
        return bits_of(r for r in R.elements if is_essential(R, annihilator(M, M.act[x][r])))
    return bits_of(r for r in R.elements if essential_ann[M.act[x][r]])


def double_star_bits(M, x, essential_star=None):
    """{r : {s : ann(xrs) essential} essential}."""
    R = M.ring
    if essential_star is None:
        return bits_of(r for r in R.elements if is_essential(R, star_bits(M, M.act[x][r])))
    return bits_of(r for r in R.elements if essential_star[M.act[x][r]])


def star(M, x):
    return star_bits(M, x)


def double_star(M, x):
    return double_star_bits(M, x)


def star_data(M, x):
    return StarData(x, annihilator(M, x), star_bits(M, x), double_star_bits(M, x))


class GoldieTables:
    """Per-element essentiality data for one module, computed once."""

    def __init__(self, M, FG=None):
        R = M.ring
        self.module = M
        self.filter = goldie_filter(R) if FG is None else FG
        self.ann = [annihilator(M, x) for x in M.elements]
        self.ess_ann = [is_essential(R, a) for a in self.ann]
        self.star = [star_bits(M, x, self.ess_ann) for x in M.elements]
        self.ess_star = [is_essential(R, s) for s in self.star]
        self.dstar = [double_star_bits(M, x, self.ess_star) for x in M.elements]
        self.ess_dstar = [is_essential(R, s) for s in self.dstar]
        self.in_goldie = [a in self.filter for a in self.ann]


# ann(x) <= ann(x)* <= ann(x)**; ann(x) in the Goldie filter iff ann(x)* is
# essential iff ann(x)** is; essential ann and ann* pass to xr; essential
# ann* passes to sums; a derivation moves essential ann(x) to essential
# ann(dx)*, essential ann(x)* to essential ann(dx)**, and keeps Goldie torsion
GOLDIE_CHECKS = (
    "stars-nested",
    "goldie-iff-star-essential",
    "essential-ann-under-action",
    "essential-star-under-action",
    "essential-star-under-sum",
    "derivation-ann-to-star",
    "derivation-star-to-double-star",
    "goldie-closed",
)


def _lemma_entry():
    return {"checked": 0, "violations": []}


def _record(entry, ok, witness, limit=5):
    entry["checked"] += 1
    if not ok and len(entry["violations"]) < limit:
        entry["violations"].append(list(witness))
    if not ok:
        entry["failed"] = entry.get("failed", 0) + 1


def verify_goldie_lemmas(M, derivations, tables=None):
    """Exhaustive check of the Goldie lemma chain on one module.

    ``derivations`` are module derivations of M (each knows its ring
    derivation).  Returns a dict keyed by check name with counts and up to
    five counterexamples each.
    """
    g = GoldieTables(M) if tables is None else tables
    R = M.ring
    rep = {k: _lemma_entry() for k in GOLDIE_CHECKS}
    for x in M.elements:
        _record(rep["stars-nested"],
                (g.ann[x] & ~g.star[x]) == 0 and (g.star[x] & ~g.dstar[x]) == 0, [x])
        _record(rep["goldie-iff-star-essential"], g.in_goldie[x] == g.ess_star[x] == g.ess_dstar[x], [x])
        for r in R.elements:
            xr = M.act[x][r]
            _record(rep["essential-ann-under-action"], not g.ess_ann[x] or g.ess_ann[xr], [x, r])
            _record(rep["essential-star-under-action"], not g.ess_star[x] or g.ess_star[xr], [x, r])
        if g.ess_star[x]:
            for y in M.elements:
                _record(rep["essential-star-under-sum"], not g.ess_star[y] or g.ess_star[M.add[x][y]], [x, y])
    for k, d in enumerate(derivations):
        t = d.table
        for x in M.elements:
            dx = t[x]
            _record(rep["derivation-ann-to-star"], not g.ess_ann[x] or g.ess_star[dx], [k, x])
            _record(rep["derivation-star-to-double-star"], not g.ess_star[x] or g.ess_dstar[dx], [k, x])
            _record(rep["goldie-closed"], not g.in_goldie[x] or g.in_goldie[dx], [k, x])
    return rep


def lemma_violations(rep):
    return sum(entry.get("failed", 0) for entry in rep.values())


# -- Lambek: the two-step witness ---------------------------------------------

def lambek_witness(M, d, x, r, s):
    """Find t = t1 t2 with st != 0 and d(x) r t = 0.

    t1 is the first element with s t1 != 0 and x r t1 = 0; t2 the first with
    s t1 t2 != 0 and x delta(r t1) t2 = 0.  Candidates are tried with the
    identity first, then in ascending index order.  Returns ``(t1, t2, t)``.
    Raises :class:`NoWitness` when a step finds nothing, which can only
    happen if ann(x) is not dense or s = 0.
    """
    R = M.ring
    z, mul, act = R.zero, R.mul, M.act
    delta = d.delta.table
    order = [R.one] + [t for t in R.elements if t != R.one]
    xr = act[x][r]
    t1 = next((t for t in order if mul[s][t] != z and act[xr][t] == M.zero), None)
    if t1 is None:
        raise NoWitness(f"no t1 for x={x}, r={r}, s={s}")
    st1 = mul[s][t1]
    y = act[x][delta[mul[r][t1]]]
    t2 = next((t for t in order if mul[st1][t] != z and act[y][t] == M.zero), None)
    if t2 is None:
        raise NoWitness(f"no t2 for x={x}, r={r}, s={s}, t1={t1}")
    t = mul[t1][t2]
    if mul[s][t] == z or act[d.table[x]][mul[r][t]] != M.zero:
        raise InvariantViolation(f"witness t={t} fails for x={x}, r={r}, s={s}")
    return t1, t2, t


def lambek_trace(M, derivations):
    """Run :func:`lambek_witness` over every (d, x, r, s) with ann(x) dense, s != 0.

    Also checks that ann(d(x)) is dense.  Returns a summary dict.
    """
    R = M.ring
    dense = [is_dense(R, annihilator(M, x)) for x in M.elements]
    out = {"tuples": 0, "witnesses": 0, "dense_images": 0, "failures": []}
    for k, d in enumerate(derivations):
        for x in M.elements:
            if not dense[x]:
                continue
            for r in R.elements:
                for s in R.elements:
                    if s == R.zero:
                        continue
                    out["tuples"] += 1
                    try:
                        lambek_witness(M, d, x, r, s)
                    except (NoWitness, InvariantViolation) as exc:
                        out["failures"].append([k, x, r, s, str(exc)])
                    else:
                        out["witnesses"] += 1
            if dense[d.table[x]]:
                out["dense_images"] += 1
            else:
                out["failures"].append([k, x, -1, -1, "ann(d(x)) not dense"])
    return out


def lambek_torsion_elements(M):
    R = M.ring
    return [x for x in M.elements if is_dense(R, annihilator(M, x))]
