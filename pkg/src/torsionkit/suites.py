"""Check suites over one ring's corpus, each returning report sections.

Every suite is deterministic: rings, ideals, modules and derivations are
walked in their canonical orders and witnesses are the first found.
"""

from .derivations import inner_derivation, is_closed_under_sums
from .errors import IllFormed, InvariantViolation, LatticeTooLarge
from .filters import (
    central_idempotents,
    check_gabriel_axioms,
    enumerate_gabriel_filters,
    extension_filter,
    goldie_filter,
    lambek_filter,
)
from .localization import idempotent_demo
from .modules import annihilator
from .report import check, section
from .rings import (
    ideal_hex,
    is_dense,
    is_essential,
    is_right_ore,
    is_two_sided,
    members,
    popcount,
    regular_elements,
    units,
)
from .tensor import simple_tensor_violation, tensor_derivation, tensor_over_ring
from .torsion import (
    GOLDIE_CHECKS,
    GoldieTables,
    check_bland_criterion,
    is_differential_filter,
    is_faithful,
    lambek_trace,
    torsion_bits,
    torsion_free_quotient,
    verify_goldie_lemmas,
)


def _axiom_witness(R, bad):
    """Turn an axiom-check tuple into JSON, ideals as hex."""
    kind = bad[0]
    if kind in ("upward", "axiom2"):
        return [kind, ideal_hex(bad[1]), ideal_hex(bad[2])]
    if kind == "axiom1":
        return [kind, ideal_hex(bad[1]), bad[2]]
    return [kind]


# -- ideals ----------------------------------------------------------------------

def ideal_rows(corpus):
    R = corpus.ring
    return [
        {
            "ideal": ideal_hex(I),
            "size": popcount(I),
            "elements": members(I),
            "dense": is_dense(R, I),
            "essential": is_essential(R, I),
            "twoSided": is_two_sided(R, I),
        }
        for I in corpus.lattice
    ]


def ideals_suite(corpus):
    R = corpus.ring
    rows = ideal_rows(corpus)
    bad = next((r["ideal"] for r in rows if r["dense"] and not r["essential"]), None)
    ore, ore_bad = is_right_ore(R)
    checks = [
        check("dense-implies-essential", bad is None, bad, count=len(rows)),
        check("regular-equals-units", regular_elements(R) == units(R)),
        check("right-ore", ore, None if ore else list(ore_bad)),
    ]
    return [section(R.name, checks, data={"ideals": rows})]


# -- filters ---------------------------------------------------------------------

def named_filters(corpus, idempotents=None):
    """Lambek, Goldie and one extension filter per central idempotent e != 0, 1."""
    R = corpus.ring
    out = [lambek_filter(R, corpus.lattice), goldie_filter(R, corpus.lattice)]
    if idempotents is None:
        idempotents = [e for e in central_idempotents(R) if e not in (R.zero, R.one)]
    out += [extension_filter(R, e, corpus.lattice) for e in idempotents]
    return out


def enumerated_filters(corpus):
    """Every Gabriel filter, or None if the lattice is over the cap."""
    cap = None if corpus.caps is None else corpus.caps.lattice_size
    try:
        return enumerate_gabriel_filters(corpus.ring, corpus.lattice, max_lattice=cap)
    except LatticeTooLarge:
        return None


def filter_data(corpus, F):
    R = corpus.ring
    return {
        "members": [ideal_hex(I) for I in F],
        "faithful": is_faithful(R, F),
    }


def filters_suite(corpus, idempotents=None, family=None):
    R = corpus.ring
    lattice = corpus.lattice
    out = []
    named = named_filters(corpus, idempotents)
    for F in named:
        bad = check_gabriel_axioms(R, F, lattice)
        out.append(section(R.name, [check("gabriel-axioms", bad is None, None if bad is None else _axiom_witness(R, bad))],
                           F.describe(), filter_data(corpus, F)))
    lam, gol = named[0], named[1]
    ess = [I for I in lattice if is_essential(R, I)]
    stray = [ideal_hex(I) for I in lam if I not in gol]
    outside = [ideal_hex(I) for I in ess if I not in gol]
    rel = [
        check("lambek-in-goldie", not stray, stray or None, count=len(lam)),
        check("essential-in-goldie", not outside, outside or None, count=len(ess)),
    ]
    enum = enumerated_filters(corpus)
    data = {"essential": [ideal_hex(I) for I in ess]}
    if enum is not None:
        data["gabrielFilters"] = [[ideal_hex(I) for I in F] for F in enum]
        missing = [F.provenance for F in named if F.members not in {E.members for E in enum}]
        rel.append(check("named-filters-enumerated", not missing, missing or None, count=len(enum)))
    out.append(section(R.name, rel, data=data))
    if family is not None:
        bad = check_gabriel_axioms(R, family, lattice)
        out.append(section(R.name, [check("family-gabriel-axioms", bad is None,
                                          None if bad is None else _axiom_witness(R, bad))],
                           data={"family": [ideal_hex(I) for I in sorted(family)]}))
    return out


# -- derivations -----------------------------------------------------------------

def derivations_suite(corpus, module=None):
    R = corpus.ring
    ders = corpus.derivations
    tables = {d.table for d in ders}
    inner_missing = next((a for a in R.elements if inner_derivation(R, a).table not in tables), None)
    # delta_a(b) = ab - ba = -(delta_b(a))
    antisym = next(
        ([a, b] for a in R.elements for b in R.elements
         if inner_derivation(R, a).table[b] != R.neg[inner_derivation(R, b).table[a]]),
        None,
    )
    checks = [
        check("derivations-kill-one", all(d.table[R.one] == R.zero for d in ders), count=len(ders)),
        check("derivations-closed-under-sums", is_closed_under_sums(ders), count=len(ders)),
        check("inner-derivations-enumerated", inner_missing is None, inner_missing),
        check("inner-antisymmetry", antisym is None, antisym),
    ]
    data = {"ringDerivations": [list(d.table) for d in ders]}
    out = [section(R.name, checks, data=data)]
    if module is not None:
        mders = corpus.module_derivations(module)
        out.append(section(R.name, [check("module-derivations", True, count=len(mders))],
                           data={"module": module.name,
                                 "moduleDerivations": [[ders.index(d.delta), list(d.table)] for d in mders]}))
    return out


# -- differential filters and the Bland criterion --------------------------------------

def differential_suite(corpus, filters=None):
    R = corpus.ring
    if filters is None:
        enum = enumerated_filters(corpus) or []
        seen = {F.members for F in enum}
        filters = list(enum) + [F for F in named_filters(corpus) if F.members not in seen]
    pairs = list(corpus.derivation_pairs())
    out = []
    for F in filters:
        ok, info = is_differential_filter(F, corpus.derivations)
        diff = check("differential", ok, None if ok else ideal_hex(info), count=len(F))
        ok_b, info_b = check_bland_criterion(F, pairs)
        bland = check("bland-criterion", ok_b, None if ok_b else list(info_b),
                      count=info_b if ok_b else None)
        hereditary = []
        for M in corpus.right_modules:
            try:
                torsion_free_quotient(M, F)
            except InvariantViolation:
                hereditary.append(M.name)
        tfq = check("torsion-free-quotient", not hereditary, hereditary or None,
                    count=len(corpus.right_modules))
        out.append(section(R.name, [diff, bland, tfq], F.describe()))
    return out


# -- Goldie and Lambek -------------------------------------------------------------

def goldie_suite(corpus, targets=None):
    R = corpus.ring
    targets = corpus.goldie_targets() if targets is None else targets
    gol = goldie_filter(R, corpus.lattice)
    totals = {k: [0, None] for k in GOLDIE_CHECKS}
    per_module = []
    for M, ders in targets:
        tables = GoldieTables(M, gol)
        rep = verify_goldie_lemmas(M, ders, tables)
        for k in GOLDIE_CHECKS:
            totals[k][0] += rep[k]["checked"]
            if rep[k]["violations"] and totals[k][1] is None:
                totals[k][1] = [M.name] + rep[k]["violations"][0]
        per_module.append({"module": M.name, "derivations": len(ders),
                           "goldieTorsion": members(torsion_bits(M, gol))})
    checks = [check(k, totals[k][1] is None, totals[k][1], count=totals[k][0]) for k in GOLDIE_CHECKS]
    return [section(R.name, checks, gol.describe(), {"modules": per_module})]


def lambek_suite(corpus, targets=None):
    R = corpus.ring
    targets = corpus.goldie_targets() if targets is None else targets
    lam = lambek_filter(R, corpus.lattice)
    tuples = witnesses = dense = 0
    first_bad = None
    per_module = []
    for M, ders in targets:
        tr = lambek_trace(M, ders)
        tuples += tr["tuples"]
        witnesses += tr["witnesses"]
        dense += tr["dense_images"]
        if tr["failures"] and first_bad is None:
            first_bad = [M.name] + tr["failures"][0]
        torsion = [x for x in M.elements if is_dense(R, annihilator(M, x))]
        per_module.append({"module": M.name, "lambekTorsion": torsion})
    checks = [
        check("lambek-witness", first_bad is None, first_bad, count=tuples),
        check("lambek-dense-image", first_bad is None, None, count=dense),
    ]
    return [section(R.name, checks, lam.describe(), {"modules": per_module})]


# -- tensor products ---------------------------------------------------------------

def tensor_suite(corpus):
    R = corpus.ring
    tcap = None if corpus.caps is None else corpus.caps.tensor_order
    mcap = None if corpus.caps is None else corpus.caps.module_order
    iso_bad = None
    n_iso = n_pairs = 0
    bad = None
    routes = {}
    for M in corpus.right_modules:
        tp_r = tensor_over_ring(M, corpus.regular_bimodule, cap=mcap, tensor_cap=tcap)
        n_iso += 1
        if tp_r.module.order != M.order and iso_bad is None:
            iso_bad = [M.name, M.order, tp_r.module.order]
        for N in corpus.bimodules:
            tp = tp_r if N is corpus.regular_bimodule else tensor_over_ring(M, N, cap=mcap, tensor_cap=tcap)
            routes[tp.method] = routes.get(tp.method, 0) + 1
            dNs = corpus.two_sided_derivations(N)
            for d_M in corpus.module_derivations(M):
                for d_N in dNs:
                    if d_N.delta != d_M.delta:
                        continue
                    n_pairs += 1
                    try:
                        d = tensor_derivation(tp, d_M, d_N)
                    except IllFormed as exc:
                        if bad is None:
                            bad = [M.name, N.name, str(exc)]
                        continue
                    v = simple_tensor_violation(tp, d)
                    if v is not None and bad is None:
                        bad = [M.name, N.name] + list(v)
    checks = [
        check("tensor-with-ring-preserves-order", iso_bad is None, iso_bad, count=n_iso),
        check("tensor-derivation", bad is None, bad, count=n_pairs),
    ]
    return [section(R.name, checks, data={"routes": dict(sorted(routes.items()))})]


# -- idempotent localization -------------------------------------------------------------

def idempotent_suite(corpus, idempotents=None):
    R = corpus.ring
    if idempotents is None:
        idempotents = [e for e in central_idempotents(R) if e not in (R.zero, R.one)]
    out = []
    for e in idempotents:
        modules = corpus.right_modules
        derivs = {id(M): corpus.module_derivations(M) for M in modules}
        F, raw = idempotent_demo(R, e, modules, derivs)
        merged = {}
        for c in raw:
            name = c["name"].split("[")[0]
            entry = merged.setdefault(name, [0, None])
            entry[0] += 1
            if not c["pass"] and entry[1] is None:
                entry[1] = [c["name"], c["witness"]]
        checks = [check(name, w is None, w, count=n) for name, (n, w) in merged.items()]
        bad = check_gabriel_axioms(R, F, corpus.lattice)
        checks.append(check("gabriel-axioms", bad is None, None if bad is None else _axiom_witness(R, bad)))
        ok, info = is_differential_filter(F, corpus.derivations)
        checks.append(check("differential", ok, None if ok else ideal_hex(info)))
        regular = corpus.right_modules[0]
        data = {"idempotent": e, "regularTorsion": members(torsion_bits(regular, F))}
        out.append(section(R.name, checks, F.describe(), data))
    return out
