"""Command-line entry point: ``torsionkit [options] COMMAND [options]``.

Exit status is 0 when every check passes, 1 when some check reports a
violation and 2 on usage or input errors.
"""

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .caps import Caps, caps_from_env, parse_caps
from .corpus import DEFAULT_CORPUS, RingCorpus
from .errors import NoWitness, TorsionKitError
from .report import build_report, check, emit_report, section
from .specfiles import load_module, resolve_ring
from .torsion import lambek_witness
from .symbolic.extension import extend_derivation, extend_module_derivation, symbolic_suite, uniqueness_probe
from .symbolic.parse import ParseError, parse_ratfunc
from .symbolic.poly import Poly
from .symbolic.zq import parse_group, zq_demo
from . import suites

COMMANDS = (
    "ideals", "filters", "derivations", "check-differential", "goldie-lemmas",
    "lambek-witness", "symbolic", "zq-demo", "sweep",
)
RING_COMMANDS = set(COMMANDS) - {"symbolic", "zq-demo", "sweep"}
CONFIG_KEYS = {"ring", "module", "seed", "caps", "corpus", "cases", "output"}
SEED_LIMIT = 1 << 64


class UsageError(TorsionKitError):
    pass


@dataclass
class RunConfig:
    command: str
    rings: list = field(default_factory=list)
    modules: list = field(default_factory=list)
    module_corpus: str = "default"
    caps: Caps = field(default_factory=Caps)
    seed: int = 0
    output: str = None
    options: dict = field(default_factory=dict)

    def echo(self):
        out = {
            "rings": list(self.rings),
            "modules": list(self.modules),
            "moduleCorpus": self.module_corpus,
            "caps": self.caps.as_dict(),
            "seed": self.seed,
        }
        out.update({k: v for k, v in sorted(self.options.items()) if v is not None})
        return out


# -- argument parsing ----------------------------------------------------------------

CAP_FLAGS = (
    ("--ring-order", "ring_order", "largest ring accepted (default 64)"),
    ("--module-order", "module_order", "largest module built (default 256)"),
    ("--tensor-order", "tensor_order", "largest intermediate group in tensor products (default 4096)"),
    ("--lattice-size", "lattice_size", "largest ideal lattice for filter enumeration (default 12)"),
    ("--search-budget", "search_budget", "backtracking steps per derivation search (default 2000000)"),
)


def _add_common(p, pre=""):
    sup = argparse.SUPPRESS
    p.add_argument("--ring", dest=pre + "ring", action="append", default=sup, metavar="REF",
                   help="builtin:NAME or a ring spec file; repeatable")
    p.add_argument("--module", dest=pre + "module", action="append", default=sup, metavar="FILE",
                   help="module spec file added to the corpus; repeatable")
    p.add_argument("--seed", dest=pre + "seed", default=sup, metavar="N", help="random seed (0 <= seed < 2**64)")
    p.add_argument("--output", "-o", dest=pre + "output", default=sup, metavar="PATH",
                   help="write the JSON report here ('-' for stdout)")
    p.add_argument("--caps", dest=pre + "caps", default=sup, metavar="K=V,...",
                   help="cap overrides, same syntax as TORSIONKIT_CAPS")
    p.add_argument("--config", dest=pre + "config", default=sup, metavar="FILE",
                   help="key=value file with ring, module, seed, caps, corpus, cases, output")
    p.add_argument("--timing", dest=pre + "timing", action="store_true", default=sup,
                   help="add wall-clock timings to the report (breaks byte-determinism)")
    p.add_argument("--quiet", "-q", dest=pre + "quiet", action="store_true", default=sup,
                   help="only print the summary line")
    for flag, key, text in CAP_FLAGS:
        p.add_argument(flag, dest=pre + key, type=int, default=sup, metavar="N", help=text)


class _Parser(argparse.ArgumentParser):
    # prefix matching would make --r ambiguous with --ring
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="torsionkit", description="Exhaustive checks of torsion theories and derivations on finite rings.",
                epilog="Caps can also be set with TORSIONKIT_CAPS=key=value,...; flags take precedence.")
    p.add_argument("--version", action="version", version=f"torsionkit {__version__}")
    _add_common(p, pre="g_")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    helps = {
        "ideals": "right ideal lattice with dense/essential flags",
        "filters": "Lambek, Goldie and extension filters with axiom checks",
        "derivations": "ring (and module) derivation enumerations",
        "check-differential": "differential filters and the d(TM) in TM criterion",
        "goldie-lemmas": "the Goldie star-set lemma chain",
        "lambek-witness": "two-step witnesses for dense annihilators",
        "symbolic": "Q[x] -> Q(x) derivation extension checks",
        "zq-demo": "classical torsion of a finitely generated abelian group",
        "sweep": "everything over the builtin corpus",
    }
    subs = {}
    for name in COMMANDS:
        sp = sub.add_parser(name, help=helps[name], description=helps[name])
        _add_common(sp)
        subs[name] = sp
    subs["filters"].add_argument("--idempotent", type=int, action="append",
                                 help="central idempotent for an extension filter; repeatable")
    subs["filters"].add_argument("--family", metavar="HEX,...",
                                 help="check an arbitrary family of right ideals (hex bitsets)")
    lw = subs["lambek-witness"]
    for flag in ("--x", "--r", "--s", "--derivation"):
        lw.add_argument(flag, type=int, help="element index (derivation: index into the module's list)")
    subs["symbolic"].add_argument("--cases", type=int, help="random cases (default 1000)")
    subs["symbolic"].add_argument("--expr", action="append", help="also differentiate this rational function")
    subs["sweep"].add_argument("--corpus", help="builtin corpus name (only 'default')")
    subs["sweep"].add_argument("--cases", type=int, help="symbolic cases (default 1000)")
    zq = subs["zq-demo"]
    zq.add_argument("--group", default="Z + Z/4", help="e.g. 'Z^2 + Z/2 + Z/4' (default 'Z + Z/4')")
    zq.add_argument("--matrix", help="endomorphism on generators, rows ';'-separated, e.g. '0,1;0,0'")
    return p


def _read_config_file(path):
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
        value = value.strip()
        if key in ("ring", "module"):
            out.setdefault(key, []).append(value)
        else:
            out[key] = value
    return out


def _seed(text):
    try:
        seed = int(text)
    except (TypeError, ValueError):
        raise UsageError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= seed < SEED_LIMIT:
        raise UsageError("seed must satisfy 0 <= seed < 2**64")
    return seed


def parse_config(argv, environ=None):
    """Validated :class:`RunConfig` from command-line arguments."""
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise UsageError(f"missing subcommand; choose one of {', '.join(COMMANDS)}")
    ns = vars(args)

    def get(key, default=None):
        if key in ns:
            return ns[key]
        return ns.get("g_" + key, default)

    filed = _read_config_file(get("config")) if get("config") else {}
    rings = filed.get("ring", []) + ns.get("g_ring", []) + ns.get("ring", [])
    modules = filed.get("module", []) + ns.get("g_module", []) + ns.get("module", [])

    try:
        caps = caps_from_env(environ)
        overrides = {}
        if "caps" in filed:
            overrides.update(parse_caps(filed["caps"]))
        if get("caps"):
            overrides.update(parse_caps(get("caps")))
        for _, key, _ in CAP_FLAGS:
            if get(key) is not None:
                overrides[key] = get(key)
        caps = caps.with_overrides(overrides)
    except TorsionKitError as exc:
        raise UsageError(str(exc)) from None

    seed = _seed(get("seed", filed.get("seed", 0)))
    cfg = RunConfig(args.command, rings, modules, caps=caps, seed=seed,
                    output=get("output", filed.get("output")))
    cfg.options["timing"] = bool(get("timing", False))
    cfg.options["quiet"] = bool(get("quiet", False))

    cmd = args.command
    if cmd in RING_COMMANDS and not rings:
        raise UsageError(f"{cmd} needs key 'ring' (--ring builtin:NAME or FILE)")
    if cmd == "sweep":
        corpus = ns.get("corpus") or filed.get("corpus", "default")
        if corpus != "default":
            raise UsageError(f"unknown value for key 'corpus': {corpus!r}")
        cfg.options["corpus"] = corpus
        if not rings:
            cfg.rings = [f"builtin:{name}" for name in DEFAULT_CORPUS]
    if cmd in ("symbolic", "sweep"):
        cases = ns.get("cases")
        if cases is None:
            try:
                cases = int(filed.get("cases", 1000))
            except ValueError:
                raise UsageError("key 'cases' needs an integer") from None
        if cases < 0:
            raise UsageError("key 'cases' must be non-negative")
        cfg.options["cases"] = cases
    if cmd == "symbolic":
        cfg.options["expr"] = ns.get("expr")
    if cmd == "filters":
        cfg.options["idempotent"] = ns.get("idempotent")
        cfg.options["family"] = ns.get("family")
    if cmd == "lambek-witness":
        for k in ("x", "r", "s", "derivation"):
            cfg.options[k] = ns.get(k)
    if cmd == "zq-demo":
        cfg.options["group"] = ns["group"]
        cfg.options["matrix"] = ns.get("matrix")
    return cfg


# -- running ------------------------------------------------------------------------

def _corpora(cfg):
    out = []
    for ref in cfg.rings:
        R = resolve_ring(ref, cap=cfg.caps.ring_order)
        c = RingCorpus(R, ref, cfg.caps)
        for mref in cfg.modules:
            c.add_module(load_module(mref, R, cap=cfg.caps.module_order))
        out.append(c)
    return out


def _parse_family(text, R):
    try:
        fam = [int(tok, 16) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"key 'family' needs hex bitsets, got {text!r}") from None
    bad = [format(I, "x") for I in fam if I >> R.order]
    if bad:
        raise UsageError(f"family members out of range for {R.name}: {bad}")
    return frozenset(fam)


def _symbolic_sections(cases, seed, exprs=None):
    res = symbolic_suite(cases=cases, seed=seed)
    n, k = res["cases"], res["module_cases"]
    first = {}
    for f in res["failures"]:
        first.setdefault(f[0], f[1:])
    checks = [
        check("quotient-rule", res["quotient_rule_agreements"] == n, first.get("quotient-rule"),
              count=res["quotient_rule_agreements"]),
        check("leibniz", res["leibniz"] == n, first.get("leibniz"), count=res["leibniz"]),
        check("additivity", res["additivity"] == n, first.get("additive"), count=res["additivity"]),
        check("uniqueness", res["uniqueness"] == n, first.get("uniqueness"), count=res["uniqueness"]),
        check("representation-independence", res["representation_independence"] == n,
              first.get("representation"), count=res["representation_independence"]),
        check("phi-commutation", res["phi_commutation"] == k, first.get("phi-commutation"),
              count=res["phi_commutation"]),
    ]
    # fixed values
    fixed = [("1/x", "(-1)/(x^2)"), ("x/(x+1)", "(1)/(x^2 + 2*x + 1)"), ("2x/(2x^2)", "(-1)/(x^2)"),
             ("x^2+1", "2*x")]
    fixed_bad = None
    for src, want in fixed:
        got = str(extend_derivation(parse_ratfunc(src)))
        if got != want or str(uniqueness_probe(parse_ratfunc(src))) != want:
            fixed_bad = fixed_bad or [src, want, got]
    zero = [[Poly(), Poly()], [Poly(), Poly()]]
    vec = [str(v) for v in extend_module_derivation([parse_ratfunc("1/x"), parse_ratfunc("x")], zero)]
    if vec != ["(-1)/(x^2)", "1"]:
        fixed_bad = fixed_bad or ["(1/x, x)", ["(-1)/(x^2)", "1"], vec]
    checks.append(check("fixed-examples", fixed_bad is None, fixed_bad, count=len(fixed) + 1))
    data = {"seed": seed, "cases": n, "moduleCases": k}
    if exprs:
        data["derivatives"] = []
        for e in exprs:
            q = parse_ratfunc(e)
            data["derivatives"].append({"input": e, "canonical": str(q), "derivative": str(extend_derivation(q))})
    return [section("Q(x)", checks, data=data)]


def _parse_matrix(text):
    if text is None:
        return None
    try:
        return [[int(v) for v in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise UsageError(f"key 'matrix' needs integers, got {text!r}") from None


ZQ_EXAMPLES = (("Z + Z/4", None), ("Z/6", None), ("Z^2", "0,1;0,0"), ("Z + Z/2 + Z/4", "3,0,0;0,1,0;0,2,1"))


def _zq_sections(seed, examples=ZQ_EXAMPLES):
    out = []
    for group, matrix in examples:
        rank, inv = parse_group(group)
        res = zq_demo(rank, inv, _parse_matrix(matrix), seed=seed)
        checks = [check(c["name"], c["pass"], c.get("witness")) for c in res["checks"]]
        data = {k: res[k] for k in ("group", "torsion", "moduleOfQuotients", "extension")}
        data["input"] = {"group": group, "matrix": matrix}
        out.append(section("Z", checks, data=data))
    return out


def _lambek_single(c, cfg):
    o = cfg.options
    if not cfg.modules:
        raise UsageError("lambek-witness with --x needs key 'module'")
    M = c.right_modules[-1]
    ders = c.module_derivations(M)
    k = o["derivation"] or 0
    if not 0 <= k < len(ders):
        raise UsageError(f"key 'derivation' out of range: {len(ders)} derivations")
    R = c.ring
    for key in ("x", "r", "s"):
        limit = M.order if key == "x" else R.order
        if o[key] is None or not 0 <= o[key] < limit:
            raise UsageError(f"key {key!r} must be given and in range")
    try:
        t1, t2, t = lambek_witness(M, ders[k], o["x"], o["r"], o["s"])
    except NoWitness as exc:
        return [section(R.name, [check("lambek-witness", False, str(exc))])]
    return [section(R.name, [check("lambek-witness", True, [t1, t2, t])],
                    data={"module": M.name, "derivation": k, "t1": t1, "t2": t2, "t": t})]


def run_command(cfg):
    """Run one command; returns ``(report, timings)``."""
    cmd = cfg.command
    timings = {}
    sections = []

    def timed(label, fn, *a, **kw):
        t0 = time.perf_counter()
        res = fn(*a, **kw)
        timings[label] = timings.get(label, 0.0) + time.perf_counter() - t0
        return res

    if cmd == "symbolic":
        sections += timed("symbolic", _symbolic_sections, cfg.options["cases"], cfg.seed, cfg.options.get("expr"))
    elif cmd == "zq-demo":
        o = cfg.options
        sections += timed("zq", _zq_sections, cfg.seed, ((o["group"], o["matrix"]),))
    else:
        for c in _corpora(cfg):
            if cmd == "ideals":
                sections += timed("ideals", suites.ideals_suite, c)
            elif cmd == "filters":
                fam = cfg.options.get("family")
                fam = None if fam is None else _parse_family(fam, c.ring)
                sections += timed("filters", suites.filters_suite, c, cfg.options.get("idempotent"), fam)
            elif cmd == "derivations":
                M = c.right_modules[-1] if cfg.modules else None
                sections += timed("derivations", suites.derivations_suite, c, M)
            elif cmd == "check-differential":
                sections += timed("differential", suites.differential_suite, c)
            elif cmd == "goldie-lemmas":
                sections += timed("goldie", suites.goldie_suite, c)
            elif cmd == "lambek-witness":
                if cfg.options.get("x") is not None:
                    sections += _lambek_single(c, cfg)
                else:
                    sections += timed("lambek", suites.lambek_suite, c)
            elif cmd == "sweep":
                for label, fn in (
                    ("ideals", suites.ideals_suite),
                    ("filters", suites.filters_suite),
                    ("derivations", suites.derivations_suite),
                    ("differential", suites.differential_suite),
                    ("goldie", suites.goldie_suite),
                    ("lambek", suites.lambek_suite),
                    ("tensor", suites.tensor_suite),
                    ("idempotent", suites.idempotent_suite),
                ):
                    sections += timed(label, fn, c)
        if cmd == "sweep":
            sections += timed("symbolic", _symbolic_sections, cfg.options["cases"], cfg.seed)
            sections += timed("zq", _zq_sections, cfg.seed)
    echo = cfg.echo()
    for k in ("timing", "quiet", "expr"):
        echo.pop(k, None)
    report = build_report(cmd, echo, sections)
    if cfg.options.get("timing"):
        report["timing"] = {k: round(v, 6) for k, v in sorted(timings.items())}
    return report, timings


def summarize(report, timings, out, quiet=False):
    by_ring = {}
    for s in report["results"]:
        stats = by_ring.setdefault(s["ring"], [0, 0])
        for c in s["checks"]:
            stats[0] += 1
            stats[1] += not c["pass"]
    if not quiet:
        verbose = report["command"] != "sweep"
        for s in report["results"]:
            tag = s["ring"] + (f" [{s['filter']['label']}]" if s["filter"] else "")
            for c in s["checks"]:
                if verbose or not c["pass"]:
                    count = f" ({c['count']})" if "count" in c else ""
                    wit = f" witness={c['witness']}" if "witness" in c else ""
                    print(f"{tag}: {c['name']} {'PASS' if c['pass'] else 'FAIL'}{count}{wit}", file=out)
        if not verbose:
            for ring, (n, bad) in by_ring.items():
                print(f"{ring}: {n} checks, {bad} failed", file=out)
    sm = report["summary"]
    total = sum(timings.values())
    print(f"{report['command']}: {sm['checks']} checks, {sm['failed']} failed ({total:.2f}s)", file=out)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        report, timings = run_command(cfg)
        out = sys.stderr if cfg.output == "-" else sys.stdout
        summarize(report, timings, out, cfg.options.get("quiet"))
        if cfg.output:
            emit_report(report, cfg.output)
    except (TorsionKitError, ParseError) as exc:
        print(f"torsionkit: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"torsionkit: error: {exc}", file=sys.stderr)
        return 2
    return report["summary"]["exitCode"]


if __name__ == "__main__":
    sys.exit(main())
