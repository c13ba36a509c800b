"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings call each backend module directly; the end-to-end rows run
the CLI in a subprocess with and without TORSIONKIT_PURE_PYTHON=1.
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from torsionkit import _pykernels
from torsionkit.corpus import builtin_ring

try:
    from torsionkit import _ckernels
except ImportError:
    _ckernels = None


def kernel_cases(rng):
    cases = []
    for name in ("m2f2", "t3f2"):
        R = builtin_ring(name)
        add = [list(r) for r in R.add]
        mul = [list(r) for r in R.mul]
        cases.append((f"ring_violation {name}",
                      lambda b, add=add, mul=mul, R=R: b.ring_violation(
                          b.prepare_table(add), b.prepare_table(mul), R.zero, R.one)))
        start = [-1] * R.order
        start[R.zero] = start[R.one] = R.zero
        x0, v0 = 3, 5

        def close(b, add=add, mul=mul, start=start, x0=x0, v0=v0):
            return b.close_ring(b.prepare_table(add), b.prepare_table(mul), b.prepare_vec(start), x0, v0)
        cases.append((f"close_ring {name}", close))
    a = [rng.randint(-100, 100) for _ in range(17)]
    b = [rng.randint(-100, 100) for _ in range(17)]
    cases.append(("gcd_degree_mod_p deg 16",
                  lambda k: k.gcd_degree_mod_p(a, b, 2**31 - 1)))
    return cases


def time_call(fn, repeat):
    n, _ = timeit.Timer(fn).autorange()
    best = min(timeit.Timer(fn).repeat(repeat, n))
    return best / n


def end_to_end(argv, pure):
    env = dict(os.environ)
    if pure:
        env["TORSIONKIT_PURE_PYTHON"] = "1"
    else:
        env.pop("TORSIONKIT_PURE_PYTHON", None)
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "torsionkit.cli", *argv, "-q"], env=env,
                          capture_output=True, text=True)
    elapsed = time.perf_counter() - t0
    if proc.returncode != 0:
        raise SystemExit(f"{' '.join(argv)} exited {proc.returncode}: {proc.stderr}")
    return elapsed


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--skip-cli", action="store_true", help="kernel timings only")
    args = p.parse_args()
    if _ckernels is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1
    rng = random.Random(0)
    print(f"{'kernel':32} {'cython':>12} {'python':>12} {'speedup':>8}")
    for label, fn in kernel_cases(rng):
        tc = time_call(lambda: fn(_ckernels), args.repeat)
        tp = time_call(lambda: fn(_pykernels), args.repeat)
        print(f"{label:32} {tc * 1e6:10.1f}us {tp * 1e6:10.1f}us {tp / tc:7.1f}x")
    if args.skip_cli:
        return 0
    print()
    print(f"{'command':32} {'cython':>12} {'python':>12} {'speedup':>8}")
    for argv in (["derivations", "--ring", "builtin:m2f2"],
                 ["goldie-lemmas", "--ring", "builtin:t2f2"],
                 ["symbolic", "--cases", "300"]):
        tc = end_to_end(argv, pure=False)
        tp = end_to_end(argv, pure=True)
        print(f"{' '.join(argv):32} {tc:11.2f}s {tp:11.2f}s {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
