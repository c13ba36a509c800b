"""Ring and module spec files.

Ring files are ``key=value`` lines (``#`` starts a comment)::

    name=Z6
    kind=zmod            # zmod | product | matrix | triangular | table
    params=6

``params`` by kind:

* ``zmod``: ``n``
* ``product``: two ring references
* ``matrix`` / ``triangular``: a ring reference and the size ``k``
* ``table``: the addition table then the multiplication table, row-major,
  whitespace separated (``order`` squared integers each).  Repeated
  ``params=`` lines are concatenated.  Optional ``zero=`` and ``one=``.

A ring reference is ``builtin:NAME`` or a path, relative to the file that
mentions it.

Module files start with ``module`` and use the same ``key=value`` syntax::

    module kind=cyclic ideal=5

``kind`` is ``regular``, ``cyclic`` (needs ``ideal=``, a hex bitset of a
right ideal) or ``sum`` (needs ``summands=a.mod,b.mod``, two module files).
"""

import shlex
from math import isqrt
from pathlib import Path

from .errors import SpecFileError
from .modules import make_cyclic, make_direct_sum, make_regular_module
from .rings import is_right_ideal, make_matrix, make_product, make_triangular, make_zmod, validate_ring

RING_KEYS = {"name", "kind", "params", "zero", "one"}
MODULE_KEYS = {"kind", "ideal", "summands", "name"}


def _pairs(text, source):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for tok in shlex.split(line):
            if tok == "module":
                yield lineno, "module", ""
                continue
            key, sep, value = tok.partition("=")
            if not sep:
                raise SpecFileError(f"{source}:{lineno}: expected key=value, got {tok!r}")
            yield lineno, key.strip(), value.strip()


def _parse_ring_lines(text, source):
    """Ring file fields; ``params`` may continue across tokens on one line."""
    fields = {"params": []}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise SpecFileError(f"{source}:{lineno}: expected key=value")
        if key not in RING_KEYS:
            raise SpecFileError(f"{source}:{lineno}: unknown key {key!r}")
        if key == "params":
            fields["params"].extend(value.split())
        elif key in fields:
            raise SpecFileError(f"{source}:{lineno}: duplicate key {key!r}")
        else:
            fields[key] = value.strip()
    return fields


def resolve_ring(ref, base_dir=None, cap=None, _stack=()):
    """A ring from ``builtin:NAME`` or a ring spec file path."""
    from .corpus import builtin_ring

    if ref.startswith("builtin:"):
        return builtin_ring(ref[len("builtin:"):], cap=cap)
    path = Path(ref)
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    path = path.resolve()
    if path in _stack:
        raise SpecFileError(f"cyclic ring reference through {path}")
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecFileError(f"cannot read ring spec {ref!r}: {exc}") from None
    return parse_ring_spec(text, source=str(path), base_dir=path.parent, cap=cap,
                           _stack=_stack + (path,))


def parse_ring_spec(text, source="<string>", base_dir=None, cap=None, _stack=()):
    f = _parse_ring_lines(text, source)
    kind = f.get("kind")
    params = f["params"]
    name = f.get("name", "")

    def sub(ref):
        return resolve_ring(ref, base_dir, cap, _stack)

    def need(k):
        if len(params) != k:
            raise SpecFileError(f"{source}: kind={kind} takes {k} params, got {len(params)}")

    try:
        if kind == "zmod":
            need(1)
            R = make_zmod(int(params[0]), cap=cap)
        elif kind == "product":
            need(2)
            R = make_product(sub(params[0]), sub(params[1]), cap=cap)
        elif kind in ("matrix", "triangular"):
            need(2)
            make = make_matrix if kind == "matrix" else make_triangular
            R = make(sub(params[0]), int(params[1]), cap=cap)
        elif kind == "table":
            nums = [int(v) for v in params]
            n = isqrt(len(nums) // 2)
            if n == 0 or 2 * n * n != len(nums):
                raise SpecFileError(f"{source}: table params must hold 2*n*n integers")
            add = [nums[i * n:(i + 1) * n] for i in range(n)]
            mul = [nums[n * n + i * n:n * n + (i + 1) * n] for i in range(n)]
            zero = int(f["zero"]) if "zero" in f else None
            one = int(f["one"]) if "one" in f else None
            R = validate_ring(add, mul, zero, one, name=name, cap=cap)
        else:
            raise SpecFileError(f"{source}: unknown ring kind {kind!r}")
    except ValueError as exc:
        raise SpecFileError(f"{source}: {exc}") from None
    if name:
        R.name = name
    return R


def parse_module_spec(text, ring, source="<string>", base_dir=None, cap=None):
    f = {}
    for lineno, key, value in _pairs(text, source):
        if key == "module":
            continue
        if key not in MODULE_KEYS:
            raise SpecFileError(f"{source}:{lineno}: unknown key {key!r}")
        f[key] = value
    kind = f.get("kind")
    if kind == "regular":
        M = make_regular_module(ring, cap=cap)
    elif kind == "cyclic":
        if "ideal" not in f:
            raise SpecFileError(f"{source}: cyclic module needs ideal=")
        try:
            I = int(f["ideal"], 16)
        except ValueError:
            raise SpecFileError(f"{source}: ideal must be a hex bitset") from None
        if I >> ring.order or not is_right_ideal(ring, I):
            raise SpecFileError(f"{source}: {f['ideal']} is not a right ideal of {ring.name}")
        M = make_cyclic(ring, I, cap=cap)
    elif kind == "sum":
        refs = [r for r in f.get("summands", "").split(",") if r]
        if len(refs) != 2:
            raise SpecFileError(f"{source}: sum needs summands=<file>,<file>")
        a, b = (load_module(r, ring, base_dir, cap) for r in refs)
        M = make_direct_sum(a, b, cap=cap)
    else:
        raise SpecFileError(f"{source}: unknown module kind {kind!r}")
    if "name" in f:
        M.name = f["name"]
    return M


def load_module(ref, ring, base_dir=None, cap=None):
    path = Path(ref)
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecFileError(f"cannot read module spec {ref!r}: {exc}") from None
    return parse_module_spec(text, ring, source=str(path), base_dir=path.parent, cap=cap)
