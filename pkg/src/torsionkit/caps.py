"""Size caps for the finite computations.

Defaults can be overridden through the ``TORSIONKIT_CAPS`` environment
variable, e.g. ``TORSIONKIT_CAPS="ring_order=32,search_budget=100000"``.
"""

import os
from dataclasses import dataclass, fields, replace

from .errors import SpecFileError

ENV_VAR = "TORSIONKIT_CAPS"


@dataclass(frozen=True)
class Caps:
    ring_order: int = 64
    module_order: int = 256
    tensor_order: int = 4096
    lattice_size: int = 12
    search_budget: int = 2_000_000

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not isinstance(v, int) or v <= 0:
                raise SpecFileError(f"cap {f.name} must be a positive integer, got {v!r}")

    def with_overrides(self, overrides):
        known = {f.name for f in fields(self)}
        for key in overrides:
            if key not in known:
                raise SpecFileError(f"unknown cap key {key!r}")
        return replace(self, **overrides)

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def parse_caps(text):
    """Parse ``key=value[,key=value...]`` into a dict of ints."""
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        if not sep:
            raise SpecFileError(f"malformed cap entry {part!r}")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise SpecFileError(f"cap {key.strip()!r} needs an integer value") from None
    return out


def caps_from_env(environ=None):
    environ = os.environ if environ is None else environ
    text = environ.get(ENV_VAR, "")
    return Caps().with_overrides(parse_caps(text)) if text else Caps()

