"""Builtin rings and the per-ring module corpus used by sweeps."""

import re
from functools import cached_property

from .derivations import (
    enumerate_module_derivations,
    enumerate_ring_derivations,
    inner_bimodule_derivation,
    left_derivation_violation,
)
from .errors import SpecFileError
from .modules import (
    make_cyclic,
    make_direct_sum,
    make_ideal_module,
    make_regular_bimodule,
    make_regular_module,
)
from .rings import (
    enumerate_right_ideals,
    is_two_sided,
    make_matrix,
    make_product,
    make_triangular,
    make_zmod,
    popcount,
)

DEFAULT_CORPUS = ("zmod2", "zmod3", "zmod4", "zmod6", "zmod8", "f2xf2", "t2f2", "m2f2")


def builtin_ring(name, cap=None):
    m = re.fullmatch(r"zmod(\d+)", name)
    if m:
        return make_zmod(int(m.group(1)), cap=cap)
    f2 = make_zmod(2)
    if name == "f2xf2":
        return make_product(f2, f2, cap=cap)
    if name == "t2f2":
        return make_triangular(f2, 2, cap=cap)
    if name == "m2f2":
        return make_matrix(f2, 2, cap=cap)
    if name == "t3f2":
        return make_triangular(f2, 3, cap=cap)
    raise SpecFileError(f"unknown builtin ring {name!r}")


class RingCorpus:
    """A ring plus the modules and derivations every sweep check runs over.

    Right modules: the regular module, R/I for every right ideal I, and
    R (+) R/I for the proper I of largest size.  The regular bimodule
    carries only its inner derivations.  Extra modules can be appended with
    :meth:`add_module`.
    """

    def __init__(self, ring, label=None, caps=None):
        self.ring = ring
        self.label = label or ring.name
        self.caps = caps
        self.extra = []

    def _budget(self):
        return None if self.caps is None else self.caps.search_budget

    def _mcap(self):
        return None if self.caps is None else self.caps.module_order

    @cached_property
    def lattice(self):
        return enumerate_right_ideals(self.ring)

    @cached_property
    def derivations(self):
        return enumerate_ring_derivations(self.ring, budget=self._budget())

    @cached_property
    def right_modules(self):
        R = self.ring
        cap = self._mcap()
        out = [make_regular_module(R, cap=cap)]
        out += [make_cyclic(R, I, cap=cap) for I in self.lattice]
        proper = [I for I in self.lattice if I != R.full]
        if proper:
            big = max(proper, key=lambda I: (popcount(I), -I))
            out.append(make_direct_sum(out[0], make_cyclic(R, big, cap=cap), cap=cap))
        return out + self.extra

    def add_module(self, M):
        self.extra.append(M)
        self.__dict__.pop("right_modules", None)

    @cached_property
    def regular_bimodule(self):
        return make_regular_bimodule(self.ring, cap=self._mcap())

    @cached_property
    def bimodules(self):
        """The regular bimodule and the proper nonzero two-sided ideals."""
        R = self.ring
        out = [self.regular_bimodule]
        for I in self.lattice:
            if I not in (R.full, R.zero_bit) and is_two_sided(R, I):
                out.append(make_ideal_module(R, I, bimodule=True, cap=self._mcap()))
        return out

    @cached_property
    def _module_derivations(self):
        return {}

    def module_derivations(self, M):
        """All delta-derivations of M over every ring derivation delta."""
        key = id(M)
        cache = self._module_derivations
        if key not in cache:
            out = []
            for delta in self.derivations:
                out.extend(enumerate_module_derivations(M, delta, budget=self._budget()))
            cache[key] = out
        return cache[key]

    def two_sided_derivations(self, N):
        """Derivations of the bimodule N that satisfy both Leibniz rules."""
        return [
            d for d in self.module_derivations(N)
            if left_derivation_violation(N, d.delta.table, d.table) is None
        ]

    @cached_property
    def inner_bimodule_derivations(self):
        B = self.regular_bimodule
        seen, out = set(), []
        for a in self.ring.elements:
            d = inner_bimodule_derivation(B, a)
            if d.table not in seen:
                seen.add(d.table)
                out.append(d)
        return out

    def derivation_pairs(self):
        """(module, derivation) pairs for the Bland criterion."""
        for M in self.right_modules:
            for d in self.module_derivations(M):
                yield M, d
        B = self.regular_bimodule
        for d in self.inner_bimodule_derivations:
            yield B, d

    def goldie_targets(self):
        """(module, derivations) pairs for the Goldie and Lambek suites."""
        out = [(M, self.module_derivations(M)) for M in self.right_modules]
        out.append((self.regular_bimodule, self.inner_bimodule_derivations))
        return out
