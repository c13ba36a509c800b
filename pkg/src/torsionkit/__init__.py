"""Finite rings, derivations, Gabriel filters and torsion, checked exhaustively."""

__version__ = "0.1.0"

from .caps import Caps, caps_from_env
from .derivations import enumerate_module_derivations, enumerate_ring_derivations
from .filters import (
    GabrielFilter,
    check_gabriel_axioms,
    enumerate_gabriel_filters,
    extension_filter,
    goldie_filter,
    lambek_filter,
)
from .kernels import BACKEND
from .modules import make_cyclic, make_direct_sum, make_regular_bimodule, make_regular_module
from .rings import FiniteRing, enumerate_right_ideals, make_matrix, make_product, make_triangular, make_zmod, validate_ring
from .torsion import is_differential_filter, torsion_submodule
