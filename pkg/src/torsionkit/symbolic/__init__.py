"""Exact Q[x] -> Q(x) and Z -> Q localization."""

from .extension import (
    check_commutation,
    extend_derivation,
    extend_from_representation,
    extend_module_derivation,
    extend_with_data,
    quotient_rule,
    random_ratfunc,
    symbolic_suite,
    uniqueness_probe,
)
from .parse import ParseError, parse_poly, parse_ratfunc
from .poly import Poly, poly_derive, poly_gcd
from .ratfunc import RatFunc, to_string
from .zq import parse_group, zq_demo
