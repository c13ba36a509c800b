import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from torsionkit.errors import IllFormed, MalformedGroup, RankMismatch
from torsionkit.symbolic import (
    ParseError,
    Poly,
    RatFunc,
    check_commutation,
    extend_derivation,
    extend_from_representation,
    extend_module_derivation,
    extend_with_data,
    parse_group,
    parse_ratfunc,
    poly_derive,
    poly_gcd,
    quotient_rule,
    random_ratfunc,
    symbolic_suite,
    to_string,
    uniqueness_probe,
    zq_demo,
)

X = sympy.Symbol("x")


def sp_poly(p):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], X,
                      domain="QQ")


def to_sympy(q):
    """(numerator, denominator) as sympy polynomials over QQ."""
    return sp_poly(q.num), sp_poly(q.den)


def same(q, frac):
    n, d = to_sympy(q)
    return n * frac[1] == frac[0] * d


def s_add(a, b):
    return a[0] * b[1] + b[0] * a[1], a[1] * b[1]


def s_neg(a):
    return -a[0], a[1]


def s_mul(a, b):
    return a[0] * b[0], a[1] * b[1]


def s_div(a, b):
    return a[0] * b[1], a[1] * b[0]


def s_diff(a):
    n, d = a
    return n.diff(X) * d - n * d.diff(X), d * d


coeff = st.integers(-50, 50)
polys = st.lists(coeff, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfuncs = st.builds(RatFunc, polys, nonzero_polys)


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_gcd_matches_sympy(a, b):
    g = poly_gcd(a, b)
    if a.is_zero() and b.is_zero():
        assert g.is_zero()
        return
    assert sp_poly(g) == sympy.gcd(sp_poly(a), sp_poly(b)).monic()


@settings(max_examples=200, deadline=None)
@given(polys, polys, nonzero_polys)
def test_gcd_of_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    # c divides the gcd
    assert (g % c.monic()).is_zero()


@settings(max_examples=200, deadline=None)
@given(ratfuncs, ratfuncs)
def test_arithmetic_matches_sympy(p, q):
    sp, sq = to_sympy(p), to_sympy(q)
    assert same(p + q, s_add(sp, sq))
    assert same(p - q, s_add(sp, s_neg(sq)))
    assert same(p * q, s_mul(sp, sq))
    if not q.is_zero():
        assert same(p / q, s_div(sp, sq))


@settings(max_examples=200, deadline=None)
@given(ratfuncs)
def test_canonical_form(q):
    g = poly_gcd(q.num, q.den)
    assert g == Poly.const(1)
    assert q.den.lc == 1
    assert RatFunc(q.num * Poly([3, 1]), q.den * Poly([3, 1])) == q


@settings(max_examples=200, deadline=None)
@given(ratfuncs)
def test_extension_matches_sympy_derivative(q):
    dq = extend_derivation(q)
    assert same(dq, s_diff(to_sympy(q)))
    assert dq == quotient_rule(q)
    assert uniqueness_probe(q) == dq


@settings(max_examples=100, deadline=None)
@given(ratfuncs, nonzero_polys)
def test_representation_independence(q, c):
    assert extend_from_representation(q.num * c, q.den * c) == extend_derivation(q)


def test_extension_on_polynomials_is_derivative():
    p = Poly([1, 2, 3, 4])
    assert extend_derivation(RatFunc(p)) == RatFunc(poly_derive(p))
    assert extend_derivation(RatFunc(7)) == RatFunc(0)


def test_extend_with_data_with_two_terms():
    # q = 1/(x(x+1)); r_1 = x(x+1) and r_2 = x^2(x+1) both clear the denominator
    x = Poly.x()
    q = RatFunc(1, x * (x + 1))
    r1, r2 = x * (x + 1), x * (x + 1) * x
    # r1 * q1 + r2 * q2 = 1 with q1 = (1 - x)/(x(x+1)), q2 = 1/(x(x+1))
    q1 = RatFunc(Poly([1, -1]), x * (x + 1))
    q2 = RatFunc(1, x * (x + 1))
    assert RatFunc(r1) * q1 + RatFunc(r2) * q2 == RatFunc(1)
    assert extend_with_data(q, [(r1, q1), (r2, q2)]) == extend_derivation(q)


def test_extend_with_data_rejects_bad_data():
    x = Poly.x()
    q = RatFunc(1, x)
    with pytest.raises(ValueError):
        extend_with_data(q, [(Poly.const(1), RatFunc(1))])
    with pytest.raises(ValueError):
        extend_with_data(q, [(x, RatFunc(2))])


@pytest.mark.parametrize("text,expected", [
    ("1/x", "(-1)/(x^2)"),
    ("x/(x+1)", "(1)/(x^2 + 2*x + 1)"),
    ("2x/(2x^2)", "(-1)/(x^2)"),
    ("x^2+1", "2*x"),
    ("(x^2-1)/(x-1)", "1"),
    ("3", "0"),
])
def test_fixed_derivatives(text, expected):
    assert to_string(extend_derivation(parse_ratfunc(text))) == expected


@pytest.mark.parametrize("text", ["1/x", "(x^2 + 1)/(x - 2)", "x^3 - 2*x", "(-3*x)/(2*x^2 + 1)"])
def test_to_string_round_trip(text):
    q = parse_ratfunc(text)
    assert parse_ratfunc(to_string(q)) == q


def test_parser():
    x = Poly.x()
    assert parse_ratfunc("2x(x+1)") == RatFunc(x * (x + 1) * Poly.const(2))
    assert parse_ratfunc("-x^2") == RatFunc(-(x * x))
    assert parse_ratfunc("(x+1)^2") == RatFunc((x + 1) * (x + 1))
    assert parse_ratfunc("6/4") == RatFunc(Poly.const(Fraction(3, 2)))


@pytest.mark.parametrize("text", ["", "x+", "(x", "x/y", "1/0", "(x/2+1)/(3x)", "1/x/x", "x^100", "x^"])
def test_parser_errors(text):
    with pytest.raises(ParseError):
        parse_ratfunc(text)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc(1, 0)
    with pytest.raises(ZeroDivisionError):
        RatFunc(0).inverse()


def test_module_extension():
    x = Poly.x()
    A = [[Poly(), Poly()], [Poly(), Poly()]]
    out = extend_module_derivation([RatFunc(1, x), RatFunc(x)], A)
    assert out == [RatFunc(-1, x * x), RatFunc(1)]
    # A = [[0, 1], [0, 0]]: d(e_2) = e_1
    A = [[Poly(), Poly.const(1)], [Poly(), Poly()]]
    out = extend_module_derivation([RatFunc(0), RatFunc(1, x)], A)
    assert out == [RatFunc(1, x), RatFunc(-1, x * x)]


def test_module_commutation_random():
    rng = random.Random(3)
    for _ in range(50):
        k = rng.randint(1, 3)
        A = [[Poly([rng.randint(-5, 5) for _ in range(3)]) for _ in range(k)] for _ in range(k)]
        v = [Poly([rng.randint(-9, 9) for _ in range(4)]) for _ in range(k)]
        assert check_commutation(v, A)


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        extend_module_derivation([RatFunc(1)], [[Poly(), Poly()], [Poly(), Poly()]])
    with pytest.raises(RankMismatch):
        extend_module_derivation([], [])


def test_random_ratfunc_bounds():
    rng = random.Random(0)
    for _ in range(100):
        q = random_ratfunc(rng)
        assert q.num.degree <= 8 and q.den.degree <= 8


def test_symbolic_suite_small():
    out = symbolic_suite(cases=50, seed=11, module_cases=20)
    assert out["pass"] and out["failures"] == []
    assert out["quotient_rule_agreements"] == out["leibniz"] == out["uniqueness"] == 50
    assert out["phi_commutation"] == 20
    assert symbolic_suite(cases=20, seed=5) == symbolic_suite(cases=20, seed=5)


# -- Z -> Q ----------------------------------------------------------------------------

def test_parse_group():
    assert parse_group("Z^2 + Z/4") == (2, [4])
    assert parse_group("Z + Z/2 + Z/4") == (1, [2, 4])
    assert parse_group("Z/6") == (0, [6])
    for bad in ["Z/4 + Z/6", "Z/1", "Q", "Z^x", "Z/0"]:
        with pytest.raises(MalformedGroup):
            parse_group(bad)


def test_zq_demo_examples():
    out = zq_demo(1, [4])
    assert out["pass"]
    assert out["torsion"] == {"invariants": [4], "order": 4}
    assert out["moduleOfQuotients"] == {"field": "Q", "dimension": 1}
    assert out["extension"] == [["0"]]
    out = zq_demo(2, [], [[0, 1], [0, 0]])
    assert out["pass"] and out["extension"] == [["0", "1"], ["0", "0"]]
    out = zq_demo(0, [6])
    assert out["pass"] and out["moduleOfQuotients"]["dimension"] == 0
    assert zq_demo(1, [2, 4], [[3, 0, 0], [0, 1, 0], [0, 2, 1]])["pass"]


def test_zq_demo_rejects_bad_maps():
    with pytest.raises(RankMismatch):
        zq_demo(1, [4], [[1]])
    with pytest.raises(IllFormed):
        # the order-4 generator cannot hit the free part
        zq_demo(1, [4], [[0, 1], [0, 0]])
    with pytest.raises(IllFormed):
        # Z/2 -> Z/4 must land in 2Z/4
        zq_demo(0, [2, 4], [[0, 0], [1, 0]])
    with pytest.raises(MalformedGroup):
        zq_demo(0, [4, 6])
