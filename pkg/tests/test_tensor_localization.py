from math import gcd

import pytest

from torsionkit.corpus import builtin_ring
from torsionkit.derivations import ModuleDerivation, enumerate_module_derivations, zero_derivation
from torsionkit.errors import IllFormed, NotCentral
from torsionkit.localization import corner_ring, extend_to_corner, idempotent_demo
from torsionkit.modules import make_cyclic, make_ideal_module, make_regular_bimodule, make_regular_module
from torsionkit.rings import bits_of, enumerate_right_ideals, make_zmod, popcount
from torsionkit.tensor import (
    cyclic_decomposition,
    simple_tensor_violation,
    tensor_derivation,
    tensor_over_ring,
)


def zero_md(M):
    return ModuleDerivation((M.zero,) * M.order, zero_derivation(M.ring), M)


@pytest.mark.parametrize("name", ["zmod4", "zmod6", "t2f2", "m2f2"])
def test_tensor_with_ring(name, corpora):
    c = corpora[name]
    for M in c.right_modules:
        tp = tensor_over_ring(M, c.regular_bimodule)
        assert tp.module.order == M.order
        # m -> m (x) 1 is a bijection
        assert len({int(tp.beta[m, c.ring.one]) for m in M.elements}) == M.order


def test_commutative_cyclic_tensor():
    # R/I (x) R/J = R/(I + J) for commutative R
    Z = make_zmod(12, cap=12)
    L = enumerate_right_ideals(Z)
    for I in L:
        for J in L:
            if popcount(J) == 1:
                continue
            N = make_ideal_module(Z, J, bimodule=True)
            tp = tensor_over_ring(make_cyclic(Z, I), N)
            # Z/12 / aZ/12 (x) J is J / aJ, of order gcd(a, |J|)
            a = 12 // popcount(I)
            assert tp.module.order == gcd(a, popcount(J))


def test_coprime_ideals_tensor_to_zero():
    Z6 = make_zmod(6)
    M = make_ideal_module(Z6, bits_of([0, 2, 4]))
    N = make_ideal_module(Z6, bits_of([0, 3]), bimodule=True)
    assert tensor_over_ring(M, N).module.order == 1


def test_balanced():
    R = builtin_ring("t2f2")
    M = make_regular_module(R)
    N = make_regular_bimodule(R)
    tp = tensor_over_ring(M, N)
    for m in M.elements:
        for r in R.elements:
            for n in N.elements:
                assert tp.beta[M.act[m][r], n] == tp.beta[m, N.lact[r][n]]


def test_routes_agree():
    R = builtin_ring("t2f2")
    for I in enumerate_right_ideals(R):
        M = make_cyclic(R, I)
        a = tensor_over_ring(M, make_regular_bimodule(R), method="zgroup")
        b = tensor_over_ring(M, make_regular_bimodule(R), method="presentation")
        assert a.module.order == b.module.order == M.order


def test_cyclic_decomposition():
    Z = make_zmod(12, cap=12)
    basis, coords = cyclic_decomposition(Z.add, Z.zero)
    size = 1
    for _, order in basis:
        size *= order
    assert size == 12


def test_tensor_derivation_examples(corpora):
    c = corpora["t2f2"]
    R = c.ring
    M = c.right_modules[0]
    B = c.regular_bimodule
    tp = tensor_over_ring(M, B)
    d = tensor_derivation(tp, zero_md(M), zero_md(B))
    assert set(d.table) == {tp.module.zero}
    for dN in c.two_sided_derivations(B):
        for dM in enumerate_module_derivations(M, dN.delta):
            d = tensor_derivation(tp, dM, dN)
            assert simple_tensor_violation(tp, d) is None
            # d(m (x) 1) = d_M(m) (x) 1 + m (x) d_N(1)
            add = tp.module.add
            for m in M.elements:
                want = add[tp.beta[dM.table[m], R.one]][tp.beta[m, dN.table[R.one]]]
                assert d.table[tp.beta[m, R.one]] == want


def test_tensor_derivation_z6():
    Z6 = make_zmod(6)
    M = make_regular_module(Z6)
    N = make_ideal_module(Z6, bits_of([0, 2, 4]), bimodule=True)
    tp = tensor_over_ring(M, N)
    d = tensor_derivation(tp, zero_md(M), zero_md(N))
    assert simple_tensor_violation(tp, d) is None


def test_tensor_derivation_rejects_mismatch(corpora):
    c = corpora["m2f2"]
    M = c.right_modules[0]
    B = c.regular_bimodule
    tp = tensor_over_ring(M, B)
    ders = c.derivations
    dM = enumerate_module_derivations(M, ders[1])[0]
    dN = enumerate_module_derivations(B, ders[0])[0]
    with pytest.raises(IllFormed):
        tensor_derivation(tp, dM, dN)


def test_one_sided_derivation_is_not_well_defined(corpora):
    c = corpora["m2f2"]
    M = c.right_modules[0]
    B = c.regular_bimodule
    tp = tensor_over_ring(M, B)
    two_sided = {d.table for d in c.two_sided_derivations(B)}
    one_sided = [d for d in c.module_derivations(B) if d.table not in two_sided]
    assert one_sided
    with pytest.raises(IllFormed):
        tensor_derivation(tp, enumerate_module_derivations(M, one_sided[0].delta)[0], one_sided[0])


def test_corner_ring():
    Z6 = make_zmod(6)
    S = corner_ring(Z6, 4)
    assert S.order == 3 and S.embedding == (0, 2, 4)
    assert corner_ring(Z6, 0).order == 1
    with pytest.raises(NotCentral):
        corner_ring(builtin_ring("t2f2"), 4)
    S, dS = extend_to_corner(Z6, 4, zero_derivation(Z6))
    assert set(dS.table) == {S.zero}


@pytest.mark.parametrize("name,e", [("zmod6", 4), ("zmod6", 3), ("f2xf2", 1), ("f2xf2", 2)])
def test_idempotent_demo(name, e, corpora):
    c = corpora[name]
    modules = c.right_modules
    F, checks = idempotent_demo(c.ring, e, modules, {id(M): c.module_derivations(M) for M in modules})
    assert checks and all(ch["pass"] for ch in checks)
