import pytest

from smashcoh.hopf import KP_LABELS, kac_paljutkin
from smashcoh.kacqp import kacqp_action
from smashcoh.koszul import (DualElement, KoszulDual, dual_action,
                             koszul_complex_check)
from smashcoh.qalgebra import SkewPolyAlgebra, quantum_plane
from smashcoh.rationals import ONE, ZERO, Rat

IDX = {lab: k for k, lab in enumerate(KP_LABELS)}


@pytest.fixture(scope="module")
def dual():
    return KoszulDual(quantum_plane(), 4)


def test_dual_dimensions(dual):
    assert [dual.dim(m) for m in range(4)] == [1, 2, 1, 0]
    assert dual.top_degree == 3


def test_dual_relations(dual):
    # u*^2 = v*^2 = 0 and u* v* = v* u*
    u, v = [ONE, ZERO], [ZERO, ONE]
    for g in (u, v):
        _, coords = dual.multiply(1, g, 1, g)
        assert not any(coords)
    _, uv = dual.multiply(1, u, 1, v)
    _, vu = dual.multiply(1, v, 1, u)
    assert any(uv) and uv == vu


def test_dual_multiplication_associative_and_unital(dual):
    one = [ONE]
    u, v = [ONE, ZERO], [ZERO, ONE]
    _, left = dual.multiply(0, one, 1, u)
    _, right = dual.multiply(1, u, 0, one)
    assert list(left) == list(u) and list(right) == list(u)
    # (u* v*) v* = u* (v* v*) = 0
    _, uv = dual.multiply(1, u, 1, v)
    _, lhs = dual.multiply(2, uv, 1, v)
    _, vv = dual.multiply(1, v, 1, v)
    assert not any(lhs) and not any(vv)


def test_commutative_plane_dual_is_exterior():
    A = SkewPolyAlgebra(("u", "v"), ((ZERO, ONE), (ZERO, ZERO)))
    d = KoszulDual(A, 4)
    assert [d.dim(m) for m in range(4)] == [1, 2, 1, 0]
    # in the exterior algebra u* v* = -v* u*
    _, uv = d.multiply(1, [ONE, ZERO], 1, [ZERO, ONE])
    _, vu = d.multiply(1, [ZERO, ONE], 1, [ONE, ZERO])
    assert [c for c in uv] == [-c for c in vu]


def test_three_generator_dual_dimensions():
    A = SkewPolyAlgebra(("a", "b", "c"),
                        ((ZERO, Rat(2), Rat(-1)),
                         (ZERO, ZERO, Rat(3)),
                         (ZERO, ZERO, ZERO)))
    d = KoszulDual(A, 5)
    assert [d.dim(m) for m in range(5)] == [1, 3, 3, 1, 0]


def test_dual_action_closed_forms():
    act = kacqp_action(Rat(2))
    dual = KoszulDual(act.algebra, 4)
    dact = dual_action(dual, act.hopf, act.gen_action)
    q = Rat(2)
    z = {IDX["z"]: ONE}
    # u* <| z = q v*, v* <| z = q^{-1} u*
    got = dact.apply(DualElement(1, (ONE, ZERO)), z)
    assert list(got.coords) == [ZERO, q]
    got = dact.apply(DualElement(1, (ZERO, ONE)), z)
    assert list(got.coords) == [ONE / q, ZERO]
    # u* v* <| z = u* v*
    got = dact.apply(DualElement(2, (ONE,)), z)
    assert list(got.coords) == [ONE]


def test_dual_action_is_right_action():
    from smashcoh.hopf import h_mult
    act = kacqp_action(Rat(3))
    dual = KoszulDual(act.algebra, 4)
    dact = dual_action(dual, act.hopf, act.gen_action)
    H = act.hopf
    elem = DualElement(1, (Rat(2), Rat(-1)))
    for k1 in range(8):
        for k2 in range(8):
            seq = dact.apply(dact.apply(elem, {k1: ONE}), {k2: ONE})
            prod = dact.apply(elem, h_mult(H, {k1: ONE}, {k2: ONE}))
            assert seq == prod


def test_koszul_complex_exact_quantum_plane():
    rep = koszul_complex_check(quantum_plane(), m_max=4, weight_max=6)
    assert rep.dsquared_ok
    assert rep.exact
    assert rep.dims_quotient == rep.dims_subspace


def test_koszul_complex_exact_commutative_plane():
    A = SkewPolyAlgebra(("u", "v"), ((ZERO, ONE), (ZERO, ZERO)))
    rep = koszul_complex_check(A, m_max=4, weight_max=5)
    assert rep.dsquared_ok and rep.exact


def test_koszul_complex_exact_one_generator():
    A = SkewPolyAlgebra(("t",), ((ZERO,),))
    rep = koszul_complex_check(A, m_max=3, weight_max=5)
    assert rep.dsquared_ok and rep.exact
