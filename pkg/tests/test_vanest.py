import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicrossed.coeff import SAYDModule
from bicrossed.cyclichom import bullet
from bicrossed.exactlin import Vec
from bicrossed.reduced import ReducedComplex
from bicrossed.vanest import (
    RelativeBicomplex,
    check_levi,
    check_pairing,
    check_relative,
    check_van_est,
    compute_relative_cohomology,
    star_action,
    theta_map,
    van_est,
)

from conftest import shipped
from oracles import dense_cohomology


@given(st.integers(0, 5), st.integers(0, 5))
def test_primitive_pairing(k, n):
    # f primitive with ⟨f, F⟩ = −1 pairs like a derivative at the identity
    P = shipped("e1-borel-sl2").pairing_context
    want = math.factorial(k) * (-1) ** k if k == n else 0
    assert P.eval_mono((k,), (n,)) == want


@given(st.integers(-3, 3), st.integers(0, 5))
def test_grouplike_pairing(k, n):
    # ⟨e, ·⟩ is the character X ↦ 1, so e^k pairs with X^n as k^n
    P = shipped("e3-laurent").pairing_context
    assert P.eval_mono((k,), (n,)) == k ** n


@pytest.mark.parametrize("name", ["e1-borel-sl2", "e3-laurent"])
def test_pairing_identities(name):
    assert check_pairing(shipped(name).pairing_context).ok


def test_broken_pairing_detected():
    P = shipped("e1-broken-pairing").pairing_context
    ids = set(check_pairing(P).identities())
    assert "pairing.balanced" in ids and "pairing.unit" not in ids


def test_theta_example(e1):
    P = e1.pairing_context
    c = Vec.unit((0, (), ((1,), (1,))))
    assert theta_map(P, c, [(1,), (1,)]) == {(0, ()): 1}
    assert theta_map(P, c, [(1,), (0,)]) == Vec()


def test_star_example(e1):
    mp, lh, P = e1.mp, e1.lh, e1.pairing_context
    vt = Vec.unit(((1,), (1,)))
    H = mp.U1.gen(0)
    assert star_action(mp, vt, H) == {((1,), (1,)): 4}
    # θ(H•c)(ṽ) = θ(c)(ṽ∗H) on c = f⊗f
    assert bullet(lh, H, Vec.unit(((1,), (1,)))) == {((1,), (1,)): 4}
    c = Vec.unit((0, (), ((1,), (1,))))
    assert theta_map(P, Vec({(0, (), ((1,), (1,))): 4}), [(1,), (1,)]) == theta_map(P, c, [(1,), (1,)]) * 4


def test_van_est_example(e1):
    RB = RelativeBicomplex(e1.mp, e1.module("trivial"))
    assert van_est(e1.pairing_context, RB, Vec.unit((0, (), ((1,),)))) == {(0, (), (0,)): -1}
    assert van_est(e1.pairing_context, RB, Vec.unit((0, (), ((0,),)))) == Vec()


def test_levi_validation(e1, e3):
    with pytest.raises(ValueError, match="derivations"):
        check_levi(e1.mp, [0])
    with pytest.raises(ValueError, match="range"):
        check_levi(e1.mp, [1])
    assert check_levi(e3.mp, [0]) == [0]


@pytest.mark.parametrize(
    "name, module, relative",
    [
        ("e0-trivial", "trivial", False),
        ("e0-trivial", "adjoint", False),
        ("e1-borel-sl2", "trivial", False),
        ("e1-borel-sl2", "adjoint", False),
        ("e2-axb", "trivial", False),
        ("e3-laurent", "trivial", True),
    ],
)
def test_relative_cohomology_against_dense(name, module, relative):
    fx = shipped(name)
    h = fx.h if relative else ()
    assert compute_relative_cohomology(fx.mp, fx.module(module), h) == dense_cohomology(name, module, relative)


def test_representatives(e1, e3):
    RB = RelativeBicomplex(e1.mp, e1.module("trivial"))
    res = RB.cohomology()
    assert res.dims == [1, 0, 0, 1]
    assert res.representatives[0] == [{(0, (), ()): 1}]
    (top,) = res.representatives[3]
    assert RB.total(top) == Vec()
    res3 = RelativeBicomplex(e3.mp, e3.module("trivial"), e3.h).cohomology()
    assert res3.dims == [1, 0]


@pytest.mark.parametrize("name, module", [("e1-borel-sl2", "trivial"), ("e1-borel-sl2", "adjoint"), ("e3-laurent", "trivial")])
def test_van_est_identities(name, module):
    fx = shipped(name)
    M = fx.module(module)
    RB = RelativeBicomplex(fx.mp, M, fx.h)
    assert check_relative(RB, 2, 0).ok
    R = ReducedComplex(SAYDModule(fx.H, M))
    assert check_van_est(fx.pairing_context, RB, R, 2, 2, 2, 0).ok
