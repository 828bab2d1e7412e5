import random

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from bicrossed.exactlin import Vec
from bicrossed.liealg import LieAlgebra
from bicrossed.matched import (
    Enveloping,
    MatchedPair,
    act_left,
    act_right,
    check_matched_pair,
    check_mutual_pair,
    decompose,
    double_crossed_sum,
    matrix_coefficient_eval,
    psi_factorize,
    psi_from_actions,
    recombine,
)

from conftest import shipped
from oracles import Straightener, raw_fixture, structure_constants, word_of

H_, E_ = (1, 0), (0, 1)


def mono(*e):
    return Vec.unit(tuple(e))


def test_e1_actions(e1):
    mp = e1.mp
    F = mono(1)
    assert act_left(mp, F, mono(*E_)) == {H_: -1}
    assert act_right(mp, F, mono(*E_)) == Vec()
    assert act_left(mp, F, mono(*H_)) == Vec()
    assert act_right(mp, F, mono(*H_)) == {(1,): 2}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_powers_of_f_against_h(e1, n):
    # F^n H = H F^n + 2n F^n
    assert act_left(e1.mp, mono(n), mono(*H_)) == Vec()
    assert act_right(e1.mp, mono(n), mono(*H_)) == {(n,): 2 * n}


def test_unit_laws(e1):
    mp = e1.mp
    assert act_left(mp, mono(2), mp.U1.one()) == Vec()
    assert act_right(mp, mp.U2.one(), mono(1, 1)) == Vec()
    assert act_left(mp, mp.U2.one(), mono(1, 1)) == mono(1, 1)


def test_psi_examples(e1):
    mp = e1.mp
    u = mono(*E_)
    assert psi_factorize(mp, mp.U2.one(), u) == {(E_, (0,)): 1}
    assert psi_factorize(mp, mono(1), u) == {(E_, (1,)): 1, (H_, (0,)): -1}
    assert psi_factorize(mp, mono(2), u) == {(E_, (2,)): 1, (H_, (1,)): -2, ((0, 0), (1,)): -2}


def test_matrix_coefficients(e1):
    mp = e1.mp
    assert [[matrix_coefficient_eval(mp, i, j, mp.U2.one()) for j in range(2)] for i in range(2)] == [[1, 0], [0, 1]]
    assert matrix_coefficient_eval(mp, 1, 0, mono(1)) == -1
    assert matrix_coefficient_eval(mp, 1, 0, mono(2)) == 0


def test_reassembly(e1, e3):
    a = double_crossed_sum(e1.mp)
    sl2 = e1.lie
    for i in range(3):
        for j in range(3):
            assert a.bracket_basis(i, j) == sl2.bracket_basis(i, j)
    b = double_crossed_sum(e3.mp)
    # g1 = span{Y}, g2 = span{X}: [X, Y] = Y
    assert b.bracket_basis(1, 0) == {0: 1}


def test_decompose_trivial_parts():
    g = LieAlgebra.from_brackets(["a", "b"], {(0, 1): {1: 1}})
    mp = decompose(g, [0, 1], [])
    assert mp.P == {} and mp.Q == {}
    assert check_matched_pair(mp).ok
    ab = MatchedPair(LieAlgebra.abelian(["x"]), LieAlgebra.abelian(["y"]), {}, {})
    assert check_matched_pair(ab).ok
    assert double_crossed_sum(ab).bracket_basis(0, 1) == Vec()
    with pytest.raises(ValueError):
        decompose(g, [0], [0])


@pytest.mark.parametrize("name", ["e0-trivial", "e1-borel-sl2", "e2-axb", "e3-laurent"])
def test_matched_checks_pass(name):
    mp = shipped(name).mp
    assert check_matched_pair(mp).ok
    assert check_mutual_pair(mp, 3, 10, 0).ok


def test_right_action_break_detected(e1):
    base = e1.mp
    Q = dict(base.Q)
    Q[(0, 1)] = Vec({0: 1})
    mp = MatchedPair(base.g1, base.g2, base.P, Q)
    assert "matched.g1-bracket-acts" in check_matched_pair(mp).identities()


def test_left_action_break_detected():
    fx = shipped("e1-broken-matched")
    assert check_matched_pair(fx.mp).identities() == ["matched.left-action-derivation"]


def test_enveloping_examples(e1):
    U = e1.mp.U1
    assert U.mono_mul(E_, H_) == {(1, 1): 1, (0, 1): -2}
    assert U.coproduct(mono(2, 0)) == {((0, 0), (2, 0)): 1, ((1, 0), (1, 0)): 2, ((2, 0), (0, 0)): 1}
    assert U.antipode(U.from_word((0, 1))) == U.from_word((1, 0))


def _sl2_oracle():
    _, C = structure_constants(raw_fixture("e1-borel-sl2"))
    return Straightener(C)


@given(st.lists(st.integers(0, 2), max_size=5), st.lists(st.integers(0, 2), max_size=4))
def test_enveloping_product_matches_straightener(w1, w2):
    Ua = shipped("e1-borel-sl2").mp.Ua
    S = _sl2_oracle()
    got = Ua.mul(Ua.from_word(tuple(w1)), Ua.from_word(tuple(w2)))
    assert {k: sp.Rational(v) for k, v in got.items()} == S.element([(tuple(w1) + tuple(w2), 1)])


@given(st.integers(0, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_psi_straightening(n, h, e, extra):
    mp = shipped("e1-borel-sl2").mp
    v, u = mono(n), mono(h, e)
    t = psi_factorize(mp, v, u)
    assert t == psi_from_actions(mp, v, u)
    S = _sl2_oracle()
    want = S.element([(word_of((0, 0, n)) + word_of((h, e, 0)), 1)])
    got = recombine(mp, t)
    assert {k: sp.Rational(x) for k, x in got.items()} == want


@given(st.integers(0, 10**6))
def test_enveloping_associative(seed):
    rng = random.Random(seed)
    U = Enveloping(shipped("e0-trivial").lie)
    x, y, z = (U.random_element(rng, 2) for _ in range(3))
    assert U.mul(U.mul(x, y), z) == U.mul(x, U.mul(y, z))
    # Δ is multiplicative
    lhs = U.coproduct(U.mul(x, y))
    dx, dy = U.coproduct(x), U.coproduct(y)
    rhs = Vec()
    for (a1, a2), c in dx.items():
        for (b1, b2), d in dy.items():
            for k1, p in U.mono_mul(a1, b1).items():
                for k2, q in U.mono_mul(a2, b2).items():
                    rhs.add_term((k1, k2), c * d * p * q)
    assert lhs == rhs
